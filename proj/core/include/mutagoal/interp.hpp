#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "mutagoal/ast.hpp"

namespace mutagoal {

/// Why an execution aborted. Every runtime failure is one of these; none of
/// them escape as C++ exceptions.
enum class ErrorKind {
  DivByZero,
  ModByZero,
  Overflow,        // int64 arithmetic out of range
  TypeError,       // operand or condition of the wrong kind
  UnboundLocal,
  UnknownMethod,   // receiver's class lacks the method
  ArityMismatch,
  NotAnObject,     // invocation on an integer/boolean receiver
  KindMismatch,    // value stored into a field of the other kind
  MissingReturn,   // value-returning method completed without a return
  VoidValue,       // result of a void method used as a value
  RecursionLimit,
};

/// Stable dashed name, e.g. "div-by-zero"; used in reports and persisted runs.
const char* error_kind_name(ErrorKind kind);

enum class VerdictKind {
  Pass,
  AssertionFailure,
  ExecutionError,
  BudgetExceeded,
};

struct Verdict {
  VerdictKind kind = VerdictKind::Pass;
  Span location;          // assertion or error site (meaningless for Pass)
  std::string expected;   // AssertionFailure: rendered expected value
  std::string actual;     // AssertionFailure: rendered actual value
  ErrorKind error{};      // ExecutionError only
  std::string detail;     // ExecutionError: human-readable description
};

/// One-line summary, e.g. "pass" or "execution-error: div-by-zero (...)".
std::string verdict_text(const Verdict& verdict);

struct TestOutcome {
  std::string test_id;
  Verdict verdict;
  std::int64_t steps = 0;
  std::chrono::nanoseconds wall_time{0};

  bool passed() const { return verdict.kind == VerdictKind::Pass; }
};

/// How execution cost is charged. Steps are deterministic (one per statement
/// executed, one per expression node evaluated); wall time is measured but
/// never persisted, so the steps mode is the reproducible default.
struct CostModel {
  enum class Mode { Steps, Wall };
  Mode mode = Mode::Steps;
  std::int64_t step_budget = 1'000'000;  // per test; exceeding it is a kill
};

/// Executes one test against the program, starting from a fresh heap.
/// Deterministic: identical (program, test, budget) yields identical verdict
/// and step count. All failures are encoded in the verdict.
TestOutcome run_test(const Program& program, TestRef test, const CostModel& cost);

/// Executes tests in the given order. With early_stop, halts after the first
/// non-pass verdict; the result covers exactly the executed prefix.
std::vector<TestOutcome> run_suite(const Program& program,
                                   const std::vector<TestRef>& tests,
                                   const CostModel& cost, bool early_stop);

}  // namespace mutagoal
