#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mutagoal/ast.hpp"

namespace mutagoal {

/// A mutator changes the state of self (directly or through a self-call
/// chain); an inspector only reads it.
enum class MethodKind { Mutator, Inspector };

const char* method_kind_name(MethodKind kind);  // "mutator" / "inspector"

struct MethodRef {
  std::string cls;
  std::string method;

  std::string qualified() const { return cls + "." + method; }

  friend bool operator==(const MethodRef&, const MethodRef&) = default;
  friend auto operator<=>(const MethodRef&, const MethodRef&) = default;
};

using KindTable = std::map<MethodRef, MethodKind>;

struct MethodKindEntry {
  MethodRef ref;
  MethodKind kind;
};

/// Classifies every declared method, in declaration order. A method is a
/// mutator iff it assigns a field of self or transitively self-calls a
/// mutator (least fixpoint over the self-call graph); otherwise inspector.
std::vector<MethodKindEntry> classify_methods(const Program& program);
KindTable kind_table(const Program& program);

/// One setup/execution/oracle unit of a test body. Statement indexes into
/// TestCase::body; the oracle block [oracle_begin, oracle_end) is a maximal
/// run of consecutive assertions, preceded by the pre-oracle span
/// [pre_begin, oracle_begin).
struct SubScenario {
  int pre_begin = 0;
  int oracle_begin = 0;
  int oracle_end = 0;

  friend bool operator==(const SubScenario&, const SubScenario&) = default;
};

/// Splits a test into sub-scenarios. Each maximal assertion run closes one;
/// trailing non-assertion statements (and tests with no assertions at all)
/// form none.
std::vector<SubScenario> segment(const TestCase& test);

/// The focal methods of one test: per sub-scenario, the last mutator invoked
/// on each asserted object before its oracle, plus mutators whose results the
/// oracle asserts directly; unioned across sub-scenarios. Receivers are
/// tracked per local binding, with no aliasing analysis.
std::set<MethodRef> extract_focal(const TestCase& test, const KindTable& kinds);

/// Bidirectional test <-> focal-method traceability for a whole program.
struct FocalIndex {
  std::map<std::string, std::set<MethodRef>> focal;     // test id -> focal methods
  std::map<MethodRef, std::vector<std::string>> tests;  // method -> test ids, global order
  std::map<std::string, std::vector<SubScenario>> scenarios;
  KindTable kinds;
  std::vector<Lint> lints;

  /// Test ids the method is focal for, in global order; empty when none.
  const std::vector<std::string>& tests_of(const MethodRef& ref) const;
  bool is_focal_for(const std::string& test_id, const MethodRef& ref) const;
};

FocalIndex build_index(const Program& program);

}  // namespace mutagoal
