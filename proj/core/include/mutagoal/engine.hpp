#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mutagoal/focal.hpp"
#include "mutagoal/interp.hpp"
#include "mutagoal/mutate.hpp"
#include "mutagoal/select.hpp"

namespace mutagoal {

enum class MutantStatus {
  Killed,
  Survived,
  NotCovered,  // focal strategy only: the mutated method is focal for no test
  Error,       // stale patch; recorded, never aborts the campaign
};

const char* mutant_status_name(MutantStatus status);

struct MutantResult {
  std::string mutant_id;
  Strategy strategy = Strategy::Full;
  MutantStatus status = MutantStatus::Survived;
  std::string killed_by;  // test id, when killed
  int position = 0;       // 1-based position of the killer in the selection
  int tests_considered = 0;
  int tests_executed = 0;
  std::int64_t steps = 0;  // summed over executed tests
  std::chrono::nanoseconds wall_time{0};
  std::vector<std::string> selection;  // the ordered test ids considered
  std::string error;                   // status == Error: what went wrong
};

struct PrecheckResult {
  bool ok = false;
  std::vector<TestOutcome> outcomes;  // every test, in global order

  std::vector<const TestOutcome*> failures() const;
};

/// Runs every test on the unmutated program. A campaign must not start
/// unless this passes.
PrecheckResult precheck(const Program& program, const CostModel& cost);

/// Executes one campaign: for each mutant — materialize, select, run the
/// selection in order with early stop on the first kill. Results come back
/// in input mutant order regardless of worker scheduling, and on_result
/// (when given) is invoked in that same order as results become final.
/// Deterministic: bit-identical results at any worker count.
std::vector<MutantResult> run_campaign(
    const Program& program, const std::vector<Mutant>& mutants,
    const FocalIndex& index, Strategy strategy, const CostModel& cost,
    int workers, const std::function<void(const MutantResult&)>& on_result = {});

/// Ground truth: every (mutant, test) cell, early stop disabled.
struct KillMatrix {
  struct Cell {
    bool killed = false;
    std::int64_t steps = 0;
  };

  std::vector<std::string> mutant_ids;  // input mutant order
  std::vector<std::string> test_ids;    // global test order
  std::vector<std::vector<Cell>> cells;  // [mutant][test]

  const Cell& cell(int mutant, int test) const { return cells[mutant][test]; }
};

KillMatrix build_kill_matrix(const Program& program,
                             const std::vector<Mutant>& mutants,
                             const CostModel& cost, int workers);

/// Replays a selection against the matrix: the status run_campaign would
/// report if it executed those tests in order with early stop. Used as the
/// oracle for campaign results.
MutantStatus matrix_status(const KillMatrix& matrix, int mutant_row,
                           const std::vector<std::string>& selection,
                           Strategy strategy);

}  // namespace mutagoal
