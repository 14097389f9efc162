#include "mutagoal/engine.hpp"

#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

namespace mutagoal {

const char* mutant_status_name(MutantStatus status) {
  switch (status) {
    case MutantStatus::Killed: return "killed";
    case MutantStatus::Survived: return "survived";
    case MutantStatus::NotCovered: return "not-covered";
    case MutantStatus::Error: return "error";
  }
  return "?";
}

std::vector<const TestOutcome*> PrecheckResult::failures() const {
  std::vector<const TestOutcome*> out;
  for (const TestOutcome& outcome : outcomes) {
    if (!outcome.passed()) out.push_back(&outcome);
  }
  return out;
}

PrecheckResult precheck(const Program& program, const CostModel& cost) {
  PrecheckResult result;
  result.outcomes = run_suite(program, program.all_tests(), cost, false);
  result.ok = result.failures().empty();
  return result;
}

namespace {

MutantResult run_one(const Program& program, const Mutant& mutant,
                     const FocalIndex& index, Strategy strategy,
                     const CostModel& cost) {
  const auto start = std::chrono::steady_clock::now();
  MutantResult result;
  result.mutant_id = mutant.id;
  result.strategy = strategy;

  TestSelection selection = select(mutant, program, index, strategy);
  result.selection = selection.test_ids;
  result.tests_considered = static_cast<int>(selection.test_ids.size());

  Program mutated;
  try {
    mutated = materialize(program, mutant);
  } catch (const StaleMutantError& err) {
    result.status = MutantStatus::Error;
    result.error = err.what();
    result.tests_considered = 0;
    result.selection.clear();
    return result;
  }

  if (selection.test_ids.empty()) {
    result.status = strategy == Strategy::Focal ? MutantStatus::NotCovered
                                                : MutantStatus::Survived;
    result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
  }

  result.status = MutantStatus::Survived;
  for (const std::string& test_id : selection.test_ids) {
    TestOutcome outcome = run_test(mutated, *mutated.find_test(test_id), cost);
    ++result.tests_executed;
    result.steps += outcome.steps;
    if (!outcome.passed()) {
      result.status = MutantStatus::Killed;
      result.killed_by = test_id;
      result.position = result.tests_executed;
      break;
    }
  }
  result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

/// Runs fn(i) for i in [0, count) across `workers` threads and hands the
/// results to sink in index order as prefixes complete.
void ordered_pool(int count, int workers,
                  const std::function<void(int)>& compute,
                  const std::function<void(int)>& flush) {
  if (count == 0) return;
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) {
      compute(i);
      if (flush) flush(i);
    }
    return;
  }

  std::mutex mu;
  std::condition_variable cv;
  int next_claim = 0;
  std::vector<bool> done(static_cast<std::size_t>(count), false);

  auto work = [&] {
    while (true) {
      int mine;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next_claim >= count) return;
        mine = next_claim++;
      }
      compute(mine);
      {
        std::lock_guard<std::mutex> lock(mu);
        done[static_cast<std::size_t>(mine)] = true;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  const int spawned = std::min(workers, count);
  pool.reserve(static_cast<std::size_t>(spawned));
  for (int i = 0; i < spawned; ++i) pool.emplace_back(work);

  int flushed = 0;
  {
    std::unique_lock<std::mutex> lock(mu);
    while (flushed < count) {
      cv.wait(lock, [&] { return done[static_cast<std::size_t>(flushed)]; });
      while (flushed < count && done[static_cast<std::size_t>(flushed)]) {
        if (flush) {
          lock.unlock();
          flush(flushed);
          lock.lock();
        }
        ++flushed;
      }
    }
  }
  for (std::thread& thread : pool) thread.join();
}

}  // namespace

std::vector<MutantResult> run_campaign(
    const Program& program, const std::vector<Mutant>& mutants,
    const FocalIndex& index, Strategy strategy, const CostModel& cost,
    int workers, const std::function<void(const MutantResult&)>& on_result) {
  std::vector<MutantResult> results(mutants.size());
  ordered_pool(
      static_cast<int>(mutants.size()), workers,
      [&](int i) {
        results[static_cast<std::size_t>(i)] =
            run_one(program, mutants[static_cast<std::size_t>(i)], index,
                    strategy, cost);
      },
      [&](int i) {
        if (on_result) on_result(results[static_cast<std::size_t>(i)]);
      });
  return results;
}

KillMatrix build_kill_matrix(const Program& program,
                             const std::vector<Mutant>& mutants,
                             const CostModel& cost, int workers) {
  KillMatrix matrix;
  for (const Mutant& mutant : mutants) matrix.mutant_ids.push_back(mutant.id);
  std::vector<TestRef> tests = program.all_tests();
  for (TestRef ref : tests) matrix.test_ids.push_back(program.test_id(ref));
  matrix.cells.resize(mutants.size());

  ordered_pool(
      static_cast<int>(mutants.size()), workers,
      [&](int i) {
        const Program mutated = materialize(program, mutants[static_cast<std::size_t>(i)]);
        auto& row = matrix.cells[static_cast<std::size_t>(i)];
        row.reserve(tests.size());
        for (TestRef ref : tests) {
          TestOutcome outcome = run_test(mutated, ref, cost);
          row.push_back(KillMatrix::Cell{!outcome.passed(), outcome.steps});
        }
      },
      {});
  return matrix;
}

MutantStatus matrix_status(const KillMatrix& matrix, int mutant_row,
                           const std::vector<std::string>& selection,
                           Strategy strategy) {
  if (selection.empty()) {
    return strategy == Strategy::Focal ? MutantStatus::NotCovered
                                       : MutantStatus::Survived;
  }
  std::map<std::string, int> column;
  for (int i = 0; i < static_cast<int>(matrix.test_ids.size()); ++i) {
    column[matrix.test_ids[static_cast<std::size_t>(i)]] = i;
  }
  for (const std::string& test_id : selection) {
    const KillMatrix::Cell& cell =
        matrix.cell(mutant_row, column.at(test_id));
    if (cell.killed) return MutantStatus::Killed;
  }
  return MutantStatus::Survived;
}

}  // namespace mutagoal
