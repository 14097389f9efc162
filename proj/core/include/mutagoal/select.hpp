#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mutagoal/ast.hpp"
#include "mutagoal/focal.hpp"
#include "mutagoal/mutate.hpp"

namespace mutagoal {

/// The three test-scoping strategies: the whole suite, the tests of the
/// mutated class's suite, or the tests whose focal methods contain the
/// mutated method.
enum class Strategy { Full, Class, Focal };

const char* strategy_name(Strategy strategy);  // "full" / "class" / "focal"
std::optional<Strategy> strategy_from_name(const std::string& name);

struct TestSelection {
  std::string mutant_id;
  Strategy strategy = Strategy::Full;
  std::vector<std::string> test_ids;  // ordered subset of the program's tests
  bool has_focal_tests = true;        // meaningful for the focal strategy
};

/// Deterministic total order over tests: suite file path lexicographic, then
/// declaration order within the file.
std::vector<std::string> order_tests(const std::set<std::string>& ids,
                                     const Program& program);

/// Chooses the tests to run against one mutant. full: every test; class: the
/// tests of the suite named `<C>Test` for the mutated class C; focal: exactly
/// index.tests_of(mutated method), with has_focal_tests reporting coverage.
TestSelection select(const Mutant& mutant, const Program& program,
                     const FocalIndex& index, Strategy strategy);

}  // namespace mutagoal
