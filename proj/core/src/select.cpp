#include "mutagoal/select.hpp"

#include <stdexcept>

namespace mutagoal {

const char* strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::Full: return "full";
    case Strategy::Class: return "class";
    case Strategy::Focal: return "focal";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
  if (name == "full") return Strategy::Full;
  if (name == "class") return Strategy::Class;
  if (name == "focal") return Strategy::Focal;
  return std::nullopt;
}

std::vector<std::string> order_tests(const std::set<std::string>& ids,
                                     const Program& program) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (TestRef ref : program.all_tests()) {
    std::string id = program.test_id(ref);
    if (ids.contains(id)) out.push_back(std::move(id));
  }
  if (out.size() != ids.size()) {
    throw std::invalid_argument("order_tests: unknown test id in input");
  }
  return out;
}

TestSelection select(const Mutant& mutant, const Program& program,
                     const FocalIndex& index, Strategy strategy) {
  TestSelection selection;
  selection.mutant_id = mutant.id;
  selection.strategy = strategy;
  switch (strategy) {
    case Strategy::Full:
      for (TestRef ref : program.all_tests()) {
        selection.test_ids.push_back(program.test_id(ref));
      }
      break;
    case Strategy::Class: {
      const TestSuite* suite = program.find_suite(mutant.class_name + "Test");
      if (suite) {
        for (const TestCase& test : suite->tests) {
          selection.test_ids.push_back(suite->name + "." + test.name);
        }
      }
      break;
    }
    case Strategy::Focal: {
      selection.test_ids =
          index.tests_of(MethodRef{mutant.class_name, mutant.method_name});
      selection.has_focal_tests = !selection.test_ids.empty();
      break;
    }
  }
  return selection;
}

}  // namespace mutagoal
