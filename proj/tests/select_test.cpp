#include "mutagoal/select.hpp"

#include <gtest/gtest.h>

#include "mutagoal/frontend.hpp"
#include "support/support.hpp"

namespace mutagoal {
namespace {

std::map<std::string, std::string> two_class_tree() {
  return {
      {"src/Left.mini",
       "class Left {\n"
       "    field x := 0\n"
       "\n"
       "    method poke() {\n"
       "        self.x := self.x + 1\n"
       "    }\n"
       "\n"
       "    method get() returns {\n"
       "        return self.x\n"
       "    }\n"
       "}\n"},
      {"src/Right.mini",
       "class Right {\n"
       "    field y := 0\n"
       "\n"
       "    method nudge() {\n"
       "        self.y := self.y + 2\n"
       "    }\n"
       "\n"
       "    method helper() {\n"
       "        self.y := self.y * 3\n"
       "    }\n"
       "\n"
       "    method get() returns {\n"
       "        return self.y\n"
       "    }\n"
       "}\n"},
      {"tests/LeftTest.mini",
       "suite LeftTest {\n"
       "    test testPoke {\n"
       "        l := new Left()\n"
       "        l.poke()\n"
       "        assertEqual(l.get(), 1)\n"
       "    }\n"
       "\n"
       "    test testPokeTwice {\n"
       "        l := new Left()\n"
       "        l.poke()\n"
       "        l.poke()\n"
       "        assertEqual(l.get(), 2)\n"
       "    }\n"
       "}\n"},
      {"tests/RightTest.mini",
       "suite RightTest {\n"
       "    test testNudge {\n"
       "        r := new Right()\n"
       "        r.nudge()\n"
       "        assertEqual(r.get(), 2)\n"
       "    }\n"
       "}\n"}};
}

Mutant mutant_in(const Program& program, const std::string& cls,
                 const std::string& method) {
  std::set<MutOp> ops(all_mutops().begin(), all_mutops().end());
  for (const Mutant& m : generate_mutants(program, ops)) {
    if (m.class_name == cls && m.method_name == method) return m;
  }
  throw std::runtime_error("no mutant in " + cls + "." + method);
}

TEST(Select, StrategyNamesRoundTrip) {
  EXPECT_STREQ(strategy_name(Strategy::Full), "full");
  EXPECT_STREQ(strategy_name(Strategy::Class), "class");
  EXPECT_STREQ(strategy_name(Strategy::Focal), "focal");
  EXPECT_EQ(strategy_from_name("focal"), Strategy::Focal);
  EXPECT_FALSE(strategy_from_name("nonsense").has_value());
}

TEST(Select, FullSelectsEveryTestInGlobalOrder) {
  Program program = parse_program(two_class_tree());
  FocalIndex index = build_index(program);
  Mutant m = mutant_in(program, "Right", "nudge");
  TestSelection selection = select(m, program, index, Strategy::Full);
  EXPECT_EQ(selection.strategy, Strategy::Full);
  EXPECT_EQ(selection.mutant_id, m.id);
  EXPECT_EQ(selection.test_ids,
            (std::vector<std::string>{"LeftTest.testPoke", "LeftTest.testPokeTwice",
                                      "RightTest.testNudge"}));
}

TEST(Select, ClassSelectsTheMatchingSuite) {
  Program program = parse_program(two_class_tree());
  FocalIndex index = build_index(program);
  TestSelection selection =
      select(mutant_in(program, "Right", "nudge"), program, index, Strategy::Class);
  EXPECT_EQ(selection.test_ids, (std::vector<std::string>{"RightTest.testNudge"}));

  TestSelection left =
      select(mutant_in(program, "Left", "poke"), program, index, Strategy::Class);
  EXPECT_EQ(left.test_ids, (std::vector<std::string>{"LeftTest.testPoke",
                                                     "LeftTest.testPokeTwice"}));
}

TEST(Select, ClassWithoutASuiteSelectsNothing) {
  std::map<std::string, std::string> tree = two_class_tree();
  tree.erase("tests/RightTest.mini");
  Program program = parse_program(tree);
  FocalIndex index = build_index(program);
  TestSelection selection =
      select(mutant_in(program, "Right", "nudge"), program, index, Strategy::Class);
  EXPECT_TRUE(selection.test_ids.empty());
}

TEST(Select, FocalSelectsAnchoredTestsOnly) {
  Program program = parse_program(two_class_tree());
  FocalIndex index = build_index(program);
  TestSelection poke =
      select(mutant_in(program, "Left", "poke"), program, index, Strategy::Focal);
  EXPECT_TRUE(poke.has_focal_tests);
  EXPECT_EQ(poke.test_ids, (std::vector<std::string>{"LeftTest.testPoke",
                                                     "LeftTest.testPokeTwice"}));

  // helper is focal for no test: empty selection, flagged as uncovered.
  TestSelection helper =
      select(mutant_in(program, "Right", "helper"), program, index, Strategy::Focal);
  EXPECT_FALSE(helper.has_focal_tests);
  EXPECT_TRUE(helper.test_ids.empty());
}

TEST(Select, FocalIsASubsetOfClassIsASubsetOfFull) {
  Program program = parse_program(two_class_tree());
  FocalIndex index = build_index(program);
  std::set<MutOp> ops(all_mutops().begin(), all_mutops().end());
  for (const Mutant& m : generate_mutants(program, ops)) {
    auto ids = [&](Strategy s) {
      TestSelection sel = select(m, program, index, s);
      return std::set<std::string>(sel.test_ids.begin(), sel.test_ids.end());
    };
    std::set<std::string> full = ids(Strategy::Full);
    std::set<std::string> cls = ids(Strategy::Class);
    std::set<std::string> focal = ids(Strategy::Focal);
    EXPECT_TRUE(std::includes(full.begin(), full.end(), cls.begin(), cls.end()))
        << m.id;
    EXPECT_TRUE(std::includes(cls.begin(), cls.end(), focal.begin(), focal.end()))
        << m.id;
  }
}

TEST(Select, OrderTestsRestoresGlobalOrder) {
  Program program = parse_program(two_class_tree());
  std::vector<std::string> ordered = order_tests(
      {"RightTest.testNudge", "LeftTest.testPoke"}, program);
  EXPECT_EQ(ordered, (std::vector<std::string>{"LeftTest.testPoke",
                                               "RightTest.testNudge"}));
}

}  // namespace
}  // namespace mutagoal
