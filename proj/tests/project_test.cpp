#include "mutagoal/project.hpp"

#include <gtest/gtest.h>

#include <filesystem>

#include "mutagoal/corpus.hpp"
#include "support/support.hpp"

namespace mutagoal {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;
using testing::fixture;
using testing::slurp;
using testing::spit;
using testing::write_project;

TEST(Project, ReadsSrcAndTestsRecursively) {
  TempDir dir;
  write_project(dir.path(), {
      {"src/A.mini", "class A {\n    field x := 0\n}\n"},
      {"src/deep/B.mini", "class B {\n    field y := 0\n}\n"},
      {"tests/ATest.mini",
       "suite ATest {\n    test one {\n        assertTrue(true)\n    }\n}\n"},
      {"README.txt", "not minilang"},
      {"src/notes.md", "ignored"},
  });
  ProjectTree tree = read_project_tree(dir.path());
  ASSERT_EQ(tree.files.size(), 3u);
  EXPECT_TRUE(tree.files.count("src/A.mini"));
  EXPECT_TRUE(tree.files.count("src/deep/B.mini"));
  EXPECT_TRUE(tree.files.count("tests/ATest.mini"));
  EXPECT_FALSE(tree.conf_text.has_value());
  EXPECT_EQ(tree.root, dir.path());

  spit(dir.path() / "mutagoal.conf", "budget=5\n");
  ProjectTree with_conf = read_project_tree(dir.path());
  ASSERT_TRUE(with_conf.conf_text.has_value());
  EXPECT_EQ(*with_conf.conf_text, "budget=5\n");
}

TEST(Project, MissingRootAndEmptyRootAreLoadErrors) {
  TempDir dir;
  try {
    read_project_tree(dir.path() / "nope");
    FAIL() << "expected LoadError";
  } catch (const LoadError& error) {
    EXPECT_NE(std::string(error.what()).find("project directory not found"),
              std::string::npos);
  }
  fs::create_directories(dir.path() / "empty");
  try {
    read_project_tree(dir.path() / "empty");
    FAIL() << "expected LoadError";
  } catch (const LoadError& error) {
    EXPECT_NE(std::string(error.what()).find("no MiniLang sources found"),
              std::string::npos);
  }
}

TEST(Project, LoadProjectParsesTheTree) {
  Program program = load_project(fixture("bank-account"));
  EXPECT_EQ(program.classes.size(), 1u);
  EXPECT_EQ(program.classes[0].name, "Account");
  EXPECT_EQ(program.all_tests().size(), 1u);
}

TEST(Corpus, LoadsEveryBundledFixture) {
  struct Expectation {
    const char* name;
    int classes;
    int tests;
    int mutants;
  };
  for (Expectation expected : {Expectation{"bank-account", 1, 1, 10},
                               Expectation{"eager-test", 1, 1, 3},
                               Expectation{"uncovered-helper", 1, 1, 7},
                               Expectation{"quality-score", 17, 54, 47},
                               Expectation{"synthetic", 39, 231, 528}}) {
    Corpus corpus = load_corpus(fixture(expected.name));
    EXPECT_EQ(corpus.name, expected.name);
    EXPECT_EQ(corpus.manifest.classes, expected.classes) << expected.name;
    EXPECT_EQ(corpus.manifest.tests, expected.tests) << expected.name;
    EXPECT_EQ(corpus.manifest.mutants_total, expected.mutants) << expected.name;
    EXPECT_EQ(static_cast<int>(corpus.program.classes.size()),
              expected.classes)
        << expected.name;
  }
}

TEST(Corpus, ManifestJsonRoundTripsExactly) {
  Corpus corpus = load_corpus(fixture("bank-account"));
  std::string bytes = manifest_json(corpus.manifest);
  Manifest reparsed = parse_manifest(bytes);
  EXPECT_EQ(reparsed, corpus.manifest);
  EXPECT_EQ(manifest_json(reparsed), bytes);
  EXPECT_EQ(bytes, slurp(fixture("bank-account") / "manifest.json"));
}

TEST(Corpus, BankAccountManifestRecordsTheGroundTruths) {
  Corpus corpus = load_corpus(fixture("bank-account"));
  const Manifest& manifest = corpus.manifest;
  EXPECT_EQ(manifest.budget, 1'000'000);
  EXPECT_EQ(manifest.method_kinds.at("Account.withdraw"), "mutator");
  EXPECT_EQ(manifest.method_kinds.at("Account.getBalance"), "inspector");
  ASSERT_TRUE(manifest.focal.count("AccountTest.testWithdraw"));
  EXPECT_EQ(manifest.focal.at("AccountTest.testWithdraw"),
            std::vector<std::string>{"Account.withdraw"});
  EXPECT_EQ(manifest.mutant_counts.at("AOR"), 2);
  EXPECT_EQ(manifest.mutant_counts.at("CNB"), 3);
  EXPECT_EQ(manifest.mutant_counts.at("CRP"), 2);
  EXPECT_EQ(manifest.mutant_counts.at("LCR"), 1);
  EXPECT_EQ(manifest.mutant_counts.at("ROR"), 2);
  EXPECT_EQ(manifest.located, 4);
  ASSERT_TRUE(manifest.kill_matrix_fnv1a.has_value());
  EXPECT_EQ(*manifest.kill_matrix_fnv1a, "a00ecb3d54ef22f1");
  ASSERT_TRUE(manifest.full_kills.has_value());
  EXPECT_EQ(*manifest.full_kills, 8);
  ASSERT_TRUE(manifest.expected_focal_speedup.has_value());
  EXPECT_EQ(*manifest.expected_focal_speedup, Rational::ratio(351, 167));
}

TEST(Corpus, StructuralDriftIsDetectedOnLoad) {
  // Copy the fixture, then quietly add a method: the stale manifest must be
  // rejected with a message naming what moved.
  TempDir dir;
  fs::path copy = dir.path() / "bank-account";
  fs::copy(fixture("bank-account"), copy, fs::copy_options::recursive);
  std::string source = slurp(copy / "src/Account.mini");
  std::size_t at = source.rfind('}');
  ASSERT_NE(at, std::string::npos);
  source.insert(at,
                "    method drainAll() {\n"
                "        self.balance := 0\n"
                "    }\n");
  spit(copy / "src/Account.mini", source);
  try {
    load_corpus(copy);
    FAIL() << "expected ManifestDrift";
  } catch (const ManifestDrift& drift) {
    std::string what = drift.what();
    EXPECT_NE(what.find("manifest drift in '"), std::string::npos) << what;
    EXPECT_NE(what.find("Account.drainAll"), std::string::npos) << what;
    EXPECT_NE(what.find("regenerate the fixture ground truths"),
              std::string::npos)
        << what;
  }
}

TEST(Corpus, MissingManifestIsALoadError) {
  EXPECT_THROW(load_corpus(fixture("failing-precheck")), LoadError);
}

TEST(Corpus, ExecutionClaimsHoldForTheSmallFixtures) {
  for (const char* name : {"bank-account", "eager-test", "uncovered-helper"}) {
    Corpus corpus = load_corpus(fixture(name));
    EXPECT_NO_THROW(validate_execution_claims(corpus, 2)) << name;
  }
}

TEST(Corpus, ExecutionDriftIsDetectedByTheDeepPass) {
  // Keep structure identical but weaken a test's oracle: kill counts and the
  // matrix digest change while structural claims still hold.
  TempDir dir;
  fs::path copy = dir.path() / "bank-account";
  fs::copy(fixture("bank-account"), copy, fs::copy_options::recursive);
  std::string tests = slurp(copy / "tests/AccountTest.mini");
  std::size_t at = tests.find("assertEqual(balance, 4)");
  ASSERT_NE(at, std::string::npos);
  tests.replace(at, std::string("assertEqual(balance, 4)").size(),
                "assertTrue(true)       ");
  spit(copy / "tests/AccountTest.mini", tests);

  Corpus corpus = load_corpus(copy);  // structural claims still hold
  try {
    validate_execution_claims(corpus, 2);
    FAIL() << "expected ManifestDrift";
  } catch (const ManifestDrift& drift) {
    EXPECT_NE(std::string(drift.what()).find("manifest drift"),
              std::string::npos);
  }
}

TEST(Corpus, ComputeManifestMatchesTheShippedOnes) {
  for (const char* name : {"bank-account", "eager-test", "uncovered-helper",
                           "quality-score"}) {
    Corpus corpus = load_corpus(fixture(name));
    Manifest recomputed = compute_manifest(corpus.name, corpus.program,
                                           corpus.manifest.budget, 2);
    EXPECT_EQ(recomputed, corpus.manifest) << name;
  }
}

}  // namespace
}  // namespace mutagoal
