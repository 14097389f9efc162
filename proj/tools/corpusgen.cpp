// corpusgen: deterministic generator for the bundled fixture corpora and
// their ground-truth manifests.
//
//   corpusgen synthetic <dir>      emit the large synthetic corpus
//   corpusgen quality-score <dir>  emit the quality-score corpus
//   corpusgen manifest <dir>       recompute manifest.json for any project
//
// Generation uses no randomness: the same invocation always emits the same
// bytes, so committed fixtures can be re-derived and diffed at any time.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "mutagoal/config.hpp"
#include "mutagoal/corpus.hpp"
#include "mutagoal/frontend.hpp"
#include "mutagoal/project.hpp"
#include "mutagoal/store.hpp"

namespace fs = std::filesystem;
using namespace mutagoal;

namespace {

std::string I(std::int64_t value) { return std::to_string(value); }

using Tree = std::map<std::string, std::string>;

// ---- synthetic corpus ---------------------------------------------------------
// Six class archetypes, instanced with varied constants. The mix is tuned so
// that most mutants sit in methods some test anchors on (cheap under the
// focal strategy) while inspector-only and self-call-internal methods carry
// a large mass of mutants no test anchors on (expensive under the full
// strategy), which is what drives the frozen speed-up ratio.

void counter_class(Tree& tree, int i) {
  std::string c = "Counter" + I(i);
  int limit = 10 + i;
  tree["src/" + c + ".mini"] =
      "class " + c + " {\n"
      "    field value := 0\n"
      "    field limit := " + I(limit) + "\n"
      "\n"
      "    method add(n) {\n"
      "        self.value := self.value + n\n"
      "    }\n"
      "\n"
      "    method scale(n) {\n"
      "        self.value := self.value * n\n"
      "    }\n"
      "\n"
      "    method clampAdd(n) {\n"
      "        if self.value + n <= self.limit {\n"
      "            self.value := self.value + n\n"
      "        }\n"
      "    }\n"
      "\n"
      "    method eval() returns {\n"
      "        return self.value * 3 + self.limit * 2 - 1\n"
      "    }\n"
      "\n"
      "    method reset() {\n"
      "        self.value := 0\n"
      "    }\n"
      "\n"
      "    method current() returns {\n"
      "        return self.value\n"
      "    }\n"
      "\n"
      "    method overLimit() returns {\n"
      "        return self.value > self.limit\n"
      "    }\n"
      "}\n";
  tree["tests/" + c + "Test.mini"] =
      "suite " + c + "Test {\n"
      "    test testAdd {\n"
      "        c := new " + c + "()\n"
      "        c.add(4)\n"
      "        c.add(3)\n"
      "        assertEqual(c.current(), 7)\n"
      "    }\n"
      "\n"
      "    test testScale {\n"
      "        c := new " + c + "(5)\n"
      "        c.scale(3)\n"
      "        assertEqual(c.current(), 15)\n"
      "    }\n"
      "\n"
      "    test testClampUnder {\n"
      "        c := new " + c + "(2)\n"
      "        c.clampAdd(3)\n"
      "        assertEqual(c.current(), 5)\n"
      "    }\n"
      "\n"
      "    test testClampBoundary {\n"
      "        c := new " + c + "(4)\n"
      "        c.clampAdd(" + I(limit - 4) + ")\n"
      "        assertEqual(c.current(), " + I(limit) + ")\n"
      "    }\n"
      "\n"
      "    test testClampOver {\n"
      "        c := new " + c + "(4)\n"
      "        c.clampAdd(" + I(limit) + ")\n"
      "        assertEqual(c.current(), 4)\n"
      "    }\n"
      "\n"
      "    test testEval {\n"
      "        c := new " + c + "(6)\n"
      "        assertEqual(c.eval(), " + I(6 * 3 + limit * 2 - 1) + ")\n"
      "    }\n"
      "\n"
      "    test testReset {\n"
      "        c := new " + c + "(9)\n"
      "        c.reset()\n"
      "        assertEqual(c.current(), 0)\n"
      "    }\n"
      "\n"
      "    test testOverLimit {\n"
      "        c := new " + c + "(" + I(limit + 1) + ")\n"
      "        assertTrue(c.overLimit())\n"
      "    }\n"
      "\n"
      "    test testAtLimit {\n"
      "        c := new " + c + "(" + I(limit) + ")\n"
      "        assertFalse(c.overLimit())\n"
      "    }\n"
      "}\n";
}

void tally_class(Tree& tree, int i) {
  std::string c = "Tally" + I(i);
  tree["src/" + c + ".mini"] =
      "class " + c + " {\n"
      "    field total := 0\n"
      "\n"
      "    method runUp(n) {\n"
      "        i := 0\n"
      "        while i < n {\n"
      "            self.total := self.total + i\n"
      "            i := i + 1\n"
      "        }\n"
      "    }\n"
      "\n"
      "    method drain(n) {\n"
      "        while n > 0 {\n"
      "            self.total := self.total - 1\n"
      "            n := n - 1\n"
      "        }\n"
      "    }\n"
      "\n"
      "    method current() returns {\n"
      "        return self.total\n"
      "    }\n"
      "}\n";
  tree["tests/" + c + "Test.mini"] =
      "suite " + c + "Test {\n"
      "    test testRunUp {\n"
      "        t := new " + c + "()\n"
      "        t.runUp(5)\n"
      "        assertEqual(t.current(), 10)\n"
      "    }\n"
      "\n"
      "    test testRunUpEmpty {\n"
      "        t := new " + c + "(" + I(7 + i) + ")\n"
      "        t.runUp(0)\n"
      "        assertEqual(t.current(), " + I(7 + i) + ")\n"
      "    }\n"
      "\n"
      "    test testDrain {\n"
      "        t := new " + c + "(" + I(9 + i) + ")\n"
      "        t.drain(4)\n"
      "        assertEqual(t.current(), " + I(5 + i) + ")\n"
      "    }\n"
      "\n"
      "    test testDrainAll {\n"
      "        t := new " + c + "(3)\n"
      "        t.drain(3)\n"
      "        assertEqual(t.current(), 0)\n"
      "    }\n"
      "}\n";
}

void chain_class(Tree& tree, int i) {
  std::string c = "Chain" + I(i);
  int threshold = 5 + i;
  tree["src/" + c + ".mini"] =
      "class " + c + " {\n"
      "    field count := 0\n"
      "    field high := false\n"
      "\n"
      "    method tick() {\n"
      "        self.bump(1)\n"
      "    }\n"
      "\n"
      "    method tickTwice() {\n"
      "        self.bump(2)\n"
      "    }\n"
      "\n"
      "    method bump(n) {\n"
      "        self.count := self.count + n\n"
      "        self.check()\n"
      "    }\n"
      "\n"
      "    method check() {\n"
      "        if self.count > " + I(threshold) + " {\n"
      "            self.high := true\n"
      "        }\n"
      "    }\n"
      "\n"
      "    method value() returns {\n"
      "        return self.count\n"
      "    }\n"
      "\n"
      "    method isHigh() returns {\n"
      "        return self.high\n"
      "    }\n"
      "}\n";
  tree["tests/" + c + "Test.mini"] =
      "suite " + c + "Test {\n"
      "    test testTick {\n"
      "        c := new " + c + "()\n"
      "        c.tick()\n"
      "        c.tick()\n"
      "        assertEqual(c.value(), 2)\n"
      "    }\n"
      "\n"
      "    test testTickTwice {\n"
      "        c := new " + c + "()\n"
      "        c.tickTwice()\n"
      "        assertEqual(c.value(), 2)\n"
      "    }\n"
      "\n"
      "    test testHighBoundary {\n"
      "        c := new " + c + "(" + I(threshold) + ")\n"
      "        c.tick()\n"
      "        assertTrue(c.isHigh())\n"
      "    }\n"
      "\n"
      "    test testNotHigh {\n"
      "        c := new " + c + "(" + I(threshold - 1) + ")\n"
      "        c.tick()\n"
      "        assertFalse(c.isHigh())\n"
      "    }\n"
      "}\n";
}

void pair_class(Tree& tree, int i) {
  std::string c = "Pair" + I(i);
  int d = i;      // setA: v * 2 - d
  int e = 2 + i;  // setB: v + e
  tree["src/" + c + ".mini"] =
      "class " + c + " {\n"
      "    field a := 0\n"
      "    field b := 0\n"
      "\n"
      "    method setA(v) {\n"
      "        self.a := v * 2 - " + I(d) + "\n"
      "    }\n"
      "\n"
      "    method setB(v) {\n"
      "        self.b := v + " + I(e) + "\n"
      "    }\n"
      "\n"
      "    method push() {\n"
      "        self.a := self.a + 1\n"
      "        self.b := self.b - 1\n"
      "    }\n"
      "\n"
      "    method sum() returns {\n"
      "        return self.a + self.b\n"
      "    }\n"
      "\n"
      "    method gap() returns {\n"
      "        return self.a - self.b\n"
      "    }\n"
      "}\n";
  tree["tests/" + c + "Test.mini"] =
      "suite " + c + "Test {\n"
      "    test testSetA {\n"
      "        p := new " + c + "()\n"
      "        p.setA(5)\n"
      "        assertEqual(p.sum(), " + I(5 * 2 - d) + ")\n"
      "    }\n"
      "\n"
      "    test testSetB {\n"
      "        p := new " + c + "()\n"
      "        p.setB(4)\n"
      "        assertEqual(p.sum(), " + I(4 + e) + ")\n"
      "    }\n"
      "\n"
      "    test testPush {\n"
      "        p := new " + c + "(5, 2)\n"
      "        p.push()\n"
      "        assertEqual(p.sum(), 7)\n"
      "        assertEqual(p.gap(), 5)\n"
      "    }\n"
      "\n"
      "    test testEagerPairs {\n"
      "        p := new " + c + "()\n"
      "        p.setA(6)\n"
      "        assertEqual(p.gap(), " + I(6 * 2 - d) + ")\n"
      "        q := new " + c + "()\n"
      "        q.setB(1)\n"
      "        assertEqual(q.sum(), " + I(1 + e) + ")\n"
      "    }\n"
      "}\n";
}

void gate_class(Tree& tree, int i) {
  std::string c = "Gate" + I(i);
  int key = 40 + i;
  tree["src/" + c + ".mini"] =
      "class " + c + " {\n"
      "    field armed := false\n"
      "    field fired := false\n"
      "    field tries := 0\n"
      "    field key := " + I(key) + "\n"
      "\n"
      "    method arm() {\n"
      "        self.armed := true\n"
      "    }\n"
      "\n"
      "    method disarm() {\n"
      "        self.armed := false\n"
      "    }\n"
      "\n"
      "    method fire(code) returns {\n"
      "        self.tries := self.tries + 1\n"
      "        if self.armed and code == self.key {\n"
      "            self.fired := true\n"
      "            return true\n"
      "        }\n"
      "        return false\n"
      "    }\n"
      "\n"
      "    method locked() returns {\n"
      "        return self.tries >= 3 or self.fired\n"
      "    }\n"
      "\n"
      "    method wasFired() returns {\n"
      "        return self.fired\n"
      "    }\n"
      "}\n";
  tree["tests/" + c + "Test.mini"] =
      "suite " + c + "Test {\n"
      "    test testFire {\n"
      "        g := new " + c + "()\n"
      "        g.arm()\n"
      "        ok := g.fire(" + I(key) + ")\n"
      "        assertTrue(ok)\n"
      "        assertTrue(g.wasFired())\n"
      "    }\n"
      "\n"
      "    test testWrongCode {\n"
      "        g := new " + c + "()\n"
      "        g.arm()\n"
      "        ok := g.fire(" + I(key + 1) + ")\n"
      "        assertFalse(ok)\n"
      "    }\n"
      "\n"
      "    test testUnarmed {\n"
      "        g := new " + c + "()\n"
      "        bad := g.fire(" + I(key) + ")\n"
      "        assertFalse(bad)\n"
      "        assertFalse(g.wasFired())\n"
      "    }\n"
      "\n"
      "    test testLocked {\n"
      "        g := new " + c + "()\n"
      "        g.fire(0)\n"
      "        g.fire(0)\n"
      "        g.fire(0)\n"
      "        assertTrue(g.locked())\n"
      "    }\n"
      "\n"
      "    test testNotLocked {\n"
      "        g := new " + c + "()\n"
      "        g.fire(0)\n"
      "        g.fire(0)\n"
      "        assertFalse(g.locked())\n"
      "    }\n"
      "}\n";
}

void stock_class(Tree& tree, int i) {
  std::string c = "Stock" + I(i);
  int h = 9 + i;
  tree["src/" + c + ".mini"] =
      "class " + c + " {\n"
      "    field onHand := 0\n"
      "    field reserved := 0\n"
      "\n"
      "    method receive(n) {\n"
      "        self.onHand := self.onHand + n\n"
      "    }\n"
      "\n"
      "    method reserve(n) {\n"
      "        if self.reserved + n <= self.onHand {\n"
      "            self.reserved := self.reserved + n\n"
      "        }\n"
      "    }\n"
      "\n"
      "    method release(n) {\n"
      "        if n <= self.reserved {\n"
      "            self.reserved := self.reserved - n\n"
      "        }\n"
      "    }\n"
      "\n"
      "    method ship() {\n"
      "        self.onHand := self.onHand - self.reserved\n"
      "        self.reserved := 0\n"
      "    }\n"
      "\n"
      "    method available() returns {\n"
      "        return self.onHand - self.reserved\n"
      "    }\n"
      "}\n";
  tree["tests/" + c + "Test.mini"] =
      "suite " + c + "Test {\n"
      "    test testReceive {\n"
      "        s := new " + c + "()\n"
      "        s.receive(" + I(h) + ")\n"
      "        assertEqual(s.available(), " + I(h) + ")\n"
      "    }\n"
      "\n"
      "    test testReserve {\n"
      "        s := new " + c + "(" + I(h) + ")\n"
      "        s.reserve(4)\n"
      "        assertEqual(s.available(), " + I(h - 4) + ")\n"
      "    }\n"
      "\n"
      "    test testReserveBoundary {\n"
      "        s := new " + c + "(6)\n"
      "        s.reserve(6)\n"
      "        assertEqual(s.available(), 0)\n"
      "    }\n"
      "\n"
      "    test testReserveOver {\n"
      "        s := new " + c + "(3)\n"
      "        s.reserve(5)\n"
      "        assertEqual(s.available(), 3)\n"
      "    }\n"
      "\n"
      "    test testRelease {\n"
      "        s := new " + c + "(" + I(h) + ", 6)\n"
      "        s.release(6)\n"
      "        assertEqual(s.available(), " + I(h) + ")\n"
      "    }\n"
      "\n"
      "    test testReleasePart {\n"
      "        s := new " + c + "(" + I(h) + ", 6)\n"
      "        s.release(2)\n"
      "        assertEqual(s.available(), " + I(h - 4) + ")\n"
      "    }\n"
      "\n"
      "    test testReleaseOver {\n"
      "        s := new " + c + "(" + I(h) + ", 2)\n"
      "        s.release(5)\n"
      "        assertEqual(s.available(), " + I(h - 2) + ")\n"
      "    }\n"
      "\n"
      "    test testShip {\n"
      "        s := new " + c + "(" + I(h) + ", 4)\n"
      "        s.ship()\n"
      "        assertEqual(s.available(), " + I(h - 4) + ")\n"
      "        s.receive(1)\n"
      "        assertEqual(s.available(), " + I(h - 3) + ")\n"
      "    }\n"
      "}\n";
}

Tree synthetic_tree() {
  Tree tree;
  for (int i = 1; i <= 9; ++i) counter_class(tree, i);
  for (int i = 1; i <= 2; ++i) tally_class(tree, i);
  for (int i = 1; i <= 8; ++i) chain_class(tree, i);
  for (int i = 1; i <= 8; ++i) pair_class(tree, i);
  for (int i = 1; i <= 6; ++i) gate_class(tree, i);
  for (int i = 1; i <= 6; ++i) stock_class(tree, i);
  return tree;
}

// ---- quality-score corpus -------------------------------------------------------
// Built so the full suite kills 44 focal-located mutants while the focal
// strategy kills 35 of them: Ledger bumps are caught by their own tests, the
// Nudge twiddle fault only surfaces through an eager test anchored on a
// different method, and Quiet's mutants survive everything.

void ledger_class(Tree& tree, int i) {
  std::string c = "Ledger" + I(i);
  std::string fields, methods, tests;
  for (int k = 1; k <= 5; ++k) {
    fields += "    field x" + I(k) + " := 0\n";
  }
  for (int k = 1; k <= 5; ++k) {
    methods +=
        "\n"
        "    method bump" + I(k) + "(n) {\n"
        "        self.x" + I(k) + " := self.x" + I(k) + " + n\n"
        "    }\n"
        "\n"
        "    method get" + I(k) + "() returns {\n"
        "        return self.x" + I(k) + "\n"
        "    }\n";
    tests += std::string(k > 1 ? "\n" : "") +
        "    test testBump" + I(k) + " {\n"
        "        g := new " + c + "()\n"
        "        g.bump" + I(k) + "(" + I(2 + k) + ")\n"
        "        assertEqual(g.get" + I(k) + "(), " + I(2 + k) + ")\n"
        "    }\n";
  }
  tree["src/" + c + ".mini"] = "class " + c + " {\n" + fields + methods + "}\n";
  tree["tests/" + c + "Test.mini"] = "suite " + c + "Test {\n" + tests + "}\n";
}

void nudge_class(Tree& tree, int i) {
  std::string c = "Nudge" + I(i);
  tree["src/" + c + ".mini"] =
      "class " + c + " {\n"
      "    field x := 0\n"
      "\n"
      "    method twiddle(n) {\n"
      "        self.x := self.x + n\n"
      "    }\n"
      "\n"
      "    method mark() {\n"
      "        self.x := self.x\n"
      "    }\n"
      "\n"
      "    method get() returns {\n"
      "        return self.x\n"
      "    }\n"
      "}\n";
  tree["tests/" + c + "Test.mini"] =
      "suite " + c + "Test {\n"
      "    test testTwiddle {\n"
      "        t := new " + c + "()\n"
      "        t.twiddle(0)\n"
      "        assertEqual(t.get(), 0)\n"
      "    }\n"
      "\n"
      "    test testEager {\n"
      "        t := new " + c + "()\n"
      "        t.twiddle(7)\n"
      "        t.mark()\n"
      "        assertEqual(t.get(), 7)\n"
      "    }\n"
      "}\n";
}

void quiet_class(Tree& tree) {
  tree["src/Quiet1.mini"] =
      "class Quiet1 {\n"
      "    field z := 0\n"
      "\n"
      "    method rescale() {\n"
      "        self.z := self.z * 1\n"
      "    }\n"
      "\n"
      "    method getZ() returns {\n"
      "        return self.z\n"
      "    }\n"
      "}\n";
  tree["tests/Quiet1Test.mini"] =
      "suite Quiet1Test {\n"
      "    test testRescale {\n"
      "        q := new Quiet1()\n"
      "        q.rescale()\n"
      "        assertEqual(q.getZ(), 0)\n"
      "    }\n"
      "}\n";
}

Tree quality_tree() {
  Tree tree;
  for (int i = 1; i <= 7; ++i) ledger_class(tree, i);
  for (int i = 1; i <= 9; ++i) nudge_class(tree, i);
  quiet_class(tree);
  return tree;
}

// ---- emission -------------------------------------------------------------------

void write_tree(const fs::path& dir, const Tree& tree) {
  for (const auto& [relative, text] : tree) {
    fs::path file = dir / relative;
    fs::create_directories(file.parent_path());
    write_text_file(file, text);
  }
}

int emit_corpus(const std::string& name, const Tree& tree, const fs::path& dir,
                std::int64_t budget, const std::string& conf_text, int workers) {
  Program program = parse_program(tree);
  Manifest manifest = compute_manifest(name, program, budget, workers);
  write_tree(dir, tree);
  if (!conf_text.empty()) write_text_file(dir / "mutagoal.conf", conf_text);
  write_text_file(dir / "manifest.json", manifest_json(manifest));
  std::cout << name << ": " << manifest.classes << " classes, "
            << manifest.tests << " tests, " << manifest.mutants_total
            << " mutants (" << manifest.located << " focal-located, "
            << *manifest.full_kills << " killable)\n";
  if (manifest.expected_focal_speedup) {
    std::cout << name << ": focal speed-up " << manifest.expected_focal_speedup->num
              << "/" << manifest.expected_focal_speedup->den << " = "
              << decimal1(*manifest.expected_focal_speedup) << "x\n";
  }
  return 0;
}

int cmd_manifest(const fs::path& dir, int workers) {
  ProjectTree tree = read_project_tree(dir);
  Program program = parse_program(tree.files);
  std::int64_t budget = Config{}.budget;
  if (tree.conf_text) {
    Config config = resolve_config(tree.conf_text, {});
    budget = config.budget;
  }
  Manifest manifest =
      compute_manifest(dir.filename().string(), program, budget, workers);
  write_text_file(dir / "manifest.json", manifest_json(manifest));
  std::cout << "wrote " << (dir / "manifest.json").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generate bundled fixture corpora and their manifests"};
  app.require_subcommand(1);
  std::string dir;
  int workers = 4;

  CLI::App* synthetic =
      app.add_subcommand("synthetic", "emit the large synthetic corpus");
  synthetic->add_option("dir", dir, "output directory")->required();
  synthetic->add_option("--workers", workers, "manifest computation workers");

  CLI::App* quality =
      app.add_subcommand("quality-score", "emit the quality-score corpus");
  quality->add_option("dir", dir, "output directory")->required();
  quality->add_option("--workers", workers, "manifest computation workers");

  CLI::App* manifest =
      app.add_subcommand("manifest", "recompute manifest.json for a project");
  manifest->add_option("dir", dir, "project directory")->required();
  manifest->add_option("--workers", workers, "manifest computation workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  try {
    if (app.got_subcommand(synthetic)) {
      return emit_corpus("synthetic", synthetic_tree(), dir, 10000,
                         "# tuned for the bundled synthetic corpus: its loop\n"
                         "# mutants spin forever, so a tight budget keeps the\n"
                         "# kill matrix fast\n"
                         "budget=10000\n",
                         workers);
    }
    if (app.got_subcommand(quality)) {
      return emit_corpus("quality-score", quality_tree(), dir,
                         Config{}.budget, "", workers);
    }
    if (app.got_subcommand(manifest)) return cmd_manifest(dir, workers);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 2;
}
