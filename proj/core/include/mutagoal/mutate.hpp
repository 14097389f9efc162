#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutagoal/ast.hpp"

namespace mutagoal {

/// Mutation operator codes, in the canonical (alphabetical) order used for
/// mutant enumeration.
enum class MutOp { AOR, CNB, CRP, LCR, ROR };

const char* mutop_name(MutOp op);
std::optional<MutOp> mutop_from_name(const std::string& name);
const std::vector<MutOp>& all_mutops();

/// A first-order mutant, held as a patch against the original program:
/// replace the expression at expr_index (preorder position within the
/// statement's own expression tree) of the statement at stmt_index (preorder
/// position within the method body) with `replacement`.
struct Mutant {
  std::string id;  // <file>:<class>.<method>:<stmt-index>:<op-code>:<seq>
  MutOp op{};
  std::string class_name;
  std::string method_name;
  int stmt_index = 0;
  int seq = 0;  // enumeration of (site, variant) pairs within (stmt, op)
  Span location;
  std::string original;  // canonical text of the replaced fragment
  std::string mutated;   // canonical text of the replacement
  int expr_index = 0;
  Expr replacement;
};

/// Thrown by materialize when the patch no longer matches the program it is
/// applied to (wrong program, or the target fragment changed).
class StaleMutantError : public std::runtime_error {
 public:
  explicit StaleMutantError(const std::string& id, const std::string& why)
      : std::runtime_error("stale mutant " + id + ": " + why) {}
};

/// Enumerates every applicable (site, operator, variant) triple over the
/// production classes, in deterministic order: file/class/method declaration
/// order, statement preorder, operator code, then site/variant sequence.
/// Test suites are never mutated.
std::vector<Mutant> generate_mutants(const Program& program,
                                     const std::set<MutOp>& enabled);

/// Returns a deep copy of the program with the patch applied; the input is
/// unchanged. Idempotent for a fixed (program, mutant) pair.
Program materialize(const Program& program, const Mutant& mutant);

}  // namespace mutagoal
