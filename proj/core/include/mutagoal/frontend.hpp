#pragma once

#include <map>
#include <string>

#include "mutagoal/ast.hpp"

namespace mutagoal {

/// Parses and resolves a whole source tree. Keys are project-relative paths:
/// production classes under "src/", test suites under "tests/", extension
/// ".mini". Throws ParseError / ResolveError; the result is fully resolved
/// (every invocation target names a declared class or method).
Program parse_program(const std::map<std::string, std::string>& source_tree);

/// Canonical text for a whole production class or test suite.
/// parse(pretty_print(parse(f))) is structurally identical to parse(f).
std::string pretty_print(const ClassDecl& cls);
std::string pretty_print(const TestSuite& suite);

/// Canonical one-line fragments, used for mutant diffs and diagnostics.
std::string expr_text(const Expr& expr);
std::string stmt_text(const Stmt& stmt);
std::string test_stmt_text(const TestStmt& stmt);

/// Reconstructs the full source tree of a program, path -> canonical text.
/// Classes and suites are grouped back into the files they came from.
std::map<std::string, std::string> print_program(const Program& program);

}  // namespace mutagoal
