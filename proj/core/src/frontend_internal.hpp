#pragma once

#include <string>
#include <vector>

#include "mutagoal/ast.hpp"

namespace mutagoal {

// Raw single-file parses; resolution happens after all files are in.
std::vector<ClassDecl> parse_class_file(const std::string& file, const std::string& text);
std::vector<TestSuite> parse_suite_file(const std::string& file, const std::string& text);

/// Fills the name indexes, enforces the structural invariants (unique names,
/// resolvable invocation targets, return shapes, suite naming), and records
/// warn-level lints. Throws ResolveError on violations.
void resolve_program(Program& program);

}  // namespace mutagoal
