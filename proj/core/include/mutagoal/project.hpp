#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "mutagoal/ast.hpp"
#include "mutagoal/frontend.hpp"

namespace mutagoal {

/// A MiniLang project on disk: production classes under src/, test suites
/// under tests/, and an optional mutagoal.conf at the root.
struct ProjectTree {
  std::filesystem::path root;
  std::map<std::string, std::string> files;  // '/'-separated relative paths
  std::optional<std::string> conf_text;      // mutagoal.conf, when present
};

/// Collects every .mini file under root/src and root/tests. Other files are
/// ignored. Throws LoadError when the root is missing or holds no sources.
ProjectTree read_project_tree(const std::filesystem::path& root);

/// read_project_tree + parse_program.
Program load_project(const std::filesystem::path& root);

}  // namespace mutagoal
