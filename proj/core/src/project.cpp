#include "mutagoal/project.hpp"

#include <fstream>
#include <sstream>

#include "mutagoal/source.hpp"

namespace mutagoal {

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw LoadError(file.string(), Span{1, 1, 1, 1}, "cannot read file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void collect(const fs::path& root, const char* subdir,
             std::map<std::string, std::string>& files) {
  fs::path dir = root / subdir;
  if (!fs::is_directory(dir)) return;
  for (const fs::directory_entry& entry :
       fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".mini") continue;
    std::string relative =
        fs::relative(entry.path(), root).generic_string();
    files.emplace(std::move(relative), slurp(entry.path()));
  }
}

}  // namespace

ProjectTree read_project_tree(const std::filesystem::path& root) {
  if (!fs::is_directory(root)) {
    throw LoadError(root.string(), Span{1, 1, 1, 1},
                    "project directory not found");
  }
  ProjectTree tree;
  tree.root = root;
  collect(root, "src", tree.files);
  collect(root, "tests", tree.files);
  if (tree.files.empty()) {
    throw LoadError(root.string(), Span{1, 1, 1, 1},
                    "no MiniLang sources found (expected src/*.mini or "
                    "tests/*.mini)");
  }
  fs::path conf = root / "mutagoal.conf";
  if (fs::is_regular_file(conf)) tree.conf_text = slurp(conf);
  return tree;
}

Program load_project(const std::filesystem::path& root) {
  return parse_program(read_project_tree(root).files);
}

}  // namespace mutagoal
