#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mutagoal::testing {

/// Root of the committed fixture corpora (set by the build).
inline std::filesystem::path fixtures_dir() {
#ifdef MUTAGOAL_FIXTURES_DIR
  return std::filesystem::path(MUTAGOAL_FIXTURES_DIR);
#else
  return std::filesystem::path("fixtures");
#endif
}

inline std::filesystem::path fixture(const std::string& name) {
  return fixtures_dir() / name;
}

inline std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void spit(const std::filesystem::path& file, const std::string& text) {
  std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + file.string());
}

/// Unique directory under the system temp root, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    std::filesystem::path base = std::filesystem::temp_directory_path();
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::filesystem::path candidate =
          base / ("mutagoal-test-" + std::to_string(rng()));
      if (std::filesystem::create_directories(candidate)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("cannot create temp directory");
  }

  ~TempDir() {
    std::error_code ignored;
    std::filesystem::remove_all(path_, ignored);
  }

  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& tail) const {
    return path_ / tail;
  }

 private:
  std::filesystem::path path_;
};

/// Writes a MiniLang project tree (relative path -> text) under dir.
inline void write_project(const std::filesystem::path& dir,
                          const std::map<std::string, std::string>& files) {
  for (const auto& [relative, text] : files) spit(dir / relative, text);
}

}  // namespace mutagoal::testing
