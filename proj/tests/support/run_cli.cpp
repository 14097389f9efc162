#include "support/run_cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "support/support.hpp"

namespace mutagoal::testing {

namespace {

std::string shell_quote(const std::string& arg) {
  std::string quoted = "'";
  for (char c : arg) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  quoted += "'";
  return quoted;
}

CliResult run_binary(const std::string& binary,
                     const std::vector<std::string>& args,
                     const std::string& cwd) {
  TempDir scratch;
  std::filesystem::path out_file = scratch / "stdout.txt";
  std::filesystem::path err_file = scratch / "stderr.txt";

  std::string command;
  if (!cwd.empty()) command += "cd " + shell_quote(cwd) + " && ";
  command += shell_quote(binary);
  for (const std::string& arg : args) command += " " + shell_quote(arg);
  command += " > " + shell_quote(out_file.string());
  command += " 2> " + shell_quote(err_file.string());

  int raw = std::system(command.c_str());
  CliResult result;
  if (raw == -1) throw std::runtime_error("cannot spawn " + binary);
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  return result;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, const std::string& cwd) {
#ifndef MUTAGOAL_CLI_PATH
#error "MUTAGOAL_CLI_PATH must point at the built binary"
#endif
  return run_binary(MUTAGOAL_CLI_PATH, args, cwd);
}

CliResult run_corpusgen(const std::vector<std::string>& args,
                        const std::string& cwd) {
#ifndef MUTAGOAL_CORPUSGEN_PATH
#error "MUTAGOAL_CORPUSGEN_PATH must point at the built binary"
#endif
  return run_binary(MUTAGOAL_CORPUSGEN_PATH, args, cwd);
}

}  // namespace mutagoal::testing
