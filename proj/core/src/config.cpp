#include "mutagoal/config.hpp"

#include <sstream>

namespace mutagoal {

namespace {

std::string trim(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  std::size_t end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ConfigError("mutagoal.conf line " + std::to_string(line) + ": " +
                    message);
}

std::int64_t parse_count(int line, const std::string& key,
                         const std::string& value, std::int64_t max) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
    fail(line, key + " must be a positive integer, got '" + value + "'");
  }
  errno = 0;
  char* end = nullptr;
  long long parsed = std::strtoll(value.c_str(), &end, 10);
  if (errno != 0 || *end != '\0' || parsed < 1 || parsed > max) {
    fail(line, key + " is out of range: '" + value + "'");
  }
  return parsed;
}

std::set<MutOp> parse_operators(int line, const std::string& value) {
  std::set<MutOp> ops;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t comma = value.find(',', start);
    std::string name = trim(comma == std::string::npos
                                ? value.substr(start)
                                : value.substr(start, comma - start));
    std::optional<MutOp> op = mutop_from_name(name);
    if (!op) fail(line, "unknown operator '" + name + "'");
    ops.insert(*op);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (ops.empty()) fail(line, "operators must name at least one operator");
  return ops;
}

}  // namespace

ConfigPatch parse_config(const std::string& text) {
  ConfigPatch patch;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t equals = line.find('=');
    if (equals == std::string::npos) {
      fail(number, "expected key=value, got '" + trim(raw) + "'");
    }
    std::string key = trim(line.substr(0, equals));
    std::string value = trim(line.substr(equals + 1));
    if (key.empty()) fail(number, "empty key");
    if (key == "operators") {
      if (patch.operators) fail(number, "duplicate key 'operators'");
      patch.operators = parse_operators(number, value);
    } else if (key == "strategy") {
      if (patch.strategy) fail(number, "duplicate key 'strategy'");
      patch.strategy = strategy_from_name(value);
      if (!patch.strategy) fail(number, "unknown strategy '" + value + "'");
    } else if (key == "budget") {
      if (patch.budget) fail(number, "duplicate key 'budget'");
      patch.budget =
          parse_count(number, "budget", value, 1'000'000'000'000LL);
    } else if (key == "workers") {
      if (patch.workers) fail(number, "duplicate key 'workers'");
      patch.workers = static_cast<int>(parse_count(number, "workers", value, 4096));
    } else if (key == "out") {
      if (patch.out_dir) fail(number, "duplicate key 'out'");
      if (value.empty()) fail(number, "out must name a directory");
      patch.out_dir = value;
    } else if (key == "format") {
      if (patch.format) fail(number, "duplicate key 'format'");
      patch.format = report_format_from_name(value);
      if (!patch.format) fail(number, "unknown format '" + value + "'");
    } else {
      fail(number, "unknown key '" + key + "'");
    }
  }
  return patch;
}

Config apply(Config base, const ConfigPatch& patch) {
  if (patch.operators) base.operators = *patch.operators;
  if (patch.strategy) base.strategy = *patch.strategy;
  if (patch.budget) base.budget = *patch.budget;
  if (patch.workers) base.workers = *patch.workers;
  if (patch.out_dir) base.out_dir = *patch.out_dir;
  if (patch.format) base.format = *patch.format;
  return base;
}

Config resolve_config(const std::optional<std::string>& conf_text,
                      const ConfigPatch& cli) {
  Config config;
  if (conf_text) config = apply(config, parse_config(*conf_text));
  return apply(config, cli);
}

}  // namespace mutagoal
