#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "mutagoal/interp.hpp"
#include "mutagoal/mutate.hpp"
#include "mutagoal/report.hpp"
#include "mutagoal/select.hpp"

namespace mutagoal {

/// A project's mutagoal.conf is unreadable: unknown key, bad value,
/// duplicate key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Effective tool configuration. Defaults: every operator enabled, focal
/// strategy, one million steps, one worker, ./out, table output.
struct Config {
  std::set<MutOp> operators{MutOp::AOR, MutOp::CNB, MutOp::CRP, MutOp::LCR,
                            MutOp::ROR};
  Strategy strategy = Strategy::Focal;
  std::int64_t budget = 1'000'000;
  int workers = 1;
  std::string out_dir = "out";
  ReportFormat format = ReportFormat::Table;

  CostModel cost() const {
    CostModel model;
    model.mode = CostModel::Mode::Steps;
    model.step_budget = budget;
    return model;
  }

  friend bool operator==(const Config&, const Config&) = default;
};

/// The keys one configuration source actually set; unset keys defer to the
/// next source down.
struct ConfigPatch {
  std::optional<std::set<MutOp>> operators;
  std::optional<Strategy> strategy;
  std::optional<std::int64_t> budget;
  std::optional<int> workers;
  std::optional<std::string> out_dir;
  std::optional<ReportFormat> format;
};

/// Parses mutagoal.conf text: one key=value per line, '#' comments, blank
/// lines ignored. Keys: operators (comma-separated names), strategy, budget,
/// workers, out, format. Unknown or duplicate keys and bad values are
/// ConfigErrors naming the line.
ConfigPatch parse_config(const std::string& text);

Config apply(Config base, const ConfigPatch& patch);

/// Defaults, overridden by the config file, overridden by the command line.
Config resolve_config(const std::optional<std::string>& conf_text,
                      const ConfigPatch& cli);

}  // namespace mutagoal
