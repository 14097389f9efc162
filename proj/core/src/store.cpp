#include "mutagoal/store.hpp"

#include <sstream>

#include "json.hpp"

namespace mutagoal {

namespace {

using nlohmann::json;

std::optional<MutantStatus> status_from_name(const std::string& name) {
  if (name == "killed") return MutantStatus::Killed;
  if (name == "survived") return MutantStatus::Survived;
  if (name == "not-covered") return MutantStatus::NotCovered;
  if (name == "error") return MutantStatus::Error;
  return std::nullopt;
}

/// Applies `parse` to every line of `file`, prefixing errors with the
/// position. A trailing newline does not create an empty record.
template <typename Parse>
auto parse_lines(const std::filesystem::path& file, Parse&& parse) {
  std::string text = read_text_file(file);
  std::vector<decltype(parse(std::string{}))> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      out.push_back(parse(line));
    } catch (const std::exception& error) {
      throw StoreError(file.string() + ":" + std::to_string(number) + ": " +
                       error.what());
    }
  }
  return out;
}

}  // namespace

std::filesystem::path mutants_file(const std::filesystem::path& out_dir) {
  return out_dir / "mutants.jsonl";
}

std::filesystem::path results_file(const std::filesystem::path& out_dir,
                                   Strategy strategy) {
  return out_dir /
         ("results-" + std::string(strategy_name(strategy)) + ".jsonl");
}

std::filesystem::path matrix_file(const std::filesystem::path& out_dir) {
  return out_dir / "matrix.tsv";
}

std::filesystem::path report_file(const std::filesystem::path& out_dir) {
  return out_dir / "report.json";
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw StoreError("cannot read '" + file.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& file,
                     const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw StoreError("cannot write '" + file.string() + "'");
  out << text;
  if (!out) throw StoreError("failed writing '" + file.string() + "'");
}

std::string mutant_record_line(const MutantRecord& record) {
  json doc{{"id", record.id},
           {"op", record.op},
           {"class", record.class_name},
           {"method", record.method_name},
           {"file", record.file},
           {"line", record.line},
           {"col", record.col},
           {"original", record.original},
           {"mutated", record.mutated},
           {"focal", record.focal}};
  return doc.dump();
}

MutantRecord parse_mutant_record(const std::string& line) {
  try {
    json doc = json::parse(line);
    MutantRecord record;
    record.id = doc.at("id").get<std::string>();
    record.op = doc.at("op").get<std::string>();
    record.class_name = doc.at("class").get<std::string>();
    record.method_name = doc.at("method").get<std::string>();
    record.file = doc.at("file").get<std::string>();
    record.line = doc.at("line").get<int>();
    record.col = doc.at("col").get<int>();
    record.original = doc.at("original").get<std::string>();
    record.mutated = doc.at("mutated").get<std::string>();
    record.focal = doc.at("focal").get<bool>();
    return record;
  } catch (const json::exception& error) {
    throw StoreError(std::string("malformed mutant record: ") + error.what());
  }
}

void write_mutant_records(const std::filesystem::path& file,
                          const std::vector<MutantRecord>& records) {
  std::string text;
  for (const MutantRecord& record : records) {
    text += mutant_record_line(record);
    text += '\n';
  }
  write_text_file(file, text);
}

std::vector<MutantRecord> read_mutant_records(
    const std::filesystem::path& file) {
  return parse_lines(file, parse_mutant_record);
}

std::string result_line(const MutantResult& result) {
  json doc{{"mutant", result.mutant_id},
           {"strategy", strategy_name(result.strategy)},
           {"status", mutant_status_name(result.status)},
           {"tests_considered", result.tests_considered},
           {"tests_executed", result.tests_executed},
           {"steps", result.steps},
           {"selection", result.selection}};
  if (result.status == MutantStatus::Killed) {
    doc["killed_by"] = result.killed_by;
    doc["position"] = result.position;
  }
  if (result.status == MutantStatus::Error) doc["error"] = result.error;
  return doc.dump();
}

MutantResult parse_result_line(const std::string& line) {
  try {
    json doc = json::parse(line);
    MutantResult result;
    result.mutant_id = doc.at("mutant").get<std::string>();
    std::string strategy = doc.at("strategy").get<std::string>();
    std::optional<Strategy> parsed_strategy = strategy_from_name(strategy);
    if (!parsed_strategy) {
      throw StoreError("unknown strategy '" + strategy + "'");
    }
    result.strategy = *parsed_strategy;
    std::string status = doc.at("status").get<std::string>();
    std::optional<MutantStatus> parsed_status = status_from_name(status);
    if (!parsed_status) throw StoreError("unknown status '" + status + "'");
    result.status = *parsed_status;
    result.tests_considered = doc.at("tests_considered").get<int>();
    result.tests_executed = doc.at("tests_executed").get<int>();
    result.steps = doc.at("steps").get<std::int64_t>();
    result.selection = doc.at("selection").get<std::vector<std::string>>();
    if (result.status == MutantStatus::Killed) {
      result.killed_by = doc.at("killed_by").get<std::string>();
      result.position = doc.at("position").get<int>();
    }
    if (result.status == MutantStatus::Error) {
      result.error = doc.at("error").get<std::string>();
    }
    return result;
  } catch (const json::exception& error) {
    throw StoreError(std::string("malformed result record: ") + error.what());
  }
}

std::vector<MutantResult> read_results(const std::filesystem::path& file) {
  return parse_lines(file, parse_result_line);
}

ResultsWriter::ResultsWriter(const std::filesystem::path& file, bool append)
    : file_(file),
      out_(file, append ? std::ios::binary | std::ios::app
                        : std::ios::binary | std::ios::trunc) {
  if (!out_) throw StoreError("cannot write '" + file.string() + "'");
}

void ResultsWriter::write(const MutantResult& result) {
  out_ << result_line(result) << '\n';
  out_.flush();
  if (!out_) throw StoreError("failed writing '" + file_.string() + "'");
}

std::string matrix_tsv(const KillMatrix& matrix) {
  std::string text = "mutant";
  for (const std::string& test : matrix.test_ids) {
    text += '\t';
    text += test;
  }
  text += '\n';
  for (std::size_t row = 0; row < matrix.mutant_ids.size(); ++row) {
    text += matrix.mutant_ids[row];
    for (std::size_t col = 0; col < matrix.test_ids.size(); ++col) {
      const KillMatrix::Cell& cell = matrix.cells[row][col];
      text += '\t';
      text += cell.killed ? "k:" : "p:";
      text += std::to_string(cell.steps);
    }
    text += '\n';
  }
  return text;
}

KillMatrix parse_matrix_tsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw StoreError("matrix file is empty");

  auto split = [](const std::string& row) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = row.find('\t', start);
      if (tab == std::string::npos) {
        cells.push_back(row.substr(start));
        return cells;
      }
      cells.push_back(row.substr(start, tab - start));
      start = tab + 1;
    }
  };

  std::vector<std::string> header = split(line);
  if (header.empty() || header[0] != "mutant") {
    throw StoreError("matrix line 1: header must start with 'mutant'");
  }
  KillMatrix matrix;
  matrix.test_ids.assign(header.begin() + 1, header.end());

  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::vector<std::string> cells = split(line);
    if (cells.size() != header.size()) {
      throw StoreError("matrix line " + std::to_string(number) + ": expected " +
                       std::to_string(header.size()) + " columns, found " +
                       std::to_string(cells.size()));
    }
    matrix.mutant_ids.push_back(cells[0]);
    std::vector<KillMatrix::Cell> row;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      const std::string& cell = cells[i];
      if (cell.size() < 3 || (cell[0] != 'k' && cell[0] != 'p') ||
          cell[1] != ':') {
        throw StoreError("matrix line " + std::to_string(number) +
                         ": malformed cell '" + cell + "'");
      }
      KillMatrix::Cell parsed;
      parsed.killed = cell[0] == 'k';
      try {
        parsed.steps = std::stoll(cell.substr(2));
      } catch (const std::exception&) {
        throw StoreError("matrix line " + std::to_string(number) +
                         ": malformed cell '" + cell + "'");
      }
      row.push_back(parsed);
    }
    matrix.cells.push_back(std::move(row));
  }
  return matrix;
}

}  // namespace mutagoal
