#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutagoal/engine.hpp"
#include "mutagoal/report.hpp"

namespace mutagoal {

/// Stored campaign data cannot be read or written: missing file, malformed
/// line, unknown enum name, truncated matrix row.
class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- output directory layout -----------------------------------------------

std::filesystem::path mutants_file(const std::filesystem::path& out_dir);
std::filesystem::path results_file(const std::filesystem::path& out_dir,
                                   Strategy strategy);
std::filesystem::path matrix_file(const std::filesystem::path& out_dir);
std::filesystem::path report_file(const std::filesystem::path& out_dir);

// ---- whole-file helpers ------------------------------------------------------

std::string read_text_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file,
                     const std::string& text);

// ---- mutant list: one json object per line, generation order ----------------

std::string mutant_record_line(const MutantRecord& record);
MutantRecord parse_mutant_record(const std::string& line);
void write_mutant_records(const std::filesystem::path& file,
                          const std::vector<MutantRecord>& records);
std::vector<MutantRecord> read_mutant_records(const std::filesystem::path& file);

// ---- campaign results: one json object per line, input mutant order ---------
// Wall-clock time is measured in memory but never persisted, so stored
// results are byte-identical across runs and worker counts.

std::string result_line(const MutantResult& result);
MutantResult parse_result_line(const std::string& line);
std::vector<MutantResult> read_results(const std::filesystem::path& file);

/// Streams result lines to disk as a campaign produces them, one flushed
/// line per mutant, so an interrupted campaign can be resumed by skipping
/// the mutants already on file.
class ResultsWriter {
 public:
  ResultsWriter(const std::filesystem::path& file, bool append);

  void write(const MutantResult& result);

 private:
  std::filesystem::path file_;
  std::ofstream out_;
};

// ---- kill matrix: tab-separated, header row of test ids ---------------------
// Cells are `k:<steps>` (killed) or `p:<steps>` (passed).

std::string matrix_tsv(const KillMatrix& matrix);
KillMatrix parse_matrix_tsv(const std::string& text);

}  // namespace mutagoal
