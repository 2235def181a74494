#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "latticeturb/eigenbasis.hpp"
#include "latticeturb/interaction_kernel.hpp"
#include "latticeturb/lattice.hpp"

namespace latticeturb {

std::string_view library_version() noexcept;

/// Writes comma-separated rows; doubles use 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string> header);
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  template <class... Ts>
  void row(const Ts&... values) {
    std::size_t col = 0;
    ((write_cell(values, col++)), ...);
    out_ << '\n';
  }
  void flush() { out_.flush(); }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  void write_cell(double v, std::size_t col);
  void write_cell(std::size_t v, std::size_t col);
  void write_cell(int v, std::size_t col);
  void write_cell(long long v, std::size_t col);
  void write_cell(const std::string& v, std::size_t col);
  void separator(std::size_t col) {
    if (col) out_ << ',';
  }

  std::filesystem::path path_;
  std::ofstream out_;
};

std::string format_double(double v);

/// Column-oriented CSV contents (numeric columns only).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  const std::vector<double>& column(const std::string& name) const;
  std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
};

/// Throws ConfigError on a missing file, ragged rows or non-numeric cells.
CsvTable read_csv(const std::filesystem::path& path);

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

/// Provenance record written once per run directory as manifest.json.
struct RunManifest {
  static constexpr int kSchemaVersion = 1;

  std::string subcommand;
  std::string timestamp;  // ISO 8601, UTC
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<std::uint64_t> seeds;
  std::size_t threads = 1;
  std::vector<std::filesystem::path> inputs;   // absolute or cwd-relative
  std::vector<std::filesystem::path> outputs;  // relative to the run directory
  nlohmann::json notes = nlohmann::json::object();

  nlohmann::json to_json(const std::filesystem::path& run_dir) const;
};

std::string utc_timestamp();

/// Writes run_dir/manifest.json with SHA-256 digests of every input and
/// output; returns its path.
std::filesystem::path write_manifest(const std::filesystem::path& run_dir,
                                     const RunManifest& manifest);

/// Recomputes the digests listed in run_dir/manifest.json. Returns one
/// message per missing or modified file; empty means verified.
std::vector<std::string> verify_manifest(const std::filesystem::path& run_dir);

void write_disorder_csv(const std::filesystem::path& path, const DisorderRealization& disorder);

/// energies.csv (mode_index, energy, center, participation_ratio) and
/// modes.csv (mode_index, site_index, amplitude).
void write_eigenbasis(const std::filesystem::path& dir, const EigenBasis& basis);

/// CSV (dl, dm, dn, k_value) plus a JSON header next to it.
void write_kernel_table(const std::filesystem::path& csv_path,
                        const std::filesystem::path& header_path, const KernelTable& table);
KernelTable read_kernel_table(const std::filesystem::path& csv_path,
                              const std::filesystem::path& header_path);

}  // namespace latticeturb
