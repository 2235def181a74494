#include "latticeturb/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <chrono>
#include <ctime>
#include <memory>
#include <sstream>

#include "latticeturb/errors.hpp"

namespace latticeturb {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view library_version() noexcept { return LATTICETURB_VERSION; }

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

namespace {

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) cells.push_back(cell);
  if (!line.empty() && line.back() == sep) cells.emplace_back();
  return cells;
}

}  // namespace

CsvWriter::CsvWriter(const fs::path& path, std::initializer_list<std::string> header)
    : CsvWriter(path, std::vector<std::string>(header)) {}

CsvWriter::CsvWriter(const fs::path& path, const std::vector<std::string>& header)
    : path_(path), out_(open_output(path)) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    separator(i);
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::write_cell(double v, std::size_t col) {
  separator(col);
  out_ << format_double(v);
}
void CsvWriter::write_cell(std::size_t v, std::size_t col) {
  separator(col);
  out_ << v;
}
void CsvWriter::write_cell(int v, std::size_t col) {
  separator(col);
  out_ << v;
}
void CsvWriter::write_cell(long long v, std::size_t col) {
  separator(col);
  out_ << v;
}
void CsvWriter::write_cell(const std::string& v, std::size_t col) {
  separator(col);
  out_ << v;
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return columns[i];
  throw ConfigError("CSV has no column \"" + name + "\"");
}

CsvTable read_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw ConfigError(path.string() + ": empty file");
  table.header = split(line, ',');
  table.columns.resize(table.header.size());
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != table.header.size())
      throw ConfigError(path.string() + ": row " + std::to_string(row) + " has " +
                        std::to_string(cells.size()) + " cells, expected " +
                        std::to_string(table.header.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      double v = 0.0;
      const char* first = cells[c].data();
      const char* last = first + cells[c].size();
      const auto res = std::from_chars(first, last, v);
      if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError(path.string() + ": row " + std::to_string(row) + " column \"" +
                          table.header[c] + "\" is not numeric");
      table.columns[c].push_back(v);
    }
  }
  return table;
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 initialization failed");
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    const auto got = in.gcount();
    if (got > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(got));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xF];
  }
  return hex;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

json RunManifest::to_json(const fs::path& run_dir) const {
  json files_in = json::array();
  for (const auto& p : inputs)
    files_in.push_back({{"path", p.string()}, {"sha256", sha256_file(p)}});
  json files_out = json::array();
  for (const auto& p : outputs)
    files_out.push_back({{"path", p.generic_string()}, {"sha256", sha256_file(run_dir / p)}});
  return json{{"schema_version", kSchemaVersion},
              {"tool_version", std::string(library_version())},
              {"subcommand", subcommand},
              {"timestamp", timestamp.empty() ? utc_timestamp() : timestamp},
              {"parameters", parameters},
              {"seeds", seeds},
              {"threads", threads},
              {"inputs", files_in},
              {"outputs", files_out},
              {"notes", notes}};
}

fs::path write_manifest(const fs::path& run_dir, const RunManifest& manifest) {
  const json doc = manifest.to_json(run_dir);
  const fs::path path = run_dir / "manifest.json";
  auto out = open_output(path);
  out << doc.dump(2) << '\n';
  return path;
}

std::vector<std::string> verify_manifest(const fs::path& run_dir) {
  std::vector<std::string> problems;
  std::ifstream in(run_dir / "manifest.json");
  if (!in) return {"manifest.json is missing"};
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    return {std::string("manifest.json is not valid JSON: ") + e.what()};
  }
  if (doc.value("schema_version", -1) != RunManifest::kSchemaVersion)
    problems.push_back("unsupported schema_version");
  const auto check = [&](const json& entries, bool relative) {
    for (const auto& e : entries) {
      const fs::path p = relative ? run_dir / e.at("path").get<std::string>()
                                  : fs::path(e.at("path").get<std::string>());
      if (!fs::exists(p)) {
        problems.push_back(p.string() + ": missing");
        continue;
      }
      if (sha256_file(p) != e.at("sha256").get<std::string>())
        problems.push_back(p.string() + ": digest mismatch");
    }
  };
  check(doc.value("inputs", json::array()), false);
  check(doc.value("outputs", json::array()), true);
  return problems;
}

void write_disorder_csv(const fs::path& path, const DisorderRealization& disorder) {
  CsvWriter csv(path, {"site_index", "potential"});
  for (std::size_t x = 0; x < disorder.potential.size(); ++x) csv.row(x, disorder.potential[x]);
}

void write_eigenbasis(const fs::path& dir, const EigenBasis& basis) {
  const auto report = localization_report(basis);
  CsvWriter energies(dir / "energies.csv", {"mode_index", "energy", "center", "participation_ratio"});
  for (std::size_t j = 0; j < basis.size(); ++j)
    energies.row(j, basis.energies()[j], basis.center_of_mode()[j],
                 report.participation_ratio[j]);
  CsvWriter modes(dir / "modes.csv", {"mode_index", "site_index", "amplitude"});
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t x = 0; x < basis.size(); ++x) modes.row(j, x, basis(j, x));
}

void write_kernel_table(const fs::path& csv_path, const fs::path& header_path,
                        const KernelTable& table) {
  table.validate();
  {
    CsvWriter csv(csv_path, {"dl", "dm", "dn", "k_value"});
    const int r = table.cutoff;
    for (int dl = -r; dl <= r; ++dl)
      for (int dm = -r; dm <= r; ++dm)
        for (int dn = -r; dn <= r; ++dn) csv.row(dl, dm, dn, table.at(dl, dm, dn));
  }
  const json header{
      {"epsilon", table.epsilon},
      {"broadening",
       {{"kind", std::string(to_string(table.broadening.kind))},
        {"width", table.broadening.width},
        {"horizon", table.broadening.horizon}}},
      {"cutoff", table.cutoff},
      {"n_realizations", table.n_realizations},
      {"seeds", table.seeds},
      {"omega", table.lattice.disorder_strength},
      {"xi", table.lattice.spacing},
      {"n_sites", table.lattice.n_sites},
      {"boundary", std::string(to_string(table.lattice.boundary))},
      {"renormalized_mismatch", table.renormalized_mismatch},
      {"symmetrized", table.symmetrized}};
  auto out = open_output(header_path);
  out << header.dump(2) << '\n';
}

KernelTable read_kernel_table(const fs::path& csv_path, const fs::path& header_path) {
  std::ifstream in(header_path);
  if (!in) throw ConfigError("cannot open " + header_path.string());
  json h;
  try {
    in >> h;
  } catch (const json::exception& e) {
    throw ConfigError(header_path.string() + ": " + e.what());
  }
  KernelTable table;
  try {
    table = KernelTable::zeros(h.at("cutoff").get<int>(), h.at("epsilon").get<double>());
    const auto& b = h.at("broadening");
    table.broadening.kind = broadening_from_string(b.at("kind").get<std::string>());
    table.broadening.width = b.at("width").get<double>();
    table.broadening.horizon = b.at("horizon").get<double>();
    table.n_realizations = h.at("n_realizations").get<std::size_t>();
    table.seeds = h.at("seeds").get<std::vector<std::uint64_t>>();
    table.lattice.disorder_strength = h.at("omega").get<double>();
    table.lattice.spacing = h.at("xi").get<double>();
    table.lattice.n_sites = h.at("n_sites").get<std::size_t>();
    table.lattice.boundary = boundary_from_string(h.value("boundary", std::string("dirichlet")));
    table.renormalized_mismatch = h.value("renormalized_mismatch", false);
    table.symmetrized = h.value("symmetrized", false);
  } catch (const json::exception& e) {
    throw ConfigError(header_path.string() + ": " + e.what());
  }

  const auto csv = read_csv(csv_path);
  const auto& dl = csv.column("dl");
  const auto& dm = csv.column("dm");
  const auto& dn = csv.column("dn");
  const auto& kv = csv.column("k_value");
  if (csv.rows() != table.values.size())
    throw ConfigError(csv_path.string() + ": row count does not match the cutoff");
  for (std::size_t i = 0; i < csv.rows(); ++i) {
    const int a = static_cast<int>(dl[i]), b = static_cast<int>(dm[i]), c = static_cast<int>(dn[i]);
    if (!table.contains(a, b, c)) throw ConfigError(csv_path.string() + ": offset outside cube");
    table.at(a, b, c) = kv[i];
  }
  table.validate();
  return table;
}

}  // namespace latticeturb
