#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "latticeturb/errors.hpp"
#include "latticeturb/io.hpp"

using namespace latticeturb;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("latticeturb_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(FormatDouble, RoundTripsExactly) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Csv, WriteReadRoundTrip) {
  const auto dir = scratch("csv");
  {
    CsvWriter w(dir / "a.csv", {"k", "N"});
    w.row(0.1, 1.0 / 3.0);
    w.row(std::size_t{7}, -2.0);
  }
  const auto t = read_csv(dir / "a.csv");
  EXPECT_EQ(t.header, (std::vector<std::string>{"k", "N"}));
  EXPECT_EQ(t.rows(), 2u);
  EXPECT_EQ(t.column("N")[0], 1.0 / 3.0);
  EXPECT_EQ(t.column("k")[1], 7.0);
  EXPECT_THROW(t.column("sigma"), ConfigError);
}

TEST(Csv, RejectsMalformedFiles) {
  const auto dir = scratch("bad");
  std::ofstream(dir / "ragged.csv") << "a,b\n1,2\n3\n";
  std::ofstream(dir / "text.csv") << "a,b\n1,x\n";
  EXPECT_THROW(read_csv(dir / "ragged.csv"), ConfigError);
  EXPECT_THROW(read_csv(dir / "text.csv"), ConfigError);
  EXPECT_THROW(read_csv(dir / "missing.csv"), ConfigError);
}

TEST(Sha256, KnownVector) {
  const auto dir = scratch("sha");
  std::ofstream(dir / "abc.txt", std::ios::binary) << "abc";
  EXPECT_EQ(sha256_file(dir / "abc.txt"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Manifest, WriteVerifyAndDetectTampering) {
  const auto dir = scratch("manifest");
  { CsvWriter(dir / "profile.csv", {"k", "N"}).row(0.0, 1.0); }
  RunManifest m;
  m.subcommand = "pme";
  m.parameters = {{"m", 3.0}};
  m.seeds = {1, 2};
  m.outputs = {"profile.csv"};
  const auto path = write_manifest(dir, m);
  nlohmann::json doc;
  std::ifstream(path) >> doc;
  EXPECT_EQ(doc["schema_version"], RunManifest::kSchemaVersion);
  EXPECT_EQ(doc["tool_version"], std::string(library_version()));
  EXPECT_EQ(doc["outputs"][0]["path"], "profile.csv");
  EXPECT_TRUE(verify_manifest(dir).empty());

  std::ofstream(dir / "profile.csv", std::ios::app) << "1,2\n";
  const auto problems = verify_manifest(dir);
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_NE(problems[0].find("digest mismatch"), std::string::npos);
}

TEST(KernelIo, RoundTripIsBitExact) {
  const auto dir = scratch("kernel");
  LatticeConfig c{30, 1.5, 2.0, Boundary::kDirichlet};
  const auto t = kernel_table(c, 0.05, BroadeningSpec::fejer(40.0), 2, {3, 4, 5});
  write_kernel_table(dir / "kernel.csv", dir / "kernel.json", t);
  const auto back = read_kernel_table(dir / "kernel.csv", dir / "kernel.json");
  EXPECT_EQ(back.values, t.values);
  EXPECT_EQ(back.seeds, t.seeds);
  EXPECT_EQ(back.cutoff, 2);
  EXPECT_EQ(back.broadening.kind, BroadeningKind::kFejer);
  EXPECT_EQ(back.broadening.horizon, 40.0);
  EXPECT_EQ(back.lattice.n_sites, 30u);
  const auto table = read_csv(dir / "kernel.csv");
  EXPECT_EQ(table.header, (std::vector<std::string>{"dl", "dm", "dn", "k_value"}));
}

TEST(EigenbasisIo, WritesBothFiles) {
  const auto dir = scratch("eigen");
  LatticeConfig c{6, 1.0, 1.0, Boundary::kDirichlet};
  const auto b = solve_eigen(build_hamiltonian(c, sample_disorder(c, 1)));
  write_eigenbasis(dir, b);
  const auto e = read_csv(dir / "energies.csv");
  EXPECT_EQ(e.rows(), 6u);
  EXPECT_EQ(e.column("energy")[2], b.energies()[2]);
  EXPECT_EQ(read_csv(dir / "modes.csv").rows(), 36u);
}
