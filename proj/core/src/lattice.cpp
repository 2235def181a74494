#include "latticeturb/lattice.hpp"

#include <cmath>
#include <string>

#include "latticeturb/errors.hpp"
#include "latticeturb/rng.hpp"
#include "latticeturb/spectrum.hpp"

namespace latticeturb {

std::string_view to_string(Boundary b) noexcept {
  return b == Boundary::kPeriodic ? "periodic" : "dirichlet";
}

Boundary boundary_from_string(std::string_view name) {
  if (name == "dirichlet") return Boundary::kDirichlet;
  if (name == "periodic") return Boundary::kPeriodic;
  throw ConfigError("boundary must be \"dirichlet\" or \"periodic\", got \"" +
                    std::string(name) + "\"");
}

void LatticeConfig::validate() const {
  if (n_sites < 2) throw ConfigError("lattice.n_sites: violates constraint n_sites >= 2");
  if (boundary == Boundary::kPeriodic && n_sites < 3)
    throw ConfigError("lattice.n_sites: periodic lattices need n_sites >= 3");
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw ConfigError("lattice.spacing: violates constraint spacing > 0");
  if (!(disorder_strength >= 0.0) || !std::isfinite(disorder_strength))
    throw ConfigError("lattice.disorder_strength: violates constraint disorder_strength >= 0");
}

void SpectrumField::validate() const {
  for (double v : n)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw DomainError("spectrum entries must be finite and non-negative");
  if (!(grid.spacing > 0.0)) throw DomainError("spectrum grid spacing must be positive");
}

DisorderRealization sample_disorder(const LatticeConfig& config, std::uint64_t seed) {
  config.validate();
  const auto rng = make_rng(seed, RngStream::kDisorder);
  DisorderRealization out;
  out.seed = seed;
  out.potential.resize(config.n_sites);
  const double w = config.disorder_strength;
  for (std::size_t x = 0; x < config.n_sites; ++x)
    out.potential[x] = w * (rng.uniform(x) - 0.5);
  return out;
}

HamiltonianMatrix build_hamiltonian(const LatticeConfig& config,
                                    const DisorderRealization& disorder) {
  config.validate();
  if (disorder.potential.size() != config.n_sites)
    throw ConfigError("disorder has " + std::to_string(disorder.potential.size()) +
                      " sites but the lattice has " + std::to_string(config.n_sites));
  const double hop = 1.0 / (config.spacing * config.spacing);
  HamiltonianMatrix h;
  h.diagonal.resize(config.n_sites);
  for (std::size_t x = 0; x < config.n_sites; ++x)
    h.diagonal[x] = -2.0 * hop + disorder.potential[x];
  h.off_diagonal.assign(config.n_sites - 1, hop);
  if (config.boundary == Boundary::kPeriodic) {
    h.periodic = true;
    h.corner = hop;
  }
  return h;
}

std::vector<double> HamiltonianMatrix::dense() const {
  const std::size_t n = size();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = diagonal[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a[i * n + i + 1] = off_diagonal[i];
    a[(i + 1) * n + i] = off_diagonal[i];
  }
  if (periodic) {
    a[n - 1] += corner;
    a[(n - 1) * n] += corner;
  }
  return a;
}

double HamiltonianMatrix::norm_inf() const noexcept {
  const std::size_t n = size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diagonal[i]);
    if (i > 0) row += std::abs(off_diagonal[i - 1]);
    if (i + 1 < n) row += std::abs(off_diagonal[i]);
    if (periodic && (i == 0 || i == n - 1)) row += std::abs(corner);
    best = std::max(best, row);
  }
  return best;
}

void HamiltonianMatrix::apply(const std::vector<double>& x, std::vector<double>& y) const {
  const std::size_t n = size();
  y.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diagonal[i] * x[i];
    if (i > 0) acc += off_diagonal[i - 1] * x[i - 1];
    if (i + 1 < n) acc += off_diagonal[i] * x[i + 1];
    y[i] = acc;
  }
  if (periodic) {
    y[0] += corner * x[n - 1];
    y[n - 1] += corner * x[0];
  }
}

}  // namespace latticeturb
