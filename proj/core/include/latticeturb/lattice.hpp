#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace latticeturb {

enum class Boundary { kDirichlet, kPeriodic };

std::string_view to_string(Boundary b) noexcept;
Boundary boundary_from_string(std::string_view name);

struct LatticeConfig {
  std::size_t n_sites = 64;
  double spacing = 1.0;            // lattice spacing (hopping is 1/spacing^2)
  double disorder_strength = 0.0;  // on-site potential drawn from [-w/2, w/2]
  Boundary boundary = Boundary::kDirichlet;

  /// Throws ConfigError naming the first violated constraint.
  void validate() const;
};

struct DisorderRealization {
  std::vector<double> potential;
  std::uint64_t seed = 0;
};

/// Real symmetric tridiagonal matrix, plus the (0, n-1) corner for
/// periodic lattices.
struct HamiltonianMatrix {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // entry i couples sites i and i+1
  double corner = 0.0;               // couples sites 0 and n-1 (periodic only)
  bool periodic = false;

  std::size_t size() const noexcept { return diagonal.size(); }
  /// Row-major dense copy, mainly for tests and small oracles.
  std::vector<double> dense() const;
  /// Max absolute row sum.
  double norm_inf() const noexcept;
  /// y = H x for real x.
  void apply(const std::vector<double>& x, std::vector<double>& y) const;
};

/// i.i.d. uniform draws on [-w/2, w/2], reproducible per (config, seed).
DisorderRealization sample_disorder(const LatticeConfig& config, std::uint64_t seed);

/// Diagonal -2/xi^2 + V_x, hopping +1/xi^2.
HamiltonianMatrix build_hamiltonian(const LatticeConfig& config,
                                    const DisorderRealization& disorder);

}  // namespace latticeturb
