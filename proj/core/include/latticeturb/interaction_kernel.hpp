#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "latticeturb/eigenbasis.hpp"
#include "latticeturb/lattice.hpp"

namespace latticeturb {

enum class BroadeningKind { kGaussian, kFejer };

std::string_view to_string(BroadeningKind k) noexcept;
BroadeningKind broadening_from_string(std::string_view name);

/// Regularization of the resonance delta function.
///
/// Gaussian: exp(-x^2 / 2 eta^2) / (eta sqrt(2 pi)).
/// Fejer:    |Delta_T(x)|^2 / (2 pi T), Delta_T(x) = (e^{ixT} - 1) / (ix).
struct BroadeningSpec {
  BroadeningKind kind = BroadeningKind::kGaussian;
  double width = 0.1;     // eta (gaussian)
  double horizon = 0.0;   // T (fejer)

  static BroadeningSpec gaussian(double eta) { return {BroadeningKind::kGaussian, eta, 0.0}; }
  static BroadeningSpec fejer(double horizon) { return {BroadeningKind::kFejer, 0.0, horizon}; }

  /// Characteristic scale: eta for gaussian, the first zero 2 pi / T for fejer.
  double scale() const noexcept;
  void validate() const;
};

double broadened_delta(double x, const BroadeningSpec& spec) noexcept;

/// V^{mn}_{jl} = sum_x psi_l psi_m psi_n psi_j. The four indices are
/// multiplied in sorted order so that every permutation of (j, l, m, n)
/// returns the same bits.
double overlap_coefficient(const EigenBasis& basis, std::size_t j, std::size_t l,
                           std::size_t m, std::size_t n);

/// True for the quadruples absorbed into the energy renormalization:
/// (n, m) = (l, j) or (n, m) = (j, l).
constexpr bool is_diagonal_quadruple(std::size_t j, std::size_t l, std::size_t m,
                                     std::size_t n) noexcept {
  return (n == l && m == j) || (n == j && m == l);
}

/// E^{mn}_{lj} = E_n - E_l + E_m - E_j, evaluated as (E_m + E_n) - (E_l + E_j)
/// so it is bitwise symmetric under m <-> n and j <-> l.
inline double energy_mismatch(const std::vector<double>& e, std::size_t j, std::size_t l,
                              std::size_t m, std::size_t n) noexcept {
  return (e[m] + e[n]) - (e[l] + e[j]);
}

struct RenormalizedEnergies {
  std::vector<double> values;            // E_j
  std::vector<double> bare;              // linear eigenvalues
  std::vector<double> shift_amplitudes;  // |c_n|^2 used for the shift
  double epsilon = 0.0;
};

/// E_j = e_j + 2 eps sum_n V^{jn}_{jn} |c_n|^2.
RenormalizedEnergies nonlinear_shift(const EigenBasis& basis,
                                     const std::vector<double>& amplitudes,
                                     double epsilon);

/// Ensemble-averaged coupling K(dl, dm, dn) on the cube [-R, R]^3.
struct KernelTable {
  int cutoff = 1;
  double epsilon = 0.0;
  BroadeningSpec broadening;
  std::size_t n_realizations = 0;
  std::vector<std::uint64_t> seeds;
  LatticeConfig lattice;
  bool renormalized_mismatch = false;  // true if reference amplitudes shifted E
  bool symmetrized = false;
  std::vector<double> values;  // (2R+1)^3, index() layout
  std::vector<double> standard_error;  // per entry; empty if fewer than two realizations

  static KernelTable zeros(int cutoff, double epsilon = 0.0);

  int side() const noexcept { return 2 * cutoff + 1; }
  std::size_t index(int dl, int dm, int dn) const noexcept {
    const int s = side();
    return static_cast<std::size_t>(((dl + cutoff) * s + (dm + cutoff)) * s + (dn + cutoff));
  }
  bool contains(int dl, int dm, int dn) const noexcept {
    return dl >= -cutoff && dl <= cutoff && dm >= -cutoff && dm <= cutoff &&
           dn >= -cutoff && dn <= cutoff;
  }
  double at(int dl, int dm, int dn) const noexcept { return values[index(dl, dm, dn)]; }
  double& at(int dl, int dm, int dn) noexcept { return values[index(dl, dm, dn)]; }

  void validate() const;
};

struct KernelOptions {
  /// kernel_table requires n_sites >= min_sites_per_cutoff * R.
  std::size_t min_sites_per_cutoff = 10;
  /// When set, mismatches use E = e + shift(reference_amplitudes) instead of bare e.
  std::optional<std::vector<double>> reference_amplitudes;
  std::size_t threads = 1;
};

/// Averages 4 pi eps^2 |V^{mn}_{lj}|^2 delta~(E^{mn}_{lj}) over disorder
/// realizations (one per seed) and over every center j whose whole cube
/// lies inside the lattice (R <= j <= n - 1 - R). Diagonal quadruples
/// contribute zero. Reduction runs in seed order.
KernelTable kernel_table(const LatticeConfig& config, double epsilon,
                         const BroadeningSpec& spec, int cutoff,
                         const std::vector<std::uint64_t>& seeds,
                         const KernelOptions& options = {});

/// Contribution of one already-solved realization (center-averaged).
std::vector<double> kernel_table_single(const EigenBasis& basis,
                                        const std::vector<double>& mismatch_energies,
                                        double epsilon, const BroadeningSpec& spec,
                                        int cutoff);

/// D = (1/12) sum K(dl, dm, dn) (dl - dm - dn)^2 over the cube.
double diffusion_coefficient(const KernelTable& table);

/// Projects the table onto the kernels invariant under the full exchange
/// group generated by m <-> n, j <-> l and (j, l) <-> (m, n). Each orbit
/// lying wholly inside the cube is replaced by its mean; orbits that leave
/// the cube are zeroed. The result makes collision_rhs conserve mass
/// exactly.
KernelTable symmetrize_kernel(const KernelTable& table);

}  // namespace latticeturb
