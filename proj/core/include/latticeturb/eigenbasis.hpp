#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "latticeturb/lattice.hpp"

namespace latticeturb {

/// Orthonormal eigenpairs of a lattice Hamiltonian.
///
/// Modes are stored row-major: mode j occupies
/// `modes[j * n_sites, (j + 1) * n_sites)`. Each mode's entry of largest
/// magnitude is positive, and modes are ordered by localization center
/// (argmax |psi|^2, lower site wins ties), then by energy.
class EigenBasis {
 public:
  EigenBasis() = default;
  EigenBasis(std::vector<double> energies, std::vector<double> modes,
             std::vector<std::size_t> centers);

  std::size_t size() const noexcept { return energies_.size(); }
  const std::vector<double>& energies() const noexcept { return energies_; }
  const std::vector<std::size_t>& center_of_mode() const noexcept { return centers_; }
  const std::vector<double>& mode_matrix() const noexcept { return modes_; }

  std::span<const double> mode(std::size_t j) const noexcept {
    return {modes_.data() + j * size(), size()};
  }
  double operator()(std::size_t j, std::size_t x) const noexcept {
    return modes_[j * size() + x];
  }

 private:
  std::vector<double> energies_;
  std::vector<double> modes_;
  std::vector<std::size_t> centers_;
};

struct LocalizationReport {
  std::vector<double> participation_ratio;
  double mean_localization_length = 0.0;  // mean participation ratio, in sites
};

/// Full eigendecomposition by implicit-shift QL on the tridiagonal form.
/// Periodic matrices are first reduced by Householder similarity.
/// Throws NumericalError if an eigenvalue needs more than 60 sweeps.
EigenBasis solve_eigen(const HamiltonianMatrix& h);

/// (sum psi^2)^2 / sum psi^4; equals 1 / sum psi^4 for a normalized mode.
double participation_ratio(std::span<const double> mode);

LocalizationReport localization_report(const EigenBasis& basis);

}  // namespace latticeturb
