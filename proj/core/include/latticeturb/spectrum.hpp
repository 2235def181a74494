#pragma once

#include <cstddef>
#include <vector>

namespace latticeturb {

/// Uniform 1D grid: coordinate of point i is origin + i * spacing.
struct Grid {
  double origin = 0.0;
  double spacing = 1.0;

  double coordinate(std::size_t i) const noexcept {
    return origin + static_cast<double>(i) * spacing;
  }
};

/// Non-negative intensity profile: N_j on lattice modes (spacing 1,
/// origin at minus the reference mode) or N(k) at PME cell centers.
struct SpectrumField {
  std::vector<double> n;
  Grid grid;

  std::size_t size() const noexcept { return n.size(); }
  double coordinate(std::size_t i) const noexcept { return grid.coordinate(i); }

  /// Lattice field with coordinates j - reference.
  static SpectrumField on_lattice(std::vector<double> values, double reference = 0.0) {
    return SpectrumField{std::move(values), Grid{-reference, 1.0}};
  }

  /// Throws DomainError if any entry is negative or non-finite.
  void validate() const;
};

}  // namespace latticeturb
