#pragma once

#include <cstddef>
#include <vector>

#include "latticeturb/spectrum.hpp"

namespace latticeturb {

/// Neumaier-compensated sum.
double compensated_sum(const std::vector<double>& values) noexcept;

/// sum N_i dk.
double total_mass(const SpectrumField& field) noexcept;

/// sigma = sum k_i^2 N_i dk, unnormalized, about k = 0 (the initial
/// packet center).
double second_moment(const SpectrumField& field) noexcept;

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;  // natural log of the prefactor
  double stderr_slope = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::size_t n_points = 0;
};

/// Least squares on (log t, log y) for points with t_lo <= t <= t_hi.
/// Requires at least 8 points in the window, all positive.
ExponentFit fit_power_law(const std::vector<double>& t, const std::vector<double>& y,
                          double t_lo, double t_hi);

struct Snapshot {
  double t = 0.0;
  SpectrumField profile;
};

/// Rescales each snapshot to (xi, t^{1/(m+1)} N) with xi = k t^{-1/(m+1)}
/// and returns the largest pairwise L1 distance, divided by the pair's mean
/// mass. Each pair is compared by trapezoid quadrature on a common grid at
/// half the finer xi spacing, with linear interpolation (zero outside).
double self_similar_collapse(const std::vector<Snapshot>& snapshots, double m);

/// L1 distance between the field and the mass-matched Barenblatt solution
/// at time t, divided by the field's mass.
double barenblatt_distance(const SpectrumField& field, double m, double t,
                           double diffusion_scale = 1.0);

}  // namespace latticeturb
