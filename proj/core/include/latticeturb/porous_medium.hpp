#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "latticeturb/spectrum.hpp"

namespace latticeturb {

/// dN/dt = D d^2(N^m)/dk^2 on [k_min, k_max], n_cells finite-volume cells.
struct PMEConfig {
  double m = 3.0;
  double k_min = -1.0;
  double k_max = 1.0;
  std::size_t n_cells = 256;
  double diffusion_scale = 1.0;
  double safety = 0.5;  // fraction of the explicit stability limit

  void validate() const;
  double spacing() const noexcept { return (k_max - k_min) / static_cast<double>(n_cells); }
  double cell_center(std::size_t i) const noexcept {
    return k_min + (static_cast<double>(i) + 0.5) * spacing();
  }
  Grid grid() const noexcept { return Grid{cell_center(0), spacing()}; }
  /// Field with every cell set by f(k) at the cell center.
  template <class F>
  SpectrumField sample(F&& f) const {
    SpectrumField field{std::vector<double>(n_cells), grid()};
    for (std::size_t i = 0; i < n_cells; ++i) field.n[i] = f(cell_center(i));
    return field;
  }
};

/// Largest dt allowed by safety * dk^2 / (2 D m max(N)^(m-1)).
double max_stable_dt(const SpectrumField& field, const PMEConfig& config);

/// One explicit conservative step with zero-flux ends:
/// N_i += D dt / dk^2 (N^m_{i+1} - 2 N^m_i + N^m_{i-1}).
/// Throws StepSizeError when dt exceeds max_stable_dt.
SpectrumField pme_step(const SpectrumField& field, const PMEConfig& config, double dt);

/// In-place zero-flux integrator for long runs. Only the support of N
/// (plus one cell either side) is updated; cells outside stay exactly zero.
class PmeStepper {
 public:
  PmeStepper(const PMEConfig& config, SpectrumField initial, double t0 = 0.0);

  const SpectrumField& field() const noexcept { return field_; }
  double time() const noexcept { return time_; }
  std::size_t steps() const noexcept { return steps_; }
  const PMEConfig& config() const noexcept { return config_; }

  double stable_dt() const;
  void step(double dt);
  /// Advances with the largest stable steps, landing exactly on t_end.
  void advance_to(double t_end);

 private:
  void refresh_support();

  PMEConfig config_;
  SpectrumField field_;
  std::vector<double> power_;
  double time_;
  std::size_t steps_ = 0;
  std::size_t lo_ = 0, hi_ = 0;  // support is [lo_, hi_)
};

/// f(xi) = [ (m-1) / (2m(m+1)) (xi*^2 - xi^2) ]^{1/(m-1)} inside the front.
double barenblatt_profile(double m, double front, double xi);

/// Self-similar solution (D t)^{-1/(m+1)} f(k (D t)^{-1/(m+1)}).
double barenblatt_solution(double m, double front, double t, double k,
                           double diffusion_scale = 1.0);

/// Integral of barenblatt_profile over the real line.
double barenblatt_mass(double m, double front);
/// Front xi* whose profile carries the given mass.
double barenblatt_front_for_mass(double m, double mass);

/// sigma(t) ~ t^{2/(m+1)}.
double predicted_spreading_exponent(double m);

/// N(k) = (A - J k)^{1/m}; DomainError beyond the electrode.
double steady_state_profile(double A, double J, double m, double k);

/// V = m^2 a^{1/m+2} J^{1/m} / ((2m+1)(m+1)).
double ohm_voltage(double J, double a, double m);

struct OhmSolution {
  double A = 0.0;
  double J = 0.0;
  double a = 0.0;
  double V = 0.0;
};

struct SteadyStateOptions {
  double tolerance = 1e-10;  // max |dN/dt| at convergence
  std::size_t max_steps = 50'000'000;
  std::size_t coarsest_cells = 32;
};

struct SteadyState {
  SpectrumField profile;
  OhmSolution ohm;                  // extracted from the numerical profile
  std::vector<double> face_current; // -d(N^m)/dk at interior faces
  double current_spread = 0.0;      // (max - min) / mean of face_current
  double residual = 0.0;            // final max |dN/dt|
  std::size_t steps = 0;            // summed over all grid levels
};

/// Marches the explicit scheme with N(k_min) = n_left and N(a) = 0 on
/// cells covering [k_min, electrode_at] until max |dN/dt| < tolerance.
/// Resolution is built up from `coarsest_cells` by doubling to
/// config.n_cells, prolonging N^m linearly between levels.
/// J is read from the face fluxes and V = phi(k_min) with phi'' = N,
/// phi(a) = phi'(a) = 0, i.e. V = int (k - k_min) N dk.
SteadyState relax_to_steady_state(const PMEConfig& config, double n_left, double electrode_at,
                                  const SteadyStateOptions& options = {});

/// Largest |k| with N > threshold * max(N); 0 for an empty field.
double front_position(const SpectrumField& field, double threshold = 1e-8);

}  // namespace latticeturb
