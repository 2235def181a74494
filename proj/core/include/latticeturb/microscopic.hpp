#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "latticeturb/eigenbasis.hpp"
#include "latticeturb/interaction_kernel.hpp"
#include "latticeturb/lattice.hpp"

namespace latticeturb {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

double squared_norm(const ComplexVector& v) noexcept;

/// Lattice wavefunction Psi_x at `time`.
struct FieldState {
  ComplexVector psi;
  double time = 0.0;
  double initial_mass = 0.0;  // sum |Psi|^2 when the state was created

  FieldState() = default;
  FieldState(ComplexVector values, double t);

  double mass() const noexcept { return squared_norm(psi); }
  double mass_drift() const noexcept;  // relative to initial_mass
};

/// Interaction-picture amplitudes c_j (linear phase removed).
struct ModeState {
  ComplexVector c;
  double time = 0.0;

  std::vector<double> intensities() const;
};

using StepObserver = std::function<void(const FieldState&, std::size_t step)>;

/// Strang splitting of i dPsi/dt = H Psi + eps |Psi|^2 Psi: the linear flow
/// is exact in the eigenbasis and the nonlinear flow is an exact on-site
/// phase rotation. Throws StepSizeError unless dt * eps * max|Psi|^2 < 0.1.
/// `observer` (optional) is invoked every `observe_every` steps and at the end.
FieldState evolve_field(const FieldState& state, const EigenBasis& basis,
                        const DisorderRealization& disorder, double epsilon, double dt,
                        std::size_t n_steps, const StepObserver& observer = {},
                        std::size_t observe_every = 0);

/// c_j = exp(+i E_j t) <psi_j, Psi>. `energies` defaults to the bare spectrum.
ModeState project_amplitudes(const FieldState& state, const EigenBasis& basis,
                             const std::vector<double>* energies = nullptr);

/// Inverse of project_amplitudes.
FieldState synthesize_field(const ModeState& modes, const EigenBasis& basis,
                            const std::vector<double>* energies = nullptr);

/// Delta_T(x) = int_0^T exp(i x t) dt, with Delta_T(0) = T.
Complex delta_T(double x, double horizon) noexcept;

/// First-order coefficient c^(1)_j in the frame rotating with the
/// renormalized energies. Only quadruples with all of l, m, n within
/// `window` modes of j are summed (unbounded if not set).
ComplexVector first_order_correction(const ModeState& c0, const EigenBasis& basis,
                                     const std::vector<double>& energies, double horizon,
                                     std::optional<std::size_t> window = std::nullopt);

/// Predicted c_j(T) ~ c0_j + eps c^(1)_j, with energies renormalized by the
/// initial intensities |c0|^2. Amplitudes are in the renormalized frame:
/// compare with project_amplitudes(state, basis, &nonlinear_shift(...).values).
ComplexVector first_order_check(const ModeState& c0, const EigenBasis& basis, double epsilon,
                                double horizon);

// Initial-condition recipes.
struct SingleSite {
  std::size_t site = 0;
  double amplitude = 1.0;
};
struct SingleMode {
  std::size_t mode = 0;
  double amplitude = 1.0;
};
enum class AmplitudeStatistics {
  kFixed,            // |c_j|^2 equal to the envelope, phases uniform
  kComplexGaussian,  // c_j circular complex Gaussian with <|c_j|^2> = envelope
};
struct GaussianEnvelope {
  double center = 0.0;
  double width = 1.0;
  double peak = 1.0;  // mean intensity at the center
  AmplitudeStatistics statistics = AmplitudeStatistics::kFixed;
};
using InitialRecipe = std::variant<SingleSite, SingleMode, GaussianEnvelope>;

/// Mean initial mode intensities <|c_j|^2> for envelope recipes.
std::vector<double> mean_intensity(const GaussianEnvelope& recipe, std::size_t n_modes);

/// Draws the t = 0 mode amplitudes. Phases and amplitudes come from the
/// kPhases / kAmplitudes streams of `seed`.
ModeState draw_initial_modes(const InitialRecipe& recipe, const EigenBasis& basis,
                             std::uint64_t seed);

/// Geometric midpoint 2 pi / (E eps) of 2 pi / E << T << 2 pi / (E eps^2).
double intermediate_time_midpoint(double mean_abs_energy, double epsilon);
double mean_abs_energy(const std::vector<double>& energies) noexcept;

struct EnsembleRateOptions {
  double dt = 0.05;
  std::size_t threads = 1;
  /// Subtract 2 eps Re(c^(1)_j c0_j^*) / T from each sample. The term has
  /// zero mean under uniform phases, so the estimator stays unbiased. c^(1)
  /// uses the energies the flow actually sees: the shifted spectrum with
  /// the self term V_jjjj |c_j|^2 counted once.
  bool control_variate = false;
  std::size_t control_window = 8;
};

struct EnsembleRate {
  std::vector<double> mean_rate;
  std::vector<double> standard_error;
  std::vector<double> mean_initial;  // <N_j(0)> over the ensemble
  double horizon = 0.0;
  std::size_t n_realizations = 0;
};

/// (<N_j(T)> - <N_j(0)>) / T over one disorder realization and one
/// initial draw per seed.
EnsembleRate ensemble_intensity_rate(const LatticeConfig& config, double epsilon,
                                     const InitialRecipe& recipe,
                                     const std::vector<std::uint64_t>& seeds, double horizon,
                                     const EnsembleRateOptions& options = {});

}  // namespace latticeturb
