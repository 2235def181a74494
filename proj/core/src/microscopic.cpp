#include "latticeturb/microscopic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "latticeturb/errors.hpp"
#include "latticeturb/parallel.hpp"
#include "latticeturb/rng.hpp"

namespace latticeturb {

namespace {

constexpr double kStabilityLimit = 0.1;

void require_matching(const ComplexVector& psi, const EigenBasis& basis) {
  if (psi.size() != basis.size())
    throw ConfigError("field has " + std::to_string(psi.size()) + " sites but the basis has " +
                      std::to_string(basis.size()) + " modes");
}

// a_j = <psi_j, v>
void to_modes(const EigenBasis& basis, const ComplexVector& v, ComplexVector& a) {
  const std::size_t n = basis.size();
  a.assign(n, Complex{});
  for (std::size_t j = 0; j < n; ++j) {
    const double* row = basis.mode(j).data();
    double re = 0.0, im = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      re += row[x] * v[x].real();
      im += row[x] * v[x].imag();
    }
    a[j] = {re, im};
  }
}

// v = sum_j a_j psi_j
void to_sites(const EigenBasis& basis, const ComplexVector& a, ComplexVector& v) {
  const std::size_t n = basis.size();
  std::vector<double> re(n, 0.0), im(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double* row = basis.mode(j).data();
    const double ar = a[j].real(), ai = a[j].imag();
    for (std::size_t x = 0; x < n; ++x) {
      re[x] += ar * row[x];
      im[x] += ai * row[x];
    }
  }
  v.resize(n);
  for (std::size_t x = 0; x < n; ++x) v[x] = {re[x], im[x]};
}

void nonlinear_rotation(ComplexVector& psi, double epsilon, double tau) {
  for (Complex& z : psi) {
    const double phase = -epsilon * std::norm(z) * tau;
    z *= Complex{std::cos(phase), std::sin(phase)};
  }
}

double max_intensity(const ComplexVector& psi) noexcept {
  double best = 0.0;
  for (const Complex& z : psi) best = std::max(best, std::norm(z));
  return best;
}

}  // namespace

double squared_norm(const ComplexVector& v) noexcept {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

FieldState::FieldState(ComplexVector values, double t)
    : psi(std::move(values)), time(t), initial_mass(squared_norm(psi)) {
  for (const Complex& z : psi)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw DomainError("field entries must be finite");
}

double FieldState::mass_drift() const noexcept {
  if (initial_mass == 0.0) return 0.0;
  return std::abs(mass() - initial_mass) / initial_mass;
}

std::vector<double> ModeState::intensities() const {
  std::vector<double> out(c.size());
  std::transform(c.begin(), c.end(), out.begin(), [](const Complex& z) { return std::norm(z); });
  return out;
}

FieldState evolve_field(const FieldState& state, const EigenBasis& basis,
                        const DisorderRealization& disorder, double epsilon, double dt,
                        std::size_t n_steps, const StepObserver& observer,
                        std::size_t observe_every) {
  require_matching(state.psi, basis);
  if (disorder.potential.size() != basis.size())
    throw ConfigError("disorder realization does not match the basis");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt: violates constraint dt > 0");

  const std::size_t n = basis.size();
  std::vector<Complex> propagator(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double phase = -basis.energies()[j] * dt;
    propagator[j] = {std::cos(phase), std::sin(phase)};
  }

  FieldState s = state;
  ComplexVector modes;
  for (std::size_t step = 1; step <= n_steps; ++step) {
    const double guard = dt * std::abs(epsilon) * max_intensity(s.psi);
    if (guard >= kStabilityLimit) {
      std::ostringstream diag;
      diag << "step " << step << ", dt*eps*max|psi|^2 = " << guard;
      throw StepSizeError("split-step stability guard violated (limit 0.1)", diag.str());
    }
    nonlinear_rotation(s.psi, epsilon, 0.5 * dt);
    to_modes(basis, s.psi, modes);
    for (std::size_t j = 0; j < n; ++j) modes[j] *= propagator[j];
    to_sites(basis, modes, s.psi);
    nonlinear_rotation(s.psi, epsilon, 0.5 * dt);
    s.time = state.time + static_cast<double>(step) * dt;
    if (observer && ((observe_every != 0 && step % observe_every == 0) || step == n_steps))
      observer(s, step);
  }
  return s;
}

ModeState project_amplitudes(const FieldState& state, const EigenBasis& basis,
                             const std::vector<double>* energies) {
  require_matching(state.psi, basis);
  const auto& e = energies ? *energies : basis.energies();
  ModeState out;
  out.time = state.time;
  to_modes(basis, state.psi, out.c);
  for (std::size_t j = 0; j < out.c.size(); ++j)
    out.c[j] *= std::polar(1.0, e[j] * state.time);
  return out;
}

FieldState synthesize_field(const ModeState& modes, const EigenBasis& basis,
                            const std::vector<double>* energies) {
  require_matching(modes.c, basis);
  const auto& e = energies ? *energies : basis.energies();
  ComplexVector a(modes.c.size());
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = modes.c[j] * std::polar(1.0, -e[j] * modes.time);
  ComplexVector psi;
  to_sites(basis, a, psi);
  return FieldState(std::move(psi), modes.time);
}

Complex delta_T(double x, double horizon) noexcept {
  // (e^{ixT} - 1) / (ix) = T e^{ixT/2} sinc(xT/2)
  const double u = 0.5 * x * horizon;
  const double sinc = std::abs(u) < 1e-4 ? 1.0 - u * u / 6.0 : std::sin(u) / u;
  return horizon * sinc * std::polar(1.0, u);
}

ComplexVector first_order_correction(const ModeState& c0, const EigenBasis& basis,
                                     const std::vector<double>& energies, double horizon,
                                     std::optional<std::size_t> window) {
  require_matching(c0.c, basis);
  if (energies.size() != basis.size()) throw ConfigError("energy vector does not match basis");
  const std::size_t n = basis.size();
  const std::size_t w = window.value_or(n);
  const double t0 = c0.time;
  ComplexVector out(n);

  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t lo = j > w ? j - w : 0;
    const std::size_t hi = std::min(n - 1, j + w);
    Complex acc{};
    for (std::size_t l = lo; l <= hi; ++l) {
      const Complex cl = std::conj(c0.c[l]);
      if (cl == Complex{}) continue;
      for (std::size_t m = lo; m <= hi; ++m) {
        if (c0.c[m] == Complex{}) continue;
        for (std::size_t k = lo; k <= hi; ++k) {
          if (c0.c[k] == Complex{} || is_diagonal_quadruple(j, l, m, k)) continue;
          const double v = overlap_coefficient(basis, j, l, m, k);
          // i dc_j/dt = eps sum V c_l^* c_m c_n exp(-i E^{mn}_{lj} t)
          const double e = energy_mismatch(energies, j, l, m, k);
          acc += v * cl * c0.c[m] * c0.c[k] * delta_T(-e, horizon) * std::polar(1.0, -e * t0);
        }
      }
    }
    out[j] = Complex{0.0, -1.0} * acc;
  }
  return out;
}

ComplexVector first_order_check(const ModeState& c0, const EigenBasis& basis, double epsilon,
                                double horizon) {
  const auto shifted = nonlinear_shift(basis, c0.intensities(), epsilon);
  const auto c1 = first_order_correction(c0, basis, shifted.values, horizon);
  ComplexVector out(c0.c.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = c0.c[j] + epsilon * c1[j];
  return out;
}

std::vector<double> mean_intensity(const GaussianEnvelope& recipe, std::size_t n_modes) {
  if (!(recipe.width > 0.0)) throw ConfigError("envelope.width: violates constraint width > 0");
  if (!(recipe.peak >= 0.0)) throw ConfigError("envelope.peak: violates constraint peak >= 0");
  std::vector<double> out(n_modes);
  for (std::size_t j = 0; j < n_modes; ++j) {
    const double d = (static_cast<double>(j) - recipe.center) / recipe.width;
    out[j] = recipe.peak * std::exp(-0.5 * d * d);
  }
  return out;
}

ModeState draw_initial_modes(const InitialRecipe& recipe, const EigenBasis& basis,
                             std::uint64_t seed) {
  const std::size_t n = basis.size();
  ModeState out;
  out.c.assign(n, Complex{});
  if (const auto* site = std::get_if<SingleSite>(&recipe)) {
    if (site->site >= n) throw ConfigError("initial.site: outside the lattice");
    for (std::size_t j = 0; j < n; ++j) out.c[j] = site->amplitude * basis(j, site->site);
  } else if (const auto* mode = std::get_if<SingleMode>(&recipe)) {
    if (mode->mode >= n) throw ConfigError("initial.mode: outside the basis");
    out.c[mode->mode] = mode->amplitude;
  } else {
    const auto& env = std::get<GaussianEnvelope>(recipe);
    const auto mean = mean_intensity(env, n);
    const auto phases = make_rng(seed, RngStream::kPhases);
    const auto amps = make_rng(seed, RngStream::kAmplitudes);
    for (std::size_t j = 0; j < n; ++j) {
      const double phase = 2.0 * std::numbers::pi * phases.uniform(j);
      double intensity = mean[j];
      if (env.statistics == AmplitudeStatistics::kComplexGaussian)
        intensity *= -std::log(1.0 - amps.uniform(j));  // exponential with unit mean
      out.c[j] = std::polar(std::sqrt(intensity), phase);
    }
  }
  return out;
}

double mean_abs_energy(const std::vector<double>& energies) noexcept {
  if (energies.empty()) return 0.0;
  double s = 0.0;
  for (double e : energies) s += std::abs(e);
  return s / static_cast<double>(energies.size());
}

double intermediate_time_midpoint(double mean_abs_energy, double epsilon) {
  if (!(mean_abs_energy > 0.0) || !(epsilon > 0.0))
    throw DomainError("intermediate time needs positive mean energy and epsilon");
  return 2.0 * std::numbers::pi / (mean_abs_energy * epsilon);
}

EnsembleRate ensemble_intensity_rate(const LatticeConfig& config, double epsilon,
                                     const InitialRecipe& recipe,
                                     const std::vector<std::uint64_t>& seeds, double horizon,
                                     const EnsembleRateOptions& options) {
  config.validate();
  if (seeds.size() < 2) throw ConfigError("micro.seeds: violates constraint n_seeds >= 2");
  if (!(horizon > 0.0)) throw ConfigError("micro.horizon: violates constraint horizon > 0");
  if (!(options.dt > 0.0)) throw ConfigError("micro.dt: violates constraint dt > 0");

  const auto n_steps = static_cast<std::size_t>(std::ceil(horizon / options.dt - 1e-9));
  const double dt = horizon / static_cast<double>(n_steps);
  const std::size_t n = config.n_sites;

  struct Sample {
    std::vector<double> rate;
    std::vector<double> initial;
  };
  auto samples = parallel_map(seeds.size(), options.threads, [&](std::size_t r) {
    const auto disorder = sample_disorder(config, seeds[r]);
    const auto basis = solve_eigen(build_hamiltonian(config, disorder));
    const ModeState c0 = draw_initial_modes(recipe, basis, seeds[r]);
    const FieldState psi0 = synthesize_field(c0, basis);
    const FieldState psi_t = evolve_field(psi0, basis, disorder, epsilon, dt, n_steps);
    const auto n0 = c0.intensities();
    const auto nt = project_amplitudes(psi_t, basis).intensities();

    Sample s;
    s.initial = n0;
    s.rate.resize(n);
    for (std::size_t j = 0; j < n; ++j) s.rate[j] = (nt[j] - n0[j]) / horizon;
    if (options.control_variate && epsilon != 0.0) {
      // The flow rotates mode j with the self term counted once; the
      // literal shift counts it twice, which detunes c1 by eps V_jjjj N_j T.
      auto energies = nonlinear_shift(basis, n0, epsilon).values;
      for (std::size_t j = 0; j < n; ++j)
        energies[j] -= epsilon * overlap_coefficient(basis, j, j, j, j) * n0[j];
      const auto c1 = first_order_correction(c0, basis, energies, horizon, options.control_window);
      for (std::size_t j = 0; j < n; ++j)
        s.rate[j] -= 2.0 * epsilon * (c1[j] * std::conj(c0.c[j])).real() / horizon;
    }
    return s;
  });

  EnsembleRate out;
  out.horizon = horizon;
  out.n_realizations = seeds.size();
  out.mean_rate.assign(n, 0.0);
  out.standard_error.assign(n, 0.0);
  out.mean_initial.assign(n, 0.0);
  const double count = static_cast<double>(seeds.size());
  for (const auto& s : samples)
    for (std::size_t j = 0; j < n; ++j) {
      out.mean_rate[j] += s.rate[j];
      out.mean_initial[j] += s.initial[j];
    }
  for (std::size_t j = 0; j < n; ++j) {
    out.mean_rate[j] /= count;
    out.mean_initial[j] /= count;
  }
  for (const auto& s : samples)
    for (std::size_t j = 0; j < n; ++j) {
      const double d = s.rate[j] - out.mean_rate[j];
      out.standard_error[j] += d * d;
    }
  for (double& v : out.standard_error) v = std::sqrt(v / (count - 1.0) / count);
  return out;
}

}  // namespace latticeturb
