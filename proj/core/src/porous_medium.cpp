#include "latticeturb/porous_medium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "latticeturb/errors.hpp"

namespace latticeturb {

namespace {

// N^m with exact products for the common integer exponents.
double power(double n, double m) noexcept {
  if (m == 3.0) return n * n * n;
  if (m == 5.0) {
    const double n2 = n * n;
    return n2 * n2 * n;
  }
  if (m == 2.0) return n * n;
  return std::pow(n, m);
}

double max_value(const std::vector<double>& v, std::size_t lo, std::size_t hi) noexcept {
  double best = 0.0;
  for (std::size_t i = lo; i < hi; ++i) best = std::max(best, v[i]);
  return best;
}

double stable_dt_for(double max_n, const PMEConfig& c) noexcept {
  if (max_n <= 0.0) return std::numeric_limits<double>::infinity();
  const double dk = c.spacing();
  return c.safety * dk * dk / (2.0 * c.diffusion_scale * c.m * std::pow(max_n, c.m - 1.0));
}

void check_dt(double dt, double limit) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt: violates constraint dt > 0");
  if (dt > limit * (1.0 + 1e-12)) {
    std::ostringstream diag;
    diag << "dt = " << dt << ", limit = " << limit;
    throw StepSizeError("PME step exceeds the explicit stability limit", diag.str());
  }
}

// N_i += c (f_{i+1/2} - f_{i-1/2}) on [lo, hi) with f_{i+1/2} = P_{i+1} - P_i
// and zero flux through the domain ends.
void flux_update(std::vector<double>& n, const std::vector<double>& p, double c, std::size_t lo,
                 std::size_t hi) {
  const std::size_t size = n.size();
  double left = lo == 0 ? 0.0 : c * (p[lo] - p[lo - 1]);
  for (std::size_t i = lo; i < hi; ++i) {
    const double right = i + 1 == size ? 0.0 : c * (p[i + 1] - p[i]);
    n[i] += right - left;
    left = right;
  }
}

}  // namespace

void PMEConfig::validate() const {
  if (!(m > 1.0) || !std::isfinite(m)) throw ConfigError("pme.m: violates constraint m > 1");
  if (!(k_min < k_max) || !std::isfinite(k_min) || !std::isfinite(k_max))
    throw ConfigError("pme.k_min/k_max: violates constraint k_min < k_max");
  if (n_cells < 8) throw ConfigError("pme.n_cells: violates constraint n_cells >= 8");
  if (!(diffusion_scale > 0.0) || !std::isfinite(diffusion_scale))
    throw ConfigError("pme.diffusion_scale: violates constraint diffusion_scale > 0");
  if (!(safety > 0.0 && safety <= 1.0))
    throw ConfigError("pme.safety: violates constraint 0 < safety <= 1");
}

double max_stable_dt(const SpectrumField& field, const PMEConfig& config) {
  config.validate();
  return stable_dt_for(max_value(field.n, 0, field.n.size()), config);
}

SpectrumField pme_step(const SpectrumField& field, const PMEConfig& config, double dt) {
  config.validate();
  if (field.size() != config.n_cells)
    throw ConfigError("field has " + std::to_string(field.size()) + " cells, config has " +
                      std::to_string(config.n_cells));
  check_dt(dt, max_stable_dt(field, config));
  std::vector<double> p(field.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = power(field.n[i], config.m);
  const double dk = config.spacing();
  SpectrumField out = field;
  flux_update(out.n, p, config.diffusion_scale * dt / (dk * dk), 0, out.size());
  return out;
}

PmeStepper::PmeStepper(const PMEConfig& config, SpectrumField initial, double t0)
    : config_(config), field_(std::move(initial)), time_(t0) {
  config_.validate();
  if (field_.size() != config_.n_cells)
    throw ConfigError("initial field does not match pme.n_cells");
  field_.validate();
  power_.assign(field_.size(), 0.0);
  refresh_support();
}

void PmeStepper::refresh_support() {
  const auto& n = field_.n;
  lo_ = 0;
  while (lo_ < n.size() && n[lo_] == 0.0) ++lo_;
  hi_ = n.size();
  while (hi_ > lo_ && n[hi_ - 1] == 0.0) --hi_;
}

double PmeStepper::stable_dt() const { return stable_dt_for(max_value(field_.n, lo_, hi_), config_); }

void PmeStepper::step(double dt) {
  check_dt(dt, stable_dt());
  if (lo_ >= hi_) {
    time_ += dt;
    ++steps_;
    return;
  }
  // Cells at distance >= 2 from the support see zero flux on both faces.
  const std::size_t lo = lo_ == 0 ? 0 : lo_ - 1;
  const std::size_t hi = std::min(field_.size(), hi_ + 1);
  for (std::size_t i = lo; i < hi; ++i) power_[i] = power(field_.n[i], config_.m);
  const double dk = config_.spacing();
  flux_update(field_.n, power_, config_.diffusion_scale * dt / (dk * dk), lo, hi);
  if (lo < lo_ && field_.n[lo] != 0.0) lo_ = lo;
  if (hi > hi_ && field_.n[hi - 1] != 0.0) hi_ = hi;
  time_ += dt;
  ++steps_;
}

void PmeStepper::advance_to(double t_end) {
  while (time_ < t_end) {
    const double dt = std::min(stable_dt(), t_end - time_);
    if (time_ + dt >= t_end) {
      step(t_end - time_);
      time_ = t_end;
    } else {
      step(dt);
    }
  }
}

double barenblatt_profile(double m, double front, double xi) {
  if (!(m > 1.0)) throw DomainError("barenblatt_profile: m must exceed 1");
  const double gap = front * front - xi * xi;
  if (gap <= 0.0) return 0.0;
  return std::pow((m - 1.0) / (2.0 * m * (m + 1.0)) * gap, 1.0 / (m - 1.0));
}

double barenblatt_solution(double m, double front, double t, double k, double diffusion_scale) {
  if (!(t > 0.0)) throw DomainError("barenblatt_solution: t must be positive");
  const double s = std::pow(diffusion_scale * t, -1.0 / (m + 1.0));
  return s * barenblatt_profile(m, front, k * s);
}

double barenblatt_mass(double m, double front) {
  if (!(m > 1.0)) throw DomainError("barenblatt_mass: m must exceed 1");
  const double p = 1.0 / (m - 1.0);
  const double c = (m - 1.0) / (2.0 * m * (m + 1.0));
  return std::pow(c, p) * std::pow(front, 2.0 * p + 1.0) * std::beta(0.5, p + 1.0);
}

double barenblatt_front_for_mass(double m, double mass) {
  if (!(mass > 0.0)) throw DomainError("barenblatt_front_for_mass: mass must be positive");
  const double p = 1.0 / (m - 1.0);
  return std::pow(mass / barenblatt_mass(m, 1.0), 1.0 / (2.0 * p + 1.0));
}

double predicted_spreading_exponent(double m) {
  if (!(m > 1.0)) throw DomainError("predicted_spreading_exponent: m must exceed 1");
  return 2.0 / (m + 1.0);
}

double steady_state_profile(double A, double J, double m, double k) {
  const double arg = A - J * k;
  if (arg < 0.0)
    throw DomainError("steady_state_profile: A - J k < 0 (k beyond the electrode)");
  return std::pow(arg, 1.0 / m);
}

double ohm_voltage(double J, double a, double m) {
  if (!(J > 0.0) || !(a > 0.0)) throw DomainError("ohm_voltage: J and a must be positive");
  if (!(m > 1.0)) throw DomainError("ohm_voltage: m must exceed 1");
  return m * m * std::pow(a, 1.0 / m + 2.0) * std::pow(J, 1.0 / m) /
         ((2.0 * m + 1.0) * (m + 1.0));
}

namespace {

struct Level {
  std::size_t cells;
  double dk;
  std::vector<double> n;
  std::vector<double> p;
  std::vector<double> rhs;
};

// d/dt N_i = D (P_{i+1} - 2 P_i + P_{i-1}) / dk^2 with P = A at the left
// face and P = 0 at the electrode face.
double residual(Level& lv, double A, const PMEConfig& c) {
  const std::size_t n = lv.cells;
  for (std::size_t i = 0; i < n; ++i) lv.p[i] = power(lv.n[i], c.m);
  const double scale = c.diffusion_scale / (lv.dk * lv.dk);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i == 0 ? 2.0 * A - lv.p[0] : lv.p[i - 1];
    const double right = i + 1 == n ? -lv.p[i] : lv.p[i + 1];
    lv.rhs[i] = scale * ((left - lv.p[i]) + (right - lv.p[i]));
    worst = std::max(worst, std::abs(lv.rhs[i]));
  }
  return worst;
}

}  // namespace

SteadyState relax_to_steady_state(const PMEConfig& config, double n_left, double electrode_at,
                                  const SteadyStateOptions& options) {
  config.validate();
  if (!(n_left > 0.0) || !std::isfinite(n_left))
    throw ConfigError("ohm.n_left: violates constraint n_left > 0");
  if (!(electrode_at > config.k_min && electrode_at <= config.k_max))
    throw ConfigError("ohm.electrode_at: violates constraint k_min < a <= k_max");
  if (!(options.tolerance > 0.0)) throw ConfigError("ohm.tolerance: violates constraint > 0");

  const double length = electrode_at - config.k_min;
  const double A = power(n_left, config.m);
  std::vector<std::size_t> sizes{config.n_cells};
  while (sizes.back() / 2 >= options.coarsest_cells && sizes.back() % 2 == 0)
    sizes.push_back(sizes.back() / 2);
  std::reverse(sizes.begin(), sizes.end());

  SteadyState out;
  Level lv;
  for (std::size_t level = 0; level < sizes.size(); ++level) {
    const std::size_t cells = sizes[level];
    Level next{cells, length / static_cast<double>(cells), std::vector<double>(cells, 0.0),
               std::vector<double>(cells), std::vector<double>(cells)};
    if (level > 0) {
      // Prolong N^m linearly from the previous level's cell centers.
      for (std::size_t i = 0; i < cells; ++i) {
        const double x = (static_cast<double>(i) + 0.5) * next.dk / lv.dk - 0.5;
        const auto base = static_cast<std::size_t>(
            std::clamp(std::floor(x), 0.0, static_cast<double>(lv.cells - 2)));
        const double w = x - static_cast<double>(base);
        const double p = (1.0 - w) * lv.p[base] + w * lv.p[base + 1];
        next.n[i] = p > 0.0 ? std::pow(p, 1.0 / config.m) : 0.0;
      }
    }
    lv = std::move(next);

    // Coarse levels converge further so that prolongation lands inside the
    // final tolerance: the residual scales like 1 / dk^2.
    const double ratio = static_cast<double>(cells) / static_cast<double>(config.n_cells);
    const double tol = options.tolerance * ratio * ratio;
    const double dt = config.safety * lv.dk * lv.dk /
                      (2.0 * config.diffusion_scale * config.m * std::pow(n_left, config.m - 1.0));
    for (;;) {
      const double res = residual(lv, A, config);
      out.residual = res;
      if (res < tol) break;
      if (out.steps >= options.max_steps) {
        std::ostringstream diag;
        diag << "cells " << cells << ", residual " << res << ", tolerance " << tol << ", steps "
             << out.steps;
        throw ConvergenceError("steady state not reached within the step budget", diag.str());
      }
      for (std::size_t i = 0; i < cells; ++i) lv.n[i] = std::max(0.0, lv.n[i] + dt * lv.rhs[i]);
      ++out.steps;
    }
  }

  PMEConfig grid_config = config;
  grid_config.k_max = electrode_at;
  out.profile = SpectrumField{lv.n, grid_config.grid()};

  out.face_current.resize(lv.cells - 1);
  for (std::size_t i = 0; i + 1 < lv.cells; ++i)
    out.face_current[i] = -(lv.p[i + 1] - lv.p[i]) / lv.dk;
  const auto [lo, hi] = std::minmax_element(out.face_current.begin(), out.face_current.end());
  double mean = 0.0;
  for (double f : out.face_current) mean += f;
  mean /= static_cast<double>(out.face_current.size());
  out.current_spread = (*hi - *lo) / mean;

  double v = 0.0;
  for (std::size_t i = 0; i < lv.cells; ++i)
    v += (static_cast<double>(i) + 0.5) * lv.dk * lv.n[i] * lv.dk;
  out.ohm = OhmSolution{A, mean, length, v};
  return out;
}

double front_position(const SpectrumField& field, double threshold) {
  const double peak = max_value(field.n, 0, field.size());
  if (peak <= 0.0) return 0.0;
  double best = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i)
    if (field.n[i] > threshold * peak) best = std::max(best, std::abs(field.coordinate(i)));
  return best;
}

}  // namespace latticeturb
