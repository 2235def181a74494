#include "latticeturb/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "latticeturb/errors.hpp"
#include "latticeturb/porous_medium.hpp"

namespace latticeturb {

double compensated_sum(const std::vector<double>& values) noexcept {
  double sum = 0.0, carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      carry += (sum - t) + v;
    else
      carry += (v - t) + sum;
    sum = t;
  }
  return sum + carry;
}

double total_mass(const SpectrumField& field) noexcept {
  return compensated_sum(field.n) * field.grid.spacing;
}

double second_moment(const SpectrumField& field) noexcept {
  std::vector<double> terms(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    const double k = field.coordinate(i);
    terms[i] = k * k * field.n[i];
  }
  return compensated_sum(terms) * field.grid.spacing;
}

ExponentFit fit_power_law(const std::vector<double>& t, const std::vector<double>& y, double t_lo,
                          double t_hi) {
  if (t.size() != y.size()) throw ConfigError("fit_power_law: t and y differ in length");
  if (!(t_lo < t_hi)) throw ConfigError("fit_power_law: violates constraint t_lo < t_hi");
  std::vector<double> x, z;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_lo || t[i] > t_hi) continue;
    if (!(t[i] > 0.0) || !(y[i] > 0.0))
      throw DomainError("fit_power_law: non-positive data in the fit window");
    x.push_back(std::log(t[i]));
    z.push_back(std::log(y[i]));
  }
  if (x.size() < 8)
    throw DomainError("fit_power_law: " + std::to_string(x.size()) +
                      " points in the window, at least 8 required");

  const double count = static_cast<double>(x.size());
  double mx = 0.0, mz = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    mz += z[i];
  }
  mx /= count;
  mz /= count;
  double sxx = 0.0, sxz = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxz += (x[i] - mx) * (z[i] - mz);
  }
  if (sxx == 0.0) throw DomainError("fit_power_law: all times coincide");

  ExponentFit fit;
  fit.slope = sxz / sxx;
  fit.intercept = mz - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = z[i] - (fit.intercept + fit.slope * x[i]);
    ssr += r * r;
  }
  fit.stderr_slope = std::sqrt(ssr / (count - 2.0) / sxx);
  fit.t_lo = t_lo;
  fit.t_hi = t_hi;
  fit.n_points = x.size();
  return fit;
}

namespace {

struct Rescaled {
  double origin;
  double step;
  std::vector<double> g;
  double mass;

  double at(double xi) const noexcept {
    const double u = (xi - origin) / step;
    if (u < 0.0 || u > static_cast<double>(g.size() - 1)) return 0.0;
    const auto i = std::min(static_cast<std::size_t>(u), g.size() - 2);
    const double w = u - static_cast<double>(i);
    return (1.0 - w) * g[i] + w * g[i + 1];
  }
};

Rescaled rescale(const Snapshot& s, double alpha) {
  if (!(s.t > 0.0)) throw DomainError("self_similar_collapse: snapshot times must be positive");
  if (s.profile.size() < 2) throw DomainError("self_similar_collapse: profile too short");
  const double shrink = std::pow(s.t, -alpha);
  Rescaled r{s.profile.grid.origin * shrink, s.profile.grid.spacing * shrink, s.profile.n,
             total_mass(s.profile)};
  for (double& v : r.g) v /= shrink;
  return r;
}

double l1_distance(const Rescaled& a, const Rescaled& b) {
  const double lo = std::min(a.origin, b.origin);
  const double hi = std::max(a.origin + a.step * static_cast<double>(a.g.size() - 1),
                             b.origin + b.step * static_cast<double>(b.g.size() - 1));
  const double h = 0.5 * std::min(a.step, b.step);
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / h));
  const double step = (hi - lo) / static_cast<double>(n);
  std::vector<double> terms(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double xi = lo + static_cast<double>(i) * step;
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    terms[i] = w * std::abs(a.at(xi) - b.at(xi));
  }
  return compensated_sum(terms) * step;
}

}  // namespace

double self_similar_collapse(const std::vector<Snapshot>& snapshots, double m) {
  if (snapshots.size() < 2) throw DomainError("self_similar_collapse: need at least 2 snapshots");
  if (!(m > 1.0)) throw DomainError("self_similar_collapse: m must exceed 1");
  const double alpha = 1.0 / (m + 1.0);
  std::vector<Rescaled> r;
  r.reserve(snapshots.size());
  for (const auto& s : snapshots) r.push_back(rescale(s, alpha));
  double worst = 0.0;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = a + 1; b < r.size(); ++b) {
      const double mass = 0.5 * (r[a].mass + r[b].mass);
      if (!(mass > 0.0)) throw DomainError("self_similar_collapse: zero mass");
      worst = std::max(worst, l1_distance(r[a], r[b]) / mass);
    }
  return worst;
}

double barenblatt_distance(const SpectrumField& field, double m, double t,
                           double diffusion_scale) {
  const double mass = total_mass(field);
  if (!(mass > 0.0)) throw DomainError("barenblatt_distance: zero mass");
  const double front = barenblatt_front_for_mass(m, mass);
  std::vector<double> terms(field.size());
  for (std::size_t i = 0; i < field.size(); ++i)
    terms[i] = std::abs(field.n[i] -
                        barenblatt_solution(m, front, t, field.coordinate(i), diffusion_scale));
  return compensated_sum(terms) * field.grid.spacing / mass;
}

}  // namespace latticeturb
