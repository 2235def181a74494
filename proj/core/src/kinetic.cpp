#include "latticeturb/kinetic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "latticeturb/errors.hpp"

namespace latticeturb {

namespace {

// Calls fn(j, l, m, n, K) for every retained term, in lexicographic order.
template <class Fn>
void for_each_term(std::size_t size, const KernelTable& kernel, Fn&& fn) {
  const int r = kernel.cutoff;
  const auto n_modes = static_cast<int>(size);
  for (int j = 0; j < n_modes; ++j) {
    for (int dl = -r; dl <= r; ++dl) {
      const int l = j + dl;
      if (l < 0 || l >= n_modes) continue;
      for (int dm = -r; dm <= r; ++dm) {
        const int m = j + dm;
        if (m < 0 || m >= n_modes) continue;
        for (int dn = -r; dn <= r; ++dn) {
          const int n = j + dn;
          if (n < 0 || n >= n_modes) continue;
          const auto uj = static_cast<std::size_t>(j), ul = static_cast<std::size_t>(l),
                     um = static_cast<std::size_t>(m), un = static_cast<std::size_t>(n);
          if (is_diagonal_quadruple(uj, ul, um, un)) continue;
          const double k = kernel.at(dl, dm, dn);
          if (k == 0.0) continue;
          fn(uj, ul, um, un, k);
        }
      }
    }
  }
}

void collision_into(const std::vector<double>& nv, const KernelTable& kernel,
                    std::vector<double>& out) {
  out.assign(nv.size(), 0.0);
  for_each_term(nv.size(), kernel,
                [&](std::size_t j, std::size_t l, std::size_t m, std::size_t n, double k) {
                  const double nj = nv[j], nl = nv[l], nm = nv[m], nn = nv[n];
                  out[j] += k * (((nl * nm * nn + nn * nm * nj) - nj * nn * nl) - nl * nj * nm);
                });
}

}  // namespace

std::vector<double> collision_rhs(const SpectrumField& spectrum, const KernelTable& kernel) {
  kernel.validate();
  std::vector<double> out;
  collision_into(spectrum.n, kernel, out);
  return out;
}

double collision_term_magnitude(const SpectrumField& spectrum, const KernelTable& kernel) {
  kernel.validate();
  const auto& nv = spectrum.n;
  double total = 0.0;
  for_each_term(nv.size(), kernel,
                [&](std::size_t j, std::size_t l, std::size_t m, std::size_t n, double k) {
                  const double nj = nv[j], nl = nv[l], nm = nv[m], nn = nv[n];
                  total += std::abs(k) * (std::abs(nl * nm * nn) + std::abs(nn * nm * nj) +
                                          std::abs(nj * nn * nl) + std::abs(nl * nj * nm));
                });
  return total;
}

KineticRun step_kinetic(const SpectrumField& spectrum, const KernelTable& kernel, double dt,
                        std::size_t n_steps, const KineticObserver& observer,
                        std::size_t observe_every) {
  kernel.validate();
  spectrum.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt: violates constraint dt > 0");

  KineticRun run{spectrum, 0, 0.0};
  auto& y = run.spectrum.n;
  double scale = 0.0;
  for (double v : y) scale = std::max(scale, std::abs(v));
  const double blowup = 1e12 * (scale > 0.0 ? scale : 1.0);

  const std::size_t size = y.size();
  std::vector<double> k1, k2, k3, k4, tmp(size);
  for (std::size_t step = 1; step <= n_steps; ++step) {
    collision_into(y, kernel, k1);
    for (std::size_t i = 0; i < size; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    collision_into(tmp, kernel, k2);
    for (std::size_t i = 0; i < size; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    collision_into(tmp, kernel, k3);
    for (std::size_t i = 0; i < size; ++i) tmp[i] = y[i] + dt * k3[i];
    collision_into(tmp, kernel, k4);
    for (std::size_t i = 0; i < size; ++i) {
      y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(y[i]) || std::abs(y[i]) > blowup) {
        std::ostringstream diag;
        diag << "step " << step << ", mode " << i << ", N = " << y[i] << ", threshold " << blowup;
        throw DivergenceError("kinetic integration diverged", diag.str());
      }
      if (y[i] < 0.0) {
        y[i] = 0.0;
        ++run.clip_count;
      }
    }
    run.time = static_cast<double>(step) * dt;
    if (observer && ((observe_every != 0 && step % observe_every == 0) || step == n_steps))
      observer(run.spectrum, run.time, step);
  }
  return run;
}

}  // namespace latticeturb
