#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

namespace oracle {

DenseEigen jacobi_eigen(std::vector<double> a, std::size_t n) {
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += A(i, j) * A(i, j);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (A(p, q) == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return A(x, x) < A(y, y); });
  DenseEigen out;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = A(order[i], order[i]);
    for (std::size_t k = 0; k < n; ++k) out.vectors[i * n + k] = v[k * n + order[i]];
  }
  return out;
}

namespace {

using C = std::complex<double>;

std::vector<C> rhs(const std::vector<double>& h, std::size_t n, const std::vector<C>& psi,
                   double eps) {
  std::vector<C> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    C acc = eps * std::norm(psi[x]) * psi[x];
    for (std::size_t y = 0; y < n; ++y) acc += h[x * n + y] * psi[y];
    out[x] = C{0.0, -1.0} * acc;
  }
  return out;
}

std::vector<C> rk4(const std::vector<double>& h, std::size_t n, std::vector<C> psi, double eps,
                   double horizon, std::size_t steps) {
  const double dt = horizon / static_cast<double>(steps);
  std::vector<C> tmp(n);
  for (std::size_t s = 0; s < steps; ++s) {
    const auto k1 = rhs(h, n, psi, eps);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + 0.5 * dt * k1[i];
    const auto k2 = rhs(h, n, tmp, eps);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + 0.5 * dt * k2[i];
    const auto k3 = rhs(h, n, tmp, eps);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + dt * k3[i];
    const auto k4 = rhs(h, n, tmp, eps);
    for (std::size_t i = 0; i < n; ++i)
      psi[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return psi;
}

}  // namespace

std::vector<C> nlse_dense_rk(const std::vector<double>& h, std::size_t n, std::vector<C> psi,
                             double epsilon, double horizon, double dt) {
  const auto steps = static_cast<std::size_t>(std::llround(horizon / dt));
  const auto coarse = rk4(h, n, psi, epsilon, horizon, steps);
  const auto fine = rk4(h, n, psi, epsilon, horizon, 2 * steps);
  std::vector<C> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (16.0 * fine[i] - coarse[i]) / 15.0;
  return out;
}

std::vector<double> brute_kernel(const std::vector<double>& modes,
                                 const std::vector<double>& energies, std::size_t n,
                                 double epsilon, int cutoff, bool fejer, double w) {
  const int side = 2 * cutoff + 1;
  std::vector<double> out(static_cast<std::size_t>(side * side * side), 0.0);
  const auto psi = [&](std::size_t j, std::size_t x) { return modes[j * n + x]; };
  const auto delta = [&](double e) {
    if (!fejer) return std::exp(-e * e / (2.0 * w * w)) / (w * std::sqrt(2.0 * std::numbers::pi));
    if (e == 0.0) return w / (2.0 * std::numbers::pi);
    // |(e^{ieT} - 1) / (ie)|^2 / (2 pi T)
    const double re = std::cos(e * w) - 1.0, im = std::sin(e * w);
    return (re * re + im * im) / (e * e) / (2.0 * std::numbers::pi * w);
  };
  const int count = static_cast<int>(n) - 2 * cutoff;
  for (int j = cutoff; j < static_cast<int>(n) - cutoff; ++j)
    for (int l = j - cutoff; l <= j + cutoff; ++l)
      for (int m = j - cutoff; m <= j + cutoff; ++m)
        for (int k = j - cutoff; k <= j + cutoff; ++k) {
          if ((k == l && m == j) || (k == j && m == l)) continue;
          double v = 0.0;
          for (std::size_t x = 0; x < n; ++x)
            v += psi(j, x) * psi(l, x) * psi(m, x) * psi(k, x);
          const double e = energies[k] - energies[l] + energies[m] - energies[j];
          const auto idx = ((l - j + cutoff) * side + (m - j + cutoff)) * side + (k - j + cutoff);
          out[static_cast<std::size_t>(idx)] +=
              4.0 * std::numbers::pi * epsilon * epsilon * v * v * delta(e) / count;
        }
  return out;
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      std::size_t panels) {
  static const std::array<double, 5> x{0.0, 0.5384693101056831, -0.5384693101056831,
                                       0.9061798459386640, -0.9061798459386640};
  static const std::array<double, 5> wt{0.5688888888888889, 0.4786286704993665,
                                        0.4786286704993665, 0.2369268850561891,
                                        0.2369268850561891};
  const double h = (b - a) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * h;
    for (std::size_t i = 0; i < 5; ++i) sum += wt[i] * f(mid + 0.5 * h * x[i]) * 0.5 * h;
  }
  return sum;
}

}  // namespace oracle
