#include "latticeturb/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "latticeturb/errors.hpp"

namespace latticeturb {

namespace {

constexpr int kMaxSweeps = 60;

// Dense matrix, row-major.
struct Dense {
  std::size_t n;
  std::vector<double> a;
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

// Householder reduction of a dense symmetric matrix to tridiagonal form
// (the EISPACK tred2 scheme). On exit d/e hold the tridiagonal (e[i]
// couples i-1 and i) and v holds the orthogonal transform, columns being
// the basis vectors.
void householder_tridiagonalize(Dense& v, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = v.n;
  for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (std::size_t k = j + 1; k + 1 <= i; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k + 1 <= i; ++k) v(k, j) -= (f * e[k] + g * d[k]);
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  // Accumulate transformations.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (std::size_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on a symmetric tridiagonal matrix (EISPACK tql2).
// `rows` holds the starting basis with vectors as rows; on exit row i is
// the eigenvector of d[i]. e[i] couples i-1 and i on entry.
void implicit_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& rows,
                 std::size_t n) {
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  constexpr double eps = 0x1.0p-52;
  double f = 0.0;
  double tst1 = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxSweeps) {
          std::ostringstream diag;
          diag << "eigenvalue index " << l << ", sweeps " << iter - 1 << ", |e| " << std::abs(e[l])
               << ", threshold " << eps * tst1 << ", n " << n;
          throw NumericalError("tridiagonal QL did not converge", diag.str());
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          double* lo = rows.data() + ii * n;
          double* hi = lo + n;
          for (std::size_t k = 0; k < n; ++k) {
            const double t = hi[k];
            hi[k] = s * lo[k] + c * t;
            lo[k] = c * lo[k] - s * t;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

std::size_t argmax_abs(std::span<const double> v) {
  std::size_t best = 0;
  for (std::size_t x = 1; x < v.size(); ++x)
    if (std::abs(v[x]) > std::abs(v[best])) best = x;
  return best;
}

}  // namespace

EigenBasis::EigenBasis(std::vector<double> energies, std::vector<double> modes,
                       std::vector<std::size_t> centers)
    : energies_(std::move(energies)), modes_(std::move(modes)), centers_(std::move(centers)) {
  if (modes_.size() != energies_.size() * energies_.size() || centers_.size() != energies_.size())
    throw ConfigError("EigenBasis: inconsistent sizes");
}

EigenBasis solve_eigen(const HamiltonianMatrix& h) {
  const std::size_t n = h.size();
  if (n == 0 || h.off_diagonal.size() + 1 != n)
    throw ConfigError("solve_eigen: malformed Hamiltonian");

  std::vector<double> d(n), e(n, 0.0), rows(n * n, 0.0);
  if (!h.periodic) {
    d = h.diagonal;
    for (std::size_t i = 1; i < n; ++i) e[i] = h.off_diagonal[i - 1];
    for (std::size_t i = 0; i < n; ++i) rows[i * n + i] = 1.0;
  } else {
    Dense v{n, h.dense()};
    householder_tridiagonalize(v, d, e);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) rows[i * n + k] = v(k, i);
  }
  implicit_ql(d, e, rows, n);

  // Normalize, fix signs, locate centers.
  std::vector<std::size_t> center(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::span<double> row(rows.data() + i * n, n);
    double norm2 = 0.0;
    for (double x : row) norm2 += x * x;
    const double inv = 1.0 / std::sqrt(norm2);
    const std::size_t peak = argmax_abs(row);
    const double sign = row[peak] < 0 ? -inv : inv;
    for (double& x : row) x *= sign;
    center[i] = peak;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (center[a] != center[b]) return center[a] < center[b];
    return d[a] < d[b];
  });

  std::vector<double> energies(n), modes(n * n);
  std::vector<std::size_t> centers(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    energies[j] = d[src];
    centers[j] = center[src];
    std::copy_n(rows.begin() + static_cast<std::ptrdiff_t>(src * n), n,
                modes.begin() + static_cast<std::ptrdiff_t>(j * n));
  }
  return EigenBasis(std::move(energies), std::move(modes), std::move(centers));
}

double participation_ratio(std::span<const double> mode) {
  double s2 = 0.0, s4 = 0.0;
  for (double x : mode) {
    const double p = x * x;
    s2 += p;
    s4 += p * p;
  }
  if (s4 == 0.0) throw DomainError("participation_ratio: zero vector");
  return s2 * s2 / s4;
}

LocalizationReport localization_report(const EigenBasis& basis) {
  LocalizationReport report;
  report.participation_ratio.reserve(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    report.participation_ratio.push_back(participation_ratio(basis.mode(j)));
  if (!report.participation_ratio.empty())
    report.mean_localization_length =
        std::accumulate(report.participation_ratio.begin(), report.participation_ratio.end(), 0.0) /
        static_cast<double>(report.participation_ratio.size());
  return report;
}

}  // namespace latticeturb
