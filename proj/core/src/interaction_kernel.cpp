#include "latticeturb/interaction_kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "latticeturb/errors.hpp"
#include "latticeturb/parallel.hpp"

namespace latticeturb {

std::string_view to_string(BroadeningKind k) noexcept {
  return k == BroadeningKind::kFejer ? "fejer" : "gaussian";
}

BroadeningKind broadening_from_string(std::string_view name) {
  if (name == "gaussian") return BroadeningKind::kGaussian;
  if (name == "fejer") return BroadeningKind::kFejer;
  throw ConfigError("broadening.kind must be \"gaussian\" or \"fejer\", got \"" +
                    std::string(name) + "\"");
}

double BroadeningSpec::scale() const noexcept {
  return kind == BroadeningKind::kGaussian ? width : 2.0 * std::numbers::pi / horizon;
}

void BroadeningSpec::validate() const {
  if (kind == BroadeningKind::kGaussian) {
    if (!(width > 0.0) || !std::isfinite(width))
      throw ConfigError("broadening.width: violates constraint width > 0");
  } else if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw ConfigError("broadening.horizon: violates constraint horizon > 0");
  }
}

double broadened_delta(double x, const BroadeningSpec& spec) noexcept {
  if (spec.kind == BroadeningKind::kGaussian) {
    const double eta = spec.width;
    return std::exp(-0.5 * (x / eta) * (x / eta)) / (eta * std::sqrt(2.0 * std::numbers::pi));
  }
  // |Delta_T(x)|^2 / (2 pi T) = (T / 2 pi) sinc^2(x T / 2)
  const double t = spec.horizon;
  const double u = 0.5 * x * t;
  const double sinc2 = std::abs(u) < 1e-4 ? 1.0 - u * u / 3.0 : std::pow(std::sin(u) / u, 2);
  return t / (2.0 * std::numbers::pi) * sinc2;
}

double overlap_coefficient(const EigenBasis& basis, std::size_t j, std::size_t l,
                           std::size_t m, std::size_t n) {
  const std::size_t size = basis.size();
  if (j >= size || l >= size || m >= size || n >= size)
    throw DomainError("overlap_coefficient: mode index out of range");
  std::array<std::size_t, 4> idx{j, l, m, n};
  std::sort(idx.begin(), idx.end());
  const double* a = basis.mode(idx[0]).data();
  const double* b = basis.mode(idx[1]).data();
  const double* c = basis.mode(idx[2]).data();
  const double* d = basis.mode(idx[3]).data();
  double sum = 0.0;
  for (std::size_t x = 0; x < size; ++x) sum += a[x] * b[x] * c[x] * d[x];
  return sum;
}

RenormalizedEnergies nonlinear_shift(const EigenBasis& basis,
                                     const std::vector<double>& amplitudes, double epsilon) {
  const std::size_t n = basis.size();
  if (amplitudes.size() != n)
    throw ConfigError("nonlinear_shift: " + std::to_string(amplitudes.size()) +
                      " amplitudes for " + std::to_string(n) + " modes");
  RenormalizedEnergies out;
  out.bare = basis.energies();
  out.shift_amplitudes = amplitudes;
  out.epsilon = epsilon;
  out.values = out.bare;

  // sum_n V^{jn}_{jn} |c_n|^2 = sum_x psi_j(x)^2 rho(x), rho = sum_n psi_n^2 |c_n|^2
  std::vector<double> rho(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (amplitudes[k] == 0.0) continue;
    const auto psi = basis.mode(k);
    for (std::size_t x = 0; x < n; ++x) rho[x] += psi[x] * psi[x] * amplitudes[k];
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto psi = basis.mode(j);
    double s = 0.0;
    for (std::size_t x = 0; x < n; ++x) s += psi[x] * psi[x] * rho[x];
    out.values[j] += 2.0 * epsilon * s;
  }
  return out;
}

KernelTable KernelTable::zeros(int cutoff, double epsilon) {
  KernelTable t;
  t.cutoff = cutoff;
  t.epsilon = epsilon;
  const auto s = static_cast<std::size_t>(t.side());
  t.values.assign(s * s * s, 0.0);
  return t;
}

void KernelTable::validate() const {
  if (cutoff < 1) throw ConfigError("kernel.cutoff: violates constraint cutoff >= 1");
  const auto s = static_cast<std::size_t>(side());
  if (values.size() != s * s * s)
    throw ConfigError("kernel table has " + std::to_string(values.size()) +
                      " entries, expected " + std::to_string(s * s * s));
  if (!standard_error.empty() && standard_error.size() != values.size())
    throw ConfigError("kernel standard_error length does not match values");
  for (double v : values)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw DomainError("kernel entries must be finite and non-negative");
}

std::vector<double> kernel_table_single(const EigenBasis& basis,
                                        const std::vector<double>& mismatch_energies,
                                        double epsilon, const BroadeningSpec& spec,
                                        int cutoff) {
  const auto n = static_cast<int>(basis.size());
  if (mismatch_energies.size() != basis.size())
    throw ConfigError("kernel_table_single: energy vector does not match basis");
  if (n < 2 * cutoff + 1) throw ConfigError("kernel_table_single: lattice smaller than the cube");

  KernelTable acc = KernelTable::zeros(cutoff, epsilon);
  const double prefactor = 4.0 * std::numbers::pi * epsilon * epsilon;
  const auto& e = mismatch_energies;
  for (int j = cutoff; j <= n - 1 - cutoff; ++j) {
    for (int dl = -cutoff; dl <= cutoff; ++dl) {
      for (int dm = -cutoff; dm <= cutoff; ++dm) {
        for (int dn = dm; dn <= cutoff; ++dn) {
          const auto uj = static_cast<std::size_t>(j);
          const auto ul = static_cast<std::size_t>(j + dl);
          const auto um = static_cast<std::size_t>(j + dm);
          const auto un = static_cast<std::size_t>(j + dn);
          if (is_diagonal_quadruple(uj, ul, um, un)) continue;
          const double v = overlap_coefficient(basis, uj, ul, um, un);
          const double k =
              prefactor * v * v * broadened_delta(energy_mismatch(e, uj, ul, um, un), spec);
          acc.at(dl, dm, dn) += k;
          if (dn != dm) acc.at(dl, dn, dm) += k;
        }
      }
    }
  }
  const double centers = static_cast<double>(n - 2 * cutoff);
  for (double& v : acc.values) v /= centers;
  return acc.values;
}

KernelTable kernel_table(const LatticeConfig& config, double epsilon, const BroadeningSpec& spec,
                         int cutoff, const std::vector<std::uint64_t>& seeds,
                         const KernelOptions& options) {
  config.validate();
  spec.validate();
  if (cutoff < 1) throw ConfigError("kernel.cutoff: violates constraint cutoff >= 1");
  if (seeds.empty()) throw ConfigError("kernel.seeds: at least one seed is required");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw ConfigError("epsilon: violates constraint epsilon >= 0");
  const std::size_t need = options.min_sites_per_cutoff * static_cast<std::size_t>(cutoff);
  if (config.n_sites < need || config.n_sites < static_cast<std::size_t>(2 * cutoff + 1))
    throw ConfigError("lattice.n_sites: violates constraint n_sites >= " +
                      std::to_string(options.min_sites_per_cutoff) + " * cutoff (" +
                      std::to_string(config.n_sites) + " < " + std::to_string(need) + ")");
  if (options.reference_amplitudes && options.reference_amplitudes->size() != config.n_sites)
    throw ConfigError("kernel.reference_amplitudes: length does not match n_sites");

  auto partials = parallel_map(seeds.size(), options.threads, [&](std::size_t r) {
    const auto disorder = sample_disorder(config, seeds[r]);
    const auto basis = solve_eigen(build_hamiltonian(config, disorder));
    std::vector<double> energies = basis.energies();
    if (options.reference_amplitudes)
      energies = nonlinear_shift(basis, *options.reference_amplitudes, epsilon).values;
    return kernel_table_single(basis, energies, epsilon, spec, cutoff);
  });

  KernelTable table = KernelTable::zeros(cutoff, epsilon);
  table.broadening = spec;
  table.n_realizations = seeds.size();
  table.seeds = seeds;
  table.lattice = config;
  table.renormalized_mismatch = options.reference_amplitudes.has_value();

  const double count = static_cast<double>(seeds.size());
  for (const auto& p : partials)
    for (std::size_t i = 0; i < p.size(); ++i) table.values[i] += p[i];
  for (double& v : table.values) v /= count;

  if (seeds.size() >= 2) {
    table.standard_error.assign(table.values.size(), 0.0);
    for (const auto& p : partials)
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - table.values[i];
        table.standard_error[i] += d * d;
      }
    for (double& s : table.standard_error) s = std::sqrt(s / (count - 1.0) / count);
  }
  return table;
}

double diffusion_coefficient(const KernelTable& table) {
  table.validate();
  const int r = table.cutoff;
  double sum = 0.0;
  for (int dl = -r; dl <= r; ++dl)
    for (int dm = -r; dm <= r; ++dm)
      for (int dn = -r; dn <= r; ++dn) {
        const double w = static_cast<double>(dl - dm - dn);
        sum += table.at(dl, dm, dn) * w * w;
      }
  return sum / 12.0;
}

KernelTable symmetrize_kernel(const KernelTable& table) {
  table.validate();
  KernelTable out = table;
  out.symmetrized = true;
  out.standard_error.clear();
  const int r = table.cutoff;

  using Triple = std::array<int, 3>;
  const auto swap_mn = [](const Triple& t) { return Triple{t[0], t[2], t[1]}; };
  const auto swap_jl = [](const Triple& t) { return Triple{-t[0], t[1] - t[0], t[2] - t[0]}; };
  const auto swap_pairs = [](const Triple& t) { return Triple{t[2] - t[1], -t[1], t[0] - t[1]}; };

  for (int dl = -r; dl <= r; ++dl)
    for (int dm = -r; dm <= r; ++dm)
      for (int dn = -r; dn <= r; ++dn) {
        std::vector<Triple> orbit{{dl, dm, dn}};
        for (std::size_t i = 0; i < orbit.size(); ++i) {
          for (const Triple& next : {swap_mn(orbit[i]), swap_jl(orbit[i]), swap_pairs(orbit[i])})
            if (std::find(orbit.begin(), orbit.end(), next) == orbit.end()) orbit.push_back(next);
        }
        std::sort(orbit.begin(), orbit.end());
        double sum = 0.0;
        bool inside = true;
        for (const Triple& t : orbit) {
          if (!table.contains(t[0], t[1], t[2])) {
            inside = false;
            break;
          }
          sum += table.at(t[0], t[1], t[2]);
        }
        out.at(dl, dm, dn) = inside ? sum / static_cast<double>(orbit.size()) : 0.0;
      }
  return out;
}

}  // namespace latticeturb
