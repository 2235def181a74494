#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "latticeturb/errors.hpp"
#include "latticeturb/microscopic.hpp"
#include "latticeturb/rng.hpp"
#include "oracles.hpp"

using namespace latticeturb;

namespace {

struct Setup {
  LatticeConfig config;
  DisorderRealization disorder;
  HamiltonianMatrix h;
  EigenBasis basis;
};

Setup make_setup(std::size_t n, double xi, double omega, std::uint64_t seed) {
  Setup s;
  s.config = {n, xi, omega, Boundary::kDirichlet};
  s.disorder = sample_disorder(s.config, seed);
  s.h = build_hamiltonian(s.config, s.disorder);
  s.basis = solve_eigen(s.h);
  return s;
}

ComplexVector random_field(std::size_t n, std::uint64_t seed, double scale) {
  auto rng = make_rng(seed, RngStream::kTest);
  ComplexVector psi(n);
  for (auto& z : psi) z = scale * Complex{rng.next_normal(), rng.next_normal()};
  return psi;
}

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST(EvolveField, LinearDynamicsKeepIntensities) {
  const auto s = make_setup(20, 1.2, 2.0, 1);
  const FieldState psi0(random_field(20, 2, 0.5), 0.0);
  const auto out = evolve_field(psi0, s.basis, s.disorder, 0.0, 0.05, 400);
  const auto before = project_amplitudes(psi0, s.basis).intensities();
  const auto after = project_amplitudes(out, s.basis).intensities();
  for (std::size_t j = 0; j < 20; ++j) EXPECT_NEAR(after[j], before[j], 1e-12);
}

TEST(EvolveField, InteractionPictureIsConstantWithoutNonlinearity) {
  const auto s = make_setup(16, 1.0, 1.0, 3);
  const FieldState psi0(random_field(16, 4, 0.4), 0.0);
  const auto c0 = project_amplitudes(psi0, s.basis);
  const auto out = evolve_field(psi0, s.basis, s.disorder, 0.0, 0.1, 300);
  EXPECT_LT(max_abs_diff(project_amplitudes(out, s.basis).c, c0.c), 1e-12);
}

TEST(EvolveField, MassDriftStaysAtRoundOff) {
  const auto s = make_setup(24, 1.5, 2.0, 5);
  const FieldState psi0(random_field(24, 6, 0.3), 0.0);
  const auto out = evolve_field(psi0, s.basis, s.disorder, 0.5, 0.02, 5000);
  EXPECT_LT(out.mass_drift(), 1e-10);
  EXPECT_NEAR(out.time, 100.0, 1e-9);
}

TEST(EvolveField, MatchesDenseOdeOracle) {
  const auto s = make_setup(4, 1.0, 1.0, 7);
  const auto psi = random_field(4, 8, 0.6);
  const auto ref = oracle::nlse_dense_rk(s.h.dense(), 4, psi, 0.1, 1.0, 1e-3);
  const auto out = evolve_field(FieldState(psi, 0.0), s.basis, s.disorder, 0.1, 1e-3, 1000);
  EXPECT_LT(max_abs_diff(out.psi, ref), 1e-6);
}

TEST(EvolveField, SplitStepIsSecondOrder) {
  const auto s = make_setup(12, 1.0, 2.0, 9);
  const auto psi = random_field(12, 10, 0.8);
  const auto ref = oracle::nlse_dense_rk(s.h.dense(), 12, psi, 0.5, 1.0, 1e-3);
  const auto coarse = evolve_field(FieldState(psi, 0.0), s.basis, s.disorder, 0.5, 0.02, 50);
  const auto fine = evolve_field(FieldState(psi, 0.0), s.basis, s.disorder, 0.5, 0.01, 100);
  const double ratio = max_abs_diff(coarse.psi, ref) / max_abs_diff(fine.psi, ref);
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
}

TEST(EvolveField, StabilityGuard) {
  const auto s = make_setup(8, 1.0, 1.0, 1);
  ComplexVector psi(8, Complex{});
  psi[3] = 2.0;  // |psi|^2 = 4
  EXPECT_THROW(evolve_field(FieldState(psi, 0.0), s.basis, s.disorder, 1.0, 0.03, 1),
               StepSizeError);
  EXPECT_NO_THROW(evolve_field(FieldState(psi, 0.0), s.basis, s.disorder, 1.0, 0.02, 1));
  EXPECT_THROW(evolve_field(FieldState(psi, 0.0), s.basis, s.disorder, 1.0, -0.1, 1),
               ConfigError);
}

TEST(ProjectAmplitudes, EigenmodeProjectsToUnitVector) {
  const auto s = make_setup(10, 1.0, 2.0, 2);
  ComplexVector psi(10);
  for (std::size_t x = 0; x < 10; ++x) psi[x] = s.basis(3, x);
  const auto c = project_amplitudes(FieldState(psi, 0.0), s.basis).c;
  for (std::size_t j = 0; j < 10; ++j) EXPECT_NEAR(std::abs(c[j] - (j == 3 ? 1.0 : 0.0)), 0.0, 1e-12);

  const auto later = evolve_field(FieldState(psi, 0.0), s.basis, s.disorder, 0.0, 0.1, 250);
  const auto c_later = project_amplitudes(later, s.basis).c;
  for (std::size_t j = 0; j < 10; ++j)
    EXPECT_NEAR(std::abs(c_later[j] - (j == 3 ? 1.0 : 0.0)), 0.0, 1e-12);
}

TEST(ProjectAmplitudes, ParsevalAndRoundTrip) {
  const auto s = make_setup(30, 1.3, 2.0, 4);
  const FieldState psi(random_field(30, 11, 0.7), 3.5);
  const auto c = project_amplitudes(psi, s.basis);
  EXPECT_NEAR(squared_norm(c.c), psi.mass(), 1e-12 * psi.mass());
  EXPECT_LT(max_abs_diff(synthesize_field(c, s.basis).psi, psi.psi), 1e-12);
}

TEST(DeltaT, LimitsAndDefinition) {
  EXPECT_EQ(delta_T(0.0, 2.5), Complex(2.5, 0.0));
  for (double x : {-1.3, 1e-7, 0.4, 3.0}) {
    // e^{ixT} - 1 written without cancellation
    const double h = 0.5 * x * 2.5;
    const Complex ref = Complex(-2.0 * std::sin(h) * std::sin(h), std::sin(2.0 * h)) / Complex(0, x);
    EXPECT_NEAR(std::abs(delta_T(x, 2.5) - ref), 0.0, 1e-12);
  }
}

TEST(FirstOrderCheck, ZeroAmplitudesPredictZero) {
  const auto s = make_setup(6, 1.0, 1.0, 1);
  ModeState c0{ComplexVector(6, Complex{}), 0.0};
  for (const auto& z : first_order_check(c0, s.basis, 0.1, 1.0)) EXPECT_EQ(z, Complex{});
}

TEST(FirstOrderCheck, SingleModeAgreesWithEvolution) {
  const double eps = 1e-3, horizon = 1.0;
  const auto s = make_setup(6, 1.0, 1.0, 12);
  const std::size_t j0 = 2;
  ModeState c0{ComplexVector(6, Complex{}), 0.0};
  c0.c[j0] = 1.0;

  const auto c1 = first_order_correction(c0, s.basis,
                                         nonlinear_shift(s.basis, c0.intensities(), eps).values,
                                         horizon);
  EXPECT_EQ(c1[j0], Complex{});  // only the diagonal quadruple touches j0

  const auto pred = first_order_check(c0, s.basis, eps, horizon);
  const auto shifted = nonlinear_shift(s.basis, c0.intensities(), eps);
  const auto out = evolve_field(synthesize_field(c0, s.basis), s.basis, s.disorder, eps, 1e-3, 1000);
  const auto actual = project_amplitudes(out, s.basis, &shifted.values).c;

  for (std::size_t j = 0; j < 6; ++j) {
    if (j == j0) {
      EXPECT_NEAR(std::abs(actual[j]), std::abs(pred[j]), 1e-4);
      // The shift counts the j0 self term twice while the dynamics count it
      // once, leaving a phase of +eps V^{j0 j0}_{j0 j0} T in this frame.
      const double v = overlap_coefficient(s.basis, j0, j0, j0, j0);
      EXPECT_NEAR(std::arg(actual[j] / pred[j]), eps * v * horizon, 1e-6);
    } else {
      EXPECT_LT(std::abs(actual[j] - pred[j]), 1e-4);
      const Complex change = actual[j] - c0.c[j];
      if (std::abs(change) > 1e-6)
        EXPECT_LT(std::abs(change - eps * c1[j]) / std::abs(change), 1e-2);
    }
  }
}

TEST(FirstOrderCheck, RandomPhaseStateAgreesWithEvolution) {
  const double eps = 1e-3, horizon = 1.0;
  const auto s = make_setup(8, 1.0, 1.5, 13);
  const auto c0 = draw_initial_modes(GaussianEnvelope{3.5, 2.0, 0.1, AmplitudeStatistics::kFixed},
                                     s.basis, 77);
  const auto pred = first_order_check(c0, s.basis, eps, horizon);
  const auto shifted = nonlinear_shift(s.basis, c0.intensities(), eps);
  const auto out = evolve_field(synthesize_field(c0, s.basis), s.basis, s.disorder, eps, 1e-3, 1000);
  const auto actual = project_amplitudes(out, s.basis, &shifted.values).c;
  double scale = 0.0;
  for (const auto& z : c0.c) scale = std::max(scale, std::abs(z));
  EXPECT_LT(max_abs_diff(actual, pred) / scale, 1e-4);
}

TEST(DrawInitialModes, RecipesAndDeterminism) {
  const auto s = make_setup(12, 1.0, 2.0, 3);
  const auto site = draw_initial_modes(SingleSite{4, 1.0}, s.basis, 0);
  EXPECT_NEAR(squared_norm(site.c), 1.0, 1e-12);
  const auto mode = draw_initial_modes(SingleMode{5, 0.5}, s.basis, 0);
  EXPECT_EQ(mode.c[5], Complex(0.5, 0.0));
  const GaussianEnvelope env{6.0, 2.0, 0.3, AmplitudeStatistics::kComplexGaussian};
  EXPECT_EQ(draw_initial_modes(env, s.basis, 9).c, draw_initial_modes(env, s.basis, 9).c);
  EXPECT_NE(draw_initial_modes(env, s.basis, 9).c, draw_initial_modes(env, s.basis, 10).c);
  EXPECT_THROW(draw_initial_modes(SingleSite{12, 1.0}, s.basis, 0), ConfigError);
}

TEST(DrawInitialModes, ComplexGaussianStatistics) {
  const auto s = make_setup(12, 1.0, 2.0, 3);
  const GaussianEnvelope env{6.0, 2.0, 0.3, AmplitudeStatistics::kComplexGaussian};
  const auto mean = mean_intensity(env, 12);
  const std::size_t draws = 20000;
  double sum = 0.0, sum_sq = 0.0;
  Complex sum_c{};
  for (std::size_t r = 0; r < draws; ++r) {
    const auto c = draw_initial_modes(env, s.basis, r).c[6];
    sum += std::norm(c);
    sum_sq += std::norm(c) * std::norm(c);
    sum_c += c;
  }
  const double n = static_cast<double>(draws);
  EXPECT_NEAR(sum / n, mean[6], 4 * mean[6] / std::sqrt(n));
  // Exponential intensity: <N^2> = 2 <N>^2.
  EXPECT_NEAR(sum_sq / n / (mean[6] * mean[6]), 2.0, 0.15);
  EXPECT_LT(std::abs(sum_c / n), 4 * std::sqrt(mean[6] / n));
}

TEST(EnsembleRate, VanishesWithoutNonlinearity) {
  LatticeConfig c{16, 1.5, 2.0, Boundary::kDirichlet};
  const auto r = ensemble_intensity_rate(
      c, 0.0, GaussianEnvelope{8.0, 2.0, 0.2, AmplitudeStatistics::kComplexGaussian}, {1, 2, 3},
      20.0);
  for (double v : r.mean_rate) EXPECT_NEAR(v, 0.0, 1e-13);
}

TEST(EnsembleRate, SingleModeConservesMass) {
  LatticeConfig c{16, 1.5, 2.0, Boundary::kDirichlet};
  const auto r = ensemble_intensity_rate(c, 0.1, SingleMode{8, 1.0}, {1, 2, 3, 4, 5}, 20.0);
  double sum = 0.0, var = 0.0;
  for (std::size_t j = 0; j < 16; ++j) {
    sum += r.mean_rate[j];
    var += r.standard_error[j] * r.standard_error[j];
  }
  EXPECT_LE(std::abs(sum), 3 * std::sqrt(var) + 1e-12);
  EXPECT_EQ(r.n_realizations, 5u);
  EXPECT_THROW(ensemble_intensity_rate(c, 0.1, SingleMode{8, 1.0}, {1}, 20.0), ConfigError);
}

TEST(EnsembleRate, ControlVariateKeepsMeanAndThreadsKeepBits) {
  LatticeConfig c{24, 1.5, 2.0, Boundary::kDirichlet};
  const GaussianEnvelope env{12.0, 2.0, 0.3, AmplitudeStatistics::kComplexGaussian};
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 16; ++s) seeds.push_back(s);
  EnsembleRateOptions plain, threaded;
  threaded.threads = 3;
  const auto a = ensemble_intensity_rate(c, 0.05, env, seeds, 30.0, plain);
  const auto b = ensemble_intensity_rate(c, 0.05, env, seeds, 30.0, threaded);
  EXPECT_EQ(a.mean_rate, b.mean_rate);
  EXPECT_EQ(a.standard_error, b.standard_error);

  EnsembleRateOptions cv;
  cv.control_variate = true;
  const auto d = ensemble_intensity_rate(c, 0.05, env, seeds, 30.0, cv);
  for (std::size_t j = 0; j < 24; ++j)
    EXPECT_LE(std::abs(d.mean_rate[j] - a.mean_rate[j]),
              4 * std::hypot(a.standard_error[j], d.standard_error[j]) + 1e-15);
}

TEST(EnsembleRate, ControlVariateShrinksErrorBars) {
  LatticeConfig c{32, 2.0, 2.0, Boundary::kDirichlet};
  const GaussianEnvelope env{16.0, 3.0, 0.1, AmplitudeStatistics::kFixed};
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 24; ++s) seeds.push_back(s);
  EnsembleRateOptions plain, cv;
  cv.control_variate = true;
  const auto a = ensemble_intensity_rate(c, 0.01, env, seeds, 100.0, plain);
  const auto b = ensemble_intensity_rate(c, 0.01, env, seeds, 100.0, cv);
  double se_plain = 0, se_cv = 0;
  for (std::size_t j = 12; j <= 20; ++j) {
    se_plain += a.standard_error[j];
    se_cv += b.standard_error[j];
  }
  EXPECT_LT(se_cv, 0.2 * se_plain);
}

TEST(IntermediateTime, Midpoint) {
  EXPECT_DOUBLE_EQ(intermediate_time_midpoint(1.0, 0.05), 2 * std::numbers::pi / 0.05);
  EXPECT_DOUBLE_EQ(mean_abs_energy({-1.0, 2.0, -3.0}), 2.0);
  EXPECT_THROW(intermediate_time_midpoint(0.0, 0.1), DomainError);
}

// For quadruples with l outside {m, n}, Wick pairing of circular Gaussian
// amplitudes gives <eps^2 |c^(1)_j|^2> / T = sum K N_l N_m N_n exactly. With
// N = 1 the center-averaged kernel sum over those offsets is the target.
TEST(FirstOrder, PhaseAveragedGainMatchesKernel) {
  const LatticeConfig c{32, 2.0, 2.0, Boundary::kDirichlet};
  const int R = 4;
  const double eps = 0.05, horizon = 150.0;
  const auto basis = solve_eigen(build_hamiltonian(c, sample_disorder(c, 10003)));
  const auto& e = basis.energies();

  struct Term {
    int j, l, m, n;
    Complex a;
  };
  std::vector<Term> terms;
  for (int j = R; j < 32 - R; ++j)
    for (int l = j - R; l <= j + R; ++l)
      for (int m = j - R; m <= j + R; ++m)
        for (int n = j - R; n <= j + R; ++n) {
          if (is_diagonal_quadruple(j, l, m, n) || l == m || l == n) continue;
          terms.push_back({j, l, m, n,
                           overlap_coefficient(basis, j, l, m, n) *
                               delta_T(energy_mismatch(e, j, l, m, n), horizon)});
        }

  const GaussianEnvelope flat{16.0, 1e9, 1.0, AmplitudeStatistics::kComplexGaussian};
  const int draws = 4000;
  const double centers = 32 - 2 * R;
  double mc = 0.0;
  for (int d = 0; d < draws; ++d) {
    const auto c0 = draw_initial_modes(flat, basis, 500'000 + d);
    std::vector<Complex> s(32);
    for (const auto& t : terms) s[t.j] += t.a * c0.c[t.m] * c0.c[t.n] * std::conj(c0.c[t.l]);
    for (int j = R; j < 32 - R; ++j) mc += eps * eps * std::norm(s[j]) / horizon;
  }
  mc /= draws * centers;

  KernelTable k = KernelTable::zeros(R, eps);
  k.values = kernel_table_single(basis, e, eps, BroadeningSpec::fejer(horizon), R);
  double kinetic = 0.0;
  for (int dl = -R; dl <= R; ++dl)
    for (int dm = -R; dm <= R; ++dm)
      for (int dn = -R; dn <= R; ++dn)
        if (dl != dm && dl != dn) kinetic += k.at(dl, dm, dn);
  EXPECT_NEAR(mc / kinetic, 1.0, 0.05);
}
