#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "latticeturb/interaction_kernel.hpp"
#include "latticeturb/spectrum.hpp"

namespace latticeturb {

/// dN_j/dt = sum' K(l-j, m-j, n-j) (N_l N_m N_n + N_n N_m N_j - N_j N_n N_l - N_l N_j N_m).
///
/// The sum runs over the kernel cube restricted to modes on the grid
/// (modes beyond the grid do not exist), with the diagonal quadruples
/// excluded. With an exchange-symmetric kernel the result sums to zero.
std::vector<double> collision_rhs(const SpectrumField& spectrum, const KernelTable& kernel);

/// sum_j sum' |K| (|N_l N_m N_n| + ... ) over the same terms as collision_rhs:
/// the scale against which round-off in sum_j rhs_j is measured.
double collision_term_magnitude(const SpectrumField& spectrum, const KernelTable& kernel);

struct KineticRun {
  SpectrumField spectrum;
  std::size_t clip_count = 0;  // negative intensities reset to zero
  double time = 0.0;
};

using KineticObserver = std::function<void(const SpectrumField&, double time, std::size_t step)>;

/// Classical RK4 on collision_rhs. Negative values after a step are
/// clipped to zero and counted. Throws DivergenceError if any |N| exceeds
/// 1e12 times the initial maximum.
KineticRun step_kinetic(const SpectrumField& spectrum, const KernelTable& kernel, double dt,
                        std::size_t n_steps, const KineticObserver& observer = {},
                        std::size_t observe_every = 0);

}  // namespace latticeturb
