#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <functional>
#include <map>

#include "latticeturb/analysis.hpp"
#include "latticeturb/eigenbasis.hpp"
#include "latticeturb/errors.hpp"
#include "latticeturb/interaction_kernel.hpp"
#include "latticeturb/kinetic.hpp"
#include "latticeturb/lattice.hpp"
#include "latticeturb/microscopic.hpp"
#include "latticeturb/parallel.hpp"
#include "latticeturb/porous_medium.hpp"
#include "run_config.hpp"

namespace cli {

namespace fs = std::filesystem;
namespace lt = latticeturb;
using nlohmann::json;

namespace {

lt::LatticeConfig lattice_from(const json& c) {
  const json& l = c.at("lattice");
  lt::LatticeConfig cfg;
  const auto n = l.at("n_sites").get<long long>();
  if (n < 2) throw lt::ConfigError("lattice.n_sites: violates constraint n_sites >= 2");
  cfg.n_sites = static_cast<std::size_t>(n);
  cfg.spacing = l.at("spacing").get<double>();
  cfg.disorder_strength = l.at("disorder_strength").get<double>();
  cfg.boundary = lt::boundary_from_string(l.at("boundary").get<std::string>());
  cfg.validate();
  return cfg;
}

lt::BroadeningSpec broadening_from(const json& c) {
  const json& b = c.at("broadening");
  lt::BroadeningSpec spec;
  spec.kind = lt::broadening_from_string(b.at("kind").get<std::string>());
  spec.width = b.at("width").get<double>();
  spec.horizon = b.at("horizon").get<double>();
  spec.validate();
  return spec;
}

std::size_t positive_count(const json& v, const std::string& name) {
  const auto n = v.get<long long>();
  if (n < 1) throw lt::ConfigError(name + ": violates constraint " + name + " >= 1");
  return static_cast<std::size_t>(n);
}

lt::KernelOptions kernel_options(const json& c, std::size_t threads) {
  const json& k = c.at("kernel");
  lt::KernelOptions opt;
  opt.min_sites_per_cutoff = positive_count(k.at("min_sites_per_cutoff"), "kernel.min_sites_per_cutoff");
  opt.threads = threads;
  if (!k.at("renormalize_with").is_null())
    opt.reference_amplitudes = k.at("renormalize_with").get<std::vector<double>>();
  return opt;
}

lt::KernelTable compute_kernel(const json& c, const lt::BroadeningSpec& spec,
                               std::size_t threads) {
  const int cutoff = c.at("kernel").at("cutoff").get<int>();
  return lt::kernel_table(lattice_from(c), c.at("epsilon").get<double>(), spec, cutoff,
                          seed_list(c), kernel_options(c, threads));
}

lt::InitialRecipe recipe_from(const json& init) {
  const auto kind = init.at("kind").get<std::string>();
  if (kind == "site")
    return lt::SingleSite{static_cast<std::size_t>(init.at("site").get<long long>()),
                          init.at("amplitude").get<double>()};
  if (kind == "mode")
    return lt::SingleMode{static_cast<std::size_t>(init.at("mode").get<long long>()),
                          init.at("amplitude").get<double>()};
  if (kind == "envelope") {
    lt::GaussianEnvelope env;
    env.center = init.at("center").get<double>();
    env.width = init.at("width").get<double>();
    env.peak = init.at("peak").get<double>();
    const auto stats = init.at("statistics").get<std::string>();
    if (stats == "fixed")
      env.statistics = lt::AmplitudeStatistics::kFixed;
    else if (stats == "complex_gaussian")
      env.statistics = lt::AmplitudeStatistics::kComplexGaussian;
    else
      throw lt::ConfigError("micro.initial.statistics: expected fixed or complex_gaussian");
    return env;
  }
  throw lt::ConfigError("micro.initial.kind: expected site, mode or envelope");
}

void write_fit_csv(const fs::path& path, const lt::ExponentFit& fit, double predicted) {
  lt::CsvWriter csv(path, {"slope", "stderr_slope", "intercept", "t_lo", "t_hi", "n_points",
                           "predicted"});
  csv.row(fit.slope, fit.stderr_slope, fit.intercept, fit.t_lo, fit.t_hi,
          fit.n_points, predicted);
}

json fit_json(const std::string& quantity, const lt::ExponentFit& fit, double predicted) {
  return {{"quantity", quantity},     {"slope", fit.slope},       {"stderr_slope", fit.stderr_slope},
          {"intercept", fit.intercept}, {"t_lo", fit.t_lo},
          {"t_hi", fit.t_hi},         {"n_points", fit.n_points},
          {"predicted", predicted}};
}

void write_profile(const fs::path& path, const lt::SpectrumField& field) {
  lt::CsvWriter csv(path, {"k", "N"});
  for (std::size_t i = 0; i < field.size(); ++i) csv.row(field.coordinate(i), field.n[i]);
}

// eigen: one realization dumped in full, localization summary for all seeds.
void run_eigen(RunContext& ctx) {
  const auto cfg = lattice_from(ctx.config);
  const auto seeds = seed_list(ctx.config);
  ctx.manifest.seeds = seeds;

  struct Summary {
    lt::DisorderRealization disorder;
    lt::EigenBasis basis;
    double mean_pr = 0.0;
  };
  auto results = lt::parallel_map(seeds.size(), ctx.threads, [&](std::size_t i) {
    Summary s;
    s.disorder = lt::sample_disorder(cfg, seeds[i]);
    s.basis = lt::solve_eigen(lt::build_hamiltonian(cfg, s.disorder));
    s.mean_pr = lt::localization_report(s.basis).mean_localization_length;
    if (i != 0) s.basis = {};
    return s;
  });

  lt::write_disorder_csv(ctx.run_dir / "disorder.csv", results[0].disorder);
  lt::write_eigenbasis(ctx.run_dir, results[0].basis);
  lt::CsvWriter loc(ctx.run_dir / "localization.csv", {"seed", "mean_participation_ratio"});
  std::vector<double> prs;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    loc.row(static_cast<long long>(seeds[i]), results[i].mean_pr);
    prs.push_back(results[i].mean_pr);
  }
  ctx.manifest.outputs = {"disorder.csv", "energies.csv", "modes.csv", "localization.csv"};
  const double mean_pr = lt::compensated_sum(prs) / static_cast<double>(prs.size());
  ctx.manifest.notes["boundary"] = std::string(lt::to_string(cfg.boundary));
  ctx.manifest.notes["mean_participation_ratio"] = mean_pr;
  std::cout << "mean participation ratio: " << lt::format_double(mean_pr) << " sites\n";
}

void run_kernel(RunContext& ctx) {
  const auto spec = broadening_from(ctx.config);
  ctx.manifest.seeds = seed_list(ctx.config);
  auto table = compute_kernel(ctx.config, spec, ctx.threads);
  if (ctx.config.at("kernel").at("symmetrize").get<bool>()) table = lt::symmetrize_kernel(table);
  lt::write_kernel_table(ctx.run_dir / "kernel.csv", ctx.run_dir / "kernel.json", table);
  ctx.manifest.outputs = {"kernel.csv", "kernel.json"};
  const double d = lt::diffusion_coefficient(table);
  ctx.manifest.notes["diffusion_coefficient"] = d;
  ctx.manifest.notes["renormalized_mismatch"] = table.renormalized_mismatch;
  ctx.manifest.notes["symmetrized"] = table.symmetrized;
  std::cout << "diffusion coefficient: " << lt::format_double(d) << '\n';
}

void run_micro(RunContext& ctx) {
  const json& m = ctx.config.at("micro");
  const auto cfg = lattice_from(ctx.config);
  const double eps = ctx.config.at("epsilon").get<double>();
  const double dt = m.at("dt").get<double>();
  if (!(dt > 0)) throw lt::ConfigError("micro.dt: violates constraint dt > 0");
  const auto recipe = recipe_from(m.at("initial"));
  const auto mode = m.at("mode").get<std::string>();
  const auto seeds = seed_list(ctx.config);
  double horizon = m.at("horizon").get<double>();
  if (horizon < 0) throw lt::ConfigError("micro.horizon: violates constraint horizon >= 0");

  if (mode == "trajectory") {
    const auto seed = seeds.front();
    ctx.manifest.seeds = {seed};
    const auto disorder = lt::sample_disorder(cfg, seed);
    const auto basis = lt::solve_eigen(lt::build_hamiltonian(cfg, disorder));
    if (horizon == 0)
      horizon = lt::intermediate_time_midpoint(lt::mean_abs_energy(basis.energies()), eps);
    const auto n_steps = static_cast<std::size_t>(std::ceil(horizon / dt));
    const double dt_eff = horizon / static_cast<double>(n_steps);
    const auto every = positive_count(m.at("observe_every"), "micro.observe_every");

    lt::CsvWriter csv(ctx.run_dir / "trajectory.csv", {"time", "mode_index", "intensity"});
    auto observe = [&](const lt::FieldState& state, std::size_t) {
      const auto n = lt::project_amplitudes(state, basis).intensities();
      for (std::size_t j = 0; j < n.size(); ++j) csv.row(state.time, j, n[j]);
    };
    const auto initial = lt::synthesize_field(lt::draw_initial_modes(recipe, basis, seed), basis);
    observe(initial, 0);
    const auto final_state =
        lt::evolve_field(initial, basis, disorder, eps, dt_eff, n_steps, observe, every);
    ctx.manifest.outputs = {"trajectory.csv"};
    ctx.manifest.notes["horizon"] = horizon;
    ctx.manifest.notes["dt"] = dt_eff;
    ctx.manifest.notes["n_steps"] = n_steps;
    ctx.manifest.notes["mass_drift"] = final_state.mass_drift();
    std::cout << "relative mass drift: " << lt::format_double(final_state.mass_drift()) << '\n';
    return;
  }
  if (mode != "ensemble") throw lt::ConfigError("micro.mode: expected trajectory or ensemble");

  ctx.manifest.seeds = seeds;
  if (horizon == 0) {
    const auto energy = lt::parallel_map(seeds.size(), ctx.threads, [&](std::size_t i) {
      const auto basis =
          lt::solve_eigen(lt::build_hamiltonian(cfg, lt::sample_disorder(cfg, seeds[i])));
      return lt::mean_abs_energy(basis.energies());
    });
    horizon = lt::intermediate_time_midpoint(
        lt::compensated_sum(energy) / static_cast<double>(energy.size()), eps);
  }
  lt::EnsembleRateOptions opt;
  opt.dt = dt;
  opt.threads = ctx.threads;
  opt.control_variate = m.at("control_variate").get<bool>();
  const auto rate = lt::ensemble_intensity_rate(cfg, eps, recipe, seeds, horizon, opt);

  lt::CsvWriter csv(ctx.run_dir / "ensemble.csv", {"mode_index", "mean_rate", "standard_error"});
  for (std::size_t j = 0; j < rate.mean_rate.size(); ++j)
    csv.row(j, rate.mean_rate[j], rate.standard_error[j]);
  ctx.manifest.outputs = {"ensemble.csv"};
  ctx.manifest.notes["horizon"] = horizon;
  ctx.manifest.notes["control_variate"] = opt.control_variate;

  const auto* env = std::get_if<lt::GaussianEnvelope>(&recipe);
  if (m.at("compare_kinetic").get<bool>() && env) {
    const int cutoff = ctx.config.at("kernel").at("cutoff").get<int>();
    auto kopt = kernel_options(ctx.config, ctx.threads);
    const auto table = lt::kernel_table(cfg, eps, lt::BroadeningSpec::fejer(horizon), cutoff,
                                        seeds, kopt);
    const auto predicted = lt::collision_rhs(
        lt::SpectrumField::on_lattice(lt::mean_intensity(*env, cfg.n_sites)), table);
    lt::CsvWriter pred(ctx.run_dir / "prediction.csv", {"mode_index", "predicted_rate"});
    for (std::size_t j = 0; j < predicted.size(); ++j) pred.row(j, predicted[j]);
    ctx.manifest.outputs.push_back("prediction.csv");
  }
  std::cout << "ensemble of " << rate.n_realizations << " realizations, T = "
            << lt::format_double(horizon) << '\n';
}

void run_kinetic(RunContext& ctx) {
  const json& k = ctx.config.at("kinetic");
  lt::KernelTable table;
  const auto csv_path = k.at("kernel_csv").get<std::string>();
  if (!csv_path.empty()) {
    fs::path header = k.at("kernel_header").get<std::string>();
    if (header.empty()) header = fs::path(csv_path).replace_extension(".json");
    table = lt::read_kernel_table(csv_path, header);
    ctx.manifest.inputs = {csv_path, header};
    ctx.manifest.seeds = table.seeds;
  } else {
    ctx.manifest.seeds = seed_list(ctx.config);
    table = compute_kernel(ctx.config, broadening_from(ctx.config), ctx.threads);
  }
  if (k.at("symmetrize").get<bool>() && !table.symmetrized) table = lt::symmetrize_kernel(table);

  const auto n_modes = positive_count(k.at("n_modes"), "kinetic.n_modes");
  const double center = k.at("center").get<double>();
  const double width = k.at("width").get<double>();
  const double peak = k.at("peak").get<double>();
  if (!(width > 0)) throw lt::ConfigError("kinetic.width: violates constraint width > 0");
  if (!(peak >= 0)) throw lt::ConfigError("kinetic.peak: violates constraint peak >= 0");
  std::vector<double> n0(n_modes);
  for (std::size_t j = 0; j < n_modes; ++j) {
    const double x = (static_cast<double>(j) - center) / width;
    n0[j] = peak * std::exp(-0.5 * x * x);
  }
  const double dt = k.at("dt").get<double>();
  if (!(dt > 0)) throw lt::ConfigError("kinetic.dt: violates constraint dt > 0");
  const auto n_steps = positive_count(k.at("n_steps"), "kinetic.n_steps");
  const auto every = positive_count(k.at("observe_every"), "kinetic.observe_every");

  lt::CsvWriter series(ctx.run_dir / "timeseries.csv", {"time", "mode_index", "N"});
  lt::CsvWriter summary(ctx.run_dir / "summary.csv", {"time", "total_mass", "sigma"});
  auto observe = [&](const lt::SpectrumField& f, double t, std::size_t) {
    for (std::size_t j = 0; j < f.size(); ++j) series.row(t, j, f.n[j]);
    summary.row(t, lt::total_mass(f), lt::second_moment(f));
  };
  const auto initial = lt::SpectrumField::on_lattice(n0, center);
  observe(initial, 0.0, 0);
  const auto run = lt::step_kinetic(initial, table, dt, n_steps, observe, every);

  ctx.manifest.outputs = {"timeseries.csv", "summary.csv"};
  ctx.manifest.notes["clip_count"] = run.clip_count;
  ctx.manifest.notes["diffusion_coefficient"] = lt::diffusion_coefficient(table);
  ctx.manifest.notes["kernel_symmetrized"] = table.symmetrized;
  if (run.clip_count > 0)
    std::cerr << "warning: " << run.clip_count << " negative intensities clipped to zero\n";
  std::cout << "mass " << lt::format_double(lt::total_mass(initial)) << " -> "
            << lt::format_double(lt::total_mass(run.spectrum)) << '\n';
}

lt::PMEConfig pme_from(const json& p) {
  lt::PMEConfig cfg;
  cfg.m = p.at("m").get<double>();
  cfg.k_min = p.at("k_min").get<double>();
  cfg.k_max = p.at("k_max").get<double>();
  cfg.n_cells = positive_count(p.at("n_cells"), "pme.n_cells");
  cfg.diffusion_scale = p.at("diffusion_scale").get<double>();
  cfg.safety = p.at("safety").get<double>();
  cfg.validate();
  return cfg;
}

void run_pme(RunContext& ctx) {
  const json& p = ctx.config.at("pme");
  const auto cfg = pme_from(p);
  const json& init = p.at("initial");
  const auto kind = init.at("kind").get<std::string>();
  double t0 = 0.0;
  lt::SpectrumField field;
  if (kind == "box") {
    const double hw = init.at("half_width").get<double>();
    const double h = init.at("height").get<double>();
    if (!(hw > 0) || !(h > 0))
      throw lt::ConfigError("pme.initial: violates constraint half_width > 0 and height > 0");
    field = cfg.sample([&](double k) { return std::abs(k) <= hw ? h : 0.0; });
  } else if (kind == "barenblatt") {
    t0 = init.at("t0").get<double>();
    const double front = init.at("front").get<double>();
    if (!(t0 > 0) || !(front > 0))
      throw lt::ConfigError("pme.initial: violates constraint t0 > 0 and front > 0");
    field = cfg.sample([&](double k) {
      return lt::barenblatt_solution(cfg.m, front, t0, k, cfg.diffusion_scale);
    });
  } else {
    throw lt::ConfigError("pme.initial.kind: expected box or barenblatt");
  }

  const double t_first = p.at("t_first").get<double>();
  const double t_end = p.at("t_end").get<double>();
  if (!(t_first > t0) || !(t_end >= t_first))
    throw lt::ConfigError("pme: violates constraint t_start < t_first <= t_end");
  const auto per_decade = positive_count(p.at("outputs_per_decade"), "pme.outputs_per_decade");
  std::vector<double> times;
  for (std::size_t i = 0;; ++i) {
    const double t = t_first * std::pow(10.0, static_cast<double>(i) / static_cast<double>(per_decade));
    if (t >= t_end * (1 - 1e-12)) break;
    times.push_back(t);
  }
  times.push_back(t_end);
  const auto collapse_times = p.at("collapse_times").get<std::vector<double>>();
  for (double t : collapse_times) {
    if (!(t > t0) || t > t_end)
      throw lt::ConfigError("pme.collapse_times: violates constraint t_start < t <= t_end");
    times.push_back(t);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  lt::PmeStepper stepper(cfg, field, t0);
  const double mass0 = lt::total_mass(stepper.field());
  lt::CsvWriter diag(ctx.run_dir / "diagnostics.csv", {"t", "mass", "sigma", "front_position"});
  auto record = [&] {
    const auto& f = stepper.field();
    diag.row(stepper.time(), lt::total_mass(f), lt::second_moment(f), lt::front_position(f));
  };
  record();
  std::vector<double> ts, sigma;
  std::vector<lt::Snapshot> snapshots;
  std::vector<fs::path> outputs = {"diagnostics.csv"};
  for (double t : times) {
    stepper.advance_to(t);
    record();
    ts.push_back(t);
    sigma.push_back(lt::second_moment(stepper.field()));
    if (std::find(collapse_times.begin(), collapse_times.end(), t) != collapse_times.end()) {
      const std::string name = "profile_" + std::to_string(snapshots.size()) + ".csv";
      write_profile(ctx.run_dir / name, stepper.field());
      outputs.push_back(name);
      snapshots.push_back({t, stepper.field()});
    }
  }
  diag.flush();
  write_profile(ctx.run_dir / "profile_final.csv", stepper.field());
  outputs.push_back("profile_final.csv");

  const auto window = p.at("fit_window").get<std::vector<double>>();
  if (window.size() != 2) throw lt::ConfigError("pme.fit_window: expected [t_lo, t_hi]");
  const auto fit = lt::fit_power_law(ts, sigma, window[0], window[1]);
  const double predicted = lt::predicted_spreading_exponent(cfg.m);
  write_fit_csv(ctx.run_dir / "fit.csv", fit, predicted);
  outputs.push_back("fit.csv");

  ctx.manifest.outputs = outputs;
  ctx.manifest.notes["fit"] = fit_json("sigma", fit, predicted);
  ctx.manifest.notes["steps"] = stepper.steps();
  ctx.manifest.notes["relative_mass_drift"] =
      (lt::total_mass(stepper.field()) - mass0) / mass0;
  ctx.manifest.notes["time_rescaling"] = "t' = diffusion_scale * t";
  if (snapshots.size() >= 2)
    ctx.manifest.notes["collapse_error"] = lt::self_similar_collapse(snapshots, cfg.m);
  ctx.manifest.notes["barenblatt_distance"] =
      lt::barenblatt_distance(stepper.field(), cfg.m, stepper.time(), cfg.diffusion_scale);
  std::cout << "sigma ~ t^" << lt::format_double(fit.slope) << " (predicted "
            << lt::format_double(predicted) << ")\n";
}

void run_ohm(RunContext& ctx) {
  const json& o = ctx.config.at("ohm");
  lt::PMEConfig cfg;
  cfg.m = o.at("m").get<double>();
  const double a = o.at("electrode_at").get<double>();
  cfg.k_min = 0.0;
  cfg.k_max = a;
  cfg.n_cells = positive_count(o.at("n_cells"), "ohm.n_cells");
  cfg.safety = ctx.config.at("pme").at("safety").get<double>();
  cfg.validate();
  const double j_min = o.at("J_min").get<double>();
  const double j_max = o.at("J_max").get<double>();
  const auto count = positive_count(o.at("n_values"), "ohm.n_values");
  if (!(j_min > 0) || !(j_max >= j_min))
    throw lt::ConfigError("ohm: violates constraint 0 < J_min <= J_max");
  lt::SteadyStateOptions opt;
  opt.tolerance = o.at("tolerance").get<double>();
  opt.max_steps = positive_count(o.at("max_steps"), "ohm.max_steps");

  std::vector<double> targets(count);
  for (std::size_t i = 0; i < count; ++i)
    targets[i] = count == 1 ? j_min
                            : j_min * std::pow(j_max / j_min, static_cast<double>(i) /
                                                                  static_cast<double>(count - 1));
  const auto states = lt::parallel_map(count, ctx.threads, [&](std::size_t i) {
    return lt::relax_to_steady_state(cfg, std::pow(targets[i] * a, 1.0 / cfg.m), a, opt);
  });

  lt::CsvWriter csv(ctx.run_dir / "ohm.csv", {"N_left", "J", "V"});
  std::vector<double> js, vs;
  double max_profile_error = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& s = states[i];
    csv.row(std::pow(targets[i] * a, 1.0 / cfg.m), s.ohm.J, s.ohm.V);
    js.push_back(s.ohm.J);
    vs.push_back(s.ohm.V);
    for (std::size_t c = 0; c < s.profile.size(); ++c) {
      const double exact = lt::steady_state_profile(s.ohm.A, s.ohm.J, cfg.m, s.profile.coordinate(c));
      max_profile_error = std::max(max_profile_error, std::abs(s.profile.n[c] - exact));
    }
  }
  csv.flush();
  std::vector<fs::path> outputs = {"ohm.csv"};
  ctx.manifest.notes["max_profile_error"] = max_profile_error;
  if (count >= 8) {
    const auto fit = lt::fit_power_law(js, vs, js.front(), js.back());
    write_fit_csv(ctx.run_dir / "fit.csv", fit, 1.0 / cfg.m);
    outputs.push_back("fit.csv");
    ctx.manifest.notes["fit"] = fit_json("V", fit, 1.0 / cfg.m);
    std::cout << "V ~ J^" << lt::format_double(fit.slope) << " (predicted "
              << lt::format_double(1.0 / cfg.m) << ")\n";
  }
  ctx.manifest.outputs = outputs;
}

void run_exponent(RunContext& ctx) {
  const json& e = ctx.config.at("exponent");
  const fs::path input = e.at("input").get<std::string>();
  if (input.empty()) throw lt::ConfigError("exponent.input: a CSV path is required");
  const auto table = lt::read_csv(input);
  const auto ycol = e.at("y_column").get<std::string>();
  const auto fit = lt::fit_power_law(table.column(e.at("t_column").get<std::string>()),
                                     table.column(ycol), e.at("t_lo").get<double>(),
                                     e.at("t_hi").get<double>());
  const double predicted = lt::predicted_spreading_exponent(e.at("m").get<double>());
  write_fit_csv(ctx.run_dir / "fit.csv", fit, predicted);
  ctx.manifest.inputs = {input};
  ctx.manifest.outputs = {"fit.csv"};
  ctx.manifest.notes["fit"] = fit_json(ycol, fit, predicted);
  std::cout << ycol << " ~ t^" << lt::format_double(fit.slope) << " +/- "
            << lt::format_double(fit.stderr_slope) << '\n';
}

const std::map<std::string, std::function<void(RunContext&)>>& table() {
  static const std::map<std::string, std::function<void(RunContext&)>> commands = {
      {"eigen", run_eigen}, {"kernel", run_kernel},   {"micro", run_micro},
      {"kinetic", run_kinetic}, {"pme", run_pme}, {"ohm", run_ohm},
      {"exponent", run_exponent}};
  return commands;
}

}  // namespace

bool is_subcommand(const std::string& name) { return table().count(name) != 0; }

void run_subcommand(const std::string& name, RunContext& ctx) { table().at(name)(ctx); }

}  // namespace cli
