#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "latticeturb/errors.hpp"
#include "latticeturb/io.hpp"
#include "latticeturb/parallel.hpp"
#include "run_config.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Flags {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out;
  long long threads = -1;
  long long seed = -1;
};

fs::path resolve_run_dir(const Flags& flags, const nlohmann::json& config,
                         const std::string& subcommand) {
  if (!flags.out.empty()) return flags.out;
  const auto configured = config.at("output").get<std::string>();
  if (!configured.empty()) return configured;
  if (const char* root = std::getenv("LATTICETURB_OUT"); root && *root)
    return fs::path(root) / subcommand;
  return fs::path("runs") / subcommand;
}

int run(const std::string& subcommand, const Flags& flags) {
  using latticeturb::ConfigError;
  nlohmann::json config = cli::default_config();
  if (!flags.config_path.empty())
    config = cli::merge_checked(config, cli::load_config(flags.config_path));
  for (const auto& assignment : flags.overrides) cli::apply_override(config, assignment);
  if (flags.threads >= 0) config["threads"] = flags.threads;
  if (flags.seed >= 0) config["seed"] = flags.seed;
  if (config.at("threads").get<long long>() < 0)
    throw ConfigError("threads: violates constraint threads >= 0");

  cli::RunContext ctx;
  ctx.threads = latticeturb::resolve_threads(config.at("threads").get<std::size_t>());
  ctx.run_dir = resolve_run_dir(flags, config, subcommand);
  ctx.config = config;
  ctx.manifest.subcommand = subcommand;
  ctx.manifest.timestamp = latticeturb::utc_timestamp();
  ctx.manifest.parameters = config;
  ctx.manifest.threads = ctx.threads;

  std::error_code ec;
  fs::create_directories(ctx.run_dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + ctx.run_dir.string());
  if (!flags.config_path.empty()) ctx.manifest.inputs.push_back(flags.config_path);

  cli::run_subcommand(subcommand, ctx);
  const auto manifest = latticeturb::write_manifest(ctx.run_dir, ctx.manifest);
  std::cout << "wrote " << manifest.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disordered-lattice wave turbulence: spectra, kernels, kinetics and the porous medium limit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(latticeturb::library_version()));

  Flags flags;
  std::string chosen;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"eigen", "Disorder realization, eigenbasis and localization report"},
      {"kernel", "Ensemble-averaged collision kernel"},
      {"micro", "Nonlinear lattice evolution or ensemble intensity rates"},
      {"kinetic", "Time evolution of the kinetic equation"},
      {"pme", "Porous medium evolution, spreading fit and self-similar collapse"},
      {"ohm", "Steady-state current/voltage sweep"},
      {"exponent", "Power-law fit of a diagnostics column"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", flags.config_path, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--set", flags.overrides, "Override a dotted key: key=value (repeatable)")
        ->allow_extra_args(false);
    sub->add_option("--out", flags.out, "Run directory");
    sub->add_option("--threads", flags.threads, "Worker threads (0 = all cores)");
    sub->add_option("--seed", flags.seed, "Base seed");
    sub->callback([&chosen, name = name] { chosen = name; });
  }
  app.add_subcommand("defaults", "Print the default configuration (the config schema)")
      ->callback([] { std::cout << cli::default_config().dump(2) << '\n'; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  if (chosen.empty()) return 0;

  try {
    return run(chosen, flags);
  } catch (const latticeturb::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    if (!e.diagnostics().empty()) std::cerr << e.diagnostics() << '\n';
    return kExitNumerical;
  } catch (const latticeturb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const latticeturb::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
