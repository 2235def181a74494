#include "run_config.hpp"

#include <fstream>

#include "latticeturb/errors.hpp"

namespace cli {

using nlohmann::json;
using latticeturb::ConfigError;

const json& default_config() {
  static const json defaults = R"({
    "seed": 1,
    "realizations": 16,
    "threads": 0,
    "output": "",
    "epsilon": 0.05,
    "lattice": {
      "n_sites": 64,
      "spacing": 2.0,
      "disorder_strength": 2.0,
      "boundary": "dirichlet"
    },
    "broadening": {"kind": "gaussian", "width": 0.1, "horizon": 0.0},
    "kernel": {
      "cutoff": 6,
      "min_sites_per_cutoff": 10,
      "renormalize_with": null,
      "symmetrize": false
    },
    "micro": {
      "mode": "ensemble",
      "dt": 0.05,
      "horizon": 0.0,
      "observe_every": 100,
      "control_variate": true,
      "compare_kinetic": true,
      "initial": {
        "kind": "envelope",
        "site": 32,
        "mode": 32,
        "amplitude": 1.0,
        "center": 32.0,
        "width": 3.0,
        "peak": 0.1,
        "statistics": "complex_gaussian"
      }
    },
    "kinetic": {
      "kernel_csv": "",
      "kernel_header": "",
      "n_modes": 96,
      "center": 48.0,
      "width": 3.0,
      "peak": 1.0,
      "dt": 0.05,
      "n_steps": 2000,
      "observe_every": 100,
      "symmetrize": true
    },
    "pme": {
      "m": 3.0,
      "k_min": -50.0,
      "k_max": 50.0,
      "n_cells": 4096,
      "diffusion_scale": 1.0,
      "safety": 0.5,
      "initial": {"kind": "box", "half_width": 1.0, "height": 1.0, "front": 1.0, "t0": 1.0},
      "t_first": 1.0,
      "t_end": 10000.0,
      "outputs_per_decade": 8,
      "fit_window": [100.0, 10000.0],
      "collapse_times": [1000.0, 10000.0]
    },
    "ohm": {
      "m": 3.0,
      "electrode_at": 10.0,
      "n_cells": 1024,
      "J_min": 0.01,
      "J_max": 0.1,
      "n_values": 10,
      "tolerance": 1e-10,
      "max_steps": 50000000
    },
    "exponent": {
      "input": "",
      "t_column": "t",
      "y_column": "sigma",
      "m": 3.0,
      "t_lo": 100.0,
      "t_hi": 10000.0
    }
  })"_json;
  return defaults;
}

namespace {

std::string join(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

bool same_kind(const json& a, const json& b) {
  if (a.is_null()) return true;
  if (a.is_number()) return b.is_number();
  return a.type() == b.type();
}

}  // namespace

json merge_checked(const json& base, const json& user, const std::string& where) {
  if (!user.is_object())
    throw ConfigError((where.empty() ? std::string("config") : where) + ": expected an object");
  json out = base;
  for (const auto& [key, value] : user.items()) {
    const std::string path = join(where, key);
    if (!base.contains(key)) throw ConfigError(path + ": unknown key");
    const json& def = base.at(key);
    if (!same_kind(def, value))
      throw ConfigError(path + ": expected " + std::string(def.type_name()) + ", got " +
                        value.type_name());
    if (def.is_object())
      out[key] = merge_checked(def, value, path);
    else
      out[key] = value;
  }
  return out;
}

void apply_override(json& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("--set expects key=value, got \"" + assignment + "\"");
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;

  // Build a nested patch and reuse the checked merge.
  json patch = value;
  std::string rest = key;
  std::vector<std::string> parts;
  for (std::size_t dot; (dot = rest.find('.')) != std::string::npos; rest = rest.substr(dot + 1))
    parts.push_back(rest.substr(0, dot));
  parts.push_back(rest);
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) patch = json{{*it, patch}};
  config = merge_checked(config, patch);
}

json load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json doc = json::parse(in, nullptr, false, true);
  if (doc.is_discarded()) throw ConfigError(path.string() + ": not valid JSON");
  return doc;
}

std::vector<std::uint64_t> seed_list(const json& config) {
  const auto count = config.at("realizations").get<long long>();
  if (count < 1) throw ConfigError("realizations: violates constraint realizations >= 1");
  const auto base = config.at("seed").get<std::uint64_t>();
  std::vector<std::uint64_t> seeds;
  for (long long i = 0; i < count; ++i) seeds.push_back(base + static_cast<std::uint64_t>(i));
  return seeds;
}

}  // namespace cli
