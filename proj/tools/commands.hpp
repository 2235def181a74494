#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "latticeturb/io.hpp"

namespace cli {

struct RunContext {
  nlohmann::json config;
  std::filesystem::path run_dir;
  std::size_t threads = 1;
  latticeturb::RunManifest manifest;
};

/// Runs one subcommand, filling datasets into ctx.run_dir and provenance
/// into ctx.manifest. The caller writes the manifest.
void run_subcommand(const std::string& name, RunContext& ctx);

bool is_subcommand(const std::string& name);

}  // namespace cli
