#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cli {

/// Every recognised key with its default. User documents are merged on top;
/// keys absent here are rejected and values must match the default's type
/// (any number for numbers; anything where the default is null).
const nlohmann::json& default_config();

/// Merges `user` into a copy of `base`, validating keys and types.
/// `where` is the dotted path used in error messages.
nlohmann::json merge_checked(const nlohmann::json& base, const nlohmann::json& user,
                             const std::string& where = "");

/// Applies "a.b.c=value"; value is parsed as JSON, falling back to a string.
void apply_override(nlohmann::json& config, const std::string& assignment);

nlohmann::json load_config(const std::filesystem::path& path);

/// seed, seed + 1, ..., seed + count - 1.
std::vector<std::uint64_t> seed_list(const nlohmann::json& config);

}  // namespace cli
