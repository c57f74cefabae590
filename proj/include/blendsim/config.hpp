#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "blendsim/scenario.hpp"

namespace blendsim {

/// Outcome of parsing + validating a scenario config. `scenario` is only
/// meaningful when `issues` is empty.
struct ConfigLoad {
    Scenario scenario;
    std::vector<std::string> issues;  // "field.path: message"
    std::string canonical;            // key-sorted, number-normalized JSON
    std::string hash_hex;             // FNV-1a 64 of the canonical form
};

ConfigLoad load_config_file(const std::filesystem::path& path);

/// Parse config text; relative CSV paths resolve against base_dir.
ConfigLoad load_config_text(const std::string& text, const std::filesystem::path& base_dir);

std::string fnv1a64_hex(std::string_view data);

}  // namespace blendsim
