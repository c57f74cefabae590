#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blendsim/feedstock.hpp"

namespace blendsim {

/// Names of the bundled scenario presets (also shipped as files under
/// scenarios/).
std::vector<std::string> preset_names();

/// Embedded JSON text of a preset, or nullopt for unknown names.
std::optional<std::string> preset_text(const std::string& name);

/// Built-in MSW composition profiles ("nyc-2024").
MswProfile builtin_msw_profile(const std::string& name);
bool is_builtin_msw_profile(const std::string& name);

}  // namespace blendsim
