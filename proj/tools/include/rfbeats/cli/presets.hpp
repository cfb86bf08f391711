#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rfbeats/cli/config.hpp"

namespace rfbeats::cli {

/// Names in documentation order: fig2a-d, fig3a-d, fig4, fig5a-b, fig6, fig7,
/// fig8a-c, fig9a-d, fig10-12, fig13a-h, fig14.
const std::vector<std::string>& preset_names();

/// Configuration reproducing one figure's data set. Throws UnknownPreset
/// listing the available names.
RunConfig preset(std::string_view name);

}  // namespace rfbeats::cli
