#pragma once

#include <cstddef>

#include "rfbeats/cli/config.hpp"
#include "rfbeats/cli/report.hpp"

namespace rfbeats::cli {

/// Executes one validated configuration. Library errors propagate unchanged.
Report run(const RunConfig& config);

/// Worker count for sweeps: RFBEATS_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
std::size_t sweep_threads();

}  // namespace rfbeats::cli
