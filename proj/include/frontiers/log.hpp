#pragma once

#include <filesystem>

#include "frontiers/sim/explorer.hpp"

namespace frontiers {

/// ExplorationLog on disk: newline-delimited JSON, a header record carrying
/// the config followed by one record per optimization round. Serialization
/// is fully deterministic (sorted keys, shortest round-trip doubles), so a
/// rerun with the same world, config and seed produces identical bytes.
/// Wall-clock timings deliberately stay out of the log; they live in the
/// CSV exports instead.
void write_log(const sim::ExplorationLog& log, const std::filesystem::path& path);
sim::ExplorationLog read_log(const std::filesystem::path& path);

}  // namespace frontiers
