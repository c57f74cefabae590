#pragma once

#include <filesystem>
#include <string>

#include "blendsim/engine.hpp"
#include "blendsim/uncertainty.hpp"

namespace blendsim {

struct RunManifest {
    std::string config_hash;
    std::uint64_t seed = 0;
    int n_runs = 0;  // 0 for a point run
    std::string mode_flags;
    std::string rng_id;
    std::string tool_version;
    std::string timestamp;  // ISO 8601 UTC; the only non-deterministic field
};

RunManifest make_manifest(const std::string& config_hash, std::uint64_t seed, int n_runs,
                          const std::string& mode_flags);

/// One CSV per output table (shares, volumes, supply, carbon, economics).
void write_result_tables(const ScenarioResult& result, const std::filesystem::path& out_dir);

/// Band CSVs, one per table, columns `<series>_p<percentile>`.
void write_mc_tables(const McReport& report, const std::filesystem::path& out_dir);

void write_manifest(const RunManifest& manifest, const std::filesystem::path& out_dir);

}  // namespace blendsim
