#include "blendsim/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <map>

#include "json.hpp"

#include "blendsim/csv_io.hpp"
#include "blendsim/rng.hpp"
#include "blendsim/version.hpp"

namespace blendsim {

namespace {

std::string utc_now_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string percentile_suffix(double p) {
    // 5 -> "p5", 2.5 -> "p2.5"
    std::string s = format_double(p);
    return "p" + s;
}

}  // namespace

RunManifest make_manifest(const std::string& config_hash, std::uint64_t seed, int n_runs,
                          const std::string& mode_flags) {
    RunManifest m;
    m.config_hash = config_hash;
    m.seed = seed;
    m.n_runs = n_runs;
    m.mode_flags = mode_flags;
    m.rng_id = rng::kGeneratorId;
    m.tool_version = kVersion;
    m.timestamp = utc_now_iso8601();
    return m;
}

void write_result_tables(const ScenarioResult& result, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    // Group the flat series list back into per-table CSVs, preserving order.
    std::vector<std::string> table_order;
    std::map<std::string, CsvTable> tables;
    for (const auto& s : result_series(result)) {
        auto it = tables.find(s.table);
        if (it == tables.end()) {
            table_order.push_back(s.table);
            it = tables.emplace(s.table, CsvTable{}).first;
            it->second.start_year = result.start_year;
        }
        it->second.columns.push_back(s.column);
        it->second.values.push_back(*s.values);
    }
    for (const auto& name : table_order) {
        save_table(tables.at(name), out_dir / (name + ".csv"));
    }
}

void write_mc_tables(const McReport& report, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> table_order;
    std::map<std::string, CsvTable> tables;
    for (const auto& band : report.bands) {
        auto it = tables.find(band.table);
        if (it == tables.end()) {
            table_order.push_back(band.table);
            it = tables.emplace(band.table, CsvTable{}).first;
            it->second.start_year = report.start_year;
        }
        for (std::size_t p = 0; p < report.percentiles.size(); ++p) {
            it->second.columns.push_back(band.column + "_" +
                                         percentile_suffix(report.percentiles[p]));
            it->second.values.push_back(band.values[p]);
        }
    }
    for (const auto& name : table_order) {
        save_table(tables.at(name), out_dir / ("mc_" + name + ".csv"));
    }
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    nlohmann::json j;
    j["config_hash"] = manifest.config_hash;
    j["seed"] = manifest.seed;
    if (manifest.n_runs > 0) {
        j["n_runs"] = manifest.n_runs;
    }
    j["mode_flags"] = manifest.mode_flags;
    j["rng"] = manifest.rng_id;
    j["tool_version"] = manifest.tool_version;
    j["timestamp"] = manifest.timestamp;
    std::ofstream out(out_dir / "manifest.json");
    if (!out) {
        throw MissingDataError("cannot write manifest in " + out_dir.string());
    }
    out << j.dump(2) << "\n";
}

}  // namespace blendsim
