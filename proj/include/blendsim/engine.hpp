#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "blendsim/scenario.hpp"

namespace blendsim {

/// Engine failure with the year and pipeline step attached.
class EngineError : public Error {
public:
    using Error::Error;
};

/// Per-year output tables of one run. Column vectors are indexed by
/// year - start_year.
struct ScenarioResult {
    int start_year = 0;
    int end_year = 0;

    std::vector<PathwayId> pathway_order;            // share table order
    std::map<PathwayId, std::vector<double>> share;  // all pathways
    std::map<PathwayId, std::vector<double>> volume_mgal;  // liquid pathways
    std::map<PathwayId, std::vector<double>> blend_ci;     // liquid pathways

    std::vector<double> total_demand_mgal;
    std::vector<double> liquid_pool_mgal;
    std::vector<double> ethanol_demand_mgal;
    std::vector<double> msw_supply_mgal;
    std::vector<double> corn_import_mgal;
    std::vector<double> msw_ethanol_ci;    // pure-ethanol basis, the decay path
    std::vector<double> ethanol_pool_ci;   // gallon-weighted MSW/corn mix
    std::vector<double> fleet_emissions_t;
    std::vector<double> baseline_emissions_t;
    std::vector<double> emissions_avoided_t;
    std::vector<double> investor_revenue_usd;
    std::vector<double> jobs;
    std::vector<double> jobs_rounded;
    std::vector<double> indirect_impact_usd;
    std::vector<double> consumer_cost_usd;

    std::vector<std::string> warnings;

    // run metadata
    std::string config_hash;
    std::uint64_t seed = 0;
    std::string mode_flags;

    std::size_t years() const { return total_demand_mgal.size(); }
    int year_at(std::size_t idx) const { return start_year + static_cast<int>(idx); }
};

/// Execute the full pipeline: demand, shares, volumes, ethanol split,
/// carbon, emissions, economics. Deterministic for identical input.
ScenarioResult run_scenario(const Scenario& scenario);

/// Compact "carbon=...,shares=...,ci_band=...,rin=..." description recorded
/// in results and manifests.
std::string describe_mode_flags(const Scenario& scenario);

/// Baseline-minus-scenario emissions for one year; the baseline serves the
/// same total demand entirely with E10 at its published CI.
double emissions_avoided(const ScenarioResult& result, int year);

/// Flat list of every reported annual series as (table, column, values),
/// shared by the CSV reports and the Monte Carlo collector.
struct ReportSeries {
    std::string table;
    std::string column;
    const std::vector<double>* values;
};
std::vector<ReportSeries> result_series(const ScenarioResult& result);

}  // namespace blendsim
