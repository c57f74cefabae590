#include "blendsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blendsim/csv_io.hpp"

namespace blendsim {

namespace {

[[noreturn]] void rethrow_with_context(const Error& e, int year, const char* step) {
    std::ostringstream os;
    os << "year " << year << ", step " << step << ": " << e.what();
    throw EngineError(os.str());
}

/// Demand in million gallons for every horizon year. Forecast-driven demand
/// uses historical values where the source covers the year and model
/// forecasts beyond it.
std::vector<double> demand_over_horizon(const Scenario& scenario,
                                        std::vector<std::string>& warnings) {
    const int years = scenario.end_year - scenario.start_year + 1;
    std::vector<double> demand(static_cast<std::size_t>(years));
    if (scenario.demand.kind == DemandSpec::Kind::constant) {
        std::fill(demand.begin(), demand.end(), scenario.demand.constant_mgal);
        return demand;
    }

    const auto raw = load_series(scenario.demand.csv_path, scenario.demand.csv_unit);
    const auto history = raw.converted_to(Unit::million_gallons);
    scenario.demand.seasonal.validate();
    const auto model = fit_arima(history, scenario.demand.order);
    if (!model.converged) {
        warnings.push_back("demand model estimation hit the iteration cap before converging");
    }
    if (!model.stationary) {
        warnings.push_back("fitted demand model has an AR root inside the unit circle");
    }
    const int horizon = scenario.end_year - history.end_year();
    std::vector<double> forecast_values;
    int forecast_start = 0;
    if (horizon >= 1) {
        const auto fc = forecast(model, history, horizon);
        forecast_values = fc.mean.values();
        forecast_start = fc.mean.start_year();
    }
    for (int year = scenario.start_year; year <= scenario.end_year; ++year) {
        double v = 0.0;
        if (history.covers(year)) {
            v = history.at(year);
        } else if (year > history.end_year()) {
            v = forecast_values[static_cast<std::size_t>(year - forecast_start)];
        } else {
            std::ostringstream os;
            os << "demand history starts " << history.start_year() << ", after horizon year "
               << year;
            throw YearOutOfRangeError(os.str());
        }
        demand[static_cast<std::size_t>(year - scenario.start_year)] = v;
    }
    return demand;
}

}  // namespace

ScenarioResult run_scenario(const Scenario& scenario) {
    {
        const auto issues = scenario.validate();
        if (!issues.empty()) {
            throw ConfigError("invalid scenario: " + issues.front());
        }
    }

    ScenarioResult result;
    result.start_year = scenario.start_year;
    result.end_year = scenario.end_year;
    const std::size_t n_years =
        static_cast<std::size_t>(scenario.end_year - scenario.start_year + 1);

    std::vector<double> demand;
    try {
        demand = demand_over_horizon(scenario, result.warnings);
    } catch (const EngineError&) {
        throw;
    } catch (const Error& e) {
        rethrow_with_context(e, scenario.start_year, "demand");
    }

    ShareTable shares;
    try {
        shares = build_share_table(scenario.resolve_curves(), scenario.adoption.remainder,
                                   scenario.start_year, scenario.end_year,
                                   scenario.adoption.mode);
    } catch (const Error& e) {
        rethrow_with_context(e, scenario.start_year, "adoption");
    }
    for (int year : shares.rescaled_years) {
        std::ostringstream os;
        os << "year " << year << ": modeled shares exceeded the budget and were rescaled to 0.99";
        result.warnings.push_back(os.str());
    }

    result.pathway_order = shares.pathways;
    for (const auto& p : scenario.pathways) {
        if (!shares.has(p.id)) {
            result.pathway_order.push_back(p.id);
        }
    }
    for (const auto& p : scenario.pathways) {
        result.share[p.id].resize(n_years, 0.0);
        if (p.is_liquid) {
            result.volume_mgal[p.id].resize(n_years, 0.0);
            result.blend_ci[p.id].resize(n_years, 0.0);
        }
    }
    auto resize_all = [&](std::vector<double>& v) { v.resize(n_years, 0.0); };
    resize_all(result.total_demand_mgal);
    resize_all(result.liquid_pool_mgal);
    resize_all(result.ethanol_demand_mgal);
    resize_all(result.msw_supply_mgal);
    resize_all(result.corn_import_mgal);
    resize_all(result.msw_ethanol_ci);
    resize_all(result.ethanol_pool_ci);
    resize_all(result.fleet_emissions_t);
    resize_all(result.baseline_emissions_t);
    resize_all(result.emissions_avoided_t);
    resize_all(result.investor_revenue_usd);
    resize_all(result.jobs);
    resize_all(result.jobs_rounded);
    resize_all(result.indirect_impact_usd);
    resize_all(result.consumer_cost_usd);

    const double lhv_e10 = blend_lhv(0.10, scenario.carbon.lhv_gasoline,
                                     scenario.carbon.lhv_ethanol);

    // Blend CI for a given ethanol volume fraction and MSW share of the
    // ethanol pool, under the scenario's carbon mode.
    auto blend_ci_for = [&](PathwayId id, double ethanol_frac, double w_msw,
                            double pool_ci) {
        if (ethanol_frac == 0.0) {
            return scenario.carbon_mode == CarbonMode::replication
                       ? scenario.ci_lookup.at(PathwayId::GASOLINE, Feedstock::fossil)
                       : scenario.carbon.ci_gasoline;
        }
        if (scenario.carbon_mode == CarbonMode::replication) {
            return w_msw * scenario.ci_lookup.at(id, Feedstock::msw) +
                   (1.0 - w_msw) * scenario.ci_lookup.at(id, Feedstock::corn);
        }
        return blend_ci_energy(scenario.carbon.ci_gasoline, pool_ci, ethanol_frac,
                               scenario.carbon.lhv_gasoline, scenario.carbon.lhv_ethanol);
    };

    for (std::size_t idx = 0; idx < n_years; ++idx) {
        const int year = scenario.start_year + static_cast<int>(idx);
        const double total = demand[idx];
        result.total_demand_mgal[idx] = total;

        // Shares and volumes. EV/H2 shrink the liquid pool; liquid shares
        // put gallons against the same total market. Pathways without a
        // modeled curve (and not the remainder) hold no share.
        double non_liquid_share = 0.0;
        for (const auto& p : scenario.pathways) {
            const double s = shares.has(p.id) ? shares.share(year, p.id) : 0.0;
            result.share[p.id][idx] = s;
            if (!p.is_liquid) {
                non_liquid_share += s;
            }
        }
        result.liquid_pool_mgal[idx] = total * (1.0 - non_liquid_share);

        double ethanol_demand = 0.0;
        for (const auto& p : scenario.pathways) {
            if (!p.is_liquid) continue;
            const double volume = total * result.share[p.id][idx];
            result.volume_mgal[p.id][idx] = volume;
            ethanol_demand += volume * p.ethanol_vol_frac;
        }
        result.ethanol_demand_mgal[idx] = ethanol_demand;

        // Local MSW supply first, corn imports cover the rest.
        double msw = 0.0;
        double corn = 0.0;
        try {
            msw = std::min(capacity_at(scenario.feedstock.capacity, year), ethanol_demand);
            corn = ethanol_demand - msw;
        } catch (const Error& e) {
            rethrow_with_context(e, year, "feedstock");
        }
        result.msw_supply_mgal[idx] = msw;
        result.corn_import_mgal[idx] = corn;

        // Carbon intensities.
        double msw_ci = 0.0;
        double pool_ci = 0.0;
        try {
            // Before the decay origin no local production exists (validation
            // pins the capacity ramp after t0), so the starting CI is
            // reported rather than extrapolating backwards.
            msw_ci = year < scenario.carbon.decay.t0 ? scenario.carbon.decay.ci0
                                                     : ci_decay(scenario.carbon.decay, year);
            const double w_msw = ethanol_demand > 0.0 ? msw / ethanol_demand : 0.0;
            pool_ci = w_msw * msw_ci + (1.0 - w_msw) * scenario.carbon.ci_ethanol_corn;
            for (const auto& p : scenario.pathways) {
                if (!p.is_liquid) continue;
                result.blend_ci[p.id][idx] =
                    blend_ci_for(p.id, p.ethanol_vol_frac, w_msw, pool_ci);
            }
        } catch (const Error& e) {
            rethrow_with_context(e, year, "carbon");
        }
        result.msw_ethanol_ci[idx] = msw_ci;
        result.ethanol_pool_ci[idx] = pool_ci;

        // Emissions against the all-E10 baseline. The baseline serves the
        // same total demand entirely with E10 under the same local supply
        // model, so a remainder-only scenario avoids exactly nothing.
        try {
            std::vector<double> volumes, cis, lhvs;
            for (const auto& p : scenario.pathways) {
                if (!p.is_liquid) continue;
                volumes.push_back(result.volume_mgal[p.id][idx]);
                cis.push_back(result.blend_ci[p.id][idx]);
                lhvs.push_back(p.lhv_mj_per_gal);
            }
            result.fleet_emissions_t[idx] = fleet_emissions(volumes, cis, lhvs);

            const PathwaySpec* e10 = scenario.find_pathway(PathwayId::E10);
            const double base_frac = e10 != nullptr ? e10->ethanol_vol_frac : 0.10;
            const double base_lhv = e10 != nullptr ? e10->lhv_mj_per_gal : lhv_e10;
            const double base_ethanol = total * base_frac;
            const double base_msw =
                std::min(capacity_at(scenario.feedstock.capacity, year), base_ethanol);
            const double base_w = base_ethanol > 0.0 ? base_msw / base_ethanol : 0.0;
            const double base_pool =
                base_w * msw_ci + (1.0 - base_w) * scenario.carbon.ci_ethanol_corn;
            const double base_ci =
                blend_ci_for(PathwayId::E10, base_frac, base_w, base_pool);
            result.baseline_emissions_t[idx] =
                fleet_emissions({total}, {base_ci}, {base_lhv});
            result.emissions_avoided_t[idx] =
                result.baseline_emissions_t[idx] - result.fleet_emissions_t[idx];
        } catch (const Error& e) {
            rethrow_with_context(e, year, "emissions");
        }

        // Economics over the MSW/corn split. Jobs and the indirect
        // multiplier follow local production only.
        try {
            const std::map<Feedstock, double> split{{Feedstock::msw, msw},
                                                    {Feedstock::corn, corn}};
            const std::map<Feedstock, double> cis{
                {Feedstock::msw, msw_ci}, {Feedstock::corn, scenario.carbon.ci_ethanol_corn}};
            result.investor_revenue_usd[idx] =
                investor_revenue(year, split, cis, scenario.incentives,
                                 scenario.carbon.ci_gasoline);
            const auto jobs = jobs_created(msw, scenario.econ);
            result.jobs[idx] = jobs.jobs;
            result.jobs_rounded[idx] = static_cast<double>(jobs.rounded);
            result.indirect_impact_usd[idx] = indirect_impact(msw, scenario.econ);

            std::map<PathwayId, double> blend_volumes;
            for (const auto& p : scenario.pathways) {
                if (!p.is_liquid) continue;
                blend_volumes[p.id] = result.volume_mgal[p.id][idx];
            }
            result.consumer_cost_usd[idx] = consumer_fuel_cost(blend_volumes, scenario.prices);
        } catch (const Error& e) {
            rethrow_with_context(e, year, "economics");
        }
    }

    result.mode_flags = describe_mode_flags(scenario);
    if (scenario.mc.has_value()) {
        result.seed = scenario.mc->seed;
    }
    return result;
}

std::string describe_mode_flags(const Scenario& scenario) {
    std::ostringstream mode;
    mode << (scenario.carbon_mode == CarbonMode::replication ? "carbon=replication"
                                                             : "carbon=formula")
         << ",shares=" << (scenario.adoption.mode == ShareMode::strict ? "strict" : "rescale")
         << ",ci_band=" << (scenario.incentives.enforce_ci_band ? "on" : "off") << ",rin="
         << (scenario.incentives.rin_mode == RinMode::replication ? "replication" : "strict");
    return mode.str();
}

double emissions_avoided(const ScenarioResult& result, int year) {
    if (year < result.start_year || year > result.end_year) {
        std::ostringstream os;
        os << "year " << year << " outside result horizon";
        throw YearOutOfRangeError(os.str());
    }
    return result.emissions_avoided_t[static_cast<std::size_t>(year - result.start_year)];
}

std::vector<ReportSeries> result_series(const ScenarioResult& result) {
    std::vector<ReportSeries> out;
    for (const auto& id : result.pathway_order) {
        out.push_back({"shares", std::string(pathway_name(id)), &result.share.at(id)});
    }
    for (const auto& [id, values] : result.volume_mgal) {
        out.push_back({"volumes", std::string(pathway_name(id)), &values});
    }
    out.push_back({"supply", "total_demand_mgal", &result.total_demand_mgal});
    out.push_back({"supply", "liquid_pool_mgal", &result.liquid_pool_mgal});
    out.push_back({"supply", "ethanol_demand_mgal", &result.ethanol_demand_mgal});
    out.push_back({"supply", "msw_supply_mgal", &result.msw_supply_mgal});
    out.push_back({"supply", "corn_import_mgal", &result.corn_import_mgal});
    for (const auto& [id, values] : result.blend_ci) {
        out.push_back({"carbon", "ci_" + std::string(pathway_name(id)), &values});
    }
    out.push_back({"carbon", "msw_ethanol_ci", &result.msw_ethanol_ci});
    out.push_back({"carbon", "ethanol_pool_ci", &result.ethanol_pool_ci});
    out.push_back({"carbon", "fleet_emissions_t", &result.fleet_emissions_t});
    out.push_back({"carbon", "baseline_emissions_t", &result.baseline_emissions_t});
    out.push_back({"carbon", "emissions_avoided_t", &result.emissions_avoided_t});
    out.push_back({"economics", "investor_revenue_usd", &result.investor_revenue_usd});
    out.push_back({"economics", "jobs", &result.jobs});
    out.push_back({"economics", "jobs_rounded", &result.jobs_rounded});
    out.push_back({"economics", "indirect_impact_usd", &result.indirect_impact_usd});
    out.push_back({"economics", "consumer_cost_usd", &result.consumer_cost_usd});
    return out;
}

}  // namespace blendsim
