#include "blendsim/uncertainty.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "blendsim/rng.hpp"

namespace blendsim {

namespace rng {

double standard_normal(DrawKey key) {
    for (std::uint64_t j = 0;; ++j) {
        key.sub = 2 * j;
        double u1 = uniform01(key);
        key.sub = 2 * j + 1;
        const double u2 = uniform01(key);
        if (u1 <= 0.0) {
            u1 = 0x1.0p-53;
        }
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
        if (std::abs(z) <= 4.0) {
            return z;
        }
    }
}

}  // namespace rng

double* resolve_target(Scenario& scenario, const std::string& path) {
    auto fail = [&]() -> double* {
        throw UnresolvedTargetError("no numeric scenario field at '" + path + "'");
    };

    if (path == "demand.constant_mgal") return &scenario.demand.constant_mgal;
    if (path == "incentives.d6_usd_per_gal") return &scenario.incentives.d6_usd_per_gal;
    if (path == "incentives.d5_usd_per_gal") return &scenario.incentives.d5_usd_per_gal;
    if (path == "incentives.cfpc45v_usd_per_gal") return &scenario.incentives.cfpc45v_usd_per_gal;
    if (path == "economics.jobs_per_million_gal") return &scenario.econ.jobs_per_million_gal;
    if (path == "economics.indirect_usd_per_gal") return &scenario.econ.indirect_usd_per_gal;
    if (path == "carbon.ci_gasoline") return &scenario.carbon.ci_gasoline;
    if (path == "carbon.ci_ethanol_corn") return &scenario.carbon.ci_ethanol_corn;
    if (path == "carbon.lhv_gasoline") return &scenario.carbon.lhv_gasoline;
    if (path == "carbon.lhv_ethanol") return &scenario.carbon.lhv_ethanol;
    if (path == "carbon.decay.ci0") return &scenario.carbon.decay.ci0;
    if (path == "carbon.decay.ci_inf") return &scenario.carbon.decay.ci_inf;
    if (path == "carbon.decay.lambda") return &scenario.carbon.decay.lambda;
    if (path == "feedstock.total_tons_per_year")
        return &scenario.feedstock.profile.total_tons_per_year;
    if (path == "feedstock.moisture_factor") return &scenario.feedstock.profile.moisture_factor;
    if (path == "feedstock.yield_point") return &scenario.feedstock.yield_point;
    if (path == "feedstock.capacity.start_capacity_mgal")
        return &scenario.feedstock.capacity.start_capacity_mgal;
    if (path == "feedstock.capacity.end_capacity_mgal")
        return &scenario.feedstock.capacity.end_capacity_mgal;

    constexpr std::string_view prices_prefix = "economics.prices.";
    if (path.starts_with(prices_prefix)) {
        PathwayId blend;
        try {
            blend = parse_pathway(path.substr(prices_prefix.size()));
        } catch (const Error&) {
            return fail();
        }
        double* slot = scenario.prices.entry(blend);
        if (slot == nullptr) {
            return fail();
        }
        return slot;
    }

    constexpr std::string_view adoption_prefix = "adoption.curves.";
    if (path.starts_with(adoption_prefix)) {
        const auto rest = path.substr(adoption_prefix.size());
        const auto dot = rest.find('.');
        if (dot == std::string::npos) {
            return fail();
        }
        PathwayId id;
        try {
            id = parse_pathway(rest.substr(0, dot));
        } catch (const Error&) {
            return fail();
        }
        const auto field = rest.substr(dot + 1);
        auto it = scenario.adoption.curves.find(id);
        if (it == scenario.adoption.curves.end() || !it->second.params.has_value()) {
            throw UnresolvedTargetError("curve '" + path +
                                        "' has no explicit logistic parameters to perturb");
        }
        if (field == "L") return &it->second.params->ceiling;
        if (field == "k") return &it->second.params->rate;
        if (field == "t0") return &it->second.params->midpoint_year;
        return fail();
    }

    return fail();
}

namespace {

double draw_value(double base, const DistSpec& dist, const rng::DrawKey& key) {
    switch (dist.kind) {
        case DistSpec::Kind::uniform_rel:
            return base * (1.0 + dist.spread * (2.0 * rng::uniform01(key) - 1.0));
        case DistSpec::Kind::uniform_abs:
            return base + dist.spread * (2.0 * rng::uniform01(key) - 1.0);
        case DistSpec::Kind::normal:
            return base + dist.spread * rng::standard_normal(key);
    }
    return base;
}

}  // namespace

Scenario sample_scenario(const Scenario& base, const McSpec& spec, std::uint64_t run_index) {
    // Resolve against a scratch copy first so an unknown path fails fast.
    Scenario scenario = base;
    std::vector<double> base_values(spec.distributions.size());
    for (std::size_t d = 0; d < spec.distributions.size(); ++d) {
        base_values[d] = *resolve_target(scenario, spec.distributions[d].target);
    }

    for (std::size_t d = 0; d < spec.distributions.size(); ++d) {
        const auto& dist = spec.distributions[d];
        double* slot = resolve_target(scenario, dist.target);
        bool placed = false;
        for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
            const rng::DrawKey key{spec.seed, run_index, static_cast<std::uint64_t>(d), attempt,
                                   0};
            const double candidate = draw_value(base_values[d], dist, key);
            const double saved = *slot;
            *slot = candidate;
            if (scenario.validate().empty()) {
                placed = true;
                break;
            }
            *slot = saved;
        }
        if (!placed) {
            throw InvariantViolationError("100 draws for '" + dist.target +
                                          "' all violated a scenario invariant");
        }
    }
    return scenario;
}

double quantile(std::vector<double> values, double percentile) {
    if (values.empty()) {
        throw MissingDataError("quantile of an empty sample");
    }
    std::sort(values.begin(), values.end());
    const double pos = percentile / 100.0 * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

McReport run_mc(const Scenario& base, const McSpec& spec, int jobs) {
    {
        const auto issues = base.validate();
        if (!issues.empty()) {
            throw ConfigError("invalid scenario: " + issues.front());
        }
    }

    const int n_runs = spec.n_runs;
    std::vector<ScenarioResult> results(static_cast<std::size_t>(n_runs));
    std::vector<std::string> failures(static_cast<std::size_t>(n_runs));

    const int worker_count = std::max(1, jobs);
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            const int run = next.fetch_add(1);
            if (run >= n_runs) {
                return;
            }
            try {
                const auto scenario =
                    sample_scenario(base, spec, static_cast<std::uint64_t>(run));
                results[static_cast<std::size_t>(run)] = run_scenario(scenario);
            } catch (const std::exception& e) {
                failures[static_cast<std::size_t>(run)] = e.what();
            }
        }
    };
    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int i = 0; i < worker_count; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (int run = 0; run < n_runs; ++run) {
        if (!failures[static_cast<std::size_t>(run)].empty()) {
            throw McRunError(static_cast<std::uint64_t>(run),
                             failures[static_cast<std::size_t>(run)]);
        }
    }

    McReport report;
    report.start_year = base.start_year;
    report.end_year = base.end_year;
    report.percentiles = spec.percentiles;
    report.seed = spec.seed;
    report.n_runs = n_runs;

    std::vector<std::vector<ReportSeries>> flattened;
    flattened.reserve(static_cast<std::size_t>(n_runs));
    for (const auto& r : results) {
        flattened.push_back(result_series(r));
    }
    const auto& layout = flattened[0];
    const std::size_t n_years = results[0].years();
    for (std::size_t s = 0; s < layout.size(); ++s) {
        McBand band;
        band.table = layout[s].table;
        band.column = layout[s].column;
        band.values.assign(spec.percentiles.size(), std::vector<double>(n_years, 0.0));
        std::vector<double> sample(static_cast<std::size_t>(n_runs));
        for (std::size_t y = 0; y < n_years; ++y) {
            for (int run = 0; run < n_runs; ++run) {
                sample[static_cast<std::size_t>(run)] =
                    (*flattened[static_cast<std::size_t>(run)][s].values)[y];
            }
            for (std::size_t p = 0; p < spec.percentiles.size(); ++p) {
                band.values[p][y] = quantile(sample, spec.percentiles[p]);
            }
        }
        report.bands.push_back(std::move(band));
    }
    return report;
}

}  // namespace blendsim
