#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blendsim/adoption.hpp"
#include "blendsim/carbon.hpp"
#include "blendsim/economics.hpp"
#include "blendsim/feedstock.hpp"
#include "blendsim/forecast.hpp"

namespace blendsim {

struct DemandSpec {
    enum class Kind { constant, forecast };
    Kind kind = Kind::constant;
    double constant_mgal = 4200.0;
    // forecast-driven demand
    std::string csv_path;
    Unit csv_unit = Unit::billion_gallons;
    ArimaOrder order{1, 1, 0};
    SeasonalOrder seasonal{};
};

/// Adoption curve input: either explicit logistic parameters or anchor
/// points to calibrate through. Anchor shares below `floor` are lifted to it
/// before the logit transform; a missing ceiling defaults to 1.12x the last
/// anchor's share.
struct AdoptionCurveSpec {
    std::optional<LogisticParams> params;
    std::vector<std::pair<double, double>> anchors;  // (year, share)
    std::optional<double> ceiling;
};

struct AdoptionSpec {
    ShareMode mode = ShareMode::rescale;
    PathwayId remainder = PathwayId::E10;
    double share_floor = 0.005;
    std::map<PathwayId, AdoptionCurveSpec> curves;
};

enum class CarbonMode { replication, formula };

struct FeedstockSpec {
    MswProfile profile;
    CapacityRamp capacity;
    double yield_point = 0.5;
};

struct DistSpec {
    std::string target;  // dotted path into the scenario, e.g. incentives.d5_usd_per_gal
    enum class Kind { uniform_rel, uniform_abs, normal } kind = Kind::uniform_rel;
    double spread = 0.0;
};

struct McSpec {
    int n_runs = 1000;
    std::uint64_t seed = 0;
    std::vector<DistSpec> distributions;
    std::vector<double> percentiles{5.0, 50.0, 95.0};
};

/// Full declarative input for one run.
struct Scenario {
    int start_year = 2024;
    int end_year = 2035;
    DemandSpec demand;
    std::vector<PathwaySpec> pathways;
    AdoptionSpec adoption;
    CarbonMode carbon_mode = CarbonMode::replication;
    CarbonParams carbon;
    CiLookup ci_lookup;
    FeedstockSpec feedstock;
    IncentiveSchedule incentives;
    EconCoefficients econ;
    BlendPriceTable prices;
    std::optional<McSpec> mc;

    const PathwaySpec* find_pathway(PathwayId id) const;

    /// Semantic diagnostics, `field: message` per entry; empty means valid.
    std::vector<std::string> validate() const;

    /// Logistic parameters per modeled pathway, calibrating anchor-specified
    /// curves. Throws on calibration failure.
    std::map<PathwayId, LogisticParams> resolve_curves() const;
};

/// The standard seven pathways with derived blend energy densities.
std::vector<PathwaySpec> default_pathways(const CarbonParams& carbon);

}  // namespace blendsim
