#include "blendsim/presets.hpp"

namespace blendsim {

namespace {

// Replication baseline: published CI table, rescaled shares, 45V band not
// enforced.
constexpr const char* kPaperDefault = R"json({
  "horizon": {"start_year": 2024, "end_year": 2035},
  "demand": {"kind": "constant", "constant_mgal": 4200.0},
  "adoption": {
    "mode": "rescale",
    "remainder": "E10",
    "share_floor": 0.005,
    "curves": {
      "E15": {"anchors": [[2023, 0.01], [2035, 0.25]]},
      "E30": {"anchors": [[2023, 0.005], [2035, 0.18]]},
      "E85": {"anchors": [[2023, 0.005], [2035, 0.15]]},
      "EV": {"anchors": [[2023, 0.06], [2035, 0.35]]},
      "H2": {"anchors": [[2023, 0.002], [2035, 0.08]]}
    }
  },
  "carbon": {
    "mode": "replication",
    "ci_gasoline": 92.0,
    "ci_ethanol_corn": 58.3,
    "lhv_gasoline": 122.5,
    "lhv_ethanol": 80.5,
    "decay": {"ci0": 58.3, "ci_inf": 40.0, "t0": 2024, "anchor": [2035, 45.0]}
  },
  "feedstock": {
    "profile": "nyc-2024",
    "yield_point": 0.5,
    "capacity": {
      "start_year": 2028,
      "start_capacity_mgal": 200.0,
      "end_year": 2035,
      "end_capacity_mgal": 300.0
    }
  },
  "incentives": {
    "d6_usd_per_gal": 0.56,
    "d5_usd_per_gal": 0.75,
    "cfpc45v_usd_per_gal": 0.75,
    "ci_band_45v": [25.0, 50.0],
    "enforce_ci_band": false,
    "local_start_year": 2028,
    "rin_mode": "replication"
  },
  "economics": {
    "jobs_per_million_gal": 15.0,
    "indirect_usd_per_gal": 1.5,
    "prices": {"GASOLINE": 3.5, "E10": 3.45, "E15": 3.4, "E30": 3.3, "E85": 2.9}
  },
  "mc": {
    "n_runs": 1000,
    "seed": 42,
    "percentiles": [5, 50, 95],
    "distributions": [
      {"target": "incentives.d6_usd_per_gal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "incentives.d5_usd_per_gal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "incentives.cfpc45v_usd_per_gal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "demand.constant_mgal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "feedstock.capacity.start_capacity_mgal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "feedstock.capacity.end_capacity_mgal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "carbon.decay.ci0", "kind": "uniform_rel", "spread": 0.1},
      {"target": "carbon.decay.ci_inf", "kind": "uniform_rel", "spread": 0.1},
      {"target": "carbon.decay.lambda", "kind": "uniform_rel", "spread": 0.1}
    ]
  }
})json";

// Policy-faithful variant: formula CI, enforced 45V band, strict share
// budget. The published 2035 anchors sum to 1.01, which strict mode rejects,
// so the EV anchor is lowered to 0.33 to keep the preset runnable.
constexpr const char* kStrict = R"json({
  "horizon": {"start_year": 2024, "end_year": 2035},
  "demand": {"kind": "constant", "constant_mgal": 4200.0},
  "adoption": {
    "mode": "strict",
    "remainder": "E10",
    "share_floor": 0.005,
    "curves": {
      "E15": {"anchors": [[2023, 0.01], [2035, 0.25]]},
      "E30": {"anchors": [[2023, 0.005], [2035, 0.18]]},
      "E85": {"anchors": [[2023, 0.005], [2035, 0.15]]},
      "EV": {"anchors": [[2023, 0.06], [2035, 0.33]]},
      "H2": {"anchors": [[2023, 0.002], [2035, 0.08]]}
    }
  },
  "carbon": {
    "mode": "formula",
    "ci_gasoline": 92.0,
    "ci_ethanol_corn": 58.3,
    "lhv_gasoline": 122.5,
    "lhv_ethanol": 80.5,
    "decay": {"ci0": 58.3, "ci_inf": 40.0, "t0": 2024, "anchor": [2035, 45.0]}
  },
  "feedstock": {
    "profile": "nyc-2024",
    "yield_point": 0.5,
    "capacity": {
      "start_year": 2028,
      "start_capacity_mgal": 200.0,
      "end_year": 2035,
      "end_capacity_mgal": 300.0
    }
  },
  "incentives": {
    "d6_usd_per_gal": 0.56,
    "d5_usd_per_gal": 0.75,
    "cfpc45v_usd_per_gal": 0.75,
    "ci_band_45v": [25.0, 50.0],
    "enforce_ci_band": true,
    "local_start_year": 2028,
    "rin_mode": "replication"
  },
  "economics": {
    "jobs_per_million_gal": 15.0,
    "indirect_usd_per_gal": 1.5,
    "prices": {"GASOLINE": 3.5, "E10": 3.45, "E15": 3.4, "E30": 3.3, "E85": 2.9}
  },
  "mc": {
    "n_runs": 1000,
    "seed": 42,
    "percentiles": [5, 50, 95],
    "distributions": [
      {"target": "incentives.d6_usd_per_gal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "incentives.d5_usd_per_gal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "incentives.cfpc45v_usd_per_gal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "demand.constant_mgal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "feedstock.capacity.start_capacity_mgal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "feedstock.capacity.end_capacity_mgal", "kind": "uniform_rel", "spread": 0.05},
      {"target": "carbon.decay.ci0", "kind": "uniform_rel", "spread": 0.1},
      {"target": "carbon.decay.ci_inf", "kind": "uniform_rel", "spread": 0.1},
      {"target": "carbon.decay.lambda", "kind": "uniform_rel", "spread": 0.1}
    ]
  }
})json";

}  // namespace

std::vector<std::string> preset_names() { return {"paper-default", "strict"}; }

std::optional<std::string> preset_text(const std::string& name) {
    if (name == "paper-default") {
        return std::string(kPaperDefault);
    }
    if (name == "strict") {
        return std::string(kStrict);
    }
    return std::nullopt;
}

bool is_builtin_msw_profile(const std::string& name) { return name == "nyc-2024"; }

MswProfile builtin_msw_profile(const std::string& name) {
    if (name != "nyc-2024") {
        throw UnknownComponentError("no built-in MSW profile named '" + name + "'");
    }
    MswProfile profile;
    profile.total_tons_per_year = 14e6;
    profile.moisture_factor = 1.0;
    profile.components = {
        {"paper_and_cardboard", 0.27, 70.0, 85.0, Suitability::high},
        {"food_waste", 0.23, 75.0, 90.0, Suitability::high},
        {"yard_trimmings", 0.07, 65.0, 80.0, Suitability::moderate},
        {"wood_residues", 0.05, 60.0, 75.0, Suitability::moderate},
        {"textiles_rubber_leather", 0.06, 40.0, 60.0, Suitability::low},
    };
    return profile;
}

}  // namespace blendsim
