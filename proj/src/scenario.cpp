#include "blendsim/scenario.hpp"

#include <algorithm>
#include <sstream>

namespace blendsim {

const PathwaySpec* Scenario::find_pathway(PathwayId id) const {
    for (const auto& p : pathways) {
        if (p.id == id) {
            return &p;
        }
    }
    return nullptr;
}

std::vector<PathwaySpec> default_pathways(const CarbonParams& carbon) {
    auto liquid = [&](PathwayId id, double frac) {
        PathwaySpec p;
        p.id = id;
        p.ethanol_vol_frac = frac;
        p.lhv_mj_per_gal = blend_lhv(frac, carbon.lhv_gasoline, carbon.lhv_ethanol);
        p.is_liquid = true;
        return p;
    };
    auto non_liquid = [](PathwayId id) {
        PathwaySpec p;
        p.id = id;
        p.ethanol_vol_frac = 0.0;
        p.lhv_mj_per_gal = 0.0;
        p.is_liquid = false;
        return p;
    };
    return {liquid(PathwayId::GASOLINE, 0.0), liquid(PathwayId::E10, 0.10),
            liquid(PathwayId::E15, 0.15),     liquid(PathwayId::E30, 0.30),
            liquid(PathwayId::E85, 0.85),     non_liquid(PathwayId::EV),
            non_liquid(PathwayId::H2)};
}

std::vector<std::string> Scenario::validate() const {
    std::vector<std::string> issues;
    auto issue = [&](const std::string& field, const std::string& msg) {
        issues.push_back(field + ": " + msg);
    };

    if (start_year > end_year) {
        std::ostringstream os;
        os << "start_year " << start_year << " is after end_year " << end_year;
        issue("horizon", os.str());
    }

    if (demand.kind == DemandSpec::Kind::constant) {
        if (demand.constant_mgal < 0.0) {
            issue("demand.constant_mgal", "must be non-negative");
        }
    } else {
        if (demand.csv_path.empty()) {
            issue("demand.forecast.csv", "path is required for forecast-driven demand");
        }
        try {
            demand.order.validate();
        } catch (const Error& e) {
            issue("demand.forecast.order", e.what());
        }
        try {
            demand.seasonal.validate();
        } catch (const Error& e) {
            issue("demand.forecast.seasonal", e.what());
        }
    }

    if (pathways.empty()) {
        issue("pathways", "at least one pathway is required");
    }
    for (const auto& p : pathways) {
        try {
            p.validate();
        } catch (const Error& e) {
            issue(std::string("pathways.") + std::string(pathway_name(p.id)), e.what());
        }
    }

    const PathwaySpec* remainder = find_pathway(adoption.remainder);
    if (remainder == nullptr) {
        issue("adoption.remainder",
              std::string(pathway_name(adoption.remainder)) + " is not among the pathways");
    }
    if (adoption.curves.contains(adoption.remainder)) {
        issue("adoption.curves", "the remainder pathway must not carry a curve");
    }
    if (adoption.share_floor <= 0.0 || adoption.share_floor >= 1.0) {
        issue("adoption.share_floor", "must lie in (0, 1)");
    }
    for (const auto& [id, curve] : adoption.curves) {
        const std::string field = std::string("adoption.curves.") + std::string(pathway_name(id));
        if (find_pathway(id) == nullptr) {
            issue(field, "pathway is not declared");
        }
        if (curve.params.has_value()) {
            try {
                curve.params->validate();
            } catch (const Error& e) {
                issue(field, e.what());
            }
        } else if (curve.anchors.size() < 2) {
            issue(field, "needs explicit params or at least two anchors");
        }
        if (curve.ceiling.has_value() && (!(*curve.ceiling > 0.0) || *curve.ceiling > 1.0)) {
            std::ostringstream os;
            os << "ceiling " << *curve.ceiling << " outside (0, 1]";
            issue(field + ".ceiling", os.str());
        }
        for (const auto& [year, share] : curve.anchors) {
            if (share <= 0.0 || share >= 1.0) {
                std::ostringstream os;
                os << "anchor share " << share << " at year " << year << " outside (0, 1)";
                issue(field + ".anchors", os.str());
            }
        }
    }

    try {
        carbon.validate();
    } catch (const Error& e) {
        issue("carbon", e.what());
    }
    try {
        ci_lookup.validate();
    } catch (const Error& e) {
        issue("carbon.lookup", e.what());
    }
    try {
        feedstock.profile.validate();
    } catch (const Error& e) {
        issue("feedstock.profile", e.what());
    }
    try {
        feedstock.capacity.validate();
    } catch (const Error& e) {
        issue("feedstock.capacity", e.what());
    }
    if (feedstock.capacity.start_year < carbon.decay.t0) {
        std::ostringstream os;
        os << "local production cannot start in " << feedstock.capacity.start_year
           << ", before the CI trajectory origin " << carbon.decay.t0;
        issue("feedstock.capacity.start_year", os.str());
    }
    if (feedstock.yield_point < 0.0 || feedstock.yield_point > 1.0) {
        issue("feedstock.yield_point", "must lie in [0, 1]");
    }
    try {
        incentives.validate();
    } catch (const Error& e) {
        issue("incentives", e.what());
    }
    try {
        econ.validate();
    } catch (const Error& e) {
        issue("economics", e.what());
    }
    try {
        prices.validate();
    } catch (const Error& e) {
        issue("economics.prices", e.what());
    }

    if (mc.has_value()) {
        if (mc->n_runs < 1) {
            issue("mc.n_runs", "must be at least 1");
        }
        double prev = 0.0;
        for (double p : mc->percentiles) {
            if (p <= 0.0 || p >= 100.0 || p <= prev) {
                issue("mc.percentiles", "must be strictly increasing inside (0, 100)");
                break;
            }
            prev = p;
        }
        for (std::size_t i = 0; i < mc->distributions.size(); ++i) {
            if (mc->distributions[i].spread < 0.0) {
                std::ostringstream os;
                os << "mc.distributions[" << i << "].spread";
                issue(os.str(), "must be non-negative");
            }
        }
    }

    return issues;
}

std::map<PathwayId, LogisticParams> Scenario::resolve_curves() const {
    std::map<PathwayId, LogisticParams> out;
    for (const auto& [id, curve] : adoption.curves) {
        if (curve.params.has_value()) {
            out[id] = *curve.params;
            continue;
        }
        double ceiling;
        if (curve.ceiling.has_value()) {
            ceiling = *curve.ceiling;
        } else {
            // Anchors are points the curve passes through, not ceilings;
            // leave 12% headroom above the latest one.
            const auto latest = std::max_element(
                curve.anchors.begin(), curve.anchors.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
            ceiling = std::min(1.0, latest->second * 1.12);
        }
        std::vector<std::pair<double, double>> points = curve.anchors;
        for (auto& [year, share] : points) {
            share = std::max(share, adoption.share_floor);
        }
        out[id] = calibrate_logistic(points, ceiling).params;
    }
    return out;
}

}  // namespace blendsim
