#pragma once

#include <string>
#include <string_view>

#include "blendsim/errors.hpp"

namespace blendsim {

enum class PathwayId { GASOLINE, E10, E15, E30, E85, EV, H2 };

constexpr std::string_view pathway_name(PathwayId id) {
    switch (id) {
        case PathwayId::GASOLINE: return "GASOLINE";
        case PathwayId::E10: return "E10";
        case PathwayId::E15: return "E15";
        case PathwayId::E30: return "E30";
        case PathwayId::E85: return "E85";
        case PathwayId::EV: return "EV";
        case PathwayId::H2: return "H2";
    }
    return "?";
}

PathwayId parse_pathway(std::string_view name);

/// One fuel pathway competing for market share. Liquid pathways carry an
/// ethanol volume fraction and an energy density; EV/H2 have neither.
struct PathwaySpec {
    PathwayId id = PathwayId::GASOLINE;
    double ethanol_vol_frac = 0.0;   // in [0,1]; 0 for GASOLINE/EV/H2
    double lhv_mj_per_gal = 0.0;     // > 0 for liquid pathways
    bool is_liquid = true;

    void validate() const;
};

/// Blend energy density from the component densities.
inline double blend_lhv(double ethanol_vol_frac, double lhv_gasoline, double lhv_ethanol) {
    return ethanol_vol_frac * lhv_ethanol + (1.0 - ethanol_vol_frac) * lhv_gasoline;
}

}  // namespace blendsim
