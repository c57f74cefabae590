#pragma once

#include <string>
#include <string_view>

#include "blendsim/errors.hpp"

namespace blendsim {

enum class Unit {
    million_gallons,
    billion_gallons,
    share_fraction,
    gco2e_per_mj,
    usd,
    usd_per_gallon,
    jobs,
    tonnes_co2e,
};

constexpr std::string_view unit_name(Unit u) {
    switch (u) {
        case Unit::million_gallons: return "million_gallons";
        case Unit::billion_gallons: return "billion_gallons";
        case Unit::share_fraction: return "share_fraction";
        case Unit::gco2e_per_mj: return "gco2e_per_mj";
        case Unit::usd: return "usd";
        case Unit::usd_per_gallon: return "usd_per_gallon";
        case Unit::jobs: return "jobs";
        case Unit::tonnes_co2e: return "tonnes_co2e";
    }
    return "?";
}

Unit parse_unit(std::string_view name);

/// Shares are bounded to [0,1]; volumes, carbon intensities and job counts
/// cannot be negative. Currency and CO2e balances may be signed.
constexpr bool unit_requires_nonnegative(Unit u) {
    switch (u) {
        case Unit::million_gallons:
        case Unit::billion_gallons:
        case Unit::share_fraction:
        case Unit::gco2e_per_mj:
        case Unit::jobs:
            return true;
        default:
            return false;
    }
}

constexpr bool unit_is_volume(Unit u) {
    return u == Unit::million_gallons || u == Unit::billion_gallons;
}

}  // namespace blendsim
