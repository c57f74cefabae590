#pragma once

#include <string>
#include <vector>

#include "blendsim/errors.hpp"

namespace blendsim {

enum class Suitability { low, moderate, high };

Suitability parse_suitability(std::string_view name);
std::string_view suitability_name(Suitability s);

struct MswComponent {
    std::string name;
    double fraction = 0.0;  // share of total MSW mass, in [0, 1]
    double yield_lo = 0.0;  // gal ethanol per dry ton
    double yield_hi = 0.0;
    Suitability suitability = Suitability::low;

    void validate() const;
};

struct MswProfile {
    double total_tons_per_year = 0.0;
    std::vector<MswComponent> components;
    /// The tonnage is treated as dry mass; set below 1 to discount moisture.
    double moisture_factor = 1.0;

    void validate() const;  // component fractions may leave an implicit inorganic remainder
};

/// Local production capacity ramp: zero before start_year, linear to
/// end_year, flat afterwards.
struct CapacityRamp {
    int start_year = 2028;
    double start_capacity_mgal = 200.0;
    int end_year = 2035;
    double end_capacity_mgal = 300.0;

    void validate() const;
};

/// Annual ethanol potential of one component in million gallons.
/// yield_point in [0,1] interpolates yield_lo -> yield_hi.
double component_ethanol(const MswProfile& profile, const std::string& component_name,
                         double yield_point = 0.5);

/// Aggregate potential over components at or above the suitability
/// threshold (default: high + moderate).
double total_potential(const MswProfile& profile, double yield_point = 0.5,
                       Suitability min_suitability = Suitability::moderate);

double capacity_at(const CapacityRamp& ramp, int year);

}  // namespace blendsim
