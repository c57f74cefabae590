#include "blendsim/feedstock.hpp"

#include <sstream>

namespace blendsim {

Suitability parse_suitability(std::string_view name) {
    if (name == "low") return Suitability::low;
    if (name == "moderate") return Suitability::moderate;
    if (name == "high") return Suitability::high;
    throw UnknownComponentError("unknown suitability: " + std::string(name));
}

std::string_view suitability_name(Suitability s) {
    switch (s) {
        case Suitability::low: return "low";
        case Suitability::moderate: return "moderate";
        case Suitability::high: return "high";
    }
    return "?";
}

void MswComponent::validate() const {
    if (fraction < 0.0 || fraction > 1.0) {
        std::ostringstream os;
        os << "component '" << name << "' fraction " << fraction << " outside [0, 1]";
        throw UnitRangeError(os.str());
    }
    if (yield_lo < 0.0 || yield_hi < yield_lo) {
        std::ostringstream os;
        os << "component '" << name << "' yield range [" << yield_lo << ", " << yield_hi
           << "] is invalid";
        throw UnitRangeError(os.str());
    }
}

void MswProfile::validate() const {
    if (total_tons_per_year < 0.0) {
        throw UnitRangeError("total tonnage must be non-negative");
    }
    if (moisture_factor < 0.0 || moisture_factor > 1.0) {
        throw UnitRangeError("moisture factor outside [0, 1]");
    }
    double sum = 0.0;
    for (const auto& c : components) {
        c.validate();
        sum += c.fraction;
    }
    if (sum > 1.0 + 1e-12) {
        std::ostringstream os;
        os << "component fractions sum to " << sum << " > 1";
        throw UnitRangeError(os.str());
    }
}

void CapacityRamp::validate() const {
    if (end_year <= start_year) {
        throw YearOutOfRangeError("capacity ramp must end after it starts");
    }
    if (start_capacity_mgal < 0.0 || end_capacity_mgal < 0.0) {
        throw UnitRangeError("capacities must be non-negative");
    }
}

double component_ethanol(const MswProfile& profile, const std::string& component_name,
                         double yield_point) {
    if (yield_point < 0.0 || yield_point > 1.0) {
        throw UnitRangeError("yield point outside [0, 1]");
    }
    for (const auto& c : profile.components) {
        if (c.name == component_name) {
            const double yield_gal_per_ton =
                c.yield_lo + yield_point * (c.yield_hi - c.yield_lo);
            const double tons = profile.total_tons_per_year * profile.moisture_factor * c.fraction;
            return tons * yield_gal_per_ton / 1e6;
        }
    }
    throw UnknownComponentError("no MSW component named '" + component_name + "'");
}

double total_potential(const MswProfile& profile, double yield_point,
                       Suitability min_suitability) {
    double total = 0.0;
    for (const auto& c : profile.components) {
        if (c.suitability < min_suitability) {
            continue;
        }
        total += component_ethanol(profile, c.name, yield_point);
    }
    return total;
}

double capacity_at(const CapacityRamp& ramp, int year) {
    if (year < ramp.start_year) {
        return 0.0;
    }
    if (year >= ramp.end_year) {
        return ramp.end_capacity_mgal;
    }
    const double frac = static_cast<double>(year - ramp.start_year) /
                        static_cast<double>(ramp.end_year - ramp.start_year);
    return ramp.start_capacity_mgal + frac * (ramp.end_capacity_mgal - ramp.start_capacity_mgal);
}

}  // namespace blendsim
