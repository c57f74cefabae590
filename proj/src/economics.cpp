#include "blendsim/economics.hpp"

#include <cmath>
#include <sstream>

namespace blendsim {

void IncentiveSchedule::validate() const {
    if (d6_usd_per_gal < 0.0 || d5_usd_per_gal < 0.0 || cfpc45v_usd_per_gal < 0.0) {
        throw UnitRangeError("incentive prices must be non-negative");
    }
    if (!(ci_band_45v_lo < ci_band_45v_hi)) {
        std::ostringstream os;
        os << "45V band [" << ci_band_45v_lo << ", " << ci_band_45v_hi << "] is empty";
        throw UnitRangeError(os.str());
    }
}

void EconCoefficients::validate() const {
    if (jobs_per_million_gal < 0.0 || indirect_usd_per_gal < 0.0) {
        throw UnitRangeError("economic coefficients must be non-negative");
    }
}

BlendPriceTable::BlendPriceTable() {
    prices_[PathwayId::GASOLINE] = 3.50;
    prices_[PathwayId::E10] = 3.45;
    prices_[PathwayId::E15] = 3.40;
    prices_[PathwayId::E30] = 3.30;
    prices_[PathwayId::E85] = 2.90;
}

double BlendPriceTable::at(PathwayId blend) const {
    auto it = prices_.find(blend);
    if (it == prices_.end()) {
        throw MissingPriceError("no price for " + std::string(pathway_name(blend)));
    }
    return it->second;
}

double* BlendPriceTable::entry(PathwayId blend) {
    auto it = prices_.find(blend);
    return it == prices_.end() ? nullptr : &it->second;
}

void BlendPriceTable::set(PathwayId blend, double usd_per_gal) {
    if (usd_per_gal < 0.0) {
        throw UnitRangeError("price must be non-negative");
    }
    prices_[blend] = usd_per_gal;
}

void BlendPriceTable::validate() const {
    const PathwayId order[] = {PathwayId::GASOLINE, PathwayId::E10, PathwayId::E15,
                               PathwayId::E30, PathwayId::E85};
    double prev = 0.0;
    bool first = true;
    for (PathwayId id : order) {
        auto it = prices_.find(id);
        if (it == prices_.end()) continue;
        if (!first && !(it->second < prev)) {
            std::ostringstream os;
            os << "price does not strictly decrease with ethanol fraction at "
               << pathway_name(id);
            throw UnitRangeError(os.str());
        }
        prev = it->second;
        first = false;
    }
}

RinCategory rin_category(Feedstock feedstock, double ci, double baseline_ci, RinMode mode) {
    if (!(ci > 0.0)) {
        throw UnitRangeError("carbon intensity must be positive");
    }
    if (mode == RinMode::replication) {
        return feedstock == Feedstock::msw ? RinCategory::D5 : RinCategory::D6;
    }
    // Advanced-biofuel gate: at least a 50% reduction against the baseline.
    return ci <= 0.5 * baseline_ci ? RinCategory::D5 : RinCategory::D6;
}

double incentive_per_gallon(int year, Feedstock feedstock, double ci,
                            const IncentiveSchedule& schedule, double baseline_ci) {
    schedule.validate();
    const RinCategory cat = rin_category(feedstock, ci, baseline_ci, schedule.rin_mode);
    double usd = cat == RinCategory::D5 ? schedule.d5_usd_per_gal : schedule.d6_usd_per_gal;
    if (feedstock == Feedstock::msw && year >= schedule.local_start_year) {
        const bool in_band = ci >= schedule.ci_band_45v_lo && ci <= schedule.ci_band_45v_hi;
        if (!schedule.enforce_ci_band || in_band) {
            usd += schedule.cfpc45v_usd_per_gal;
        }
    }
    return usd;
}

double investor_revenue(int year, const std::map<Feedstock, double>& gallons_mgal_by_feedstock,
                        const std::map<Feedstock, double>& ci_by_feedstock,
                        const IncentiveSchedule& schedule, double baseline_ci) {
    double usd = 0.0;
    for (const auto& [feedstock, mgal] : gallons_mgal_by_feedstock) {
        if (mgal < 0.0) {
            throw UnitRangeError("gallons must be non-negative");
        }
        if (mgal == 0.0) {
            continue;
        }
        auto ci = ci_by_feedstock.find(feedstock);
        if (ci == ci_by_feedstock.end()) {
            throw MissingTableEntryError("no CI supplied for feedstock " +
                                         std::string(feedstock_name(feedstock)));
        }
        usd += mgal * 1e6 * incentive_per_gallon(year, feedstock, ci->second, schedule, baseline_ci);
    }
    return usd;
}

JobsResult jobs_created(double gallons_mgal, const EconCoefficients& coeffs) {
    if (gallons_mgal < 0.0) {
        throw UnitRangeError("gallons must be non-negative");
    }
    JobsResult r;
    r.jobs = gallons_mgal * coeffs.jobs_per_million_gal;
    r.rounded = std::llround(r.jobs);
    return r;
}

double indirect_impact(double gallons_mgal, const EconCoefficients& coeffs) {
    if (gallons_mgal < 0.0) {
        throw UnitRangeError("gallons must be non-negative");
    }
    return gallons_mgal * 1e6 * coeffs.indirect_usd_per_gal;
}

double consumer_fuel_cost(const std::map<PathwayId, double>& volumes_mgal,
                          const BlendPriceTable& prices) {
    double usd = 0.0;
    for (const auto& [blend, mgal] : volumes_mgal) {
        if (mgal < 0.0) {
            throw UnitRangeError("volume must be non-negative");
        }
        usd += mgal * 1e6 * prices.at(blend);
    }
    return usd;
}

}  // namespace blendsim
