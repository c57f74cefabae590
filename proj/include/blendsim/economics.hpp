#pragma once

#include <map>

#include "blendsim/carbon.hpp"
#include "blendsim/pathway.hpp"

namespace blendsim {

enum class RinCategory { D5, D6 };

enum class RinMode {
    replication,  // published assignment: MSW -> D5, corn -> D6
    strict,       // D5 iff the fuel halves the petroleum baseline CI
};

struct IncentiveSchedule {
    double d6_usd_per_gal = 0.56;
    double d5_usd_per_gal = 0.75;
    double cfpc45v_usd_per_gal = 0.75;
    double ci_band_45v_lo = 25.0;  // gCO2e/MJ
    double ci_band_45v_hi = 50.0;
    bool enforce_ci_band = false;
    int local_start_year = 2028;
    RinMode rin_mode = RinMode::replication;

    void validate() const;
};

struct EconCoefficients {
    double jobs_per_million_gal = 15.0;
    double indirect_usd_per_gal = 1.50;

    void validate() const;
};

/// Static retail prices per blend, USD/gal. Prices strictly decrease with
/// ethanol fraction.
class BlendPriceTable {
public:
    BlendPriceTable();  // published defaults

    double at(PathwayId blend) const;
    void set(PathwayId blend, double usd_per_gal);
    void validate() const;
    const std::map<PathwayId, double>& entries() const { return prices_; }

    /// Address of one stored price, for in-place perturbation; null when the
    /// blend has no entry.
    double* entry(PathwayId blend);

private:
    std::map<PathwayId, double> prices_;
};

RinCategory rin_category(Feedstock feedstock, double ci, double baseline_ci = 92.0,
                         RinMode mode = RinMode::replication);

/// RIN value for the feedstock's category, plus the 45V credit for locally
/// produced MSW ethanol from local_start_year on (subject to the CI band
/// when enforcement is enabled).
double incentive_per_gallon(int year, Feedstock feedstock, double ci,
                            const IncentiveSchedule& schedule, double baseline_ci = 92.0);

/// Incentive revenue over a feedstock split of the year's gallons.
double investor_revenue(int year, const std::map<Feedstock, double>& gallons_mgal_by_feedstock,
                        const std::map<Feedstock, double>& ci_by_feedstock,
                        const IncentiveSchedule& schedule, double baseline_ci = 92.0);

struct JobsResult {
    double jobs = 0.0;
    long long rounded = 0;
};

JobsResult jobs_created(double gallons_mgal, const EconCoefficients& coeffs);

double indirect_impact(double gallons_mgal, const EconCoefficients& coeffs);

double consumer_fuel_cost(const std::map<PathwayId, double>& volumes_mgal,
                          const BlendPriceTable& prices);

}  // namespace blendsim
