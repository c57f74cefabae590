#pragma once

#include <map>
#include <utility>
#include <vector>

#include "blendsim/pathway.hpp"

namespace blendsim {

enum class Feedstock { fossil, corn, msw };

constexpr std::string_view feedstock_name(Feedstock f) {
    switch (f) {
        case Feedstock::fossil: return "fossil";
        case Feedstock::corn: return "corn";
        case Feedstock::msw: return "msw";
    }
    return "?";
}

Feedstock parse_feedstock(std::string_view name);

/// Exponential approach of the MSW-ethanol carbon intensity toward a floor:
/// ci(t) = ci_inf + (ci0 - ci_inf) * exp(-lambda (t - t0)).
struct CiDecay {
    double ci0 = 58.3;     // gCO2e/MJ at t0
    double ci_inf = 40.0;  // asymptote, < ci0
    double lambda = 0.0;   // per year, > 0
    int t0 = 2024;

    void validate() const;
};

struct CarbonParams {
    double ci_gasoline = 92.0;      // gCO2e/MJ
    double ci_ethanol_corn = 58.3;  // pure-ethanol basis
    double lhv_gasoline = 122.5;    // MJ/gal
    double lhv_ethanol = 80.5;      // MJ/gal
    CiDecay decay;

    void validate() const;
};

/// Published per-blend carbon intensities, quoted as-is. Within each
/// feedstock the CI strictly decreases with ethanol fraction, and every MSW
/// entry sits below the corn entry for the same blend.
class CiLookup {
public:
    CiLookup();  // the published replication values

    double at(PathwayId blend, Feedstock feedstock) const;
    void set(PathwayId blend, Feedstock feedstock, double ci);
    void validate() const;

    const std::map<std::pair<Feedstock, PathwayId>, double>& entries() const {
        return entries_;
    }

private:
    std::map<std::pair<Feedstock, PathwayId>, double> entries_;
};

/// Energy-weighted mixing: the ethanol energy fraction weights the component
/// carbon intensities.
double blend_ci_energy(double ci_gasoline, double ci_ethanol, double vol_frac_ethanol,
                       double lhv_gasoline, double lhv_ethanol);

double ci_decay(const CiDecay& params, double year);

/// Closed-form decay rate through two anchors with a fixed asymptote.
double fit_decay(std::pair<double, double> anchor_early, std::pair<double, double> anchor_late,
                 double ci_inf);

/// Tonnes CO2e from per-pathway volumes (million gallons), carbon
/// intensities (gCO2e/MJ) and energy densities (MJ/gal). Liquid pathways
/// only; the three spans must agree element-wise.
double fleet_emissions(const std::vector<double>& volumes_mgal,
                       const std::vector<double>& cis, const std::vector<double>& lhvs);

}  // namespace blendsim
