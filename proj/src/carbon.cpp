#include "blendsim/carbon.hpp"

#include <cmath>
#include <sstream>

namespace blendsim {

Feedstock parse_feedstock(std::string_view name) {
    for (Feedstock f : {Feedstock::fossil, Feedstock::corn, Feedstock::msw}) {
        if (feedstock_name(f) == name) {
            return f;
        }
    }
    throw MissingTableEntryError("unknown feedstock: " + std::string(name));
}

void CiDecay::validate() const {
    if (!(ci_inf < ci0)) {
        std::ostringstream os;
        os << "decay asymptote " << ci_inf << " must lie below the starting CI " << ci0;
        throw AnchorBelowAsymptoteError(os.str());
    }
    if (!(lambda > 0.0)) {
        std::ostringstream os;
        os << "decay rate " << lambda << " must be positive";
        throw DegenerateDecayError(os.str());
    }
    if (!(ci0 > 0.0) || !(ci_inf > 0.0)) {
        throw UnitRangeError("carbon intensities must be positive");
    }
}

void CarbonParams::validate() const {
    if (!(ci_gasoline > 0.0) || !(ci_ethanol_corn > 0.0)) {
        throw UnitRangeError("carbon intensities must be positive");
    }
    if (!(lhv_gasoline > 0.0) || !(lhv_ethanol > 0.0)) {
        throw UnitRangeError("energy densities must be positive");
    }
    decay.validate();
}

CiLookup::CiLookup() {
    entries_[{Feedstock::fossil, PathwayId::GASOLINE}] = 92.0;
    entries_[{Feedstock::corn, PathwayId::E10}] = 89.0;
    entries_[{Feedstock::corn, PathwayId::E15}] = 85.0;
    entries_[{Feedstock::corn, PathwayId::E30}] = 75.0;
    entries_[{Feedstock::corn, PathwayId::E85}] = 58.3;
    entries_[{Feedstock::msw, PathwayId::E10}] = 88.0;
    entries_[{Feedstock::msw, PathwayId::E15}] = 82.0;
    entries_[{Feedstock::msw, PathwayId::E30}] = 70.0;
    entries_[{Feedstock::msw, PathwayId::E85}] = 48.0;
}

double CiLookup::at(PathwayId blend, Feedstock feedstock) const {
    auto it = entries_.find({feedstock, blend});
    if (it == entries_.end()) {
        std::ostringstream os;
        os << "no CI table entry for (" << pathway_name(blend) << ", "
           << feedstock_name(feedstock) << ")";
        throw MissingTableEntryError(os.str());
    }
    return it->second;
}

void CiLookup::set(PathwayId blend, Feedstock feedstock, double ci) {
    if (!(ci > 0.0)) {
        throw UnitRangeError("table CI must be positive");
    }
    entries_[{feedstock, blend}] = ci;
}

void CiLookup::validate() const {
    const PathwayId blend_order[] = {PathwayId::E10, PathwayId::E15, PathwayId::E30,
                                     PathwayId::E85};
    for (Feedstock f : {Feedstock::corn, Feedstock::msw}) {
        double prev = 0.0;
        bool first = true;
        for (PathwayId b : blend_order) {
            auto it = entries_.find({f, b});
            if (it == entries_.end()) continue;
            if (!first && !(it->second < prev)) {
                std::ostringstream os;
                os << feedstock_name(f) << " CI does not strictly decrease at "
                   << pathway_name(b);
                throw UnitRangeError(os.str());
            }
            prev = it->second;
            first = false;
        }
    }
    for (PathwayId b : blend_order) {
        auto corn = entries_.find({Feedstock::corn, b});
        auto msw = entries_.find({Feedstock::msw, b});
        if (corn != entries_.end() && msw != entries_.end() && !(msw->second < corn->second)) {
            std::ostringstream os;
            os << "MSW CI for " << pathway_name(b) << " is not below the corn value";
            throw UnitRangeError(os.str());
        }
    }
}

double blend_ci_energy(double ci_gasoline, double ci_ethanol, double vol_frac_ethanol,
                       double lhv_gasoline, double lhv_ethanol) {
    if (vol_frac_ethanol < 0.0 || vol_frac_ethanol > 1.0) {
        throw UnitRangeError("ethanol volume fraction outside [0, 1]");
    }
    if (!(lhv_gasoline > 0.0) || !(lhv_ethanol > 0.0)) {
        throw UnitRangeError("energy densities must be positive");
    }
    if (vol_frac_ethanol == 0.0) {
        return ci_gasoline;
    }
    if (vol_frac_ethanol == 1.0) {
        return ci_ethanol;
    }
    const double ethanol_energy = vol_frac_ethanol * lhv_ethanol;
    const double energy_frac = ethanol_energy / (ethanol_energy + (1.0 - vol_frac_ethanol) * lhv_gasoline);
    return energy_frac * ci_ethanol + (1.0 - energy_frac) * ci_gasoline;
}

double ci_decay(const CiDecay& params, double year) {
    params.validate();
    if (year < params.t0) {
        std::ostringstream os;
        os << "year " << year << " precedes the decay origin " << params.t0;
        throw YearBeforeT0Error(os.str());
    }
    return params.ci_inf + (params.ci0 - params.ci_inf) *
                               std::exp(-params.lambda * (year - params.t0));
}

double fit_decay(std::pair<double, double> anchor_early, std::pair<double, double> anchor_late,
                 double ci_inf) {
    const auto [year_early, ci_early] = anchor_early;
    const auto [year_late, ci_late] = anchor_late;
    if (!(ci_early > ci_inf) || !(ci_late > ci_inf)) {
        std::ostringstream os;
        os << "anchor CI must lie strictly above the asymptote " << ci_inf;
        throw AnchorBelowAsymptoteError(os.str());
    }
    if (year_early == year_late) {
        throw DegenerateDecayError("anchor years must be distinct");
    }
    if (ci_early == ci_late) {
        throw DegenerateDecayError("equal anchor CIs give a zero decay rate");
    }
    const double lambda =
        std::log((ci_early - ci_inf) / (ci_late - ci_inf)) / (year_late - year_early);
    if (!(lambda > 0.0)) {
        throw DegenerateDecayError("anchors imply a non-decreasing trajectory");
    }
    return lambda;
}

double fleet_emissions(const std::vector<double>& volumes_mgal, const std::vector<double>& cis,
                       const std::vector<double>& lhvs) {
    if (volumes_mgal.size() != cis.size() || volumes_mgal.size() != lhvs.size()) {
        throw UnitMismatchError("volume, CI and LHV spans must agree");
    }
    double tonnes = 0.0;
    for (std::size_t i = 0; i < volumes_mgal.size(); ++i) {
        if (volumes_mgal[i] < 0.0) {
            throw UnitRangeError("pathway volume is negative");
        }
        // Mgal * (MJ/gal) * (g/MJ) = Mg of CO2e = tonnes.
        tonnes += volumes_mgal[i] * lhvs[i] * cis[i];
    }
    return tonnes;
}

}  // namespace blendsim
