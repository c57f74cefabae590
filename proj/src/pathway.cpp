#include "blendsim/pathway.hpp"

#include <sstream>

namespace blendsim {

PathwayId parse_pathway(std::string_view name) {
    for (PathwayId id : {PathwayId::GASOLINE, PathwayId::E10, PathwayId::E15, PathwayId::E30,
                         PathwayId::E85, PathwayId::EV, PathwayId::H2}) {
        if (pathway_name(id) == name) {
            return id;
        }
    }
    throw Error("unknown pathway: " + std::string(name));
}

void PathwaySpec::validate() const {
    if (ethanol_vol_frac < 0.0 || ethanol_vol_frac > 1.0) {
        std::ostringstream os;
        os << "pathway " << pathway_name(id) << " ethanol fraction " << ethanol_vol_frac
           << " outside [0, 1]";
        throw UnitRangeError(os.str());
    }
    if (is_liquid && !(lhv_mj_per_gal > 0.0)) {
        std::ostringstream os;
        os << "liquid pathway " << pathway_name(id) << " needs a positive energy density";
        throw UnitRangeError(os.str());
    }
}

}  // namespace blendsim
