#pragma once

#include <map>
#include <utility>
#include <vector>

#include "blendsim/pathway.hpp"

namespace blendsim {

/// Logistic market-penetration curve: share(t) = L / (1 + exp(-k (t - t0))).
struct LogisticParams {
    double ceiling = 0.0;       // L, in (0, 1]
    double rate = 0.0;          // k, per year, > 0
    double midpoint_year = 0.0; // t0

    void validate() const;
};

double logistic_share(const LogisticParams& params, double year);

struct CalibrationResult {
    LogisticParams params;
    double residual_rms = 0.0;
};

/// Least-squares fit of the logit transform z = ln(S / (L - S)) against year.
/// Needs at least two points with shares strictly inside (0, L); non-growing
/// data (slope <= 0) is rejected as DegenerateFit.
CalibrationResult calibrate_logistic(const std::vector<std::pair<double, double>>& points,
                                     double ceiling);

enum class ShareMode { strict, rescale };

/// Per-year, per-pathway shares. Every row sums to exactly 1: the remainder
/// pathway absorbs whatever the modeled curves leave.
struct ShareTable {
    int start_year = 0;
    std::vector<PathwayId> pathways;
    std::vector<std::vector<double>> shares;  // shares[year_index][pathway_index]
    PathwayId remainder = PathwayId::E10;
    std::vector<int> rescaled_years;          // years clipped by rescale mode

    double share(int year, PathwayId id) const;
    bool has(PathwayId id) const;
};

/// Evaluate each curve per year and close the budget with the remainder
/// pathway. When the modeled curves sum above 1 for a year, strict mode
/// raises ShareBudgetExceeded; rescale mode scales them proportionally down
/// to 0.99 and records the year.
ShareTable build_share_table(const std::map<PathwayId, LogisticParams>& curves,
                             PathwayId remainder, int start_year, int end_year,
                             ShareMode mode);

}  // namespace blendsim
