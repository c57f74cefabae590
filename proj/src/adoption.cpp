#include "blendsim/adoption.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace blendsim {

void LogisticParams::validate() const {
    if (!(ceiling > 0.0) || ceiling > 1.0) {
        std::ostringstream os;
        os << "logistic ceiling " << ceiling << " outside (0, 1]";
        throw ShareOutOfRangeError(os.str());
    }
    if (!(rate > 0.0)) {
        std::ostringstream os;
        os << "logistic growth rate " << rate << " must be positive";
        throw DegenerateFitError(os.str());
    }
}

double logistic_share(const LogisticParams& params, double year) {
    return params.ceiling / (1.0 + std::exp(-params.rate * (year - params.midpoint_year)));
}

CalibrationResult calibrate_logistic(const std::vector<std::pair<double, double>>& points,
                                     double ceiling) {
    if (points.size() < 2) {
        throw DegenerateFitError("logistic calibration needs at least two points");
    }
    // Logit transform linearizes the curve: z = k*year - k*t0.
    std::vector<double> years(points.size());
    std::vector<double> z(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double share = points[i].second;
        if (share <= 0.0 || share >= ceiling) {
            std::ostringstream os;
            os << "share " << share << " at year " << points[i].first
               << " outside (0, L) with L=" << ceiling;
            throw ShareOutOfRangeError(os.str());
        }
        years[i] = points[i].first;
        z[i] = std::log(share / (ceiling - share));
    }

    // Centering the years keeps the normal equations well conditioned
    // (calendar years squared would cancel away most of the mantissa).
    const double n = static_cast<double>(points.size());
    double mean_y = 0.0, mean_z = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        mean_y += years[i];
        mean_z += z[i];
    }
    mean_y /= n;
    mean_z /= n;
    double syy = 0.0, syz = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double dy = years[i] - mean_y;
        syy += dy * dy;
        syz += dy * (z[i] - mean_z);
    }
    if (syy == 0.0) {
        throw DegenerateFitError("calibration points share a single year");
    }
    const double slope = syz / syy;
    const double offset = mean_z - slope * mean_y;
    if (!(slope > 0.0)) {
        std::ostringstream os;
        os << "logit slope " << slope << " is not positive; the data do not grow";
        throw DegenerateFitError(os.str());
    }

    double sq = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double r = z[i] - (offset + slope * years[i]);
        sq += r * r;
    }

    CalibrationResult result;
    result.params.ceiling = ceiling;
    result.params.rate = slope;
    result.params.midpoint_year = -offset / slope;
    result.residual_rms = std::sqrt(sq / n);
    return result;
}

bool ShareTable::has(PathwayId id) const {
    for (const auto& p : pathways) {
        if (p == id) {
            return true;
        }
    }
    return false;
}

double ShareTable::share(int year, PathwayId id) const {
    const int idx = year - start_year;
    if (idx < 0 || idx >= static_cast<int>(shares.size())) {
        std::ostringstream os;
        os << "year " << year << " outside share table";
        throw YearOutOfRangeError(os.str());
    }
    for (std::size_t p = 0; p < pathways.size(); ++p) {
        if (pathways[p] == id) {
            return shares[static_cast<std::size_t>(idx)][p];
        }
    }
    throw ShareOutOfRangeError(std::string("pathway ") + std::string(pathway_name(id)) +
                               " not present in share table");
}

ShareTable build_share_table(const std::map<PathwayId, LogisticParams>& curves,
                             PathwayId remainder, int start_year, int end_year,
                             ShareMode mode) {
    if (curves.contains(remainder)) {
        throw ShareOutOfRangeError("the remainder pathway must not carry an adoption curve");
    }
    for (const auto& [id, params] : curves) {
        params.validate();
    }

    ShareTable table;
    table.start_year = start_year;
    table.remainder = remainder;
    for (const auto& [id, params] : curves) {
        table.pathways.push_back(id);
    }
    table.pathways.push_back(remainder);

    for (int year = start_year; year <= end_year; ++year) {
        std::vector<double> row(table.pathways.size(), 0.0);
        double total = 0.0;
        std::size_t idx = 0;
        for (const auto& [id, params] : curves) {
            row[idx] = logistic_share(params, year);
            total += row[idx];
            ++idx;
        }
        if (total > 1.0) {
            if (mode == ShareMode::strict) {
                std::ostringstream os;
                os << "modeled shares sum to " << total << " > 1 in year " << year;
                throw ShareBudgetExceededError(os.str());
            }
            const double scale = 0.99 / total;
            total = 0.0;
            for (std::size_t i = 0; i + 1 < row.size(); ++i) {
                row[i] *= scale;
                total += row[i];
            }
            table.rescaled_years.push_back(year);
        }
        row.back() = 1.0 - total;
        table.shares.push_back(std::move(row));
    }
    return table;
}

}  // namespace blendsim
