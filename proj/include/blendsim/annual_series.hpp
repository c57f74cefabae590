#pragma once

#include <cstddef>
#include <vector>

#include "blendsim/units.hpp"

namespace blendsim {

/// A year-indexed sequence of real values with a declared unit. Values cover
/// strictly consecutive calendar years starting at start_year(). Instances
/// are immutable after construction and safe to share across threads.
class AnnualSeries {
public:
    AnnualSeries(int start_year, std::vector<double> values, Unit unit);

    /// Series of year-over-year changes. Deltas keep the unit tag for
    /// provenance but are exempt from the unit's level range checks
    /// (a volume delta may be negative).
    static AnnualSeries delta(int start_year, std::vector<double> values, Unit unit);

    int start_year() const { return start_year_; }
    int end_year() const { return start_year_ + static_cast<int>(values_.size()) - 1; }
    std::size_t size() const { return values_.size(); }
    Unit unit() const { return unit_; }
    const std::vector<double>& values() const { return values_; }

    /// Value for a calendar year inside the covered span. Out-of-range years
    /// raise YearOutOfRangeError; this never extrapolates.
    double at(int year) const;

    bool covers(int year) const { return year >= start_year_ && year <= end_year(); }

    /// Volume-unit conversion (million <-> billion gallons). Converting to
    /// the current unit is a copy; any other target pair raises
    /// UnitMismatchError.
    AnnualSeries converted_to(Unit target) const;

    bool is_delta() const { return is_delta_; }

private:
    struct DeltaTag {};
    AnnualSeries(DeltaTag, int start_year, std::vector<double> values, Unit unit);

    int start_year_;
    std::vector<double> values_;
    Unit unit_;
    bool is_delta_ = false;
};

/// Element-wise arithmetic. Both operands must share unit, start year and
/// length; unit disagreement raises UnitMismatchError.
AnnualSeries add(const AnnualSeries& a, const AnnualSeries& b);
AnnualSeries subtract(const AnnualSeries& a, const AnnualSeries& b);

}  // namespace blendsim
