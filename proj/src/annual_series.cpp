#include "blendsim/annual_series.hpp"

#include <sstream>

namespace blendsim {

namespace {

void check_value_range(double v, Unit unit, int year) {
    if (unit == Unit::share_fraction && (v < 0.0 || v > 1.0)) {
        std::ostringstream os;
        os << "share_fraction value " << v << " for year " << year << " outside [0, 1]";
        throw UnitRangeError(os.str());
    }
    if (unit_requires_nonnegative(unit) && v < 0.0) {
        std::ostringstream os;
        os << unit_name(unit) << " value " << v << " for year " << year << " is negative";
        throw UnitRangeError(os.str());
    }
}

}  // namespace

AnnualSeries::AnnualSeries(int start_year, std::vector<double> values, Unit unit)
    : start_year_(start_year), values_(std::move(values)), unit_(unit) {
    if (values_.empty()) {
        throw MissingDataError("annual series must contain at least one value");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        check_value_range(values_[i], unit_, start_year_ + static_cast<int>(i));
    }
}

AnnualSeries::AnnualSeries(DeltaTag, int start_year, std::vector<double> values, Unit unit)
    : start_year_(start_year), values_(std::move(values)), unit_(unit), is_delta_(true) {
    if (values_.empty()) {
        throw MissingDataError("annual series must contain at least one value");
    }
}

AnnualSeries AnnualSeries::delta(int start_year, std::vector<double> values, Unit unit) {
    return AnnualSeries(DeltaTag{}, start_year, std::move(values), unit);
}

double AnnualSeries::at(int year) const {
    if (!covers(year)) {
        std::ostringstream os;
        os << "year " << year << " outside series span [" << start_year_ << ", " << end_year()
           << "]";
        throw YearOutOfRangeError(os.str());
    }
    return values_[static_cast<std::size_t>(year - start_year_)];
}

AnnualSeries AnnualSeries::converted_to(Unit target) const {
    if (target == unit_) {
        return *this;
    }
    double factor = 0.0;
    if (unit_ == Unit::billion_gallons && target == Unit::million_gallons) {
        factor = 1000.0;
    } else if (unit_ == Unit::million_gallons && target == Unit::billion_gallons) {
        factor = 1e-3;
    } else {
        std::ostringstream os;
        os << "no conversion from " << unit_name(unit_) << " to " << unit_name(target);
        throw UnitMismatchError(os.str());
    }
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out[i] = values_[i] * factor;
    }
    return AnnualSeries(start_year_, std::move(out), target);
}

namespace {

void check_aligned(const AnnualSeries& a, const AnnualSeries& b) {
    if (a.unit() != b.unit()) {
        std::ostringstream os;
        os << "unit mismatch: " << unit_name(a.unit()) << " vs " << unit_name(b.unit());
        throw UnitMismatchError(os.str());
    }
    if (a.start_year() != b.start_year() || a.size() != b.size()) {
        throw UnitMismatchError("series spans are not aligned");
    }
}

}  // namespace

AnnualSeries add(const AnnualSeries& a, const AnnualSeries& b) {
    check_aligned(a, b);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a.values()[i] + b.values()[i];
    }
    return AnnualSeries(a.start_year(), std::move(out), a.unit());
}

AnnualSeries subtract(const AnnualSeries& a, const AnnualSeries& b) {
    check_aligned(a, b);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a.values()[i] - b.values()[i];
    }
    return AnnualSeries(a.start_year(), std::move(out), a.unit());
}

Unit parse_unit(std::string_view name) {
    for (Unit u : {Unit::million_gallons, Unit::billion_gallons, Unit::share_fraction,
                   Unit::gco2e_per_mj, Unit::usd, Unit::usd_per_gallon, Unit::jobs,
                   Unit::tonnes_co2e}) {
        if (unit_name(u) == name) {
            return u;
        }
    }
    throw UnitRangeError("unknown unit: " + std::string(name));
}

}  // namespace blendsim
