#pragma once

#include <stdexcept>
#include <string>

namespace blendsim {

/// Base class for all library errors. Each named error condition in the
/// module contracts gets its own derived type so callers can catch precisely.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// core
class MissingDataError : public Error {
public:
    using Error::Error;
};
class NonConsecutiveYearsError : public Error {
public:
    using Error::Error;
};
class NonNumericValueError : public Error {
public:
    using Error::Error;
};
class UnitRangeError : public Error {
public:
    using Error::Error;
};
class YearOutOfRangeError : public Error {
public:
    using Error::Error;
};
class UnitMismatchError : public Error {
public:
    using Error::Error;
};

// forecast
class SeriesTooShortError : public Error {
public:
    using Error::Error;
};
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};
class MissingExogError : public Error {
public:
    using Error::Error;
};
class SeasonalOrderError : public Error {
public:
    using Error::Error;
};
class NonStationaryError : public Error {
public:
    using Error::Error;
};

// adoption
class ShareOutOfRangeError : public Error {
public:
    using Error::Error;
};
class DegenerateFitError : public Error {
public:
    using Error::Error;
};
class ShareBudgetExceededError : public Error {
public:
    using Error::Error;
};

// carbon
class MissingTableEntryError : public Error {
public:
    using Error::Error;
};
class YearBeforeT0Error : public Error {
public:
    using Error::Error;
};
class AnchorBelowAsymptoteError : public Error {
public:
    using Error::Error;
};
class DegenerateDecayError : public Error {
public:
    using Error::Error;
};

// feedstock
class UnknownComponentError : public Error {
public:
    using Error::Error;
};

// economics
class MissingPriceError : public Error {
public:
    using Error::Error;
};

// uncertainty
class UnresolvedTargetError : public Error {
public:
    using Error::Error;
};
class InvariantViolationError : public Error {
public:
    using Error::Error;
};

// config / scenario
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace blendsim
