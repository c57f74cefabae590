#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blendsim/feedstock.hpp"
#include "blendsim/presets.hpp"
#include "test_support.hpp"

using namespace blendsim;

TEST_CASE("nyc-2024 component potentials match the published figures") {
    const auto profile = builtin_msw_profile("nyc-2024");
    CHECK_NOTHROW(profile.validate());

    // 14 Mt * 0.27 * 77.5 gal/t = 292.95 M gal
    CHECK(component_ethanol(profile, "paper_and_cardboard") == doctest::Approx(292.95));
    // 3.22 Mt * 82.5 gal/t = 265.65 M gal
    CHECK(component_ethanol(profile, "food_waste") == doctest::Approx(265.65));
    CHECK(component_ethanol(profile, "yard_trimmings") == doctest::Approx(71.05));
    CHECK(component_ethanol(profile, "wood_residues") == doctest::Approx(47.25));
    // yard + wood together ~ 119 M gal
    CHECK(component_ethanol(profile, "yard_trimmings") +
              component_ethanol(profile, "wood_residues") ==
          doctest::Approx(118.3));

    CHECK_THROWS_AS(component_ethanol(profile, "plastics"), UnknownComponentError);
}

TEST_CASE("aggregate potential lands inside the published 600-700 range") {
    const auto profile = builtin_msw_profile("nyc-2024");
    const double total = total_potential(profile);
    CHECK(total == doctest::Approx(676.9));
    CHECK(total > 600.0);
    CHECK(total < 700.0);

    // low-suitability textiles join only when the threshold drops
    const double with_low = total_potential(profile, 0.5, Suitability::low);
    CHECK(with_low == doctest::Approx(676.9 + 14.0 * 0.06 * 50.0));
    CHECK(with_low > 700.0);
}

TEST_CASE("zero tonnage and empty profiles produce zero") {
    MswProfile empty;
    empty.total_tons_per_year = 0.0;
    CHECK(total_potential(empty) == 0.0);

    auto zeroed = builtin_msw_profile("nyc-2024");
    zeroed.total_tons_per_year = 0.0;
    CHECK(component_ethanol(zeroed, "food_waste") == 0.0);
}

TEST_CASE("potential is linear in tonnage and monotone in yield point") {
    const auto profile = builtin_msw_profile("nyc-2024");
    auto doubled = profile;
    doubled.total_tons_per_year *= 2.0;
    CHECK(total_potential(doubled) == doctest::Approx(2.0 * total_potential(profile)));

    const double lo = total_potential(profile, 0.0);
    const double mid = total_potential(profile, 0.5);
    const double hi = total_potential(profile, 1.0);
    CHECK(lo < mid);
    CHECK(mid < hi);

    for (const auto& c : profile.components) {
        CHECK(component_ethanol(profile, c.name, 0.0) <= component_ethanol(profile, c.name, 0.5));
        CHECK(component_ethanol(profile, c.name, 0.5) <= component_ethanol(profile, c.name, 1.0));
    }
}

TEST_CASE("yield point outside [0,1] is rejected") {
    const auto profile = builtin_msw_profile("nyc-2024");
    CHECK_THROWS_AS(component_ethanol(profile, "food_waste", -0.1), UnitRangeError);
    CHECK_THROWS_AS(component_ethanol(profile, "food_waste", 1.1), UnitRangeError);
}

TEST_CASE("moisture discount scales everything down") {
    auto profile = builtin_msw_profile("nyc-2024");
    profile.moisture_factor = 0.8;
    CHECK(total_potential(profile) == doctest::Approx(0.8 * 676.9));
}

TEST_CASE("capacity ramp endpoints and interpolation") {
    const CapacityRamp ramp;
    CHECK(capacity_at(ramp, 2027) == 0.0);
    CHECK(capacity_at(ramp, 2028) == 200.0);
    CHECK(capacity_at(ramp, 2035) == 300.0);
    CHECK(capacity_at(ramp, 2050) == 300.0);
    // linear interior
    CHECK(capacity_at(ramp, 2031) == doctest::Approx(200.0 + 3.0 / 7.0 * 100.0));
}

TEST_CASE("capacity is non-decreasing and continuous at the ramp ends") {
    const CapacityRamp ramp;
    double prev = -1.0;
    for (int year = 2020; year <= 2045; ++year) {
        const double c = capacity_at(ramp, year);
        CHECK(c >= prev);
        prev = c;
    }
    const double step = (300.0 - 200.0) / 7.0;
    CHECK(capacity_at(ramp, 2029) - capacity_at(ramp, 2028) == doctest::Approx(step));
    CHECK(capacity_at(ramp, 2035) - capacity_at(ramp, 2034) == doctest::Approx(step));
}

TEST_CASE("profile validation") {
    MswProfile bad = builtin_msw_profile("nyc-2024");
    bad.components[0].fraction = 0.95;  // fractions now exceed 1
    CHECK_THROWS_AS(bad.validate(), UnitRangeError);

    MswComponent reversed{"x", 0.1, 50.0, 40.0, Suitability::high};
    CHECK_THROWS_AS(reversed.validate(), UnitRangeError);

    CapacityRamp ramp;
    ramp.end_year = ramp.start_year;
    CHECK_THROWS_AS(ramp.validate(), YearOutOfRangeError);
}
