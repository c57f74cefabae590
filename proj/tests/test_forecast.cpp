#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "blendsim/csv_io.hpp"
#include "blendsim/forecast.hpp"
#include "blendsim/nelder_mead.hpp"
#include "test_support.hpp"

using namespace blendsim;
using test_support::SimRng;

namespace {

AnnualSeries series_of(std::vector<double> values, int start_year = 2000,
                       Unit unit = Unit::usd) {
    return AnnualSeries(start_year, std::move(values), unit);
}

}  // namespace

TEST_CASE("difference basics") {
    CHECK(difference({5.0, 5.0, 5.0}, 1) == std::vector<double>{0.0, 0.0});
    CHECK(difference({1.0, 2.0, 4.0}, 1) == std::vector<double>{1.0, 2.0});
    CHECK(difference({1.0, 2.0, 4.0}, 2) == std::vector<double>{1.0});
    CHECK(difference({1.0, 2.0, 4.0}, 0) == std::vector<double>{1.0, 2.0, 4.0});
    CHECK_THROWS_AS(difference({1.0, 2.0}, 2), SeriesTooShortError);
}

TEST_CASE("difference shifts the start year and marks deltas") {
    const auto s = series_of({3.0, 1.0, 4.0}, 2010, Unit::million_gallons);
    const auto d = difference(s, 1);
    CHECK(d.start_year() == 2011);
    CHECK(d.is_delta());
    CHECK(d.values() == std::vector<double>{-2.0, 3.0});
}

TEST_CASE("difference/integrate round-trip is exact for d in {0,1,2}") {
    // Dyadic values make every difference and cumulative sum exact in
    // binary floating point, so the round-trip must be bit-identical.
    for (int d = 0; d <= 2; ++d) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            SimRng rng(seed * 31 + 1);
            std::vector<double> values(25);
            for (auto& v : values) {
                v = std::round(rng.gaussian() * 102400.0) / 1024.0;
            }
            const auto heads = difference_heads(values, d);
            const auto diffed = difference(values, d);
            const auto back = integrate(diffed, heads);
            REQUIRE(back.size() == values.size());
            for (std::size_t i = 0; i < values.size(); ++i) {
                CHECK(back[i] == values[i]);
            }
        }
    }
    // Continuous values round-trip to within accumulated rounding.
    for (int d = 0; d <= 2; ++d) {
        SimRng rng(77);
        std::vector<double> values(25);
        for (auto& v : values) {
            v = 100.0 * rng.gaussian();
        }
        const auto back = integrate(difference(values, d), difference_heads(values, d));
        for (std::size_t i = 0; i < values.size(); ++i) {
            CHECK(back[i] == doctest::Approx(values[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("css_loss degenerate AR cases") {
    const std::vector<double> y{2.0, 3.0, 5.0, 4.0};

    // phi = 0: squared deviations from the intercept over the conditioned span.
    CssParams p0{{0.0}, {}, {}, 1.0};
    double expected = 0.0;
    for (std::size_t t = 1; t < y.size(); ++t) {
        expected += (y[t] - 1.0) * (y[t] - 1.0);
    }
    CHECK(css_loss(p0, y) == doctest::Approx(expected));

    // phi = 1, zero intercept on a constant series: no residual after the
    // first observation.
    CssParams p1{{1.0}, {}, {}, 0.0};
    CHECK(css_loss(p1, {1.0, 1.0, 1.0}) == doctest::Approx(0.0));
}

TEST_CASE("css_loss rejects mismatched regressors") {
    CssParams p{{0.5}, {}, {0.1}, 0.0};
    CHECK_THROWS_AS(css_loss(p, {1.0, 2.0, 3.0}, {{1.0, 2.0}}), DimensionMismatchError);
    CssParams no_beta{{0.5}, {}, {}, 0.0};
    CHECK_THROWS_AS(css_loss(no_beta, {1.0, 2.0, 3.0}, {{1.0, 2.0, 3.0}}),
                    DimensionMismatchError);
}

TEST_CASE("css_loss is invariant under year relabeling") {
    SimRng rng(11);
    std::vector<double> values(30);
    for (auto& v : values) {
        v = rng.gaussian();
    }
    const auto a = fit_arima(series_of(values, 1900), ArimaOrder{1, 0, 1});
    const auto b = fit_arima(series_of(values, 2100), ArimaOrder{1, 0, 1});
    CHECK(a.css == b.css);
    CHECK(a.phi[0] == b.phi[0]);
    CHECK(a.theta[0] == b.theta[0]);
    CHECK(a.intercept == b.intercept);
}

TEST_CASE("simplex minimizer converges on smooth objectives") {
    const auto quadratic = [](const std::vector<double>& x) {
        return (x[0] - 3.0) * (x[0] - 3.0) + (x[1] + 1.0) * (x[1] + 1.0);
    };
    const auto r = nelder_mead(quadratic, {0.0, 0.0});
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(r.x[1] == doctest::Approx(-1.0).epsilon(1e-6));

    const auto rosenbrock = [](const std::vector<double>& x) {
        const double a = 1.0 - x[0];
        const double b = x[1] - x[0] * x[0];
        return a * a + 100.0 * b * b;
    };
    const auto r2 = nelder_mead(rosenbrock, {-1.2, 1.0});
    CHECK(r2.converged);
    CHECK(r2.x[0] == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(r2.x[1] == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(r2.iterations <= 1000);  // 500 per dimension
}

TEST_CASE("order validation") {
    const ArimaOrder zero{0, 0, 0};
    const ArimaOrder neg{-1, 0, 1};
    const ArimaOrder deep{1, 3, 0};
    const ArimaOrder pure_diff{0, 1, 0};
    CHECK_THROWS_AS(zero.validate(), DimensionMismatchError);
    CHECK_THROWS_AS(neg.validate(), DimensionMismatchError);
    CHECK_THROWS_AS(deep.validate(), DimensionMismatchError);
    CHECK_NOTHROW(pure_diff.validate());
    const SeasonalOrder quarterly{0, 1, 0, 4};
    const SeasonalOrder degenerate{0, 0, 0, 1};
    CHECK_THROWS_AS(quarterly.validate(), SeasonalOrderError);
    CHECK_NOTHROW(degenerate.validate());
}

TEST_CASE("fit_arima recovers a known AR(1) from a frozen simulation") {
    const auto y = test_support::simulate_ar1(0.5, 1.0, 1.0, 200, 7);
    const auto model = fit_arima(series_of(y), ArimaOrder{1, 0, 0});
    CHECK(model.converged);
    CHECK(model.phi[0] > 0.45);
    CHECK(model.phi[0] < 0.55);
    CHECK(model.stationary);
}

TEST_CASE("fit_arima on white noise finds no structure") {
    SimRng rng(4);
    std::vector<double> y(200);
    for (auto& v : y) {
        v = rng.gaussian();
    }
    const auto model = fit_arima(series_of(y), ArimaOrder{1, 0, 0});
    CHECK(std::abs(model.phi[0]) < 0.15);
}

TEST_CASE("fit_arima on a constant series with d=1 collapses to zero") {
    std::vector<double> y(30, 42.0);
    const auto model = fit_arima(series_of(y), ArimaOrder{1, 1, 0});
    CHECK(std::abs(model.phi[0]) < 1e-6);
    CHECK(model.intercept == 0.0);
    CHECK(model.sigma2 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fit_arima rejects short series") {
    CHECK_THROWS_AS(fit_arima(series_of({1.0, 2.0, 3.0}), ArimaOrder{1, 0, 1}),
                    SeriesTooShortError);
}

TEST_CASE("simulation-recovery within two standard errors over 20 seeds") {
    // Two-standard-error coverage is 95.4% per draw, so over 20 frozen
    // seeds the contract is: nearly all inside 2 se, every one inside 3 se,
    // and the ensemble mean unbiased.
    const std::size_t n = 200;
    auto check_coverage = [](const std::vector<double>& estimates, double truth, double se) {
        int within = 0;
        double sum = 0.0;
        for (double est : estimates) {
            CHECK(std::abs(est - truth) < 3.0 * se);
            if (std::abs(est - truth) < 2.0 * se) {
                ++within;
            }
            sum += est;
        }
        CHECK(within >= 18);
        CHECK(std::abs(sum / static_cast<double>(estimates.size()) - truth) < 0.05);
    };

    SUBCASE("AR(1)") {
        const double phi = 0.5;
        const double se = std::sqrt((1.0 - phi * phi) / static_cast<double>(n));
        std::vector<double> estimates;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto y = test_support::simulate_ar1(phi, 1.0, 1.0, n, seed);
            estimates.push_back(fit_arima(series_of(y), ArimaOrder{1, 0, 0}).phi[0]);
        }
        check_coverage(estimates, phi, se);
    }
    SUBCASE("MA(1)") {
        const double theta = 0.5;
        const double se = std::sqrt((1.0 - theta * theta) / static_cast<double>(n));
        std::vector<double> estimates;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto y = test_support::simulate_ma1(theta, 0.5, 1.0, n, seed);
            estimates.push_back(fit_arima(series_of(y), ArimaOrder{0, 0, 1}).theta[0]);
        }
        check_coverage(estimates, theta, se);
    }
    SUBCASE("ARX(1)") {
        const double phi = 0.4;
        const double beta = 2.0;
        const double se_phi = std::sqrt((1.0 - phi * phi) / static_cast<double>(n));
        std::vector<double> estimates;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto sim = test_support::simulate_arx1(phi, 1.0, beta, 1.0, n, seed);
            const auto exog = series_of(sim.x, 2000);
            const auto model = fit_arima(series_of(sim.y, 2000), ArimaOrder{1, 0, 0}, {exog});
            estimates.push_back(model.phi[0]);
            // The regressor is informative; its coefficient resolves tightly.
            CHECK(std::abs(model.beta[0] - beta) < 0.3);
        }
        check_coverage(estimates, phi, se_phi);
    }
}

TEST_CASE("forecast of a constant series is flat with vanishing intervals") {
    std::vector<double> y(30, 42.0);
    const auto source = series_of(y, 2000);
    const auto model = fit_arima(source, ArimaOrder{1, 1, 0});
    const auto fc = forecast(model, source, 8);
    CHECK(fc.mean.start_year() == 2030);
    for (std::size_t h = 0; h < 8; ++h) {
        CHECK(fc.mean.values()[h] == doctest::Approx(42.0).epsilon(1e-9));
        CHECK(fc.half_width[h] == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("forecast intervals are non-decreasing in horizon") {
    for (std::uint64_t seed = 3; seed < 8; ++seed) {
        const auto y = test_support::simulate_ar1(0.6, 0.5, 1.0, 60, seed);
        const auto source = series_of(y);
        for (const auto order : {ArimaOrder{1, 0, 0}, ArimaOrder{1, 1, 0}, ArimaOrder{0, 1, 1}}) {
            const auto model = fit_arima(source, order);
            const auto fc = forecast(model, source, 12);
            for (std::size_t h = 1; h < fc.half_width.size(); ++h) {
                CHECK(fc.half_width[h] >= fc.half_width[h - 1]);
            }
        }
    }
}

TEST_CASE("forecast demands future regressors exactly when the model has beta") {
    const auto sim = test_support::simulate_arx1(0.4, 1.0, 2.0, 1.0, 60, 9);
    const auto exog = series_of(sim.x, 2000);
    const auto source = series_of(sim.y, 2000);
    const auto model = fit_arima(source, ArimaOrder{1, 0, 0}, {exog});
    CHECK_THROWS_AS(forecast(model, source, 3), MissingExogError);

    const auto plain = fit_arima(source, ArimaOrder{1, 0, 0});
    CHECK_THROWS_AS(forecast(plain, source, 3, {exog}), MissingExogError);

    const auto future = series_of(std::vector<double>(5, 0.0), source.end_year() + 1);
    CHECK_NOTHROW(forecast(model, source, 3, {future}));
}

TEST_CASE("strict stationarity mode rejects unit-root fits") {
    // A near-random-walk level series drives the AR(1) estimate toward 1.
    std::vector<double> y(60);
    double level = 0.0;
    SimRng rng(21);
    for (auto& v : y) {
        level += 1.0 + 0.01 * rng.gaussian();
        v = level;
    }
    FitOptions strict;
    strict.strict_stationarity = true;
    CHECK_THROWS_AS(fit_arima(series_of(y), ArimaOrder{1, 0, 0}, {}, strict),
                    NonStationaryError);
    // default mode records the flag instead
    const auto model = fit_arima(series_of(y), ArimaOrder{1, 0, 0});
    CHECK(!model.stationary);
}

TEST_CASE("stationarity detection") {
    CHECK(ar_stationary({0.5}));
    CHECK(!ar_stationary({1.0}));
    CHECK(!ar_stationary({1.2}));
    CHECK(ar_stationary({0.5, -0.3}));
    CHECK(!ar_stationary({0.9, 0.2}));
    CHECK(ar_stationary({}));
}

TEST_CASE("bundled demand fixtures forecast into the published bands") {
    const auto gasoline = load_series(std::string(BLENDSIM_TEST_DATA_DIR) + "/us_gasoline.csv",
                                      Unit::billion_gallons);
    CHECK(gasoline.start_year() == 2010);
    CHECK(gasoline.end_year() == 2023);
    CHECK(gasoline.at(2010) == 138.0);
    CHECK(gasoline.at(2023) == 133.8);
    const auto gas_model = fit_arima(gasoline, ArimaOrder{1, 1, 0});
    const auto gas_fc = forecast(gas_model, gasoline, 2035 - 2023);
    const double gas_2035 = gas_fc.mean.at(2035);
    CHECK(gas_2035 > 132.0);
    CHECK(gas_2035 < 137.0);

    const auto ethanol = load_series(std::string(BLENDSIM_TEST_DATA_DIR) + "/us_ethanol.csv",
                                     Unit::billion_gallons);
    CHECK(ethanol.at(2010) == 13.2);
    CHECK(ethanol.at(2023) == 15.1);
    const auto eth_model = fit_arima(ethanol, ArimaOrder{1, 1, 0});
    const auto eth_fc = forecast(eth_model, ethanol, 2035 - 2023);
    const double eth_2035 = eth_fc.mean.at(2035);
    CHECK(eth_2035 > 15.0);
    CHECK(eth_2035 < 16.8);
}
