#pragma once

#include <optional>
#include <vector>

#include "blendsim/annual_series.hpp"

namespace blendsim {

/// Non-seasonal ARIMA order. A (0,0,0) model carries no structure and is
/// rejected.
struct ArimaOrder {
    int p = 1;
    int d = 1;
    int q = 0;

    void validate() const;
};

/// Seasonal orders are accepted in configuration for interface compatibility
/// but must be degenerate: annual data has no sub-annual cycle to model.
struct SeasonalOrder {
    int P = 0;
    int D = 0;
    int Q = 0;
    int s = 1;

    void validate() const;  // throws SeasonalOrderError unless (0,0,0,1)
};

struct ArimaModel {
    ArimaOrder order;
    std::vector<double> phi;    // AR coefficients, size p
    std::vector<double> theta;  // MA coefficients, size q
    std::vector<double> beta;   // one per exogenous regressor
    double intercept = 0.0;     // fitted only when d == 0
    double sigma2 = 0.0;
    double css = 0.0;
    int train_start_year = 0;
    int train_end_year = 0;
    bool converged = true;   // false: iteration cap hit with simplex diameter > 1e-4
    bool stationary = true;  // AR polynomial roots strictly outside the unit circle
    std::vector<std::vector<double>> exog_train;  // aligned with the differenced series
};

/// d-th difference of a value vector; output is shorter by d.
std::vector<double> difference(const std::vector<double>& values, int d);

/// Series-level difference. The result holds year-over-year changes, so the
/// unit's level range checks do not apply to it.
AnnualSeries difference(const AnnualSeries& series, int d);

/// Exact inverse of difference(): heads must hold the first value of each
/// differencing stage (original first, then each successive difference).
std::vector<double> integrate(const std::vector<double>& diffed,
                              const std::vector<double>& heads);

/// Retained stage heads for integrate().
std::vector<double> difference_heads(const std::vector<double>& values, int d);

struct CssParams {
    std::vector<double> phi;
    std::vector<double> theta;
    std::vector<double> beta;
    double intercept = 0.0;
};

/// Conditional sum of squared one-step-ahead residuals on the differenced
/// scale. The first p observations condition the recursion and pre-sample MA
/// residuals are zero; the sum runs over the remaining n - p residuals.
double css_loss(const CssParams& params, const std::vector<double>& y,
                const std::vector<std::vector<double>>& exog = {});

struct FitOptions {
    bool strict_stationarity = false;  // throw instead of flagging
};

/// Estimate by conditional least squares via Nelder-Mead. Deterministic:
/// initial coefficients are all 0.1 and the intercept (d == 0 only) starts
/// at the differenced-series mean. Differencing absorbs the level, so no
/// intercept is fitted when d >= 1. A vanishing ridge term (1e-10 on the
/// coefficients) resolves directions the data leaves unidentified toward
/// zero without moving any identified estimate.
ArimaModel fit_arima(const AnnualSeries& series, const ArimaOrder& order,
                     const std::vector<AnnualSeries>& exog = {}, const FitOptions& opts = {});

struct ForecastResult {
    AnnualSeries mean;
    /// 95% interval half-widths per step: 1.96 * sqrt(sigma2 * sum psi_j^2),
    /// psi being the integrated moving-average weights truncated at the step.
    std::vector<double> half_width;
};

/// Iterated one-step-ahead forecasts re-integrated through d. exog_future
/// must cover the horizon years iff the model has beta coefficients.
ForecastResult forecast(const ArimaModel& model, const AnnualSeries& source, int horizon,
                        const std::vector<AnnualSeries>& exog_future = {});

/// True when every reflection coefficient of the AR polynomial lies inside
/// the unit interval (Levinson-Durbin down-recursion).
bool ar_stationary(const std::vector<double>& phi);

}  // namespace blendsim
