#include "blendsim/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "blendsim/nelder_mead.hpp"

namespace blendsim {

namespace {

constexpr double kRidgeTieBreak = 1e-10;
constexpr double kNonConvergenceDiameter = 1e-4;

std::vector<double> one_step_residuals(const CssParams& params, const std::vector<double>& y,
                                       const std::vector<std::vector<double>>& exog) {
    const std::size_t p = params.phi.size();
    const std::size_t q = params.theta.size();
    const std::size_t n = y.size();
    std::vector<double> resid(n, 0.0);
    for (std::size_t t = p; t < n; ++t) {
        double pred = params.intercept;
        for (std::size_t i = 0; i < p; ++i) {
            pred += params.phi[i] * y[t - 1 - i];
        }
        for (std::size_t j = 0; j < q; ++j) {
            if (t >= j + 1) {
                pred += params.theta[j] * resid[t - 1 - j];
            }
        }
        for (std::size_t k = 0; k < exog.size(); ++k) {
            pred += params.beta[k] * exog[k][t];
        }
        resid[t] = y[t] - pred;
    }
    return resid;
}

CssParams unpack(const std::vector<double>& x, const ArimaOrder& order, std::size_t n_exog,
                 bool with_mean) {
    CssParams params;
    std::size_t idx = 0;
    params.phi.assign(x.begin(), x.begin() + order.p);
    idx += static_cast<std::size_t>(order.p);
    params.theta.assign(x.begin() + idx, x.begin() + idx + order.q);
    idx += static_cast<std::size_t>(order.q);
    params.beta.assign(x.begin() + idx, x.begin() + idx + n_exog);
    idx += n_exog;
    params.intercept = with_mean ? x[idx] : 0.0;
    return params;
}

/// psi weights of the ARIMA process up to lag `count - 1`: the ARMA
/// MA(infinity) recursion, then d cumulative integrations.
std::vector<double> psi_weights(const ArimaModel& model, std::size_t count) {
    std::vector<double> psi(count, 0.0);
    if (count == 0) {
        return psi;
    }
    psi[0] = 1.0;
    for (std::size_t j = 1; j < count; ++j) {
        double w = j <= model.theta.size() ? model.theta[j - 1] : 0.0;
        const std::size_t pmax = std::min<std::size_t>(j, model.phi.size());
        for (std::size_t i = 1; i <= pmax; ++i) {
            w += model.phi[i - 1] * psi[j - i];
        }
        psi[j] = w;
    }
    for (int pass = 0; pass < model.order.d; ++pass) {
        for (std::size_t j = 1; j < count; ++j) {
            psi[j] += psi[j - 1];
        }
    }
    return psi;
}

}  // namespace

void ArimaOrder::validate() const {
    if (p < 0 || q < 0) {
        throw DimensionMismatchError("AR and MA orders must be non-negative");
    }
    if (d < 0 || d > 2) {
        throw DimensionMismatchError("differencing order must be 0, 1 or 2");
    }
    if (p + q < 1 && d < 1) {
        throw DimensionMismatchError("order (0,0,0) carries no model structure");
    }
}

void SeasonalOrder::validate() const {
    if (P != 0 || D != 0 || Q != 0 || s != 1) {
        std::ostringstream os;
        os << "seasonal order (" << P << "," << D << "," << Q << "," << s
           << ") is not representable on annual data; only the degenerate (0,0,0,1) is accepted";
        throw SeasonalOrderError(os.str());
    }
}

std::vector<double> difference(const std::vector<double>& values, int d) {
    if (static_cast<int>(values.size()) <= d) {
        std::ostringstream os;
        os << "series of length " << values.size() << " is too short for d=" << d;
        throw SeriesTooShortError(os.str());
    }
    std::vector<double> out = values;
    for (int pass = 0; pass < d; ++pass) {
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            out[i] = out[i + 1] - out[i];
        }
        out.pop_back();
    }
    return out;
}

AnnualSeries difference(const AnnualSeries& series, int d) {
    auto values = difference(series.values(), d);
    if (d == 0) {
        return series;
    }
    return AnnualSeries::delta(series.start_year() + d, std::move(values), series.unit());
}

std::vector<double> difference_heads(const std::vector<double>& values, int d) {
    std::vector<double> heads;
    std::vector<double> stage = values;
    for (int pass = 0; pass < d; ++pass) {
        heads.push_back(stage[0]);
        stage = difference(stage, 1);
    }
    return heads;
}

std::vector<double> integrate(const std::vector<double>& diffed,
                              const std::vector<double>& heads) {
    std::vector<double> out = diffed;
    for (auto it = heads.rbegin(); it != heads.rend(); ++it) {
        std::vector<double> level(out.size() + 1);
        level[0] = *it;
        for (std::size_t i = 0; i < out.size(); ++i) {
            level[i + 1] = level[i] + out[i];
        }
        out = std::move(level);
    }
    return out;
}

double css_loss(const CssParams& params, const std::vector<double>& y,
                const std::vector<std::vector<double>>& exog) {
    if (params.beta.size() != exog.size()) {
        throw DimensionMismatchError("beta count does not match regressor count");
    }
    for (const auto& x : exog) {
        if (x.size() != y.size()) {
            throw DimensionMismatchError("regressor length does not match series length");
        }
    }
    if (y.size() <= params.phi.size()) {
        throw SeriesTooShortError("series shorter than AR order");
    }
    auto resid = one_step_residuals(params, y, exog);
    double loss = 0.0;
    for (std::size_t t = params.phi.size(); t < resid.size(); ++t) {
        loss += resid[t] * resid[t];
    }
    return loss;
}

bool ar_stationary(const std::vector<double>& phi) {
    // Levinson-Durbin down-recursion: stationary iff every reflection
    // coefficient has magnitude < 1.
    std::vector<double> a = phi;
    for (std::size_t k = a.size(); k >= 1; --k) {
        const double r = a[k - 1];
        if (std::abs(r) >= 1.0) {
            return false;
        }
        std::vector<double> prev(k - 1);
        const double denom = 1.0 - r * r;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            prev[i] = (a[i] + r * a[k - 2 - i]) / denom;
        }
        a = std::move(prev);
    }
    return true;
}

ArimaModel fit_arima(const AnnualSeries& series, const ArimaOrder& order,
                     const std::vector<AnnualSeries>& exog, const FitOptions& opts) {
    order.validate();
    const auto y = difference(series.values(), order.d);
    const std::size_t n = y.size();
    const std::size_t min_len = 3 * static_cast<std::size_t>(order.p + order.q + 1);
    if (n < min_len) {
        std::ostringstream os;
        os << "need at least " << min_len << " observations after differencing, have " << n;
        throw SeriesTooShortError(os.str());
    }

    // Regressors align year-by-year with the differenced series.
    std::vector<std::vector<double>> x;
    for (const auto& reg : exog) {
        if (reg.start_year() > series.start_year() + order.d ||
            reg.end_year() < series.end_year()) {
            throw DimensionMismatchError("regressor does not cover the differenced span");
        }
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = reg.at(series.start_year() + order.d + static_cast<int>(i));
        }
        x.push_back(std::move(col));
    }

    const bool with_mean = order.d == 0;
    const std::size_t n_coef =
        static_cast<std::size_t>(order.p + order.q) + x.size();
    std::vector<double> x0(n_coef + (with_mean ? 1 : 0), 0.1);
    if (with_mean) {
        x0.back() = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    }

    auto objective = [&](const std::vector<double>& v) {
        const auto params = unpack(v, order, x.size(), with_mean);
        double ridge = 0.0;
        for (std::size_t i = 0; i < n_coef; ++i) {
            ridge += v[i] * v[i];
        }
        return css_loss(params, y, x) + kRidgeTieBreak * ridge;
    };

    const auto result = nelder_mead(objective, std::move(x0));
    const auto params = unpack(result.x, order, x.size(), with_mean);

    ArimaModel model;
    model.order = order;
    model.phi = params.phi;
    model.theta = params.theta;
    model.beta = params.beta;
    model.intercept = params.intercept;
    model.css = css_loss(params, y, x);
    model.sigma2 = model.css / static_cast<double>(n - static_cast<std::size_t>(order.p));
    model.train_start_year = series.start_year();
    model.train_end_year = series.end_year();
    model.converged = result.converged || result.diameter <= kNonConvergenceDiameter;
    model.stationary = ar_stationary(model.phi);
    model.exog_train = std::move(x);
    if (opts.strict_stationarity && !model.stationary) {
        throw NonStationaryError("fitted AR polynomial has a root inside the unit circle");
    }
    return model;
}

ForecastResult forecast(const ArimaModel& model, const AnnualSeries& source, int horizon,
                        const std::vector<AnnualSeries>& exog_future) {
    if (horizon < 1) {
        throw DimensionMismatchError("forecast horizon must be at least 1");
    }
    if (!model.beta.empty() && exog_future.size() != model.beta.size()) {
        throw MissingExogError("model has exogenous coefficients but no matching future regressors");
    }
    if (model.beta.empty() && !exog_future.empty()) {
        throw MissingExogError("future regressors supplied for a model without beta coefficients");
    }

    const int d = model.order.d;
    const auto w = difference(source.values(), d);
    const std::size_t n = w.size();

    std::vector<std::vector<double>> exog_hist = model.exog_train;
    for (const auto& col : exog_hist) {
        if (col.size() != n) {
            throw DimensionMismatchError("stored training regressors do not align with source");
        }
    }

    CssParams params{model.phi, model.theta, model.beta, model.intercept};
    const auto resid = one_step_residuals(params, w, exog_hist);

    const int first_year = source.end_year() + 1;
    std::vector<double> w_ext = w;
    std::vector<double> e_ext = resid;
    std::vector<double> mean_diff(static_cast<std::size_t>(horizon));
    for (int h = 0; h < horizon; ++h) {
        const std::size_t t = n + static_cast<std::size_t>(h);
        double pred = model.intercept;
        for (std::size_t i = 0; i < model.phi.size(); ++i) {
            if (t >= i + 1) {
                pred += model.phi[i] * w_ext[t - 1 - i];
            }
        }
        for (std::size_t j = 0; j < model.theta.size(); ++j) {
            if (t >= j + 1) {
                pred += model.theta[j] * e_ext[t - 1 - j];
            }
        }
        for (std::size_t k = 0; k < model.beta.size(); ++k) {
            pred += model.beta[k] * exog_future[k].at(first_year + h);
        }
        w_ext.push_back(pred);
        e_ext.push_back(0.0);
        mean_diff[static_cast<std::size_t>(h)] = pred;
    }

    // Re-integrate through d using the running tail of each level stage.
    std::vector<double> tails(static_cast<std::size_t>(d));
    {
        std::vector<double> stage = source.values();
        for (int k = 0; k < d; ++k) {
            tails[static_cast<std::size_t>(k)] = stage.back();
            stage = difference(stage, 1);
        }
    }
    std::vector<double> mean(static_cast<std::size_t>(horizon));
    for (int h = 0; h < horizon; ++h) {
        double v = mean_diff[static_cast<std::size_t>(h)];
        for (int k = d - 1; k >= 0; --k) {
            v = tails[static_cast<std::size_t>(k)] + v;
            tails[static_cast<std::size_t>(k)] = v;
        }
        mean[static_cast<std::size_t>(h)] = v;
    }

    const auto psi = psi_weights(model, static_cast<std::size_t>(horizon));
    std::vector<double> half(static_cast<std::size_t>(horizon));
    double acc = 0.0;
    for (int h = 0; h < horizon; ++h) {
        acc += psi[static_cast<std::size_t>(h)] * psi[static_cast<std::size_t>(h)];
        half[static_cast<std::size_t>(h)] = 1.96 * std::sqrt(model.sigma2 * acc);
    }

    return ForecastResult{AnnualSeries(first_year, std::move(mean), source.unit()), half};
}

}  // namespace blendsim
