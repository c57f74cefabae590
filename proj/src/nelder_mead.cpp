#include "blendsim/nelder_mead.hpp"

#include <algorithm>
#include <cmath>

namespace blendsim {

namespace {

double simplex_diameter(const std::vector<std::vector<double>>& verts) {
    double diam = 0.0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            double d = 0.0;
            for (std::size_t k = 0; k < verts[i].size(); ++k) {
                d = std::max(d, std::abs(verts[i][k] - verts[j][k]));
            }
            diam = std::max(diam, d);
        }
    }
    return diam;
}

}  // namespace

MinimizeResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                           std::vector<double> x0, const MinimizeOptions& opts) {
    const std::size_t n = x0.size();
    const double alpha = 1.0;   // reflection
    const double gamma = 2.0;   // expansion
    const double rho = 0.5;     // contraction
    const double sigma = 0.5;   // shrink

    std::vector<std::vector<double>> verts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) {
        verts[i + 1][i] += opts.initial_step;
    }
    std::vector<double> fvals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        fvals[i] = f(verts[i]);
    }

    const std::size_t max_iter = opts.max_iterations_per_dim * std::max<std::size_t>(n, 1);
    MinimizeResult result;

    std::vector<std::size_t> order(n + 1);
    for (result.iterations = 0; result.iterations < max_iter; ++result.iterations) {
        for (std::size_t i = 0; i <= n; ++i) {
            order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fvals[a] < fvals[b]; });

        result.diameter = simplex_diameter(verts);
        if (result.diameter < opts.diameter_tol) {
            result.converged = true;
            break;
        }

        const std::size_t best = order[0];
        const std::size_t second_worst = order[n - 1];
        const std::size_t worst = order[n];

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) {
                centroid[k] += verts[i][k];
            }
        }
        for (double& c : centroid) {
            c /= static_cast<double>(n);
        }

        std::vector<double> reflected(n);
        for (std::size_t k = 0; k < n; ++k) {
            reflected[k] = centroid[k] + alpha * (centroid[k] - verts[worst][k]);
        }
        const double f_reflected = f(reflected);

        if (f_reflected < fvals[best]) {
            std::vector<double> expanded(n);
            for (std::size_t k = 0; k < n; ++k) {
                expanded[k] = centroid[k] + gamma * (reflected[k] - centroid[k]);
            }
            const double f_expanded = f(expanded);
            if (f_expanded < f_reflected) {
                verts[worst] = std::move(expanded);
                fvals[worst] = f_expanded;
            } else {
                verts[worst] = std::move(reflected);
                fvals[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < fvals[second_worst]) {
            verts[worst] = std::move(reflected);
            fvals[worst] = f_reflected;
            continue;
        }

        std::vector<double> contracted(n);
        if (f_reflected < fvals[worst]) {
            for (std::size_t k = 0; k < n; ++k) {
                contracted[k] = centroid[k] + rho * (reflected[k] - centroid[k]);
            }
        } else {
            for (std::size_t k = 0; k < n; ++k) {
                contracted[k] = centroid[k] + rho * (verts[worst][k] - centroid[k]);
            }
        }
        const double f_contracted = f(contracted);
        if (f_contracted < std::min(f_reflected, fvals[worst])) {
            verts[worst] = std::move(contracted);
            fvals[worst] = f_contracted;
            continue;
        }

        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < n; ++k) {
                verts[i][k] = verts[best][k] + sigma * (verts[i][k] - verts[best][k]);
            }
            fvals[i] = f(verts[i]);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (fvals[i] < fvals[best]) {
            best = i;
        }
    }
    result.x = verts[best];
    result.fx = fvals[best];
    if (!result.converged) {
        result.diameter = simplex_diameter(verts);
    }
    return result;
}

}  // namespace blendsim
