#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace blendsim {

struct MinimizeResult {
    std::vector<double> x;
    double fx = 0.0;
    bool converged = false;     // simplex diameter fell below diameter_tol
    double diameter = 0.0;      // final simplex diameter (max pairwise inf-norm)
    std::size_t iterations = 0;
};

struct MinimizeOptions {
    double initial_step = 0.2;        // per-coordinate offset for the initial simplex
    double diameter_tol = 1e-8;       // convergence: simplex diameter below this
    std::size_t max_iterations_per_dim = 500;
};

/// Derivative-free Nelder-Mead simplex minimizer. Deterministic: the initial
/// simplex is x0 plus one vertex per coordinate offset by initial_step, and
/// all tie-breaking is index-ordered.
MinimizeResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                           std::vector<double> x0, const MinimizeOptions& opts = {});

}  // namespace blendsim
