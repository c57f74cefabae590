#pragma once

#include "blendsim/engine.hpp"
#include "blendsim/scenario.hpp"

namespace blendsim {

/// A Monte Carlo run failure carrying the failing run index.
class McRunError : public Error {
public:
    McRunError(std::uint64_t run_index, const std::string& msg)
        : Error("mc run " + std::to_string(run_index) + ": " + msg), run_index_(run_index) {}
    std::uint64_t run_index() const { return run_index_; }

private:
    std::uint64_t run_index_;
};

/// Pointer to the numeric scenario field a distribution target names.
/// Throws UnresolvedTarget for unknown paths.
double* resolve_target(Scenario& scenario, const std::string& path);

/// Deep copy of the base scenario with every distribution target perturbed
/// by an independent keyed draw. Identical (seed, run_index) always produce
/// the identical scenario; draws that break a scenario invariant are redrawn
/// up to 100 times before InvariantViolation.
Scenario sample_scenario(const Scenario& base, const McSpec& spec, std::uint64_t run_index);

/// Percentile bands of every reported annual series across the runs.
struct McBand {
    std::string table;
    std::string column;
    /// values[percentile_index][year_index]
    std::vector<std::vector<double>> values;
};

struct McReport {
    int start_year = 0;
    int end_year = 0;
    std::vector<double> percentiles;
    std::vector<McBand> bands;
    std::uint64_t seed = 0;
    int n_runs = 0;
};

/// Execute the engine once per sampled scenario. Runs are independent and
/// may execute on up to `jobs` threads; aggregation is keyed by run index,
/// so the report is identical to sequential execution.
McReport run_mc(const Scenario& base, const McSpec& spec, int jobs = 1);

/// Linear-interpolation quantile of a sample (values are copied and sorted).
double quantile(std::vector<double> values, double percentile);

}  // namespace blendsim
