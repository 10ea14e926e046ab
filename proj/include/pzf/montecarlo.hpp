#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pzf/graph.hpp"

namespace pzf {

struct TrialOutcome {
    int rounds = 0;
    std::vector<int> blue_counts;  // per-round blue totals, if recording was requested
};

struct McOptions {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    int threads = 1;
    int round_cap = 1'000'000;
    std::vector<double> quantiles;  // extra empirical quantiles to report
};

// Point estimate with standard error. All aggregation is over exact integer
// sums, so a fixed (seed, trials) pair produces a byte-identical report no
// matter how many worker threads ran the trials.
struct EstimateReport {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::map<double, int> quantiles;
};

// One run of the probabilistic zero forcing process. Draws are keyed by
// (seed, trial, round, vertex); kernel probabilities are evaluated in
// binary64.
TrialOutcome simulate_trial(const Graph& g, const Bitset& z, std::uint64_t seed,
                            std::uint64_t trial, int round_cap = 1'000'000,
                            bool record_trajectory = false);

EstimateReport estimate_ept(const Graph& g, const Bitset& z, const McOptions& opts);
// Fraction of trials fully blue by round `rounds`, with binomial SE.
EstimateReport estimate_lround(const Graph& g, const Bitset& b, int rounds,
                               const McOptions& opts);
// Empirical alpha-quantile of the propagation time.
int estimate_confidence_time(const Graph& g, const Bitset& z, double alpha,
                             const McOptions& opts);

}  // namespace pzf
