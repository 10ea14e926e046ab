#include "pzf/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "pzf/rng.hpp"

namespace pzf {

TrialOutcome simulate_trial(const Graph& g, const Bitset& z, std::uint64_t seed,
                            std::uint64_t trial, int round_cap,
                            bool record_trajectory) {
    if (z.empty()) throw std::invalid_argument("simulate_trial: empty start set");
    for (const Bitset& comp : components(g, Bitset::all(g.order())))
        if (!comp.intersects(z))
            throw std::invalid_argument("simulate_trial: start set misses a component");

    const int n = g.order();
    Bitset blue = z;
    int blue_count = blue.count();
    TrialOutcome out;
    if (record_trajectory) out.blue_counts.push_back(blue_count);

    std::uint64_t trial_key = hash4(seed, kStreamTrial, trial, 0);
    std::vector<double> miss_factor(n, 1.0);  // per blue u: 1 - |N[u] ∩ B| / deg u
    int round = 0;
    while (blue_count < n) {
        if (round >= round_cap)
            throw std::logic_error("simulate_trial: round cap exceeded (" +
                                   std::to_string(round_cap) + ")");
        ++round;
        blue.for_each([&](int u) {
            int closed_blue = g.neighbors(u).count_and(blue) + 1;
            miss_factor[u] = double(g.degree(u) - closed_blue) / double(g.degree(u));
        });
        Bitset next = blue;
        for (int w = 0; w < n; ++w) {
            if (blue.test(w)) continue;
            Bitset firing = g.neighbors(w) & blue;
            if (firing.empty()) continue;
            double miss = 1.0;
            firing.for_each([&](int u) { miss *= miss_factor[u]; });
            if (uniform01(trial_key, round, w, 1) < 1.0 - miss) {
                next.set(w);
                ++blue_count;
            }
        }
        blue = next;
        if (record_trajectory) out.blue_counts.push_back(blue_count);
    }
    out.rounds = round;
    return out;
}

namespace {

struct Accumulator {
    std::uint64_t sum = 0;
    unsigned __int128 sum_sq = 0;
    std::map<int, std::uint64_t> histogram;

    void add(int rounds) {
        sum += static_cast<std::uint64_t>(rounds);
        sum_sq += static_cast<unsigned __int128>(rounds) * rounds;
        ++histogram[rounds];
    }
    void merge(const Accumulator& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
        for (auto& [r, c] : o.histogram) histogram[r] += c;
    }
};

Accumulator run_trials(const Graph& g, const Bitset& z, const McOptions& opts) {
    if (opts.trials < 1) throw std::invalid_argument("need at least one trial");
    int threads = std::max(1, opts.threads);
    std::vector<Accumulator> parts(threads);
    auto worker = [&](int t) {
        for (std::uint64_t i = t; i < opts.trials; i += threads)
            parts[t].add(
                simulate_trial(g, z, opts.seed, i, opts.round_cap, false).rounds);
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    Accumulator total;
    for (auto& part : parts) total.merge(part);
    return total;
}

int histogram_quantile(const std::map<int, std::uint64_t>& hist, std::uint64_t trials,
                       double alpha) {
    auto needed =
        static_cast<std::uint64_t>(std::ceil(alpha * static_cast<double>(trials)));
    if (needed < 1) needed = 1;
    std::uint64_t cum = 0;
    for (auto& [rounds, cnt] : hist) {
        cum += cnt;
        if (cum >= needed) return rounds;
    }
    return hist.empty() ? 0 : hist.rbegin()->first;
}

}  // namespace

EstimateReport estimate_ept(const Graph& g, const Bitset& z, const McOptions& opts) {
    if (opts.trials < 2) throw std::invalid_argument("estimate_ept needs >= 2 trials");
    Accumulator acc = run_trials(g, z, opts);
    EstimateReport rep;
    rep.trials = opts.trials;
    rep.seed = opts.seed;
    double n = static_cast<double>(opts.trials);
    rep.mean = static_cast<double>(acc.sum) / n;
    double sum_sq = static_cast<double>(acc.sum_sq);
    double var = (sum_sq - n * rep.mean * rep.mean) / (n - 1.0);
    if (var < 0) var = 0;  // exact-integer inputs; guards rounding at variance 0
    rep.std_error = std::sqrt(var / n);
    for (double q : opts.quantiles)
        rep.quantiles[q] = histogram_quantile(acc.histogram, opts.trials, q);
    return rep;
}

EstimateReport estimate_lround(const Graph& g, const Bitset& b, int rounds,
                               const McOptions& opts) {
    if (opts.trials < 2) throw std::invalid_argument("estimate_lround needs >= 2 trials");
    if (rounds < 0) throw std::invalid_argument("negative round count");
    if (b.empty()) {
        EstimateReport rep;
        rep.trials = opts.trials;
        rep.seed = opts.seed;
        return rep;
    }
    Accumulator acc = run_trials(g, b, opts);
    std::uint64_t done = 0;
    for (auto& [r, c] : acc.histogram)
        if (r <= rounds) done += c;
    EstimateReport rep;
    rep.trials = opts.trials;
    rep.seed = opts.seed;
    double n = static_cast<double>(opts.trials);
    rep.mean = static_cast<double>(done) / n;
    rep.std_error = std::sqrt(rep.mean * (1.0 - rep.mean) / n);
    return rep;
}

int estimate_confidence_time(const Graph& g, const Bitset& z, double alpha,
                             const McOptions& opts) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("confidence level must be in (0,1)");
    Accumulator acc = run_trials(g, z, opts);
    return histogram_quantile(acc.histogram, opts.trials, alpha);
}

}  // namespace pzf
