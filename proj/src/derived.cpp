#include "pzf/derived.hpp"

#include <stdexcept>
#include <vector>

namespace pzf {

Rat th_pzf(const Graph& g, const Bitset& z, const ChainCaps& caps) {
    return Rat(z.count()) + ept_exact(g, z, caps);
}

namespace {

// Enumerate nonempty subsets in increasing size order (lexicographic within
// a size), invoking f(set) -> bool; stop early when f returns false for the
// whole remainder of that size class (used for |Z| pruning).
template <class F>
void for_each_subset_by_size(int n, int max_size, F f) {
    for (int k = 1; k <= max_size; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        bool keep_size = true;
        while (true) {
            Bitset s(n);
            for (int v : comb) s.set(v);
            if (!f(s, k)) {
                keep_size = false;
                break;
            }
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!keep_size) break;
    }
}

template <class TimeTerm>
ThrottleResult throttle_search(const Graph& g, SearchMode mode, int subset_cap,
                               TimeTerm time_term) {
    if (!is_connected(g) || g.order() == 0)
        throw std::invalid_argument("throttling search requires a connected graph");
    const int n = g.order();
    ThrottleResult best;
    best.mode = mode;
    bool found = false;
    auto consider = [&](const Bitset& z) {
        Rat value = Rat(z.count()) + time_term(z);
        if (!found || value < best.value) {
            best.value = value;
            best.witness = z;
            found = true;
        }
    };

    if (mode == SearchMode::exhaustive) {
        if (n > subset_cap)
            throw ResourceError("exhaustive throttling cap " + std::to_string(subset_cap) +
                                " exceeded (n = " + std::to_string(n) +
                                "); use the heuristic mode");
        for_each_subset_by_size(n, n, [&](const Bitset& z, int size) {
            if (found && Rat(size) >= best.value) return false;  // time term >= 0
            consider(z);
            return true;
        });
    } else {
        for (int k = 1; k <= n; ++k) consider(k_center_seed(g, k));
        consider(greedy_dominating_set(g));
    }
    return best;
}

}  // namespace

ThrottleResult th_pzf_graph(const Graph& g, SearchMode mode, const ChainCaps& caps,
                            int subset_cap) {
    return throttle_search(g, mode, subset_cap,
                           [&](const Bitset& z) { return ept_exact(g, z, caps); });
}

ThrottleResult th_alpha(const Graph& g, const Rat& alpha, SearchMode mode,
                        const ChainCaps& caps, int subset_cap) {
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("confidence level must be in (0,1)");
    return throttle_search(g, mode, subset_cap, [&](const Bitset& z) {
        return Rat(confidence_time(g, z, alpha, caps));
    });
}

std::pair<int, Bitset> zero_forcing_number(const Graph& g, int subset_cap) {
    if (g.order() > subset_cap)
        throw ResourceError("zero forcing number cap " + std::to_string(subset_cap) +
                            " exceeded (n = " + std::to_string(g.order()) + ")");
    std::pair<int, Bitset> result{-1, Bitset(g.order())};
    for_each_subset_by_size(g.order(), g.order(), [&](const Bitset& z, int) {
        if (is_zero_forcing_set(g, z)) {
            result = {z.count(), z};
            return false;
        }
        return true;
    });
    if (result.first < 0) throw std::logic_error("no zero forcing set found");
    return result;
}

KangYiResult kang_yi_probability(const Graph& g, const Bitset& b, const ChainCaps& caps) {
    if (b.empty()) return {0, Rat(0)};
    StateChain chain = build_chain(g, b, caps);

    // Zero-forcing-set verdicts repeat across rounds; cache per state.
    std::vector<signed char> verdict(chain.size(), -1);
    auto is_zfs = [&](int s) {
        if (verdict[s] < 0)
            verdict[s] = is_zero_forcing_set(chain.graph, chain.states[s]) ? 1 : 0;
        return verdict[s] == 1;
    };

    std::vector<Rat> mass(chain.size(), Rat(0));
    mass[0] = 1;
    for (int round = 0; round <= g.order() + 1; ++round) {
        Rat hit(0);
        for (std::size_t s = 0; s < chain.size(); ++s)
            if (mass[s] > 0 && is_zfs(static_cast<int>(s))) hit += mass[s];
        if (hit > 0) return {round, hit};
        step_round(chain, mass);
    }
    throw std::logic_error("kang_yi_probability: no zero forcing set reachable");
}

}  // namespace pzf
