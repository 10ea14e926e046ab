#pragma once

#include <utility>

#include "pzf/chain.hpp"
#include "pzf/graph.hpp"
#include "pzf/rational.hpp"

namespace pzf {

enum class SearchMode { exhaustive, heuristic };

struct ThrottleResult {
    Rat value;
    Bitset witness;
    SearchMode mode = SearchMode::exhaustive;
};

// |Z| + ept(G, Z).
Rat th_pzf(const Graph& g, const Bitset& z, const ChainCaps& caps = {});

// Exhaustive mode enumerates all nonempty Z for n <= subset_cap, pruning
// subsets whose size alone exceeds the best value found. Heuristic mode
// evaluates k-center seeds for k = 1..n plus the greedy dominating set.
ThrottleResult th_pzf_graph(const Graph& g, SearchMode mode, const ChainCaps& caps = {},
                            int subset_cap = 12);

// Same searches with the time term confidence_time(g, Z, alpha).
ThrottleResult th_alpha(const Graph& g, const Rat& alpha, SearchMode mode,
                        const ChainCaps& caps = {}, int subset_cap = 12);

// Smallest zero forcing set, searched in increasing size; n <= subset_cap.
std::pair<int, Bitset> zero_forcing_number(const Graph& g, int subset_cap = 12);

struct KangYiResult {
    int k0 = 0;          // first round at which a zero forcing set can be blue
    Rat probability;     // mass on zero-forcing-set states at round k0
};

// Kang-Yi P_B(G). Returns probability 0 for empty B. Not monotone in B.
KangYiResult kang_yi_probability(const Graph& g, const Bitset& b,
                                 const ChainCaps& caps = {});

}  // namespace pzf
