#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pzf/graph.hpp"
#include "pzf/rational.hpp"

namespace pzf {

// One round of the probabilistic color change rule: for each white vertex w
// with at least one blue neighbor, the probability that w turns blue this
// round. Whites with no blue neighbor are omitted (probability 0).
struct RoundKernel {
    std::vector<std::pair<int, Rat>> probs;  // sorted by vertex
};

// Probability that blue u forces white neighbor w this round:
// |N[u] ∩ B| / deg(u). Exactly 1 when w is u's only white neighbor.
Rat force_probability(const Graph& g, int u, int w, const Bitset& blue);

// p_w = 1 - prod over blue neighbors u of (1 - Pr(u -> w)); fires in a round
// are independent.
RoundKernel round_kernel(const Graph& g, const Bitset& blue);

// Deterministic rules, applied simultaneously against the start-of-round set.
Bitset zf_round(const Graph& g, const Bitset& blue);
Bitset psd_round(const Graph& g, const Bitset& blue);

enum class Rule { zero_forcing, psd };

// Rounds until all blue under the chosen deterministic rule; nullopt if the
// fixpoint falls short of V(G).
std::optional<int> propagation_time(const Graph& g, const Bitset& z, Rule rule);

bool is_zero_forcing_set(const Graph& g, const Bitset& z);

}  // namespace pzf
