#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pzf/forcing.hpp"
#include "pzf/graph.hpp"
#include "pzf/rational.hpp"

namespace pzf {

// Guard rails for exact state-space work; exceeding one raises ResourceError
// and the caller is expected to fall back to Monte Carlo.
struct ChainCaps {
    std::size_t max_states = 2'000'000;
    int max_frontier = 24;  // white vertices with 0 < p < 1 in one round
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Absorbing Markov chain over the blue sets reachable from a start set.
// states[0] is the start, the all-blue state is absorbing, and every
// transition target is a strict superset of its source (self-loops are kept
// separately). Outgoing probabilities sum to exactly 1.
struct StateChain {
    Graph graph;
    std::vector<Bitset> states;
    std::vector<std::vector<std::pair<int, Rat>>> trans;  // excludes self-loop
    std::vector<Rat> self_loop;
    int all_blue = -1;

    std::size_t size() const { return states.size(); }
};

// One-round successor distribution of a blue set: vertices forced with
// probability one are factored out, then all subsets of the remaining
// frontier are enumerated. Includes the no-change outcome when present.
std::vector<std::pair<Bitset, Rat>> successor_distribution(const Graph& g,
                                                           const Bitset& blue,
                                                           const ChainCaps& caps = {});

// Requires z nonempty and meeting every connected component of g.
StateChain build_chain(const Graph& g, const Bitset& z, const ChainCaps& caps = {});

// Expected rounds to absorption, by backward substitution in decreasing
// popcount order. Exact.
Rat ept_of_chain(const StateChain& chain);
Rat ept_exact(const Graph& g, const Bitset& z, const ChainCaps& caps = {});

// min over single-vertex starts; ties go to the lowest vertex index.
std::pair<Rat, int> ept_graph(const Graph& g, const ChainCaps& caps = {});

// Mass per state after advancing `rounds` steps from the start state.
std::vector<Rat> round_distribution(const StateChain& chain, int rounds);
void step_round(const StateChain& chain, std::vector<Rat>& mass);

// Probability all of g is blue after `rounds` rounds from b; 0 for empty b.
Rat lround_probability(const Graph& g, const Bitset& b, int rounds,
                       const ChainCaps& caps = {});
// All-blue mass after each of 0..max_rounds rounds.
std::vector<Rat> lround_profile(const StateChain& chain, int max_rounds);
// Per-round max over all single-vertex starts.
std::vector<Rat> lround_graph_profile(const Graph& g, int max_rounds,
                                      const ChainCaps& caps = {});

// Least t with all-blue probability >= alpha (exact comparison).
int confidence_time(const Graph& g, const Bitset& z, const Rat& alpha,
                    const ChainCaps& caps = {});
// min over single-vertex starts; ties go to the lowest vertex index.
std::pair<int, int> confidence_graph(const Graph& g, const Rat& alpha,
                                     const ChainCaps& caps = {});

// binary64 mirror of the exact chain for cases whose rationals blow up.
// Agrees with the exact values to ~1e-9 on well-conditioned chains.
struct FloatChain {
    std::vector<std::vector<std::pair<int, double>>> trans;
    std::vector<double> self_loop;
    std::vector<int> popcounts;
    int all_blue = -1;
};
FloatChain to_float(const StateChain& chain);
double ept_of_chain_float(const FloatChain& chain);
double lround_float(const FloatChain& chain, int rounds);

}  // namespace pzf
