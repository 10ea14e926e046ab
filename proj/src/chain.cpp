#include "pzf/chain.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace pzf {

std::vector<std::pair<Bitset, Rat>> successor_distribution(const Graph& g,
                                                           const Bitset& blue,
                                                           const ChainCaps& caps) {
    RoundKernel kernel = round_kernel(g, blue);
    Bitset base = blue;
    std::vector<std::pair<int, Rat>> random;
    for (auto& [w, p] : kernel.probs) {
        if (p == 1)
            base.set(w);  // deterministic forces happen in every outcome
        else
            random.emplace_back(w, p);
    }
    if (static_cast<int>(random.size()) > caps.max_frontier)
        throw ResourceError("probabilistic frontier of " + std::to_string(random.size()) +
                            " exceeds cap " + std::to_string(caps.max_frontier) +
                            "; use the Monte Carlo engine (--mode mc)");

    std::vector<std::pair<Bitset, Rat>> out;
    out.reserve(std::size_t(1) << random.size());
    // DFS over frontier subsets, sharing partial products across branches.
    auto expand = [&](auto&& self, std::size_t i, Bitset target, const Rat& prob) -> void {
        if (i == random.size()) {
            out.emplace_back(std::move(target), prob);
            return;
        }
        auto& [w, p] = random[i];
        self(self, i + 1, target, prob * (Rat(1) - p));
        target.set(w);
        self(self, i + 1, std::move(target), prob * p);
    };
    expand(expand, 0, base, Rat(1));
    return out;
}

StateChain build_chain(const Graph& g, const Bitset& z, const ChainCaps& caps) {
    if (z.empty()) throw std::invalid_argument("build_chain: empty start set");
    for (const Bitset& comp : components(g, Bitset::all(g.order())))
        if (!comp.intersects(z))
            throw std::invalid_argument(
                "build_chain: start set misses a connected component");

    StateChain chain;
    chain.graph = g;
    std::unordered_map<Bitset, int, BitsetHash> index;
    auto intern = [&](const Bitset& s) {
        auto [it, fresh] = index.try_emplace(s, static_cast<int>(chain.states.size()));
        if (fresh) {
            if (chain.states.size() >= caps.max_states)
                throw ResourceError("state space exceeds cap " +
                                    std::to_string(caps.max_states) +
                                    "; use the Monte Carlo engine (--mode mc)");
            chain.states.push_back(s);
        }
        return it->second;
    };

    intern(z);
    for (std::size_t s = 0; s < chain.states.size(); ++s) {
        chain.trans.resize(chain.states.size());
        chain.self_loop.resize(chain.states.size(), Rat(0));
        Bitset state = chain.states[s];  // copy: states vector may reallocate
        if (state.full()) {
            chain.all_blue = static_cast<int>(s);
            chain.self_loop[s] = 1;
            continue;
        }
        for (auto& [target, prob] : successor_distribution(g, state, caps)) {
            if (target == state)
                chain.self_loop[s] = prob;
            else
                chain.trans[s].emplace_back(intern(target), prob);
        }
    }
    chain.trans.resize(chain.states.size());
    chain.self_loop.resize(chain.states.size(), Rat(0));
    return chain;
}

namespace {

std::vector<int> by_popcount_desc(const StateChain& chain) {
    std::vector<int> order(chain.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pc(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) pc[i] = chain.states[i].count();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pc[a] > pc[b]; });
    return order;
}

}  // namespace

Rat ept_of_chain(const StateChain& chain) {
    std::vector<Rat> expected(chain.size(), Rat(0));
    for (int s : by_popcount_desc(chain)) {
        if (s == chain.all_blue) continue;
        if (chain.self_loop[s] == 1)
            throw std::logic_error("non-absorbing state with self-loop 1");
        Rat acc(1);
        for (auto& [t, p] : chain.trans[s]) acc += p * expected[t];
        expected[s] = acc / (Rat(1) - chain.self_loop[s]);
    }
    return expected[0];
}

Rat ept_exact(const Graph& g, const Bitset& z, const ChainCaps& caps) {
    return ept_of_chain(build_chain(g, z, caps));
}

std::pair<Rat, int> ept_graph(const Graph& g, const ChainCaps& caps) {
    if (!is_connected(g) || g.order() == 0)
        throw std::invalid_argument("ept_graph requires a connected graph");
    Rat best;
    int arg = -1;
    for (int v = 0; v < g.order(); ++v) {
        Rat e = ept_exact(g, Bitset::of(g.order(), {v}), caps);
        if (arg < 0 || e < best) {
            best = e;
            arg = v;
        }
    }
    return {best, arg};
}

void step_round(const StateChain& chain, std::vector<Rat>& mass) {
    std::vector<Rat> next(chain.size(), Rat(0));
    for (std::size_t s = 0; s < chain.size(); ++s) {
        if (mass[s] == 0) continue;
        if (chain.self_loop[s] != 0) next[s] += mass[s] * chain.self_loop[s];
        for (auto& [t, p] : chain.trans[s]) next[t] += mass[s] * p;
    }
    mass = std::move(next);
}

std::vector<Rat> round_distribution(const StateChain& chain, int rounds) {
    if (rounds < 0) throw std::invalid_argument("negative round count");
    std::vector<Rat> mass(chain.size(), Rat(0));
    mass[0] = 1;
    for (int r = 0; r < rounds; ++r) step_round(chain, mass);
    return mass;
}

Rat lround_probability(const Graph& g, const Bitset& b, int rounds,
                       const ChainCaps& caps) {
    if (b.empty()) return Rat(0);
    StateChain chain = build_chain(g, b, caps);
    return round_distribution(chain, rounds)[chain.all_blue];
}

std::vector<Rat> lround_profile(const StateChain& chain, int max_rounds) {
    std::vector<Rat> out;
    out.reserve(max_rounds + 1);
    std::vector<Rat> mass(chain.size(), Rat(0));
    mass[0] = 1;
    out.push_back(chain.all_blue == 0 ? Rat(1) : Rat(0));
    for (int r = 1; r <= max_rounds; ++r) {
        step_round(chain, mass);
        out.push_back(chain.all_blue >= 0 ? mass[chain.all_blue] : Rat(0));
    }
    return out;
}

std::vector<Rat> lround_graph_profile(const Graph& g, int max_rounds,
                                      const ChainCaps& caps) {
    std::vector<Rat> best(max_rounds + 1, Rat(0));
    for (int v = 0; v < g.order(); ++v) {
        StateChain chain = build_chain(g, Bitset::of(g.order(), {v}), caps);
        std::vector<Rat> prof = lround_profile(chain, max_rounds);
        for (int r = 0; r <= max_rounds; ++r)
            if (prof[r] > best[r]) best[r] = prof[r];
    }
    return best;
}

int confidence_time(const Graph& g, const Bitset& z, const Rat& alpha,
                    const ChainCaps& caps) {
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("confidence_time requires 0 < alpha < 1");
    StateChain chain = build_chain(g, z, caps);
    std::vector<Rat> mass(chain.size(), Rat(0));
    mass[0] = 1;
    constexpr int kRoundCap = 1'000'000;
    for (int t = 0; t <= kRoundCap; ++t) {
        if (chain.all_blue >= 0 && mass[chain.all_blue] >= alpha) return t;
        step_round(chain, mass);
    }
    throw std::logic_error("confidence_time failed to converge");
}

std::pair<int, int> confidence_graph(const Graph& g, const Rat& alpha,
                                     const ChainCaps& caps) {
    if (!is_connected(g) || g.order() == 0)
        throw std::invalid_argument("confidence_graph requires a connected graph");
    int best = -1, arg = -1;
    for (int v = 0; v < g.order(); ++v) {
        int t = confidence_time(g, Bitset::of(g.order(), {v}), alpha, caps);
        if (arg < 0 || t < best) {
            best = t;
            arg = v;
        }
    }
    return {best, arg};
}

FloatChain to_float(const StateChain& chain) {
    FloatChain f;
    f.all_blue = chain.all_blue;
    f.self_loop.reserve(chain.size());
    f.popcounts.reserve(chain.size());
    f.trans.resize(chain.size());
    for (std::size_t s = 0; s < chain.size(); ++s) {
        f.self_loop.push_back(to_double(chain.self_loop[s]));
        f.popcounts.push_back(chain.states[s].count());
        f.trans[s].reserve(chain.trans[s].size());
        for (auto& [t, p] : chain.trans[s]) f.trans[s].emplace_back(t, to_double(p));
    }
    return f;
}

double ept_of_chain_float(const FloatChain& chain) {
    std::vector<int> order(chain.trans.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return chain.popcounts[a] > chain.popcounts[b];
    });
    std::vector<double> expected(chain.trans.size(), 0.0);
    for (int s : order) {
        if (s == chain.all_blue) continue;
        double acc = 1.0;
        for (auto& [t, p] : chain.trans[s]) acc += p * expected[t];
        expected[s] = acc / (1.0 - chain.self_loop[s]);
    }
    return expected[0];
}

double lround_float(const FloatChain& chain, int rounds) {
    std::vector<double> mass(chain.trans.size(), 0.0);
    mass[0] = 1.0;
    for (int r = 0; r < rounds; ++r) {
        std::vector<double> next(mass.size(), 0.0);
        for (std::size_t s = 0; s < mass.size(); ++s) {
            if (mass[s] == 0.0) continue;
            next[s] += mass[s] * chain.self_loop[s];
            for (auto& [t, p] : chain.trans[s]) next[t] += mass[s] * p;
        }
        mass = std::move(next);
    }
    return chain.all_blue >= 0 ? mass[chain.all_blue] : 0.0;
}

}  // namespace pzf
