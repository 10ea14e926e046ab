#include "pzf/forcing.hpp"

#include <stdexcept>

namespace pzf {

Rat force_probability(const Graph& g, int u, int w, const Bitset& blue) {
    if (!blue.test(u)) throw std::invalid_argument("force_probability: u is not blue");
    if (blue.test(w)) throw std::invalid_argument("force_probability: w is not white");
    if (!g.adjacent(u, w)) throw std::invalid_argument("force_probability: u not adjacent to w");
    int closed_blue = g.neighbors(u).count_and(blue) + 1;  // N[u] includes u
    return frac(closed_blue, g.degree(u));
}

RoundKernel round_kernel(const Graph& g, const Bitset& blue) {
    RoundKernel kernel;
    for (int w = 0; w < g.order(); ++w) {
        if (blue.test(w)) continue;
        if (!g.neighbors(w).intersects(blue)) continue;
        Rat miss(1);
        (g.neighbors(w) & blue).for_each([&](int u) {
            int closed_blue = g.neighbors(u).count_and(blue) + 1;
            miss *= frac(g.degree(u) - closed_blue, g.degree(u));
        });
        kernel.probs.emplace_back(w, Rat(1) - miss);
    }
    return kernel;
}

Bitset zf_round(const Graph& g, const Bitset& blue) {
    Bitset next = blue;
    blue.for_each([&](int u) {
        int white_nbrs = g.degree(u) - g.neighbors(u).count_and(blue);
        if (white_nbrs == 1) {
            (g.neighbors(u) & blue.complement()).for_each([&](int w) { next.set(w); });
        }
    });
    return next;
}

Bitset psd_round(const Graph& g, const Bitset& blue) {
    Bitset next = blue;
    for (const Bitset& comp : components(g, blue.complement())) {
        blue.for_each([&](int u) {
            if (g.neighbors(u).count_and(comp) == 1)
                (g.neighbors(u) & comp).for_each([&](int w) { next.set(w); });
        });
    }
    return next;
}

std::optional<int> propagation_time(const Graph& g, const Bitset& z, Rule rule) {
    Bitset cur = z;
    int rounds = 0;
    while (cur.count() < g.order()) {
        Bitset nxt = rule == Rule::zero_forcing ? zf_round(g, cur) : psd_round(g, cur);
        if (nxt == cur) return std::nullopt;
        cur = nxt;
        ++rounds;
    }
    return rounds;
}

bool is_zero_forcing_set(const Graph& g, const Bitset& z) {
    return propagation_time(g, z, Rule::zero_forcing).has_value();
}

}  // namespace pzf
