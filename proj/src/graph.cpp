#include "pzf/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pzf/rng.hpp"

namespace pzf {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " +
                                        std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (g.adj_[u].test(v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        g.adj_[u].set(v);
        g.adj_[v].set(u);
        ++g.m_;
    }
    g.deg_.resize(n);
    for (int v = 0; v < n; ++v) g.deg_[v] = g.adj_[v].count();
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, deg_[v]);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

namespace {

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

// K_{1,n}: center is vertex 0, leaves 1..n.
Graph make_star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs >= 1 leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

// Body vertex 0; leg lengths as equal as possible, longer legs first.
Graph make_spider(int n, int legs) {
    if (legs < 3) throw std::invalid_argument("spider needs >= 3 legs");
    if (n < legs + 1) throw std::invalid_argument("spider needs n >= legs + 1");
    int total = n - 1;
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int i = 0; i < legs; ++i) {
        int len = total / legs + (i < total % legs ? 1 : 0);
        int prev = 0;
        for (int j = 0; j < len; ++j) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(n, e);
}

// Root is vertex 0; every vertex of degree <= 1 receives k children, h times.
Graph make_kary(int k, int h) {
    if (k < 1) throw std::invalid_argument("kary needs k >= 1");
    if (h < 0) throw std::invalid_argument("kary needs h >= 0");
    long long order = 0, pw = 1;
    for (int lvl = 0; lvl <= h; ++lvl) {
        order += pw;
        pw *= k;
        if (order > 2'000'000) throw std::invalid_argument("kary tree too large");
    }
    int n = static_cast<int>(order);
    std::vector<std::pair<int, int>> e;
    int next = 1;
    std::vector<int> level{0};
    for (int lvl = 0; lvl < h; ++lvl) {
        std::vector<int> below;
        for (int parent : level)
            for (int c = 0; c < k; ++c) {
                e.emplace_back(parent, next);
                below.push_back(next++);
            }
        level = std::move(below);
    }
    return Graph::from_edges(n, e);
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp needs n >= 1");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("gnp needs 0 < p < 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(seed, kStreamGnp, u, v) < p) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& body) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value in '" + item + "'");
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

long to_long(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer for " + what + ": '" + s + "'");
    }
}

}  // namespace

std::string FamilySpec::str() const {
    switch (kind) {
        case Family::path: return "path:" + std::to_string(n);
        case Family::cycle: return "cycle:" + std::to_string(n);
        case Family::star: return "star:" + std::to_string(n);
        case Family::complete: return "complete:" + std::to_string(n);
        case Family::spider:
            return "spider:n=" + std::to_string(n) + ",legs=" + std::to_string(legs);
        case Family::kary_tree:
            return "kary:k=" + std::to_string(k) + ",h=" + std::to_string(h);
        case Family::gnp: {
            std::ostringstream os;
            os << "gnp:n=" << n << ",p=" << p << ",seed=" << seed;
            return os.str();
        }
        case Family::edge_list: return file;
    }
    return "?";
}

Graph build(const FamilySpec& spec) {
    switch (spec.kind) {
        case Family::path: return make_path(spec.n);
        case Family::cycle: return make_cycle(spec.n);
        case Family::star: return make_star(spec.n);
        case Family::complete: return make_complete(spec.n);
        case Family::spider: return make_spider(spec.n, spec.legs);
        case Family::kary_tree: return make_kary(spec.k, spec.h);
        case Family::gnp: return make_gnp(spec.n, spec.p, spec.seed);
        case Family::edge_list: return load_edge_list(spec.file);
    }
    throw std::invalid_argument("unknown family");
}

FamilySpec parse_graph_spec(const std::string& text) {
    auto colon = text.find(':');
    std::string head = colon == std::string::npos ? "" : text.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
    FamilySpec s;
    if (head == "path" || head == "cycle" || head == "star" || head == "complete") {
        s.kind = head == "path"     ? Family::path
                 : head == "cycle"  ? Family::cycle
                 : head == "star"   ? Family::star
                                    : Family::complete;
        s.n = static_cast<int>(to_long(body, head));
        return s;
    }
    if (head == "spider") {
        s.kind = Family::spider;
        for (auto& [k, v] : parse_kv(body)) {
            if (k == "n") s.n = static_cast<int>(to_long(v, "n"));
            else if (k == "legs") s.legs = static_cast<int>(to_long(v, "legs"));
            else throw std::invalid_argument("unknown spider parameter '" + k + "'");
        }
        return s;
    }
    if (head == "kary") {
        s.kind = Family::kary_tree;
        for (auto& [k, v] : parse_kv(body)) {
            if (k == "k") s.k = static_cast<int>(to_long(v, "k"));
            else if (k == "h") s.h = static_cast<int>(to_long(v, "h"));
            else throw std::invalid_argument("unknown kary parameter '" + k + "'");
        }
        return s;
    }
    if (head == "gnp") {
        s.kind = Family::gnp;
        for (auto& [k, v] : parse_kv(body)) {
            if (k == "n") s.n = static_cast<int>(to_long(v, "n"));
            else if (k == "p") s.p = std::stod(v);
            else if (k == "seed") s.seed = static_cast<std::uint64_t>(to_long(v, "seed"));
            else throw std::invalid_argument("unknown gnp parameter '" + k + "'");
        }
        return s;
    }
    s.kind = Family::edge_list;
    s.file = text;
    return s;
}

Graph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    std::vector<std::pair<int, int>> e(m);
    for (int i = 0; i < m; ++i)
        if (!(in >> e[i].first >> e[i].second))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
    return Graph::from_edges(n, e);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::vector<int> distances(const Graph& g, int v) {
    std::vector<int> dist(g.order(), -1);
    std::deque<int> q{v};
    dist[v] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        g.neighbors(u).for_each([&](int w) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        });
    }
    return dist;
}

int eccentricity(const Graph& g, int v) {
    int ecc = 0;
    for (int d : distances(g, v)) {
        if (d < 0) return -1;
        ecc = std::max(ecc, d);
    }
    return ecc;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return eccentricity(g, 0) >= 0;
}

std::vector<Bitset> components(const Graph& g, const Bitset& within) {
    std::vector<Bitset> out;
    Bitset seen(g.order());
    within.for_each([&](int s) {
        if (seen.test(s)) return;
        Bitset comp(g.order());
        std::deque<int> q{s};
        seen.set(s);
        comp.set(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            g.neighbors(u).for_each([&](int w) {
                if (within.test(w) && !seen.test(w)) {
                    seen.set(w);
                    comp.set(w);
                    q.push_back(w);
                }
            });
        }
        out.push_back(comp);
    });
    return out;
}

std::pair<int, Bitset> radius_and_center(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("radius of empty graph");
    int rad = -1;
    std::vector<int> ecc(g.order());
    for (int v = 0; v < g.order(); ++v) {
        ecc[v] = eccentricity(g, v);
        if (ecc[v] < 0) throw std::invalid_argument("radius requires a connected graph");
        rad = rad < 0 ? ecc[v] : std::min(rad, ecc[v]);
    }
    Bitset center(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (ecc[v] == rad) center.set(v);
    return {rad, center};
}

Bitset greedy_dominating_set(const Graph& g) {
    Bitset dom(g.order());
    Bitset covered(g.order());
    while (covered.count() < g.order()) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < g.order(); ++v) {
            Bitset closed = g.neighbors(v);
            closed.set(v);
            int gain = closed.count() - closed.count_and(covered);
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        dom.set(best);
        covered.set(best);
        covered |= g.neighbors(best);
    }
    return dom;
}

int covering_radius(const Graph& g, const Bitset& s) {
    std::vector<int> dist(g.order(), -1);
    std::deque<int> q;
    s.for_each([&](int v) {
        dist[v] = 0;
        q.push_back(v);
    });
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        g.neighbors(u).for_each([&](int w) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        });
    }
    int r = 0;
    for (int d : dist) {
        if (d < 0) return -1;
        r = std::max(r, d);
    }
    return r;
}

namespace {

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::uint64_t choose(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (std::uint64_t(1) << 62)) return r;
    }
    return r;
}

}  // namespace

Bitset k_center_seed(const Graph& g, int k, std::uint64_t exact_cap) {
    int n = g.order();
    if (k < 1 || k > n) throw std::invalid_argument("k_center_seed: k out of range");
    if (!is_connected(g)) throw std::invalid_argument("k_center_seed requires a connected graph");

    if (choose(n, k) <= exact_cap) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        Bitset best(n);
        int best_r = -1;
        do {
            Bitset s(n);
            for (int v : comb) s.set(v);
            int r = covering_radius(g, s);
            if (best_r < 0 || r < best_r) {
                best_r = r;
                best = s;
            }
        } while (next_combination(comb, n));
        return best;
    }

    // Greedy farthest-point: start from a center, then repeatedly add the
    // vertex farthest from the current set (ties to lowest index).
    auto [rad, center] = radius_and_center(g);
    (void)rad;
    int start = center.to_vector().front();
    Bitset s(n);
    s.set(start);
    std::vector<int> dist = distances(g, start);
    for (int round = 1; round < k; ++round) {
        int far = 0;
        for (int v = 1; v < n; ++v)
            if (dist[v] > dist[far]) far = v;
        s.set(far);
        std::vector<int> dnew = distances(g, far);
        for (int v = 0; v < n; ++v) dist[v] = std::min(dist[v], dnew[v]);
    }
    return s;
}

}  // namespace pzf
