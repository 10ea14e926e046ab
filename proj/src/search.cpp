#include "pzf/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "pzf/derived.hpp"
#include "pzf/montecarlo.hpp"

namespace pzf {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

// Connected labeled graphs on 2..max_n vertices, one representative per
// degree sequence.
std::vector<Graph> enumerate_connected(int max_n) {
    std::vector<Graph> out;
    for (int n = 2; n <= max_n; ++n) {
        auto pairs = all_pairs(n);
        std::set<std::vector<int>> seen_degrees;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) edges.push_back(pairs[i]);
            Graph g = Graph::from_edges(n, edges);
            if (!is_connected(g)) continue;
            std::vector<int> degs(n);
            for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
            std::sort(degs.begin(), degs.end());
            if (!seen_degrees.insert(degs).second) continue;
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Graph> sampled_instances(const ScanOptions& opts, std::string& note) {
    std::vector<Graph> out;
    std::ostringstream seeds;
    for (int i = 0; i < opts.samples; ++i) {
        FamilySpec spec;
        spec.kind = Family::gnp;
        spec.n = opts.sample_n;
        spec.p = opts.gnp_p;
        spec.seed = opts.seed + static_cast<std::uint64_t>(i);
        Graph g = build(spec);
        if (!is_connected(g)) continue;
        out.push_back(std::move(g));
        seeds << (seeds.tellp() > 0 ? "," : "") << spec.seed;
    }
    if (opts.samples > 0)
        note = " + gnp(n=" + std::to_string(opts.sample_n) + ",p=" +
               std::to_string(opts.gnp_p) + ") seeds [" + seeds.str() + "]";
    return out;
}

nlohmann::json edges_json(const std::vector<std::pair<int, int>>& edges) {
    nlohmann::json j = nlohmann::json::array();
    for (auto [u, v] : edges) j.push_back({u, v});
    return j;
}

}  // namespace

EdgeMonoReport scan_edge_monotonicity(const ScanOptions& opts, const ChainCaps& caps) {
    auto t0 = Clock::now();
    EdgeMonoReport report;
    std::string note;
    std::vector<Graph> graphs = enumerate_connected(opts.max_n);
    for (Graph& g : sampled_instances(opts, note)) graphs.push_back(std::move(g));
    report.search_space = "connected labeled graphs n<=" + std::to_string(opts.max_n) +
                          " (degree-sequence dedup)" + note;

    for (const Graph& h : graphs) {
        Rat ept_h = ept_graph(h, caps).first;
        auto base_edges = h.edges();
        for (auto [u, v] : all_pairs(h.order())) {
            if (h.adjacent(u, v)) continue;
            auto edges = base_edges;
            edges.emplace_back(u, v);
            Graph g = Graph::from_edges(h.order(), edges);
            Rat ept_g = ept_graph(g, caps).first;
            ++report.instances_checked;
            if (ept_g > ept_h)
                report.violations.push_back(
                    {h.order(), base_edges, {u, v}, ept_h, ept_g});
        }
    }
    report.runtime_s = seconds_since(t0);
    return report;
}

KangYiScanReport scan_kangyi_monotonicity(const ScanOptions& opts, const ChainCaps& caps) {
    auto t0 = Clock::now();
    KangYiScanReport report;
    std::string note;
    std::vector<Graph> graphs = enumerate_connected(opts.max_n);
    for (Graph& g : sampled_instances(opts, note)) graphs.push_back(std::move(g));
    report.search_space = "connected labeled graphs n<=" + std::to_string(opts.max_n) +
                          " (degree-sequence dedup), all pairs A subset B" + note;

    for (const Graph& g : graphs) {
        const int n = g.order();
        std::uint64_t subsets = std::uint64_t(1) << n;
        std::vector<KangYiResult> results(subsets);
        for (std::uint64_t m = 1; m < subsets; ++m) {
            Bitset b(n);
            for (int v = 0; v < n; ++v)
                if (m >> v & 1) b.set(v);
            results[m] = kang_yi_probability(g, b, caps);
        }
        for (std::uint64_t a = 1; a < subsets; ++a) {
            for (std::uint64_t b = 1; b < subsets; ++b) {
                if (a == b || (a & b) != a) continue;  // need A proper subset of B
                ++report.instances_checked;
                if (results[a].probability > results[b].probability) {
                    KangYiViolation viol;
                    viol.n = n;
                    viol.edges = g.edges();
                    for (int v = 0; v < n; ++v) {
                        if (a >> v & 1) viol.set_a.push_back(v);
                        if (b >> v & 1) viol.set_b.push_back(v);
                    }
                    viol.k0_a = results[a].k0;
                    viol.k0_b = results[b].k0;
                    viol.p_a = results[a].probability;
                    viol.p_b = results[b].probability;
                    report.violations.push_back(std::move(viol));
                }
            }
        }
    }
    report.runtime_s = seconds_since(t0);
    return report;
}

bool reverify(const EdgeMonoViolation& v, const ChainCaps& caps) {
    Graph h = Graph::from_edges(v.n, v.base_edges);
    auto edges = v.base_edges;
    edges.push_back(v.added_edge);
    Graph g = Graph::from_edges(v.n, edges);
    return ept_graph(h, caps).first == v.ept_base &&
           ept_graph(g, caps).first == v.ept_super && v.ept_super > v.ept_base;
}

bool reverify(const KangYiViolation& v, const ChainCaps& caps) {
    Graph g = Graph::from_edges(v.n, v.edges);
    Bitset a(v.n), b(v.n);
    for (int x : v.set_a) a.set(x);
    for (int x : v.set_b) b.set(x);
    KangYiResult ra = kang_yi_probability(g, a, caps);
    KangYiResult rb = kang_yi_probability(g, b, caps);
    return ra.k0 == v.k0_a && rb.k0 == v.k0_b && ra.probability == v.p_a &&
           rb.probability == v.p_b && ra.probability > rb.probability;
}

nlohmann::json to_json(const EdgeMonoReport& r) {
    nlohmann::json viols = nlohmann::json::array();
    for (auto& v : r.violations)
        viols.push_back({{"n", v.n},
                         {"base_edges", edges_json(v.base_edges)},
                         {"added_edge", {v.added_edge.first, v.added_edge.second}},
                         {"ept_base", to_string(v.ept_base)},
                         {"ept_super", to_string(v.ept_super)}});
    return {{"schema", "pzf/1"},
            {"scan", "edge-monotonicity"},
            {"instances_checked", r.instances_checked},
            {"violations", viols},
            {"runtime_s", r.runtime_s},
            {"search_space", r.search_space}};
}

nlohmann::json to_json(const KangYiScanReport& r) {
    nlohmann::json viols = nlohmann::json::array();
    for (auto& v : r.violations)
        viols.push_back({{"n", v.n},
                         {"edges", edges_json(v.edges)},
                         {"set_a", v.set_a},
                         {"set_b", v.set_b},
                         {"k0_a", v.k0_a},
                         {"k0_b", v.k0_b},
                         {"p_a", to_string(v.p_a)},
                         {"p_b", to_string(v.p_b)}});
    return {{"schema", "pzf/1"},
            {"scan", "kangyi-monotonicity"},
            {"instances_checked", r.instances_checked},
            {"violations", viols},
            {"runtime_s", r.runtime_s},
            {"search_space", r.search_space}};
}

std::vector<RadiusProbeRow> radius_ratio_probe(const std::vector<FamilySpec>& families,
                                               std::uint64_t mc_trials,
                                               std::uint64_t mc_seed, int mc_threads) {
    std::vector<RadiusProbeRow> rows;
    ChainCaps probe_caps;
    probe_caps.max_states = 50000;  // keep exact attempts snappy; fall back to MC
    for (const FamilySpec& spec : families) {
        Graph g = build(spec);
        if (!is_connected(g)) continue;
        RadiusProbeRow row;
        row.family = spec.str();
        row.n = g.order();
        auto [rad, center] = radius_and_center(g);
        row.radius = rad;
        try {
            row.ept = to_double(ept_graph(g, probe_caps).first);
            row.engine = "exact";
        } catch (const ResourceError&) {
            McOptions mc;
            mc.trials = mc_trials;
            mc.seed = mc_seed;
            mc.threads = mc_threads;
            int start = center.to_vector().front();
            row.ept = estimate_ept(g, Bitset::of(g.order(), {start}), mc).mean;
            row.engine = "mc";
        }
        row.ept_over_rad = rad > 0 ? row.ept / rad : row.ept;
        double lg = std::log2(static_cast<double>(std::max(2, row.n)));
        row.ept_over_rad_log2 = rad > 0 ? row.ept / (rad * lg * lg) : row.ept / (lg * lg);
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const std::vector<RadiusProbeRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& r : rows)
        arr.push_back({{"family", r.family},
                       {"n", r.n},
                       {"radius", r.radius},
                       {"ept", r.ept},
                       {"engine", r.engine},
                       {"ept_over_rad", r.ept_over_rad},
                       {"ept_over_rad_log2sq", r.ept_over_rad_log2}});
    return {{"schema", "pzf/1"}, {"probe", "radius-ratio"}, {"rows", arr}};
}

}  // namespace pzf
