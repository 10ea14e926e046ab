#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pzf/chain.hpp"
#include "pzf/graph.hpp"
#include "pzf/rational.hpp"

#include "json.hpp"

namespace pzf {

// Evidence searches over small graphs. Enumeration is over labeled connected
// graphs with a degree-sequence dedup filter (isomorphic duplicates are only
// a time cost); sampled instances come from seeded gnp draws.

struct ScanOptions {
    int max_n = 5;             // exhaustive enumeration covers 2..max_n
    int samples = 0;           // extra seeded gnp samples
    int sample_n = 8;          // order of sampled graphs
    double gnp_p = 0.5;
    std::uint64_t seed = 0;
};

struct EdgeMonoViolation {
    int n = 0;
    std::vector<std::pair<int, int>> base_edges;
    std::pair<int, int> added_edge;
    Rat ept_base;
    Rat ept_super;
};

struct EdgeMonoReport {
    std::uint64_t instances_checked = 0;
    std::vector<EdgeMonoViolation> violations;
    double runtime_s = 0;
    std::string search_space;
};

struct KangYiViolation {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> set_a;
    std::vector<int> set_b;
    int k0_a = 0;
    int k0_b = 0;
    Rat p_a;
    Rat p_b;
};

struct KangYiScanReport {
    std::uint64_t instances_checked = 0;
    std::vector<KangYiViolation> violations;
    double runtime_s = 0;
    std::string search_space;
};

// Does adding an edge ever raise ept(G)? Records every (H, e) with
// ept(H + e) > ept(H).
EdgeMonoReport scan_edge_monotonicity(const ScanOptions& opts, const ChainCaps& caps = {});

// Pairs A subset of B with P_A(G) > P_B(G).
KangYiScanReport scan_kangyi_monotonicity(const ScanOptions& opts,
                                          const ChainCaps& caps = {});

bool reverify(const EdgeMonoViolation& v, const ChainCaps& caps = {});
bool reverify(const KangYiViolation& v, const ChainCaps& caps = {});

nlohmann::json to_json(const EdgeMonoReport& r);
nlohmann::json to_json(const KangYiScanReport& r);

struct RadiusProbeRow {
    std::string family;
    int n = 0;
    int radius = 0;
    double ept = 0;
    std::string engine;  // "exact" or "mc"
    double ept_over_rad = 0;
    double ept_over_rad_log2 = 0;  // ept / (rad * (log2 n)^2)
};

// ept/rad evidence table across graph families; exact engine when the chain
// fits comfortable caps, Monte Carlo from a center vertex otherwise.
std::vector<RadiusProbeRow> radius_ratio_probe(const std::vector<FamilySpec>& families,
                                               std::uint64_t mc_trials = 20000,
                                               std::uint64_t mc_seed = 0,
                                               int mc_threads = 1);

nlohmann::json to_json(const std::vector<RadiusProbeRow>& rows);

}  // namespace pzf
