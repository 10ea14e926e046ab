#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pzf/bitset.hpp"

namespace pzf {

// Immutable simple undirected graph on vertices 0..n-1 with adjacency
// bitsets. Safe for concurrent shared reads once constructed.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return deg_[v]; }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int max_degree() const;

    std::vector<std::pair<int, int>> edges() const;

    Graph() = default;  // empty graph; family builders produce real ones

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
    std::vector<int> deg_;
};

enum class Family { path, cycle, star, complete, spider, kary_tree, gnp, edge_list };

struct FamilySpec {
    Family kind = Family::path;
    int n = 0;               // path/cycle/complete order; star leaf count; spider order; gnp order
    int legs = 0;            // spider
    int k = 0;               // kary branching
    int h = 0;               // kary height
    double p = 0.0;          // gnp edge probability
    std::uint64_t seed = 0;  // gnp
    std::string file;        // edge_list source path

    std::string str() const;
};

Graph build(const FamilySpec& spec);

// Generator grammar: "path:10", "cycle:8", "star:6", "complete:7",
// "spider:n=13,legs=4", "kary:k=3,h=2", "gnp:n=20,p=0.5,seed=7".
// Anything else is treated as an edge-list file path.
FamilySpec parse_graph_spec(const std::string& text);

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

// BFS distances from v; unreachable vertices are marked -1.
std::vector<int> distances(const Graph& g, int v);
int eccentricity(const Graph& g, int v);
bool is_connected(const Graph& g);
// Vertex sets of the connected components of the subgraph induced on `within`.
std::vector<Bitset> components(const Graph& g, const Bitset& within);

// Requires a connected graph.
std::pair<int, Bitset> radius_and_center(const Graph& g);

// Greedy max-coverage dominating set; ties go to the lowest vertex index.
Bitset greedy_dominating_set(const Graph& g);

// A k-set minimizing the maximum distance to the set: exact by subset
// enumeration while C(n,k) <= exact_cap, greedy farthest-point beyond.
Bitset k_center_seed(const Graph& g, int k, std::uint64_t exact_cap = 1000000);
int covering_radius(const Graph& g, const Bitset& s);

}  // namespace pzf
