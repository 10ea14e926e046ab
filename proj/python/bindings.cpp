#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "pzf/chain.hpp"
#include "pzf/closed_forms.hpp"
#include "pzf/derived.hpp"
#include "pzf/forcing.hpp"
#include "pzf/graph.hpp"
#include "pzf/montecarlo.hpp"

namespace py = pybind11;
using namespace pzf;

namespace {

Bitset to_set(const Graph& g, const std::vector<int>& vs) {
    Bitset b(g.order());
    for (int v : vs) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        b.set(v);
    }
    return b;
}

Rule to_rule(const std::string& rule) {
    if (rule == "zf") return Rule::zero_forcing;
    if (rule == "psd") return Rule::psd;
    throw std::invalid_argument("rule must be 'zf' or 'psd'");
}

SearchMode to_mode(const std::string& mode) {
    if (mode == "exhaustive") return SearchMode::exhaustive;
    if (mode == "heuristic") return SearchMode::heuristic;
    throw std::invalid_argument("mode must be 'exhaustive' or 'heuristic'");
}

py::dict report_dict(const EstimateReport& rep) {
    py::dict d;
    d["mean"] = rep.mean;
    d["std_error"] = rep.std_error;
    d["trials"] = rep.trials;
    d["seed"] = rep.seed;
    return d;
}

Family to_family(const std::string& kind) {
    if (kind == "path") return Family::path;
    if (kind == "cycle") return Family::cycle;
    throw std::invalid_argument("kind must be 'path' or 'cycle'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "probabilistic zero forcing: exact chains, simulation, throttling";

    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "<pzf.Graph n=" + std::to_string(g.order()) + " m=" +
                   std::to_string(g.edge_count()) + ">";
        });

    m.def("build_graph",
          [](const std::string& spec) { return build(parse_graph_spec(spec)); },
          py::arg("spec"),
          "Build a graph from a generator string (e.g. 'cycle:8', "
          "'spider:n=13,legs=4', 'gnp:n=20,p=0.5,seed=7') or an edge-list file path.");
    m.def("graph_from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return Graph::from_edges(n, edges);
          },
          py::arg("n"), py::arg("edges"));

    m.def("distances", [](const Graph& g, int v) { return distances(g, v); });
    m.def("radius_and_center", [](const Graph& g) {
        auto [r, c] = radius_and_center(g);
        return std::pair(r, c.to_vector());
    });
    m.def("greedy_dominating_set",
          [](const Graph& g) { return greedy_dominating_set(g).to_vector(); });
    m.def("k_center_seed", [](const Graph& g, int k) {
        return k_center_seed(g, k).to_vector();
    });

    m.def("force_probability",
          [](const Graph& g, int u, int w, const std::vector<int>& blue) {
              return to_string(force_probability(g, u, w, to_set(g, blue)));
          });
    m.def("propagation_time",
          [](const Graph& g, const std::vector<int>& z, const std::string& rule) {
              return propagation_time(g, to_set(g, z), to_rule(rule));
          },
          py::arg("g"), py::arg("start"), py::arg("rule") = "zf",
          "Deterministic rounds to all blue, or None if forcing stalls.");
    m.def("is_zero_forcing_set", [](const Graph& g, const std::vector<int>& z) {
        return is_zero_forcing_set(g, to_set(g, z));
    });
    m.def("zero_forcing_number", [](const Graph& g) {
        auto [z, witness] = zero_forcing_number(g);
        return std::pair(z, witness.to_vector());
    });

    m.def("ept_exact",
          [](const Graph& g, const std::vector<int>& z) {
              Bitset b = to_set(g, z);
              py::gil_scoped_release release;
              return to_string(ept_exact(g, b));
          },
          py::arg("g"), py::arg("start"),
          "Expected propagation time from a start set, as an exact 'p/q' string.");
    m.def("ept_graph",
          [](const Graph& g) {
              py::gil_scoped_release release;
              auto [v, arg] = ept_graph(g);
              return std::pair(to_string(v), arg);
          },
          "Minimum over single-vertex starts; returns (value, best_vertex).");
    m.def("lround_probability",
          [](const Graph& g, const std::vector<int>& b, int rounds) {
              Bitset z = to_set(g, b);
              py::gil_scoped_release release;
              return to_string(lround_probability(g, z, rounds));
          },
          py::arg("g"), py::arg("start"), py::arg("rounds"));
    m.def("confidence_time",
          [](const Graph& g, const std::vector<int>& z, const std::string& alpha) {
              Bitset b = to_set(g, z);
              Rat a = parse_rat(alpha);
              py::gil_scoped_release release;
              return confidence_time(g, b, a);
          },
          py::arg("g"), py::arg("start"), py::arg("alpha"));

    m.def("estimate_ept",
          [](const Graph& g, const std::vector<int>& z, std::uint64_t trials,
             std::uint64_t seed, int threads) {
              Bitset b = to_set(g, z);
              McOptions mc;
              mc.trials = trials;
              mc.seed = seed;
              mc.threads = threads;
              EstimateReport rep;
              {
                  py::gil_scoped_release release;
                  rep = estimate_ept(g, b, mc);
              }
              return report_dict(rep);
          },
          py::arg("g"), py::arg("start"), py::arg("trials") = 100000,
          py::arg("seed") = 0, py::arg("threads") = 1);
    m.def("estimate_lround",
          [](const Graph& g, const std::vector<int>& b, int rounds,
             std::uint64_t trials, std::uint64_t seed, int threads) {
              Bitset z = to_set(g, b);
              McOptions mc;
              mc.trials = trials;
              mc.seed = seed;
              mc.threads = threads;
              EstimateReport rep;
              {
                  py::gil_scoped_release release;
                  rep = estimate_lround(g, z, rounds, mc);
              }
              return report_dict(rep);
          },
          py::arg("g"), py::arg("start"), py::arg("rounds"),
          py::arg("trials") = 100000, py::arg("seed") = 0, py::arg("threads") = 1);
    m.def("estimate_confidence_time",
          [](const Graph& g, const std::vector<int>& z, double alpha,
             std::uint64_t trials, std::uint64_t seed, int threads) {
              Bitset b = to_set(g, z);
              McOptions mc;
              mc.trials = trials;
              mc.seed = seed;
              mc.threads = threads;
              py::gil_scoped_release release;
              return estimate_confidence_time(g, b, alpha, mc);
          },
          py::arg("g"), py::arg("start"), py::arg("alpha"),
          py::arg("trials") = 100000, py::arg("seed") = 0, py::arg("threads") = 1);

    m.def("th_pzf",
          [](const Graph& g, const std::vector<int>& z) {
              Bitset b = to_set(g, z);
              py::gil_scoped_release release;
              return to_string(th_pzf(g, b));
          });
    m.def("th_pzf_graph",
          [](const Graph& g, const std::string& mode) {
              SearchMode sm = to_mode(mode);
              ThrottleResult r;
              {
                  py::gil_scoped_release release;
                  r = th_pzf_graph(g, sm);
              }
              py::dict d;
              d["value"] = to_string(r.value);
              d["witness"] = r.witness.to_vector();
              d["mode"] = mode;
              return d;
          },
          py::arg("g"), py::arg("mode") = "exhaustive");
    m.def("th_alpha",
          [](const Graph& g, const std::string& alpha, const std::string& mode) {
              Rat a = parse_rat(alpha);
              SearchMode sm = to_mode(mode);
              ThrottleResult r;
              {
                  py::gil_scoped_release release;
                  r = th_alpha(g, a, sm);
              }
              py::dict d;
              d["value"] = to_string(r.value);
              d["witness"] = r.witness.to_vector();
              d["mode"] = mode;
              return d;
          },
          py::arg("g"), py::arg("alpha"), py::arg("mode") = "exhaustive");
    m.def("kang_yi_probability",
          [](const Graph& g, const std::vector<int>& b) {
              Bitset z = to_set(g, b);
              py::gil_scoped_release release;
              KangYiResult r = kang_yi_probability(g, z);
              return std::pair(r.k0, to_string(r.probability));
          },
          py::arg("g"), py::arg("start"),
          "Returns (k0, probability) with the probability as a 'p/q' string.");

    m.def("ept_cycle", [](int n) { return to_string(ept_cycle(n)); });
    m.def("ept_path", [](int n) { return to_string(ept_path(n)); });
    m.def("lround_cycle",
          [](int n, int rounds) { return to_string(lround_cycle(n, rounds)); });
    m.def("lround_path",
          [](int n, int rounds) { return to_string(lround_path(n, rounds)); });
    m.def("confidence_cycle", [](int n, const std::string& alpha) {
        return confidence_cycle(n, parse_rat(alpha));
    });
    m.def("confidence_path", [](int n, const std::string& alpha) {
        return confidence_path(n, parse_rat(alpha));
    });
    m.def("psd_throttle_path_cycle", [](int n, const std::string& kind) {
        return psd_throttle_path_cycle(n, to_family(kind));
    }, py::arg("n"), py::arg("kind") = "path");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
