// pzf: probabilistic zero forcing toolkit.
//
// Subcommands compute expected propagation time, l-round probabilities,
// confidence propagation times, throttling numbers, Kang-Yi probabilities,
// deterministic propagation, and run the counterexample scans. Exit codes:
// 0 success, 2 usage, 3 resource cap, 4 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pzf/chain.hpp"
#include "pzf/closed_forms.hpp"
#include "pzf/derived.hpp"
#include "pzf/forcing.hpp"
#include "pzf/graph.hpp"
#include "pzf/montecarlo.hpp"
#include "pzf/search.hpp"

using nlohmann::json;
using namespace pzf;

namespace {

struct Options {
    std::string graph_spec;
    std::string start = "best";
    int rounds = 0;
    std::string alpha;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string mode = "auto";      // exact | mc | auto
    std::string numeric = "exact";  // exact | float
    std::string format = "text";    // text | json | csv
    std::string search = "auto";    // exhaustive | heuristic | auto
    std::string rule = "zf";        // zf | psd
    std::string sweep;              // e.g. n=4..12
    std::string out;
    std::size_t max_states = 2'000'000;
    int max_frontier = 24;
    int subset_cap = 12;

    ChainCaps caps() const { return {max_states, max_frontier}; }
    McOptions mc() const {
        McOptions m;
        m.trials = trials;
        m.seed = seed;
        m.threads = threads;
        return m;
    }
};

json rat_json(const Rat& r) {
    return {{"rational", to_string(r)}, {"decimal", to_double(r)}};
}

std::string rat_text(const Rat& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", to_double(r));
    return to_string(r) + " = " + buf;
}

Graph make_graph(const std::string& spec) { return build(parse_graph_spec(spec)); }

// --start "best" -> nullopt; otherwise a comma-separated 0-based vertex list.
std::optional<Bitset> parse_start(const std::string& text, int n) {
    if (text == "best") return std::nullopt;
    Bitset b(n);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad --start entry '" + item + "'");
        }
        if (pos != item.size() || v < 0 || v >= n)
            throw std::invalid_argument("start vertex out of range: '" + item + "'");
        b.set(v);
    }
    if (b.empty()) throw std::invalid_argument("empty --start set");
    return b;
}

Bitset require_start(const std::string& text, int n) {
    auto b = parse_start(text, n);
    if (!b) throw std::invalid_argument("this command needs an explicit --start list");
    return *b;
}

// MC has no cheap argmin over starts; "best" resolves to a center vertex.
Bitset mc_start(const Graph& g, const std::string& text, json& result) {
    auto parsed = parse_start(text, g.order());
    if (parsed) return *parsed;
    int v = radius_and_center(g).second.to_vector().front();
    result["start"] = v;
    result["start_rule"] = "center (lowest index)";
    return Bitset::of(g.order(), {v});
}

void put_estimate(json& result, const EstimateReport& rep) {
    result["mean"] = rep.mean;
    result["std_error"] = rep.std_error;
    result["trials"] = rep.trials;
    result["seed"] = rep.seed;
}

// ---------------------------------------------------------------- commands

json run_ept(const Options& opt, const Graph& g) {
    json result{{"command", "ept"}};
    auto exact = [&]() {
        auto start = parse_start(opt.start, g.order());
        StateChain chain = start ? build_chain(g, *start, opt.caps()) : StateChain{};
        Rat value;
        if (start) {
            value = opt.numeric == "float" ? Rat(0) : ept_of_chain(chain);
        } else {
            auto [v, arg] = ept_graph(g, opt.caps());
            value = v;
            result["best_start"] = arg;
            chain = build_chain(g, Bitset::of(g.order(), {arg}), opt.caps());
        }
        if (opt.numeric == "float") {
            double d = ept_of_chain_float(to_float(chain));
            result["value"] = {{"decimal", d}};
            result["numeric"] = "float64";
        } else {
            result["value"] = rat_json(value);
        }
        result["states"] = chain.size();
        result["engine"] = "exact";
    };
    auto mc = [&]() {
        Bitset z = mc_start(g, opt.start, result);
        put_estimate(result, estimate_ept(g, z, opt.mc()));
        result["engine"] = "mc";
    };
    if (opt.mode == "exact") {
        exact();
    } else if (opt.mode == "mc") {
        mc();
    } else {
        try {
            exact();
        } catch (const ResourceError& e) {
            std::cerr << "notice: " << e.what() << "; falling back to Monte Carlo\n";
            mc();
        }
    }
    return result;
}

json run_lround(const Options& opt, const Graph& g) {
    json result{{"command", "lround"}, {"rounds", opt.rounds}};
    auto exact = [&]() {
        auto start = parse_start(opt.start, g.order());
        Rat value;
        if (start) {
            value = lround_probability(g, *start, opt.rounds, opt.caps());
        } else {
            value = lround_graph_profile(g, opt.rounds, opt.caps())[opt.rounds];
            result["start_rule"] = "max over single vertices";
        }
        result["value"] = rat_json(value);
        result["engine"] = "exact";
    };
    auto mc = [&]() {
        Bitset b = mc_start(g, opt.start, result);
        put_estimate(result, estimate_lround(g, b, opt.rounds, opt.mc()));
        result["engine"] = "mc";
    };
    if (opt.mode == "exact") {
        exact();
    } else if (opt.mode == "mc") {
        mc();
    } else {
        try {
            exact();
        } catch (const ResourceError& e) {
            std::cerr << "notice: " << e.what() << "; falling back to Monte Carlo\n";
            mc();
        }
    }
    return result;
}

json run_confidence(const Options& opt, const Graph& g) {
    if (opt.alpha.empty()) throw std::invalid_argument("--alpha is required");
    Rat alpha = parse_rat(opt.alpha);
    json result{{"command", "confidence"}, {"alpha", opt.alpha}};
    auto exact = [&]() {
        auto start = parse_start(opt.start, g.order());
        if (start) {
            result["rounds"] = confidence_time(g, *start, alpha, opt.caps());
        } else {
            auto [t, v] = confidence_graph(g, alpha, opt.caps());
            result["rounds"] = t;
            result["best_start"] = v;
        }
        result["engine"] = "exact";
    };
    auto mc = [&]() {
        Bitset z = mc_start(g, opt.start, result);
        result["rounds"] = estimate_confidence_time(g, z, to_double(alpha), opt.mc());
        result["trials"] = opt.trials;
        result["seed"] = opt.seed;
        result["engine"] = "mc";
    };
    if (opt.mode == "exact") {
        exact();
    } else if (opt.mode == "mc") {
        mc();
    } else {
        try {
            exact();
        } catch (const ResourceError& e) {
            std::cerr << "notice: " << e.what() << "; falling back to Monte Carlo\n";
            mc();
        }
    }
    return result;
}

SearchMode pick_search(const Options& opt, const Graph& g) {
    if (opt.search == "exhaustive") return SearchMode::exhaustive;
    if (opt.search == "heuristic") return SearchMode::heuristic;
    return g.order() <= opt.subset_cap ? SearchMode::exhaustive : SearchMode::heuristic;
}

json run_throttle(const Options& opt, const Graph& g) {
    SearchMode mode = pick_search(opt, g);
    ThrottleResult r = th_pzf_graph(g, mode, opt.caps(), opt.subset_cap);
    return {{"command", "throttle"},
            {"value", rat_json(r.value)},
            {"witness", r.witness.to_vector()},
            {"search", mode == SearchMode::exhaustive ? "exact-exhaustive" : "heuristic"}};
}

json run_throttle_alpha(const Options& opt, const Graph& g) {
    if (opt.alpha.empty()) throw std::invalid_argument("--alpha is required");
    Rat alpha = parse_rat(opt.alpha);
    SearchMode mode = pick_search(opt, g);
    ThrottleResult r = th_alpha(g, alpha, mode, opt.caps(), opt.subset_cap);
    return {{"command", "throttle-alpha"},
            {"alpha", opt.alpha},
            {"value", rat_json(r.value)},
            {"witness", r.witness.to_vector()},
            {"search", mode == SearchMode::exhaustive ? "exact-exhaustive" : "heuristic"}};
}

json run_kangyi(const Options& opt, const Graph& g) {
    Bitset b = require_start(opt.start, g.order());
    KangYiResult r = kang_yi_probability(g, b, opt.caps());
    return {{"command", "kangyi"},
            {"start", b.to_vector()},
            {"k0", r.k0},
            {"probability", rat_json(r.probability)}};
}

json run_pt(const Options& opt, const Graph& g) {
    Bitset z = require_start(opt.start, g.order());
    Rule rule = opt.rule == "psd" ? Rule::psd : Rule::zero_forcing;
    auto t = propagation_time(g, z, rule);
    json result{{"command", "pt"}, {"rule", opt.rule}, {"start", z.to_vector()}};
    if (t)
        result["rounds"] = *t;
    else
        result["rounds"] = "never";
    return result;
}

json run_zfnumber(const Options& opt, const Graph& g) {
    auto [z, witness] = zero_forcing_number(g, opt.subset_cap);
    return {{"command", "zfnumber"}, {"value", z}, {"witness", witness.to_vector()}};
}

// ------------------------------------------------------------- formatting

void flatten(const json& node, const std::string& prefix, json& flat) {
    if (node.is_object()) {
        for (auto& [k, v] : node.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, flat);
    } else if (node.is_array()) {
        flat[prefix] = node.dump();
    } else {
        flat[prefix] = node;
    }
}

std::string csv_escape(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void render(const std::vector<json>& results, const Options& opt, std::ostream& os) {
    if (opt.format == "json") {
        if (results.size() == 1) {
            json j = results[0];
            j["schema"] = "pzf/1";
            os << j.dump(2) << "\n";
        } else {
            json j{{"schema", "pzf/1"}, {"results", results}};
            os << j.dump(2) << "\n";
        }
        return;
    }
    if (opt.format == "csv") {
        std::vector<json> flats;
        std::vector<std::string> cols;
        for (auto& r : results) {
            json flat;
            flatten(r, "", flat);
            for (auto& [k, v] : flat.items())
                if (std::find(cols.begin(), cols.end(), k) == cols.end())
                    cols.push_back(k);
            flats.push_back(std::move(flat));
        }
        for (std::size_t i = 0; i < cols.size(); ++i)
            os << (i ? "," : "") << cols[i];
        os << "\n";
        for (auto& flat : flats) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                os << (i ? "," : "")
                   << (flat.contains(cols[i]) ? csv_escape(flat[cols[i]]) : "");
            os << "\n";
        }
        return;
    }
    for (auto& r : results) {
        for (auto& [k, v] : r.items()) {
            if (v.is_object() && v.contains("rational"))
                os << k << ": " << rat_text(parse_rat(v["rational"].get<std::string>()))
                   << "\n";
            else if (v.is_string())
                os << k << ": " << v.get<std::string>() << "\n";
            else
                os << k << ": " << v.dump() << "\n";
        }
        if (results.size() > 1) os << "\n";
    }
}

std::vector<int> sweep_values(const std::string& sweep) {
    // "n=4..12"
    auto eq = sweep.find('=');
    auto dots = sweep.find("..");
    if (eq == std::string::npos || dots == std::string::npos || sweep.substr(0, eq) != "n")
        throw std::invalid_argument("--sweep expects n=LO..HI");
    int lo = std::stoi(sweep.substr(eq + 1, dots - eq - 1));
    int hi = std::stoi(sweep.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("--sweep range is empty");
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

std::string substitute_n(const std::string& text, int n) {
    std::string out = text;
    auto pos = out.find("{n}");
    if (pos == std::string::npos)
        throw std::invalid_argument("--sweep needs a '{n}' placeholder in --graph");
    while (pos != std::string::npos) {
        out.replace(pos, 3, std::to_string(n));
        pos = out.find("{n}");
    }
    return out;
}

template <class Runner>
int run_graph_command(const Options& opt, Runner runner) {
    std::vector<json> results;
    if (opt.sweep.empty()) {
        Graph g = make_graph(opt.graph_spec);
        json r = runner(opt, g);
        r["graph"] = opt.graph_spec;
        results.push_back(std::move(r));
    } else {
        for (int n : sweep_values(opt.sweep)) {
            std::string spec = substitute_n(opt.graph_spec, n);
            Graph g = make_graph(spec);
            json r = runner(opt, g);
            r["graph"] = spec;
            r["n"] = n;
            results.push_back(std::move(r));
        }
    }
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f) throw std::invalid_argument("cannot open output file '" + opt.out + "'");
        render(results, opt, f);
    } else {
        render(results, opt, std::cout);
    }
    return 0;
}

void emit_json_report(const json& j, const Options& opt) {
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f) throw std::invalid_argument("cannot open output file '" + opt.out + "'");
        f << j.dump(2) << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

void add_common(CLI::App* cmd, Options& opt, bool graph = true) {
    if (graph)
        cmd->add_option("--graph", opt.graph_spec,
                        "generator string (e.g. cycle:8, spider:n=13,legs=4) or edge-list file")
            ->required();
    cmd->add_option("--format", opt.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", opt.out, "write output to a file");
    cmd->add_option("--max-states", opt.max_states, "exact-engine state cap");
    cmd->add_option("--max-frontier", opt.max_frontier, "exact-engine frontier cap");
    cmd->add_option("--threads", opt.threads, "Monte Carlo worker threads");
    cmd->add_option("--seed", opt.seed, "random seed (all randomness flows from it)");
}

void add_engine(CLI::App* cmd, Options& opt) {
    cmd->add_option("--mode", opt.mode, "exact | mc | auto")
        ->check(CLI::IsMember({"exact", "mc", "auto"}));
    cmd->add_option("--trials", opt.trials, "Monte Carlo trial count");
    cmd->add_option("--start", opt.start, "comma-separated vertices or 'best'");
    cmd->add_option("--sweep", opt.sweep, "sweep n=LO..HI over a '{n}' placeholder");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"probabilistic zero forcing toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto* ept = app.add_subcommand("ept", "expected propagation time");
    add_common(ept, opt);
    add_engine(ept, opt);
    ept->add_option("--numeric", opt.numeric, "exact | float")
        ->check(CLI::IsMember({"exact", "float"}));

    auto* lround = app.add_subcommand("lround", "probability all blue after l rounds");
    add_common(lround, opt);
    add_engine(lround, opt);
    lround->add_option("--rounds,-l", opt.rounds, "round count l")->required();

    auto* conf = app.add_subcommand("confidence", "alpha-confidence propagation time");
    add_common(conf, opt);
    add_engine(conf, opt);
    conf->add_option("--alpha", opt.alpha, "confidence level in (0,1); exact rational");

    auto* thr = app.add_subcommand("throttle", "probabilistic throttling number");
    add_common(thr, opt);
    thr->add_option("--search", opt.search, "exhaustive | heuristic | auto")
        ->check(CLI::IsMember({"exhaustive", "heuristic", "auto"}));
    thr->add_option("--subset-cap", opt.subset_cap, "exhaustive search cap on n");

    auto* tha = app.add_subcommand("throttle-alpha", "confidence throttling number");
    add_common(tha, opt);
    tha->add_option("--alpha", opt.alpha, "confidence level in (0,1)");
    tha->add_option("--search", opt.search, "exhaustive | heuristic | auto")
        ->check(CLI::IsMember({"exhaustive", "heuristic", "auto"}));
    tha->add_option("--subset-cap", opt.subset_cap, "exhaustive search cap on n");

    auto* kangyi = app.add_subcommand("kangyi", "Kang-Yi probability P_B(G)");
    add_common(kangyi, opt);
    kangyi->add_option("--start", opt.start, "comma-separated blue set B")->required();

    auto* pt = app.add_subcommand("pt", "deterministic propagation time (zf or psd)");
    add_common(pt, opt);
    pt->add_option("--start", opt.start, "comma-separated start set")->required();
    pt->add_option("--rule", opt.rule, "zf | psd")->check(CLI::IsMember({"zf", "psd"}));

    auto* zfn = app.add_subcommand("zfnumber", "zero forcing number Z(G)");
    add_common(zfn, opt);
    zfn->add_option("--subset-cap", opt.subset_cap, "search cap on n");
    zfn->add_option("--sweep", opt.sweep, "sweep n=LO..HI over a '{n}' placeholder");

    auto* gen = app.add_subcommand("gen", "emit the graph as an edge list");
    add_common(gen, opt);

    int scan_max_n = 5, scan_samples = 0, scan_sample_n = 8;
    double scan_p = 0.5;
    auto* scanm = app.add_subcommand("scan-monotone",
                                     "edge-addition monotonicity scan (JSON report)");
    add_common(scanm, opt, false);
    scanm->add_option("--max-n", scan_max_n, "exhaustive enumeration bound");
    scanm->add_option("--samples", scan_samples, "extra seeded gnp samples");
    scanm->add_option("--sample-n", scan_sample_n, "order of sampled graphs");
    scanm->add_option("--gnp-p", scan_p, "gnp edge probability for samples");

    auto* scank = app.add_subcommand("scan-kangyi",
                                     "Kang-Yi monotonicity scan (JSON report)");
    add_common(scank, opt, false);
    scank->add_option("--max-n", scan_max_n, "exhaustive enumeration bound");
    scank->add_option("--samples", scan_samples, "extra seeded gnp samples");
    scank->add_option("--sample-n", scan_sample_n, "order of sampled graphs");
    scank->add_option("--gnp-p", scan_p, "gnp edge probability for samples");

    std::string probe_families = "path:{n};cycle:{n};star:{n}";
    std::string probe_sizes = "5..10";
    auto* probe = app.add_subcommand("probe-radius", "ept/rad evidence table");
    add_common(probe, opt, false);
    probe->add_option("--families", probe_families,
                      "semicolon-separated generator templates with '{n}'");
    probe->add_option("--sizes", probe_sizes, "size range LO..HI");
    probe->add_option("--trials", opt.trials, "Monte Carlo trials for large graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // stable usage exit code
    }

    try {
        if (ept->parsed()) return run_graph_command(opt, run_ept);
        if (lround->parsed()) return run_graph_command(opt, run_lround);
        if (conf->parsed()) return run_graph_command(opt, run_confidence);
        if (thr->parsed()) return run_graph_command(opt, run_throttle);
        if (tha->parsed()) return run_graph_command(opt, run_throttle_alpha);
        if (kangyi->parsed()) return run_graph_command(opt, run_kangyi);
        if (pt->parsed()) return run_graph_command(opt, run_pt);
        if (zfn->parsed()) return run_graph_command(opt, run_zfnumber);
        if (gen->parsed()) {
            Graph g = make_graph(opt.graph_spec);
            if (!opt.out.empty()) {
                std::ofstream f(opt.out);
                if (!f)
                    throw std::invalid_argument("cannot open output file '" + opt.out + "'");
                write_edge_list(g, f);
            } else {
                write_edge_list(g, std::cout);
            }
            return 0;
        }
        ScanOptions scan;
        scan.max_n = scan_max_n;
        scan.samples = scan_samples;
        scan.sample_n = scan_sample_n;
        scan.gnp_p = scan_p;
        scan.seed = opt.seed;
        if (scanm->parsed()) {
            emit_json_report(to_json(scan_edge_monotonicity(scan, opt.caps())), opt);
            return 0;
        }
        if (scank->parsed()) {
            emit_json_report(to_json(scan_kangyi_monotonicity(scan, opt.caps())), opt);
            return 0;
        }
        if (probe->parsed()) {
            auto dots = probe_sizes.find("..");
            if (dots == std::string::npos)
                throw std::invalid_argument("--sizes expects LO..HI");
            int lo = std::stoi(probe_sizes.substr(0, dots));
            int hi = std::stoi(probe_sizes.substr(dots + 2));
            std::vector<FamilySpec> fams;
            std::stringstream ss(probe_families);
            std::string tmpl;
            while (std::getline(ss, tmpl, ';'))
                for (int n = lo; n <= hi; ++n)
                    fams.push_back(parse_graph_spec(substitute_n(tmpl, n)));
            auto rows = radius_ratio_probe(fams, opt.trials, opt.seed, opt.threads);
            if (opt.format == "csv") {
                std::ostringstream os;
                os << "family,n,radius,ept,engine,ept_over_rad,ept_over_rad_log2sq\n";
                for (auto& r : rows)
                    os << r.family << "," << r.n << "," << r.radius << "," << r.ept << ","
                       << r.engine << "," << r.ept_over_rad << "," << r.ept_over_rad_log2
                       << "\n";
                if (!opt.out.empty()) {
                    std::ofstream f(opt.out);
                    f << os.str();
                } else {
                    std::cout << os.str();
                }
            } else {
                emit_json_report(to_json(rows), opt);
            }
            return 0;
        }
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
