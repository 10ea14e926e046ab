// Acceptance suite: one check per criterion, each printing a PASS/FAIL line.
// Run all with no arguments or a single criterion by number. The process
// exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "pzf/chain.hpp"
#include "pzf/closed_forms.hpp"
#include "pzf/derived.hpp"
#include "pzf/forcing.hpp"
#include "pzf/graph.hpp"
#include "pzf/montecarlo.hpp"
#include "pzf/search.hpp"
#include "test_util.hpp"

using namespace pzf;
using namespace pzf::testutil;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    std::ostringstream log;
    int failures = 0;

    template <class... Args>
    void expect(bool ok, Args&&... context) {
        if (ok) return;
        ++failures;
        if (failures <= 12) {
            (log << ... << context);
            log << "\n";
        }
    }
};

Graph family(const std::string& spec) { return build(parse_graph_spec(spec)); }

// ---------------------------------------------------------------------------
// 1. cycle/path expected propagation time equals the closed forms exactly

bool criterion1(Check& c) {
    auto t0 = Clock::now();
    for (int n = 3; n <= 12; ++n) {
        auto [vc, argc_] = ept_graph(family("cycle:" + std::to_string(n)));
        c.expect(vc == ept_cycle(n), "cycle n=", n, ": engine ", to_string(vc),
                 " != formula ", to_string(ept_cycle(n)));
        auto [vp, argp] = ept_graph(family("path:" + std::to_string(n)));
        c.expect(vp == ept_path(n), "path n=", n, ": engine ", to_string(vp),
                 " != formula ", to_string(ept_path(n)));
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(secs < 60.0, "runtime ", secs, "s exceeds 60s");
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 2. star expected times and the exact one-round distribution row

bool criterion2(Check& c) {
    Graph k11 = family("star:1");
    c.expect(ept_exact(k11, Bitset::of(2, {0})) == Rat(1), "K_{1,1} center != 1");
    Graph k12 = family("star:2");
    c.expect(ept_exact(k12, Bitset::of(3, {0})) == Rat(2), "K_{1,2} center != 2");
    Graph k13 = family("star:3");
    double d3 = to_double(ept_exact(k13, Bitset::of(4, {0})));
    c.expect(std::abs(d3 - 2.76316) <= 1e-5, "K_{1,3} center ", d3, " != 2.76316");
    Graph k14 = family("star:4");
    double d4 = to_double(ept_exact(k14, Bitset::of(5, {0})));
    c.expect(std::abs(d4 - 3.34171) <= 1e-5, "K_{1,4} center ", d4, " != 3.34171");

    StateChain chain = build_chain(k13, Bitset::of(4, {0}));
    auto mass = round_distribution(chain, 1);
    std::map<int, Rat> by_leaves;
    for (std::size_t s = 0; s < chain.size(); ++s)
        by_leaves[chain.states[s].count() - 1] += mass[s];
    const Rat row[] = {frac(8, 27), frac(4, 9), frac(2, 9), frac(1, 27)};
    for (int leaves = 0; leaves <= 3; ++leaves)
        c.expect(by_leaves[leaves] == row[leaves], "one-round distribution at ", leaves, " leaves: ",
                 to_string(by_leaves[leaves]), " != ", to_string(row[leaves]));
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 3. Kang-Yi counterexample, exactly, plus the n=5 scan

bool criterion3(Check& c) {
    Graph g = fig1();
    KangYiResult a = kang_yi_probability(g, Bitset::of(5, {0}));
    c.expect(a.k0 == 3 && a.probability == frac(8, 9), "P_{1}: k0=", a.k0, " P=",
             to_string(a.probability), " expected k0=3 P=8/9");
    KangYiResult b = kang_yi_probability(g, Bitset::of(5, {0, 2}));
    c.expect(b.k0 == 1 && b.probability == frac(5, 9), "P_{1,3}: k0=", b.k0, " P=",
             to_string(b.probability), " expected k0=1 P=5/9");

    ScanOptions opts;
    opts.max_n = 5;
    KangYiScanReport report = scan_kangyi_monotonicity(opts);
    c.expect(!report.violations.empty(), "n<=5 scan found no violation");
    for (auto& v : report.violations)
        c.expect(reverify(v), "scan violation failed re-verification");
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 4. l-round closed forms, exactly, including the zero region

bool criterion4(Check& c) {
    for (int n = 4; n <= 10; ++n) {
        Graph cn = family("cycle:" + std::to_string(n));
        auto cyc = lround_profile(build_chain(cn, Bitset::of(n, {0})), 2 * n);
        Graph pn = family("path:" + std::to_string(n));
        auto pat = lround_profile(build_chain(pn, Bitset::of(n, {path_start(n)})), 2 * n);
        for (int l = 0; l <= 2 * n; ++l) {
            c.expect(cyc[l] == lround_cycle(n, l), "cycle n=", n, " l=", l, ": ",
                     to_string(cyc[l]), " != ", to_string(lround_cycle(n, l)));
            c.expect(pat[l] == lround_path(n, l), "path n=", n, " l=", l, ": ",
                     to_string(pat[l]), " != ", to_string(lround_path(n, l)));
        }
    }
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 5. confidence closed forms over a boundary-inclusive alpha grid

bool criterion5(Check& c) {
    std::vector<Rat> grid;
    for (int k = 1; k <= 19; ++k) grid.push_back(frac(k, 20));
    grid.push_back(frac(1, 4));
    grid.push_back(frac(1, 2));
    grid.push_back(frac(3, 4));
    for (int l = 0; l <= 4; ++l) {
        grid.push_back(Rat(1) - pow_rat(frac(1, 4), l + 1));          // even cycle bounds
        grid.push_back(Rat(1) - frac(3, 4) * pow_rat(frac(1, 4), l)); // odd bounds
        grid.push_back(Rat(1) - frac(1, 2) * pow_rat(frac(1, 4), l)); // even path bounds
    }

    for (int n = 4; n <= 10; ++n) {
        Graph cn = family("cycle:" + std::to_string(n));
        Graph pn = family("path:" + std::to_string(n));
        auto cyc = lround_profile(build_chain(cn, Bitset::of(n, {0})), 2 * n + 10);
        auto pat =
            lround_profile(build_chain(pn, Bitset::of(n, {path_start(n)})), 2 * n + 10);
        auto first_at = [](const std::vector<Rat>& prof, const Rat& alpha) {
            for (std::size_t t = 0; t < prof.size(); ++t)
                if (prof[t] >= alpha) return static_cast<int>(t);
            return -1;
        };
        for (const Rat& alpha : grid) {
            if (!(alpha > 0 && alpha < 1)) continue;
            c.expect(first_at(cyc, alpha) == confidence_cycle(n, alpha), "cycle n=", n,
                     " alpha=", to_string(alpha), ": engine ", first_at(cyc, alpha),
                     " != formula ", confidence_cycle(n, alpha));
            c.expect(first_at(pat, alpha) == confidence_path(n, alpha), "path n=", n,
                     " alpha=", to_string(alpha), ": engine ", first_at(pat, alpha),
                     " != formula ", confidence_path(n, alpha));
        }
    }

    // spot values, via the public confidence_time entry point
    c.expect(confidence_time(family("cycle:5"), Bitset::of(5, {0}), frac(1, 4)) == 2,
             "C5 at alpha=1/4 != 2");
    c.expect(confidence_time(family("path:4"), Bitset::of(4, {1}), frac(1, 2)) == 2,
             "P4 at alpha=1/2 != 2");
    c.expect(confidence_time(family("path:4"), Bitset::of(4, {1}), parse_rat("0.6")) == 3,
             "P4 at alpha=0.6 != 3");
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 6. Monte Carlo consistency: 4-sigma coverage over 100 seeds, thread-count
//    determinism

bool criterion6(Check& c) {
    struct Case {
        std::string name;
        Graph g;
        Bitset z;
    };
    std::vector<Case> cases;
    cases.push_back({"cycle:8", family("cycle:8"), Bitset::of(8, {0})});
    cases.push_back({"path:7 center", family("path:7"), Bitset::of(7, {3})});
    cases.push_back({"star:4 center", family("star:4"), Bitset::of(5, {0})});
    cases.push_back({"fig1", fig1(), Bitset::of(5, {0})});

    for (auto& [name, g, z] : cases) {
        double exact = to_double(ept_exact(g, z));
        int hits = 0;
        std::mutex mu;
        auto worker = [&](int lo, int hi) {
            int local = 0;
            for (int seed = lo; seed < hi; ++seed) {
                McOptions mc;
                mc.trials = 100000;
                mc.seed = static_cast<std::uint64_t>(seed);
                mc.threads = 1;
                EstimateReport rep = estimate_ept(g, z, mc);
                if (std::abs(rep.mean - exact) <= 4 * rep.std_error + 1e-12) ++local;
            }
            std::scoped_lock lock(mu);
            hits += local;
        };
        std::thread t1(worker, 0, 50), t2(worker, 50, 100);
        t1.join();
        t2.join();
        c.expect(hits >= 99, name, ": only ", hits, "/100 seeds within 4 SE");

        McOptions a;
        a.trials = 100000;
        a.seed = 0;
        a.threads = 1;
        a.quantiles = {0.5, 0.9};
        EstimateReport r1 = estimate_ept(g, z, a);
        a.threads = 4;
        EstimateReport r4 = estimate_ept(g, z, a);
        c.expect(r1.mean == r4.mean && r1.std_error == r4.std_error &&
                     r1.quantiles == r4.quantiles,
                 name, ": thread count changed the report");
    }
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 7. inequality suite over a battery of >= 200 graphs, zero violations

bool criterion7(Check& c) {
    std::vector<NamedGraph> graphs = battery(10, 20);
    c.expect(graphs.size() >= 200, "battery holds only ", graphs.size(), " graphs");

    std::mutex mu;
    std::size_t next = 0;
    auto worker = [&]() {
        for (;;) {
            std::size_t i;
            {
                std::scoped_lock lock(mu);
                if (next >= graphs.size()) return;
                i = next++;
            }
            auto& [name, g, is_tree] = graphs[i];
            const int n = g.order();
            Check local;

            auto [ept_min, best_v] = ept_graph(g);
            Bitset best = Bitset::of(n, {best_v});
            StateChain best_chain = build_chain(g, best);

            // radius lower bound
            int rad = radius_and_center(g).first;
            local.expect(Rat(rad) <= ept_min, name, ": rad ", rad, " > ept ",
                         to_string(ept_min));

            // on trees PSD propagation never beats the expected time
            if (is_tree) {
                for (std::uint64_t s = 0; s < 3; ++s) {
                    Bitset z = sample_set(n, 300 + s + i, 71);
                    auto ptp = propagation_time(g, z, Rule::psd);
                    local.expect(ptp.has_value(), name, ": psd never finishes");
                    if (ptp)
                        local.expect(Rat(*ptp) <= ept_exact(g, z), name, " Z=", z.str(),
                                     ": pt+ ", *ptp, " > ept");
                }
            }

            // nested starts: a larger blue set cannot lower any round probability
            if (n <= 8) {
                for (std::uint64_t s = 0; s < 2; ++s) {
                    Bitset a = sample_set(n, 400 + s + i, 72);
                    Bitset b = a | sample_set(n, 500 + s + i, 73);
                    if (b == a) b.set(static_cast<int>((s + i) % n));
                    if (b == a) continue;
                    auto pa = lround_profile(build_chain(g, a), 2 * n);
                    auto pb = lround_profile(build_chain(g, b), 2 * n);
                    for (int l = 0; l <= 2 * n; ++l)
                        local.expect(pa[l] <= pb[l], name, " l=", l,
                                     ": P_A > P_B for nested sets");
                }
            }

            // zero forcing sets certify probability exactly 1 at their propagation time
            auto [zn, witness] = zero_forcing_number(g);
            int pt = *propagation_time(g, witness, Rule::zero_forcing);
            auto wprof = lround_profile(build_chain(g, witness), pt + 1);
            local.expect(wprof[pt] == Rat(1), name, ": P^pt != 1 for a ZFS (Z(G)=", zn,
                         ")");

            // Markov bound on the confidence time at the best start
            for (auto& alpha : {frac(1, 2), frac(9, 10), frac(99, 100)}) {
                int t = confidence_time(g, best, alpha);
                local.expect(Rat(t) <= ept_min / (Rat(1) - alpha), name, " alpha=",
                             to_string(alpha), ": confidence time ", t,
                             " beats the Markov bound");
            }

            // Markov bound on the l-round probability at l = ceil(2 ept)
            Rat two_ept = Rat(2) * ept_min;
            int l44 = static_cast<int>(mpz_class(two_ept.get_num() / two_ept.get_den())
                                           .get_si());
            if (Rat(l44) < two_ept) ++l44;
            auto prof = lround_profile(best_chain, l44);
            local.expect(prof[l44] >= Rat(1) - ept_min / Rat(l44), name,
                         ": lround at 2ept below 1 - ept/l");

            std::scoped_lock lock(mu);
            c.failures += local.failures;
            c.log << local.log.str();
        }
    };
    std::thread t1(worker), t2(worker);
    t1.join();
    t2.join();
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 8. throttling: formula vs brute force, and the th+ <= th_pzf <= heuristic
//    sandwich

int th_psd_bruteforce(const Graph& g) {
    int n = g.order();
    int best = -1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        Bitset z(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) z.set(v);
        if (best > 0 && z.count() >= best) continue;
        auto pt = propagation_time(g, z, Rule::psd);
        if (!pt) continue;
        int value = z.count() + *pt;
        if (best < 0 || value < best) best = value;
    }
    return best;
}

bool criterion8(Check& c) {
    for (int n = 2; n <= 14; ++n) {
        int bf = th_psd_bruteforce(family("path:" + std::to_string(n)));
        c.expect(psd_throttle_path_cycle(n, Family::path) == bf, "path n=", n,
                 ": formula ", psd_throttle_path_cycle(n, Family::path),
                 " != brute force ", bf);
    }
    for (int n = 4; n <= 14; ++n) {
        int bf = th_psd_bruteforce(family("cycle:" + std::to_string(n)));
        c.expect(psd_throttle_path_cycle(n, Family::cycle) == bf, "cycle n=", n,
                 ": formula ", psd_throttle_path_cycle(n, Family::cycle),
                 " != brute force ", bf);
    }

    for (auto kind : {std::string("path"), std::string("cycle")}) {
        for (int n = kind == "path" ? 2 : 4; n <= 10; ++n) {
            Graph g = family(kind + ":" + std::to_string(n));
            ThrottleResult ex = th_pzf_graph(g, SearchMode::exhaustive);
            ThrottleResult heur = th_pzf_graph(g, SearchMode::heuristic);
            int thp = th_psd_bruteforce(g);
            c.expect(Rat(thp) <= ex.value, kind, " n=", n, ": th+ ", thp,
                     " > exhaustive th_pzf ", to_string(ex.value));
            c.expect(ex.value <= heur.value, kind, " n=", n, ": exhaustive ",
                     to_string(ex.value), " > heuristic ", to_string(heur.value));
        }
    }
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 9. desk-scale trend evidence for the asymptotic statements

bool criterion9(Check& c) {
    auto t0 = Clock::now();
    McOptions mc;
    mc.threads = 2;
    mc.seed = 424242;

    mc.trials = 4000;
    for (int n : {16, 64, 256, 1024}) {
        Graph star = family("star:" + std::to_string(n));
        double mean = estimate_ept(star, Bitset::of(n + 1, {0}), mc).mean;
        double ratio = mean / std::log2(static_cast<double>(n));
        c.expect(ratio >= 0.3 && ratio <= 3.0, "star n=", n, ": ept/log2 n = ", ratio,
                 " outside [0.3, 3]");
    }
    c.expect(std::chrono::duration<double>(Clock::now() - t0).count() < 300,
             "star trend exceeded 5 minutes");

    auto t1 = Clock::now();
    mc.trials = 3000;
    double prev = 0.0;
    for (int n = 8; n <= 1024; n *= 2) {
        Graph kn = family("complete:" + std::to_string(n));
        double mean = estimate_ept(kn, Bitset::of(n, {0}), mc).mean;
        c.expect(mean >= prev, "K_n mean dropped at n=", n, " (", prev, " -> ", mean, ")");
        c.expect(mean <= 3.0 * std::log2(static_cast<double>(n)), "K_", n, " mean ", mean,
                 " above 3 log2 n");
        prev = mean;
    }
    c.expect(std::chrono::duration<double>(Clock::now() - t1).count() < 300,
             "complete trend exceeded 5 minutes");

    auto t2 = Clock::now();
    mc.trials = 4000;
    for (int legs = 3; legs <= 10; ++legs) {
        int n = 5 * legs + 1;
        FamilySpec spec;
        spec.kind = Family::spider;
        spec.n = n;
        spec.legs = legs;
        Graph spider = build(spec);
        auto [rad, center] = radius_and_center(spider);
        int start = center.to_vector().front();
        double mean = estimate_ept(spider, Bitset::of(n, {start}), mc).mean;
        double bound = rad + std::log2(static_cast<double>(legs));
        c.expect(mean / bound <= 3.0, "spider legs=", legs, ": ratio ", mean / bound,
                 " above 3");
    }
    c.expect(std::chrono::duration<double>(Clock::now() - t2).count() < 300,
             "spider trend exceeded 5 minutes");
    return c.failures == 0;
}

// ---------------------------------------------------------------------------
// 10. the edge-monotonicity scan completes, reports reproducibly, re-verifies

bool criterion10(Check& c) {
    ScanOptions opts;
    opts.max_n = 5;
    EdgeMonoReport a = scan_edge_monotonicity(opts);
    c.expect(a.instances_checked > 0, "scan checked nothing");

    nlohmann::json ja = to_json(a);
    c.expect(ja.contains("schema") && ja.contains("violations") &&
                 ja.contains("instances_checked") && ja.contains("runtime_s") &&
                 ja.contains("search_space"),
             "report JSON missing documented fields");

    EdgeMonoReport b = scan_edge_monotonicity(opts);
    nlohmann::json jb = to_json(b);
    ja.erase("runtime_s");
    jb.erase("runtime_s");
    c.expect(ja == jb, "re-run produced a different report");

    for (auto& v : a.violations)
        c.expect(reverify(v), "reported violation failed independent re-verification");
    std::cout << "  (edge-monotonicity scan: " << a.instances_checked
              << " instances, " << a.violations.size() << " violations)\n";
    return c.failures == 0;
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* title;
        std::function<bool(Check&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "cycle/path ept equals closed forms exactly (n=3..12)", criterion1},
        {2, "star expected times and the exact one-round leaf distribution", criterion2},
        {3, "Kang-Yi counterexample values and n=5 scan", criterion3},
        {4, "l-round closed forms exactly (n=4..10, l=0..2n)", criterion4},
        {5, "confidence closed forms over the alpha grid", criterion5},
        {6, "Monte Carlo 4-sigma coverage and thread determinism", criterion6},
        {7, "inequality suite over >=200 graphs", criterion7},
        {8, "PSD throttling brute force and th sandwich", criterion8},
        {9, "trend evidence: stars, complete graphs, spiders", criterion9},
        {10, "edge-monotonicity scan reproducibility", criterion10},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failed = 0;
    for (auto& crit : criteria) {
        if (only != 0 && crit.id != only) continue;
        auto t0 = Clock::now();
        Check check;
        bool ok = false;
        try {
            ok = crit.run(check);
        } catch (const std::exception& e) {
            check.log << "exception: " << e.what() << "\n";
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%s] criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", crit.id,
                    crit.title, secs);
        if (!ok) {
            ++failed;
            std::cout << check.log.str();
            if (check.failures > 12)
                std::cout << "  ... " << (check.failures - 12) << " more failures\n";
        }
    }
    return failed;
}
