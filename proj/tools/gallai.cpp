// gallai: constructions, verifiers, counters, exact searches and Monte-Carlo
// checks for almost t-Gallai edge colourings, as one scriptable binary.
//
// Exit codes: 0 success, 2 invalid arguments or unreadable input,
// 3 verification failure (witness printed), 4 size limit exceeded.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gallai/charfunc.hpp"
#include "gallai/constructions.hpp"
#include "gallai/counting.hpp"
#include "gallai/errors.hpp"
#include "gallai/hypercube_like.hpp"
#include "gallai/io.hpp"
#include "gallai/parallel.hpp"
#include "gallai/rainbow.hpp"
#include "gallai/random_checks.hpp"
#include "gallai/search.hpp"
#include "gallai/tripartite.hpp"

using json = nlohmann::json;
using namespace gallai;

namespace {

constexpr const char* kVersion = "0.1.0";

uint64_t fnv1a(const std::string& bytes) {
    uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex64(uint64_t value) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
    return buffer;
}

struct RunContext {
    std::string subcommand;
    std::vector<std::string> argv;
    uint64_t seed = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

// Emitted alongside every output file. Identical manifests (all fields but
// the wall time) imply identical output bytes; the digest makes that
// checkable at a glance.
void write_with_manifest(const RunContext& ctx, const std::string& path,
                         const std::string& bytes) {
    write_file(path, bytes);
    json manifest;
    manifest["subcommand"] = ctx.subcommand;
    manifest["argv"] = ctx.argv;
    manifest["seed"] = ctx.seed;
    manifest["version"] = kVersion;
    manifest["output_digest"] = hex64(fnv1a(bytes));
    manifest["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - ctx.start)
            .count();
    write_file(path + ".manifest.json", manifest.dump(2) + "\n");
}

CompleteColouring load_complete(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return complete_colouring_from_text(in);
}

HostColouring load_host(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return host_colouring_from_text(in);
}

json summary_json(const TrialSummary& s) {
    return json{{"trials", s.trials},   {"mean", s.mean},
                {"stderr", s.std_error}, {"target", s.target},
                {"target_provenance", s.target_provenance}, {"z_score", s.z_score},
                {"seed", s.seed}};
}

struct SGrid {
    double lo = -std::numbers::pi;
    double hi = std::numbers::pi;
    unsigned points = 32;
};

SGrid parse_s_grid(const std::string& text) {
    SGrid grid;
    if (text.empty()) return grid;
    char colon1, colon2;
    std::istringstream in(text);
    if (!(in >> grid.lo >> colon1 >> grid.hi >> colon2 >> grid.points) || colon1 != ':' ||
        colon2 != ':' || grid.points < 1)
        throw std::invalid_argument("--s-grid expects lo:hi:points");
    return grid;
}

double grid_value(const SGrid& grid, unsigned i) {
    if (grid.points == 1) return grid.lo;
    return grid.lo + (grid.hi - grid.lo) * static_cast<double>(i) / (grid.points - 1);
}

int run(int argc, char** argv) {
    CLI::App app{"almost t-Gallai colouring toolkit"};
    app.require_subcommand(1);

    app.add_option_function<unsigned>(
        "--threads", [](unsigned v) { if (v > 0) set_thread_cap(v); },
        "worker thread cap (default: all cores)");

    RunContext ctx;
    for (int i = 1; i < argc; ++i) ctx.argv.emplace_back(argv[i]);

    int exit_code = 0;

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build the named colouring");
    {
        auto* hyper = construct->add_subcommand("hypercube", "hypercube colouring of K_{2^m+m}");
        auto m = std::make_shared<unsigned>(2);
        auto out = std::make_shared<std::string>();
        hyper->add_option("--m", *m, "dimension")->required();
        hyper->add_option("--out", *out, "output file");
        hyper->callback([&, m, out] {
            ctx.subcommand = "construct hypercube";
            auto c = hypercube_colouring(*m);
            auto text = to_text(c);
            if (!out->empty())
                write_with_manifest(ctx, *out, text);
            else
                std::cout << text;
        });

        auto* trunc = construct->add_subcommand("truncate", "truncated hypercube colouring of K_n");
        auto n = std::make_shared<Vertex>(6);
        auto tout = std::make_shared<std::string>();
        trunc->add_option("--n", *n, "vertex count")->required();
        trunc->add_option("--out", *tout, "output file");
        trunc->callback([&, n, tout] {
            ctx.subcommand = "construct truncate";
            auto text = to_text(truncated_hypercube_colouring(*n));
            if (!tout->empty())
                write_with_manifest(ctx, *tout, text);
            else
                std::cout << text;
        });

        auto* gadget = construct->add_subcommand("gadget", "gadget colouring from a clique-decomposed host");
        auto host_path = std::make_shared<std::string>();
        auto gn = std::make_shared<Vertex>(0);
        auto gt = std::make_shared<unsigned>(4);
        auto gout = std::make_shared<std::string>();
        gadget->add_option("--host", *host_path, "clique host file (omit for disjoint cliques)");
        gadget->add_option("--n", *gn, "vertex count of K_n")->required();
        gadget->add_option("--t", *gt, "clique size for the disjoint-cliques host");
        gadget->add_option("--out", *gout, "output file");
        gadget->callback([&, host_path, gn, gt, gout] {
            ctx.subcommand = "construct gadget";
            std::optional<CliqueDecomposedHost> host;
            if (!host_path->empty()) {
                std::ifstream in(*host_path);
                if (!in) throw std::runtime_error("cannot open: " + *host_path);
                host = clique_host_from_text(in);
            } else {
                host = CliqueDecomposedHost::disjoint_cliques(*gn, *gt);
            }
            auto text = to_text(gadget_colouring(*host, *gn));
            if (!gout->empty())
                write_with_manifest(ctx, *gout, text);
            else
                std::cout << text;
        });

        auto* tri = construct->add_subcommand("tripartite", "sharp good 2-colouring with floor((n-1)/2) red triangles");
        auto tn = std::make_shared<Vertex>(7);
        auto triout = std::make_shared<std::string>();
        tri->add_option("--n", *tn, "total vertex count")->required();
        tri->add_option("--out", *triout, "output file");
        tri->callback([&, tn, triout] {
            ctx.subcommand = "construct tripartite";
            auto text = to_text(sharp_tripartite_colouring(*tn));
            if (!triout->empty())
                write_with_manifest(ctx, *triout, text);
            else
                std::cout << text;
        });

        auto* rsz = construct->add_subcommand("rsz", "Ruzsa-Szemeredi tripartite host colouring");
        auto N = std::make_shared<uint64_t>(3);
        auto ap_path = std::make_shared<std::string>();
        auto rout = std::make_shared<std::string>();
        rsz->add_option("--N", *N, "base range [1..N]")->required();
        rsz->add_option("--ap-file", *ap_path, "3-AP-free set file (default: greedy set)");
        rsz->add_option("--out", *rout, "output file");
        rsz->callback([&, N, ap_path, rout] {
            ctx.subcommand = "construct rsz";
            ApFreeSet set;
            if (!ap_path->empty()) {
                std::ifstream in(*ap_path);
                if (!in) throw std::runtime_error("cannot open: " + *ap_path);
                set = ap_free_set_from_text(in);
                set.N = std::max<uint64_t>(set.N, *N);
            } else {
                set = greedy_ap3_free(*N);
            }
            auto rszh = ruzsa_szemeredi_host(*N, set);
            auto text = to_text(rszh.host);
            std::cerr << "triangles=" << rszh.triangles.size() << '\n';
            if (!rout->empty())
                write_with_manifest(ctx, *rout, text);
            else
                std::cout << text;
        });
    }

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "verify structural properties");
    {
        auto* gallai_cmd = verify->add_subcommand("gallai", "almost t-Gallai check");
        auto in_path = std::make_shared<std::string>();
        auto t = std::make_shared<unsigned>(3);
        gallai_cmd->add_option("--in", *in_path, "colouring file")->required();
        gallai_cmd->add_option("--t", *t, "clique size");
        gallai_cmd->callback([&, in_path, t] {
            ctx.subcommand = "verify gallai";
            std::ifstream probe(*in_path);
            if (!probe) throw std::runtime_error("cannot open: " + *in_path);
            auto [is_complete, tok] = sniff_colouring_kind(probe);
            GallaiCheck check;
            if (is_complete)
                check = is_almost_gallai(load_complete(*in_path), *t);
            else
                check = is_almost_gallai(load_host(*in_path), *t);
            if (check.almost_gallai) {
                std::cout << "almost-gallai\n";
            } else {
                std::cout << "not almost-gallai: cliques";
                auto print = [](const std::vector<Vertex>& cl) {
                    std::cout << " (";
                    for (size_t i = 0; i < cl.size(); ++i)
                        std::cout << (i ? "," : "") << cl[i];
                    std::cout << ")";
                };
                print(check.first);
                std::cout << " and";
                print(check.second);
                std::cout << " share edge (" << check.witness->u << "," << check.witness->v
                          << ")\n";
                exit_code = 3;
            }
        });

        auto* gadget_cmd = verify->add_subcommand("gadget", "clique-decomposition properties (2) and (3)");
        auto host_path = std::make_shared<std::string>();
        gadget_cmd->add_option("--host", *host_path, "clique host file")->required();
        gadget_cmd->callback([&, host_path] {
            ctx.subcommand = "verify gadget";
            std::ifstream in(*host_path);
            if (!in) throw std::runtime_error("cannot open: " + *host_path);
            auto report = verify_gadget_properties(clique_host_from_text(in));
            std::cout << "property2=" << (report.property2 ? "true" : "false")
                      << " property3=" << (report.property3 ? "true" : "false")
                      << " cliques=" << report.clique_count << '\n';
            if (!report.property2 || !report.property3) {
                std::cout << report.violation << '\n';
                exit_code = 3;
            }
        });

        auto* hcl = verify->add_subcommand("hclike", "hypercube-like conditions (1) and (2)");
        auto g_path = std::make_shared<std::string>();
        hcl->add_option("--in", *g_path, "labelled graph file")->required();
        hcl->callback([&, g_path] {
            ctx.subcommand = "verify hclike";
            std::ifstream in(*g_path);
            if (!in) throw std::runtime_error("cannot open: " + *g_path);
            auto result = verify_hypercube_like(labelled_graph_from_text(in));
            std::cout << result.describe() << '\n';
            if (!result.ok) exit_code = 3;
        });

        auto* good = verify->add_subcommand("good", "no two monochromatic triangles share an edge");
        auto t_path = std::make_shared<std::string>();
        good->add_option("--in", *t_path, "tripartite colouring file")->required();
        good->callback([&, t_path] {
            ctx.subcommand = "verify good";
            std::ifstream in(*t_path);
            if (!in) throw std::runtime_error("cannot open: " + *t_path);
            auto check = is_good(tripartite_from_text(in));
            if (check.good) {
                std::cout << "good\n";
            } else {
                auto& [a, b] = *check.witness;
                std::cout << "not good: triangles (" << a[0] << "," << a[1] << "," << a[2]
                          << ") and (" << b[0] << "," << b[1] << "," << b[2]
                          << ") share an edge\n";
                exit_code = 3;
            }
        });
    }

    // ---- count ----
    auto* count = app.add_subcommand("count", "counting operations");
    {
        auto* rainbow = count->add_subcommand("rainbow", "rainbow t-cliques");
        auto in_path = std::make_shared<std::string>();
        auto t = std::make_shared<unsigned>(3);
        auto as_json = std::make_shared<bool>(false);
        rainbow->add_option("--in", *in_path, "colouring file")->required();
        rainbow->add_option("--t", *t, "clique size");
        rainbow->add_flag("--json", *as_json, "emit the full clique set as JSON");
        rainbow->callback([&, in_path, t, as_json] {
            ctx.subcommand = "count rainbow";
            std::ifstream probe(*in_path);
            if (!probe) throw std::runtime_error("cannot open: " + *in_path);
            auto [is_complete, tok] = sniff_colouring_kind(probe);
            RainbowCliqueSet set;
            if (is_complete)
                set = enumerate_rainbow_cliques(load_complete(*in_path), *t);
            else
                set = enumerate_rainbow_cliques(load_host(*in_path), *t);
            if (*as_json) {
                json cliques = json::array();
                for (size_t i = 0; i < set.size(); ++i) {
                    auto cl = set.clique(i);
                    cliques.push_back(std::vector<Vertex>(cl.begin(), cl.end()));
                }
                json j{{"t", set.t},
                       {"count", set.size()},
                       {"edge_disjoint", set.edge_disjoint},
                       {"cliques", cliques}};
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << set.size() << '\n';
            }
        });

        auto* crossing = count->add_subcommand("crossing", "rainbow triangles crossing X,Y with a q-edge in X");
        auto c_path = std::make_shared<std::string>();
        auto xs = std::make_shared<std::vector<Vertex>>();
        auto ys = std::make_shared<std::vector<Vertex>>();
        auto q = std::make_shared<Colour>(kGreen);
        crossing->add_option("--in", *c_path, "colouring file")->required();
        crossing->add_option("--x", *xs, "X vertices")->required()->delimiter(',');
        crossing->add_option("--y", *ys, "Y vertices")->required()->delimiter(',');
        crossing->add_option("--q", *q, "edge colour inside X");
        crossing->callback([&, c_path, xs, ys, q] {
            ctx.subcommand = "count crossing";
            std::cout << crossing_rainbow_count(load_complete(*c_path), *xs, *ys, *q) << '\n';
        });

        auto* nice = count->add_subcommand("nice", "nice quadruples and the double-counting identity");
        auto n_path = std::make_shared<std::string>();
        auto n_json = std::make_shared<bool>(false);
        nice->add_option("--in", *n_path, "colouring file")->required();
        nice->add_flag("--json", *n_json, "emit the full report as JSON");
        nice->callback([&, n_path, n_json] {
            ctx.subcommand = "count nice";
            auto report = nice_quadruples(load_complete(*n_path));
            if (*n_json) {
                json j{{"total", report.total},
                       {"per_vertex_sum", report.per_vertex_sum},
                       {"type_counts", report.type_counts}};
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << report.total << '\n';
            }
        });

        auto* crb = count->add_subcommand("crb", "rainbow triangles with a red and a blue edge at v");
        auto b_path = std::make_shared<std::string>();
        auto v = std::make_shared<Vertex>(0);
        crb->add_option("--in", *b_path, "colouring file")->required();
        crb->add_option("--v", *v, "vertex")->required();
        crb->callback([&, b_path, v] {
            ctx.subcommand = "count crb";
            std::cout << c_rb(load_complete(*b_path), *v) << '\n';
        });
    }

    // ---- search ----
    auto* search = app.add_subcommand("search", "exact and heuristic extremal search");
    {
        auto* tau = search->add_subcommand("tau", "max rainbow t-cliques over almost t-Gallai k-colourings");
        auto n = std::make_shared<Vertex>(5);
        auto t = std::make_shared<unsigned>(3);
        auto k = std::make_shared<Colour>(3);
        auto mode = std::make_shared<std::string>("bnb");
        auto budget = std::make_shared<uint64_t>(1000);
        auto seed = std::make_shared<uint64_t>(0);
        auto cap_nodes = std::make_shared<uint64_t>(0);
        auto max_n = std::make_shared<Vertex>(8);
        auto out = std::make_shared<std::string>();
        tau->add_option("--n", *n, "vertex count")->required();
        tau->add_option("--t", *t, "clique size");
        tau->add_option("--colours", *k, "number of colours");
        tau->add_option("--mode", *mode, "exhaustive|bnb|local")
            ->check(CLI::IsMember({"exhaustive", "bnb", "local"}));
        tau->add_option("--budget", *budget, "proposals for local mode");
        tau->add_option("--seed", *seed, "seed for local mode");
        tau->add_option("--cap-nodes", *cap_nodes, "abort after this many nodes");
        tau->add_option("--max-n", *max_n, "feasibility guard for exact modes");
        tau->add_option("--out", *out, "write the witness colouring here");
        tau->callback([&, n, t, k, mode, budget, seed, cap_nodes, max_n, out] {
            ctx.subcommand = "search tau";
            ctx.seed = *seed;
            TauResult result{0, CompleteColouring(1, 1, 0), {}, SearchMethod::heuristic};
            if (*mode == "local") {
                result = local_search_tau(*n, *t, *k, *budget, *seed);
            } else {
                SearchLimits limits;
                limits.max_nodes = *cap_nodes;
                limits.max_n = *max_n;
                auto method = *mode == "bnb" ? SearchMethod::branch_and_bound
                                             : SearchMethod::exhaustive;
                result = exact_tau(*n, *t, *k, method, limits);
            }
            std::cout << result.value << '\n';
            std::cerr << "nodes=" << result.stats.nodes_explored
                      << " elapsed=" << result.stats.elapsed_seconds << "s\n";
            if (!out->empty()) write_with_manifest(ctx, *out, to_text(result.witness));
        });

        auto* gamma = search->add_subcommand("gamma", "max monochromatic triangles over good 2-colourings");
        auto n1 = std::make_shared<Vertex>(1);
        auto n2 = std::make_shared<Vertex>(1);
        auto n3 = std::make_shared<Vertex>(1);
        auto cap = std::make_shared<uint64_t>(0);
        auto gout = std::make_shared<std::string>();
        gamma->add_option("--n1", *n1, "part size 1")->required();
        gamma->add_option("--n2", *n2, "part size 2")->required();
        gamma->add_option("--n3", *n3, "part size 3")->required();
        gamma->add_option("--cap-nodes", *cap, "abort after this many nodes");
        gamma->add_option("--out", *gout, "write the witness colouring here");
        gamma->callback([&, n1, n2, n3, cap, gout] {
            ctx.subcommand = "search gamma";
            SearchLimits limits;
            limits.max_nodes = *cap;
            auto result = exact_gamma(*n1, *n2, *n3, limits);
            std::cout << result.value << '\n';
            std::cerr << "max_red=" << result.max_red << " max_blue=" << result.max_blue
                      << " nodes=" << result.stats.nodes_explored << '\n';
            if (!gout->empty()) write_with_manifest(ctx, *gout, to_text(result.witness));
        });

        auto* local = search->add_subcommand("local", "hill-climbing lower bound for tau");
        auto ln = std::make_shared<Vertex>(11);
        auto lt = std::make_shared<unsigned>(3);
        auto lk = std::make_shared<Colour>(3);
        auto lbudget = std::make_shared<uint64_t>(1000);
        auto lseed = std::make_shared<uint64_t>(0);
        auto lout = std::make_shared<std::string>();
        local->add_option("--n", *ln, "vertex count")->required();
        local->add_option("--t", *lt, "clique size");
        local->add_option("--colours", *lk, "number of colours");
        local->add_option("--budget", *lbudget, "proposal budget");
        local->add_option("--seed", *lseed, "RNG seed");
        local->add_option("--out", *lout, "write the witness colouring here");
        local->callback([&, ln, lt, lk, lbudget, lseed, lout] {
            ctx.subcommand = "search local";
            ctx.seed = *lseed;
            auto result = local_search_tau(*ln, *lt, *lk, *lbudget, *lseed);
            std::cout << result.value << '\n';
            if (!lout->empty()) write_with_manifest(ctx, *lout, to_text(result.witness));
        });
    }

    // ---- random ----
    auto* random_cmd = app.add_subcommand("random", "Monte-Carlo checks with exact targets");
    {
        auto tolerance = std::make_shared<double>(4.0);
        random_cmd->add_option("--target-tolerance-sigma", *tolerance,
                               "accepted |z| band (one-sided for thinning)");

        auto* ret = random_cmd->add_subcommand("retention3", "rainbow retention under random 3-colour projection");
        auto r_path = std::make_shared<std::string>();
        auto r_trials = std::make_shared<uint64_t>(10000);
        auto r_seed = std::make_shared<uint64_t>(0);
        ret->add_option("--in", *r_path, "almost Gallai colouring file")->required();
        ret->add_option("--trials", *r_trials, "trial count");
        ret->add_option("--seed", *r_seed, "seed");
        ret->callback([&, r_path, r_trials, r_seed, tolerance] {
            ctx.subcommand = "random retention3";
            ctx.seed = *r_seed;
            auto summary = retention_check_3colour(load_complete(*r_path), *r_trials, *r_seed);
            std::cout << summary_json(summary).dump(2) << '\n';
            if (summary.std_error > 0 && std::fabs(summary.z_score) > *tolerance) exit_code = 3;
        });

        auto* tp = random_cmd->add_subcommand("tpartite", "t-partite subgraph retention");
        auto t_path = std::make_shared<std::string>();
        auto t_t = std::make_shared<unsigned>(3);
        auto t_trials = std::make_shared<uint64_t>(10000);
        auto t_seed = std::make_shared<uint64_t>(0);
        tp->add_option("--in", *t_path, "almost t-Gallai colouring file")->required();
        tp->add_option("--t", *t_t, "clique size");
        tp->add_option("--trials", *t_trials, "trial count");
        tp->add_option("--seed", *t_seed, "seed");
        tp->callback([&, t_path, t_t, t_trials, t_seed, tolerance] {
            ctx.subcommand = "random tpartite";
            ctx.seed = *t_seed;
            auto summary =
                tpartite_retention_check(load_complete(*t_path), *t_t, *t_trials, *t_seed);
            std::cout << summary_json(summary).dump(2) << '\n';
            if (summary.std_error > 0 && std::fabs(summary.z_score) > *tolerance) exit_code = 3;
        });

        auto* thin = random_cmd->add_subcommand("thinning", "random thinning of X against the crossing bound");
        auto h_path = std::make_shared<std::string>();
        auto xs = std::make_shared<std::vector<Vertex>>();
        auto ys = std::make_shared<std::vector<Vertex>>();
        auto dd = std::make_shared<unsigned>(1);
        auto h_trials = std::make_shared<uint64_t>(10000);
        auto h_seed = std::make_shared<uint64_t>(0);
        thin->add_option("--in", *h_path, "almost Gallai colouring file")->required();
        thin->add_option("--x", *xs, "X vertices")->required()->delimiter(',');
        thin->add_option("--y", *ys, "Y vertices")->required()->delimiter(',');
        thin->add_option("--d", *dd, "green-degree cap");
        thin->add_option("--trials", *h_trials, "trial count");
        thin->add_option("--seed", *h_seed, "seed");
        thin->callback([&, h_path, xs, ys, dd, h_trials, h_seed, tolerance] {
            ctx.subcommand = "random thinning";
            ctx.seed = *h_seed;
            auto summary =
                thinning_crossing_check(load_complete(*h_path), *xs, *ys, *dd, *h_trials, *h_seed);
            std::cout << summary_json(summary).dump(2) << '\n';
            if (summary.std_error > 0 && summary.z_score < -*tolerance) exit_code = 3;
        });
    }

    // ---- charfunc ----
    auto* charfunc = app.add_subcommand("charfunc", "characteristic function of clique counts in G(n,p)");
    {
        auto* est = charfunc->add_subcommand("estimate", "Monte-Carlo |E e^{isX_t}| over an s grid");
        auto n = std::make_shared<Vertex>(10);
        auto p = std::make_shared<double>(0.5);
        auto t = std::make_shared<unsigned>(3);
        auto sgrid = std::make_shared<std::string>();
        auto trials = std::make_shared<uint64_t>(10000);
        auto seed = std::make_shared<uint64_t>(0);
        auto host_path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        est->add_option("--n", *n, "vertex count")->required();
        est->add_option("--p", *p, "edge probability");
        est->add_option("--t", *t, "clique size");
        est->add_option("--s-grid", *sgrid, "lo:hi:points (default -pi:pi:32)");
        est->add_option("--trials", *trials, "trials per grid point");
        est->add_option("--seed", *seed, "seed");
        est->add_option("--host", *host_path, "gadget host file backing the bound column");
        est->add_option("--out", *out, "CSV output file");
        est->callback([&, n, p, t, sgrid, trials, seed, host_path, out] {
            ctx.subcommand = "charfunc estimate";
            ctx.seed = *seed;
            auto grid = parse_s_grid(*sgrid);
            std::optional<uint64_t> gadget;
            if (!host_path->empty()) {
                std::ifstream in(*host_path);
                if (!in) throw std::runtime_error("cannot open: " + *host_path);
                gadget = clique_host_from_text(in).cliques().size();
            }
            uint64_t k_rb = best_known_rainbow_count(*n, *t, gadget);
            std::ostringstream csv;
            csv << "s,modulus,stderr,bound\n";
            char line[160];
            for (unsigned i = 0; i < grid.points; ++i) {
                double s = grid_value(grid, i);
                auto e = estimate_charfunc(*n, *p, *t, s, *trials, *seed + i);
                double bound = std::fabs(s) <= std::numbers::pi
                                   ? rainbow_final_bound({k_rb, *p, *t, s})
                                   : 1.0;
                std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", s, e.modulus,
                              e.std_error, bound);
                csv << line;
            }
            if (!out->empty())
                write_with_manifest(ctx, *out, csv.str());
            else
                std::cout << csv.str();
        });

        auto* bound = charfunc->add_subcommand("bound", "closed-form bound from the best rainbow packing");
        auto bn = std::make_shared<Vertex>(10);
        auto bp = std::make_shared<double>(0.5);
        auto bt = std::make_shared<unsigned>(3);
        auto bgrid = std::make_shared<std::string>();
        auto bhost = std::make_shared<std::string>();
        auto bout = std::make_shared<std::string>();
        bound->add_option("--n", *bn, "vertex count")->required();
        bound->add_option("--p", *bp, "edge probability");
        bound->add_option("--t", *bt, "clique size");
        bound->add_option("--s-grid", *bgrid, "lo:hi:points (default -pi:pi:32)");
        bound->add_option("--host", *bhost, "gadget host file backing the packing count");
        bound->add_option("--out", *bout, "CSV output file");
        bound->callback([&, bn, bp, bt, bgrid, bhost, bout] {
            ctx.subcommand = "charfunc bound";
            auto grid = parse_s_grid(*bgrid);
            std::optional<uint64_t> gadget;
            if (!bhost->empty()) {
                std::ifstream in(*bhost);
                if (!in) throw std::runtime_error("cannot open: " + *bhost);
                gadget = clique_host_from_text(in).cliques().size();
            }
            uint64_t k_rb = best_known_rainbow_count(*bn, *bt, gadget);
            std::ostringstream csv;
            csv << "s,modulus,stderr,bound\n";
            char line[160];
            for (unsigned i = 0; i < grid.points; ++i) {
                double s = grid_value(grid, i);
                double value = rainbow_final_bound({k_rb, *bp, *bt, s});
                std::snprintf(line, sizeof line, "%.17g,,,%.17g\n", s, value);
                csv << line;
            }
            if (!bout->empty())
                write_with_manifest(ctx, *bout, csv.str());
            else
                std::cout << csv.str();
        });
    }

    // ---- table ----
    {
        auto* table = app.add_subcommand("table", "regenerate the small-n tau/gamma tables");
        auto tau_max = std::make_shared<Vertex>(6);
        auto gamma_max = std::make_shared<Vertex>(8);
        auto colours = std::make_shared<Colour>(3);
        auto out = std::make_shared<std::string>();
        table->add_option("--tau-max-n", *tau_max, "largest n for the tau table");
        table->add_option("--gamma-max-n", *gamma_max, "largest n for the gamma table");
        table->add_option("--colours", *colours, "colour budget for tau");
        table->add_option("--out", *out, "output file");
        table->callback([&, tau_max, gamma_max, colours, out] {
            ctx.subcommand = "table";
            std::ostringstream text;
            text << "# tau_3(n) over almost 3-Gallai " << *colours << "-colourings\n";
            text << "n value nodes\n";
            for (Vertex n = 3; n <= *tau_max; ++n) {
                SearchLimits limits;
                limits.max_n = *tau_max;
                auto r = exact_tau(n, 3, *colours, SearchMethod::branch_and_bound, limits);
                text << n << ' ' << r.value << ' ' << r.stats.nodes_explored << '\n';
            }
            text << "# gamma(n) = max over part sizes, good 2-colourings\n";
            text << "n value\n";
            for (Vertex n = 3; n <= *gamma_max; ++n) {
                uint64_t best = 0;
                for (Vertex a = 1; a <= n - 2; ++a)
                    for (Vertex b = a; a + b <= n - 1; ++b) {
                        Vertex c = n - a - b;
                        if (c < b) continue;
                        best = std::max(best, exact_gamma(a, b, c).value);
                    }
                text << n << ' ' << best << '\n';
            }
            if (!out->empty())
                write_with_manifest(ctx, *out, text.str());
            else
                std::cout << text.str();
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const precondition_violation& e) {
        std::cout << e.witness() << '\n';
        std::cerr << "verification failure: " << e.what() << '\n';
        return 3;
    } catch (const size_limit_error& e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("GALLAI_THREADS")) {
        unsigned value = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        if (value > 0) set_thread_cap(value);
    }
    return run(argc, argv);
}
