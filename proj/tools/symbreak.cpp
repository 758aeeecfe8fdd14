// Command-line front end: graph ingestion, symmetry-breaking indices,
// distinguishing checks, and formula-verification sweeps.
//
// Exit codes: 0 success, 1 verification found a counterexample,
//             2 input error, 3 capacity/budget error.

#include "symbreak/counting.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/product.hpp"
#include "symbreak/product_symmetry.hpp"
#include "symbreak/specparse.hpp"

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace symbreak;

namespace {

std::vector<int> parse_k_range(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t dots = token.find("..");
        if (dots != std::string::npos) {
            int lo = std::stoi(token.substr(0, dots));
            int hi = std::stoi(token.substr(dots + 2));
            if (lo > hi) throw input_error("empty range: " + token);
            for (int k = lo; k <= hi; ++k) out.push_back(k);
        } else if (!token.empty()) {
            out.push_back(std::stoi(token));
        }
    }
    if (out.empty()) throw input_error("empty k range: '" + text + "'");
    for (int k : out)
        if (k < 1) throw input_error("k must be >= 1");
    return out;
}

CountBackend parse_backend(const std::string& name) {
    if (name == "auto") return CountBackend::Auto;
    if (name == "brute") return CountBackend::Brute;
    if (name == "moebius") return CountBackend::Moebius;
    throw input_error("unknown backend '" + name + "' (auto|brute|moebius)");
}

// "(2,2),(3,4)" with 1-based factor coordinates -> red cell list.
std::vector<std::vector<int>> parse_red_cells(const std::string& text) {
    std::vector<std::vector<int>> cells;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t open = text.find('(', pos);
        if (open == std::string::npos) break;
        size_t close = text.find(')', open);
        if (close == std::string::npos) throw input_error("unbalanced '(' in red cell list");
        std::string body = text.substr(open + 1, close - open - 1);
        std::vector<int> cell;
        std::istringstream in(body);
        std::string num;
        while (std::getline(in, num, ',')) cell.push_back(std::stoi(num) - 1);
        if (cell.size() != 2) throw input_error("red cells need exactly two coordinates");
        cells.push_back(std::move(cell));
        pos = close + 1;
    }
    if (cells.empty()) throw input_error("no red cells in '" + text + "'");
    return cells;
}

Coloring coloring_from_list(const std::string& text, int n) {
    std::vector<int> colors;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) colors.push_back(std::stoi(tok));
    if (static_cast<int>(colors.size()) != n)
        throw input_error("coloring has " + std::to_string(colors.size()) + " entries, graph has " +
                          std::to_string(n) + " vertices");
    int palette = 0;
    for (int c : colors) palette = std::max(palette, c);
    return Coloring(std::move(colors), palette);
}

struct VerifyContext {
    std::uint64_t budget = 0;
    std::uint64_t seed = 7777;
    int failures = 0;

    void report(bool ok, const std::string& what) {
        std::cout << (ok ? "  ok   " : "  FAIL ") << what << '\n';
        if (!ok) ++failures;
    }
};

// Phi via enumeration when it fits the budget, else via the subgroup
// lattice; either way the route is independent of the closed forms.
Int oracle_phi(const Graph& g, const AutGroup& aut, int k, std::uint64_t budget) {
    try {
        return phi(g, aut, k, {CountBackend::Brute, budget, nullptr});
    } catch (const capacity_error&) {
        return phi(g, aut, k, {CountBackend::Moebius, 0, nullptr});
    }
}

void verify_grids(VerifyContext& ctx, const std::vector<int>& ms, const std::vector<int>& ns,
                  const std::vector<int>& ks) {
    std::cout << "verify grids\n";
    for (int m : ms)
        for (int n : ns) {
            if (m > n) continue; // Phi(P_m x P_n) is symmetric in the factors
            if (m == n && m < 3) {
                std::cout << "  skip " << m << "x" << n << " (no closed form for the 2x2 grid)\n";
                continue;
            }
            ProductGraph p = cartesian_product({path_graph(m), path_graph(n)});
            AutGroup aut = automorphisms(p.graph());
            for (int k : ks) {
                Int closed = (m == n) ? phi_square_grid(n, k) : phi_grid(m, n, k);
                Int oracle = oracle_phi(p.graph(), aut, k, ctx.budget);
                std::ostringstream what;
                what << "Phi_" << k << "(P" << m << " x P" << n << ") closed " << closed.get_str()
                     << " vs oracle " << oracle.get_str();
                ctx.report(closed == oracle, what.str());
            }
        }
}

void verify_thresholds(VerifyContext& ctx) {
    std::cout << "verify thresholds (closed forms vs enumerated automorphisms)\n";
    for (int m = 2; m <= 10; ++m) {
        Graph p = path_graph(m);
        int got = threshold(p, automorphisms(p));
        ctx.report(got == (m + 1) / 2 + 1,
                   "theta(P" + std::to_string(m) + ") = " + std::to_string(got));
    }
    for (int n = 3; n <= 10; ++n) {
        Graph c = cycle_graph(n);
        int got = threshold(c, automorphisms(c));
        ctx.report(got == n / 2 + 2, "theta(C" + std::to_string(n) + ") = " + std::to_string(got));
    }
}

void verify_products(VerifyContext& ctx) {
    std::cout << "verify product thresholds (formulas vs enumerated automorphisms)\n";
    struct Case {
        const char* name;
        std::vector<Graph> factors;
    };
    std::vector<Case> cases = {
        {"P2 x P3", {path_graph(2), path_graph(3)}},
        {"P2 x P4", {path_graph(2), path_graph(4)}},
        {"P2 x C3", {path_graph(2), cycle_graph(3)}},
        {"P4 x P5", {path_graph(4), path_graph(5)}},
        {"K2^2", {complete_graph(2), complete_graph(2)}},
        {"K3^2", {complete_graph(3), complete_graph(3)}},
        {"K2^3", {complete_graph(2), complete_graph(2), complete_graph(2)}},
        {"K2^2 x P3", {complete_graph(2), complete_graph(2), path_graph(3)}},
    };
    for (const auto& c : cases) {
        ProductGraph p = cartesian_product(c.factors);
        Int formula = theta_general(make_factorization(p)).value;
        int oracle = threshold(p.graph(), automorphisms(p.graph()));
        ctx.report(formula == oracle, std::string(c.name) + ": formula " + formula.get_str() +
                                          " vs oracle " + std::to_string(oracle));
    }
}

void verify_checker(VerifyContext& ctx) {
    std::cout << "verify product checker against the direct checker\n";
    auto sweep = [&](const ProductGraph& p, int k, const std::string& name) {
        AutGroup aut = automorphisms(p.graph());
        const int n = p.graph().vertex_count();
        std::vector<int> colors(n, 1);
        long long cases = 0, agreed = 0;
        for (;;) {
            Coloring f(colors, k);
            bool direct = is_distinguishing(p.graph(), aut, f);
            bool full = is_distinguishing_product(p, f, CheckMode::Full).distinguishing;
            bool autf = is_distinguishing_product(p, f, CheckMode::AutF).distinguishing;
            ++cases;
            if (full == direct && autf == direct) ++agreed;
            int i = n - 1;
            while (i >= 0 && colors[i] == k) colors[i--] = 1;
            if (i < 0) break;
            ++colors[i];
        }
        ctx.report(cases == agreed, name + ": " + std::to_string(agreed) + "/" +
                                        std::to_string(cases) + " colorings agree (both modes)");
    };
    sweep(cartesian_product({path_graph(2), path_graph(3)}), 2, "P2 x P3, 2 colors");
    sweep(cartesian_product({path_graph(3), path_graph(3)}), 2, "P3 x P3, 2 colors");

    ProductGraph p45 = cartesian_product({path_graph(4), path_graph(5)});
    ProductGraph p56 = cartesian_product({path_graph(5), path_graph(6)});
    auto red = [](const ProductGraph& p, std::vector<std::vector<int>> cells) {
        std::vector<int> colors(p.graph().vertex_count(), 1);
        for (auto& c : cells) colors[p.vertex_at(c)] = 2;
        return Coloring(std::move(colors), 2);
    };
    ctx.report(!is_distinguishing_product(p45, red(p45, {{1, 1}, {2, 3}})).distinguishing,
               "4x5 rotation-swapped reds: not distinguishing");
    ctx.report(is_distinguishing_product(p56, red(p56, {{1, 1}, {1, 2}, {1, 3}, {3, 4}})).distinguishing,
               "5x6 example: distinguishing");
    ctx.report(is_distinguishing_product(p45, red(p45, {{1, 3}, {2, 1}, {2, 2}})).distinguishing,
               "4x5 example: distinguishing");
}

void verify_counts(VerifyContext& ctx) {
    std::cout << "verify varphi closed form and the binomial round trip\n";
    for (const Graph& g : {path_graph(3), path_graph(4), cycle_graph(4), cycle_graph(5)}) {
        AutGroup aut = automorphisms(g);
        int theta_g = threshold(g, aut);
        int d = distinguishing_number(g, aut).value;
        std::string name = "n=" + std::to_string(g.vertex_count()) + " graph";
        bool ok = true;
        for (int k = theta_g; k <= g.vertex_count() && ok; ++k)
            ok = varphi_closed(g, aut, k) == varphi(g, aut, k);
        for (int k = 1; k <= g.vertex_count() && ok; ++k) {
            Int sum = 0;
            for (int i = d; i <= k; ++i) sum += binomial(k, i) * varphi(g, aut, i);
            ok = phi(g, aut, k) == sum;
        }
        ctx.report(ok, name + ": closed form and identity hold up to k=n");
    }
}

void verify_saturation(VerifyContext& ctx) {
    std::cout << "verify threshold saturation (seed " << ctx.seed << ")\n";
    std::mt19937_64 rng(ctx.seed);
    std::vector<std::pair<std::string, Graph>> fixtures;
    for (int m = 2; m <= 8; ++m) fixtures.emplace_back("path:" + std::to_string(m), path_graph(m));
    for (int n = 3; n <= 8; ++n) fixtures.emplace_back("cycle:" + std::to_string(n), cycle_graph(n));
    fixtures.emplace_back("path:2 x path:3",
                          cartesian_product({path_graph(2), path_graph(3)}).graph());
    for (const auto& [name, g] : fixtures) {
        AutGroup aut = automorphisms(g);
        int theta_g = threshold(g, aut);
        bool ok = true;
        for (int trial = 0; ok && trial < 200; ++trial)
            ok = is_distinguishing(g, aut, random_surjective_coloring(g.vertex_count(), theta_g, rng));
        Coloring fooled = orbit_equalizing_coloring(g, aut);
        ok = ok && !is_distinguishing(g, aut, fooled);
        ctx.report(ok, name + ": 200 theta-colorings distinguish, orbit coloring does not");
    }
}

std::string verdict_json(bool distinguishing, const std::optional<ProductWitness>& w) {
    std::ostringstream out;
    out << "{\"distinguishing\": " << (distinguishing ? "true" : "false");
    if (w) out << ", \"witness\": " << witness_to_json(*w);
    out << "}";
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry-breaking indices of finite graphs"};
    app.require_subcommand(1);

    std::string graph_spec, k_range = "2", backend_name = "auto", mode_name, format;
    std::string colors_arg, red_arg, target;
    std::uint64_t budget = 0, seed = 7777;
    int threads = 0;
    bool with_elements = false, json_out = false, csv_out = false, closed_form = false;

    auto add_common = [&](CLI::App* cmd, bool with_graph = true) {
        if (with_graph) cmd->add_option("graph", graph_spec, "graph spec (family, product, file:)")->required();
        cmd->add_option("--budget", budget, "enumeration budget in colorings");
        cmd->add_option("--threads", threads, "cap OpenMP threads");
        cmd->add_flag("--json", json_out, "JSON output");
    };

    CLI::App* aut_cmd = app.add_subcommand("aut", "automorphism group");
    add_common(aut_cmd);
    aut_cmd->add_flag("--elements", with_elements, "list all elements");

    CLI::App* indices_cmd = app.add_subcommand("indices", "full index report");
    add_common(indices_cmd);
    indices_cmd->add_option("--k", k_range, "palette sizes, e.g. 2..4 or 2,3");
    indices_cmd->add_option("--backend", backend_name, "auto|brute|moebius");
    indices_cmd->add_flag("--csv", csv_out, "CSV output");

    CLI::App* dnum_cmd = app.add_subcommand("dnum", "distinguishing number");
    add_common(dnum_cmd);

    CLI::App* theta_cmd = app.add_subcommand("theta", "distinguishing threshold");
    add_common(theta_cmd);

    CLI::App* phi_cmd = app.add_subcommand("phi", "non-equivalent distinguishing colorings");
    add_common(phi_cmd);
    phi_cmd->add_option("--k", k_range, "palette sizes");
    phi_cmd->add_option("--backend", backend_name, "auto|brute|moebius");

    CLI::App* varphi_cmd = app.add_subcommand("varphi", "exactly-k-color distinguishing colorings");
    add_common(varphi_cmd);
    varphi_cmd->add_option("--k", k_range, "color counts");
    varphi_cmd->add_option("--backend", backend_name, "auto|brute|moebius");
    varphi_cmd->add_flag("--closed", closed_form, "use the factorial/Stirling closed form");

    CLI::App* check_cmd = app.add_subcommand("check", "test whether a coloring distinguishes");
    add_common(check_cmd);
    check_cmd->add_option("--colors", colors_arg, "comma-separated colors in vertex order");
    check_cmd->add_option("--red", red_arg, "red cells as (i,j) pairs, 1-based factor coordinates");
    check_cmd->add_option("--mode", mode_name, "direct|full|autf")->default_val("direct");

    CLI::App* ptheta_cmd = app.add_subcommand("product-theta", "threshold of a product by formula");
    add_common(ptheta_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "formula/oracle consistency sweeps");
    verify_cmd->add_option("target", target,
                           "grids|thresholds|products|checker|counts|saturation|all")
        ->required();
    std::string m_range = "2..4", n_range = "2..4";
    verify_cmd->add_option("--m", m_range, "grid row range, e.g. 2..4");
    verify_cmd->add_option("--n", n_range, "grid column range");
    verify_cmd->add_option("--k", k_range, "palette range");
    verify_cmd->add_option("--seed", seed, "sampling seed");
    verify_cmd->add_option("--budget", budget, "enumeration budget");
    verify_cmd->add_option("--threads", threads, "cap OpenMP threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
#ifdef _OPENMP
        if (threads > 0) omp_set_num_threads(threads);
#endif
        CountOptions opts{parse_backend(backend_name), budget, nullptr};

        if (aut_cmd->parsed()) {
            ParsedGraph pg = parse_graph_spec(graph_spec);
            const Graph& g = graph_of(pg);
            AutGroup aut = automorphisms(g);
            if (json_out) {
                std::cout << aut_group_to_json(aut, with_elements) << '\n';
            } else {
                std::cout << "|Aut| = " << aut.order() << "\ngenerators:";
                for (const auto& gen : aut.generators) std::cout << ' ' << gen.to_cycle_string();
                std::cout << '\n';
                if (with_elements)
                    for (const auto& e : aut.elements) std::cout << e.to_cycle_string() << '\n';
            }
        } else if (indices_cmd->parsed()) {
            ParsedGraph pg = parse_graph_spec(graph_spec);
            const Graph& g = graph_of(pg);
            AutGroup aut = automorphisms(g);
            IndexReport r = build_index_report(graph_spec, g, aut, parse_k_range(k_range), opts);
            if (json_out) std::cout << report_to_json(r) << '\n';
            else if (csv_out) std::cout << report_to_csv(r);
            else std::cout << report_to_table(r);
        } else if (dnum_cmd->parsed()) {
            ParsedGraph pg = parse_graph_spec(graph_spec);
            const Graph& g = graph_of(pg);
            DistinguishingNumber d = distinguishing_number(g, automorphisms(g), budget);
            if (json_out) {
                std::cout << "{\"D\": " << d.value << ", \"certificate\": [";
                for (int v = 0; v < d.certificate.size(); ++v)
                    std::cout << (v ? ", " : "") << d.certificate.colors[v];
                std::cout << "]}\n";
            } else {
                std::cout << d.value << '\n';
            }
        } else if (theta_cmd->parsed()) {
            ParsedGraph pg = parse_graph_spec(graph_spec);
            const Graph& g = graph_of(pg);
            int t = threshold(g, automorphisms(g));
            if (json_out) std::cout << "{\"theta\": " << t << "}\n";
            else std::cout << t << '\n';
        } else if (phi_cmd->parsed() || varphi_cmd->parsed()) {
            const bool is_phi = phi_cmd->parsed();
            ParsedGraph pg = parse_graph_spec(graph_spec);
            const Graph& g = graph_of(pg);
            AutGroup aut = automorphisms(g);
            std::vector<int> ks = parse_k_range(k_range);
            std::ostringstream json;
            json << '{';
            for (size_t i = 0; i < ks.size(); ++i) {
                Int value = is_phi ? phi(g, aut, ks[i], opts)
                                   : (closed_form ? varphi_closed(g, aut, ks[i])
                                                  : varphi(g, aut, ks[i], opts));
                if (json_out) {
                    json << (i ? ", " : "") << '"' << ks[i] << "\": \"" << value.get_str() << '"';
                } else if (ks.size() == 1) {
                    std::cout << value.get_str() << '\n';
                } else {
                    std::cout << (is_phi ? "phi_" : "varphi_") << ks[i] << " = " << value.get_str()
                              << '\n';
                }
            }
            if (json_out) std::cout << json.str() << "}\n";
        } else if (check_cmd->parsed()) {
            ParsedGraph pg = parse_graph_spec(graph_spec);
            const Graph& g = graph_of(pg);
            Coloring f({}, 0);
            if (!red_arg.empty()) {
                const ProductGraph* p = product_of(pg);
                if (!p || p->factor_count() != 2)
                    throw input_error("--red needs a two-factor product expression");
                std::vector<int> colors(g.vertex_count(), 1);
                for (const auto& cell : parse_red_cells(red_arg)) {
                    if (cell[0] < 0 || cell[0] >= p->factors()[0].vertex_count() || cell[1] < 0 ||
                        cell[1] >= p->factors()[1].vertex_count())
                        throw input_error("red cell out of range");
                    colors[p->vertex_at(cell)] = 2;
                }
                f = Coloring(std::move(colors), 2);
            } else if (!colors_arg.empty()) {
                f = coloring_from_list(colors_arg, g.vertex_count());
            } else {
                throw input_error("check: provide --colors or --red");
            }

            bool verdict;
            std::optional<ProductWitness> witness;
            if (mode_name == "direct") {
                verdict = is_distinguishing(g, automorphisms(g), f);
            } else {
                const ProductGraph* p = product_of(pg);
                if (!p) throw input_error("mode '" + mode_name + "' needs a product expression");
                auto r = is_distinguishing_product(
                    *p, f, mode_name == "autf" ? CheckMode::AutF : CheckMode::Full);
                verdict = r.distinguishing;
                witness = r.witness;
            }
            if (json_out) {
                std::cout << verdict_json(verdict, witness) << '\n';
            } else {
                std::cout << (verdict ? "distinguishing" : "not distinguishing") << '\n';
                if (witness) std::cout << "witness: " << witness_to_json(*witness) << '\n';
            }
        } else if (ptheta_cmd->parsed()) {
            ParsedGraph pg = parse_graph_spec(graph_spec);
            const ProductGraph* p = product_of(pg);
            if (!p) throw input_error("product-theta needs a product expression");
            Factorization fact = make_factorization(*p);
            bool distinct = true, single_power = fact.classes.size() == 1;
            for (const auto& cls : fact.classes) distinct = distinct && cls.multiplicity == 1;
            ThetaGeneralResult r = theta_general(fact);
            const char* form = distinct ? "distinct-factor"
                                        : (single_power ? "power" : "general");
            if (json_out) {
                std::cout << "{\"theta\": " << r.value.get_str() << ", \"form\": \"" << form
                          << "\", \"note\": \"" << (distinct || single_power ? "" : r.note)
                          << "\"}\n";
            } else {
                std::cout << r.value.get_str() << '\n';
                if (!distinct && !single_power) std::cout << "note: " << r.note << '\n';
            }
        } else if (verify_cmd->parsed()) {
            VerifyContext ctx;
            ctx.budget = budget;
            ctx.seed = seed;
            bool all = target == "all";
            if (all || target == "grids")
                verify_grids(ctx, parse_k_range(m_range), parse_k_range(n_range),
                             parse_k_range(k_range));
            if (all || target == "thresholds") verify_thresholds(ctx);
            if (all || target == "products") verify_products(ctx);
            if (all || target == "checker") verify_checker(ctx);
            if (all || target == "counts") verify_counts(ctx);
            if (all || target == "saturation") verify_saturation(ctx);
            if (!all && target != "grids" && target != "thresholds" && target != "products" &&
                target != "checker" && target != "counts" && target != "saturation")
                throw input_error("unknown verify target '" + target + "'");
            if (ctx.failures) {
                std::cout << ctx.failures << " check(s) failed\n";
                return 1;
            }
            std::cout << "all checks passed\n";
        }
        return 0;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
}
