#include "symbreak/indices.hpp"

#include "symbreak/errors.hpp"
#include "symbreak/lattice.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace symbreak {

namespace {

Int exact_quotient(const Int& num, const Int& den, const char* what) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw internal_error(std::string(what) + ": " + num.get_str() +
                             " is not divisible by " + den.get_str());
    return q;
}

// Restricted-growth-string sweep over partitions of 0..n-1 into at most
// max_blocks blocks. Returns true when visit() accepts a partition.
template <typename Visit>
bool for_each_partition(int n, int max_blocks, std::uint64_t budget, Visit visit) {
    std::vector<int> block(n, 0);
    std::uint64_t seen = 0;
    // Iterative odometer over restricted growth strings.
    for (;;) {
        if (++seen > budget)
            throw capacity_error("partition enumeration exceeded budget of " +
                                 std::to_string(budget));
        if (visit(block)) return true;
        int i = n - 1;
        for (; i > 0; --i) {
            int prefix_max = *std::max_element(block.begin(), block.begin() + i);
            if (block[i] <= std::min(prefix_max, max_blocks - 2)) {
                ++block[i];
                std::fill(block.begin() + i + 1, block.end(), 0);
                break;
            }
        }
        if (i == 0) return false;
    }
}

} // namespace

int threshold(const Graph& g, const AutGroup& aut) {
    (void)g;
    int best = 0;
    for (const auto& alpha : aut.elements) {
        if (alpha.is_identity()) continue;
        best = std::max(best, alpha.cycle_count());
    }
    return best + 1; // asymmetric graphs: 0 + 1
}

int motion_of(const AutGroup& aut) {
    if (aut.is_trivial())
        throw input_error("motion: undefined for asymmetric graphs (no non-identity automorphism)");
    int best = aut.degree + 1;
    for (const auto& alpha : aut.elements) {
        if (alpha.is_identity()) continue;
        best = std::min(best, alpha.motion());
    }
    return best;
}

int motion_lower_bound(const Graph& g, const AutGroup& aut) {
    return g.vertex_count() - motion_of(aut) + 2;
}

Int stirling2(int n, int k) {
    if (n < 0 || k < 0) throw input_error("stirling2: negative argument");
    if (k > n) return 0;
    std::vector<Int> row(k + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = Int(j) * row[j] + row[j - 1];
        row[0] = 0; // S(i,0) = 0 once i >= 1
    }
    return row[k];
}

DistinguishingNumber distinguishing_number(const Graph& g, const AutGroup& aut,
                                           std::uint64_t budget) {
    const int n = g.vertex_count();
    if (n == 0) throw input_error("distinguishing number: empty graph");
    if (!budget) budget = default_enumeration_budget();

    std::vector<std::vector<int>> moving;
    for (const auto& p : aut.elements)
        if (!p.is_identity()) moving.push_back(p.images());

    for (int d = 1; d <= n; ++d) {
        std::vector<int> winner;
        bool found = for_each_partition(n, d, budget, [&](const std::vector<int>& block) {
            for (const auto& im : moving) {
                bool preserved = true;
                for (int v = 0; v < n; ++v)
                    if (block[v] != block[im[v]]) {
                        preserved = false;
                        break;
                    }
                if (preserved) return false;
            }
            winner = block;
            return true;
        });
        if (found) {
            std::vector<int> colors(n);
            for (int v = 0; v < n; ++v) colors[v] = winner[v] + 1;
            int used = *std::max_element(winner.begin(), winner.end()) + 1;
            return {used, Coloring(std::move(colors), used)};
        }
    }
    throw internal_error("distinguishing number: no distinguishing coloring up to n colors");
}

Int count_distinguishing(const Graph& g, const AutGroup& aut, int k, const CountOptions& opts) {
    switch (opts.backend) {
    case CountBackend::Brute:
        return count_distinguishing_brute(g, aut, k, opts.budget);
    case CountBackend::Moebius: {
        if (opts.lattice) return count_distinguishing_moebius(*opts.lattice, k);
        return count_distinguishing_moebius(subgroup_lattice(aut), k);
    }
    case CountBackend::Auto:
        if (opts.lattice) return count_distinguishing_moebius(*opts.lattice, k);
        if (aut.order() <= kMaxLatticeOrder)
            return count_distinguishing_moebius(subgroup_lattice(aut), k);
        return count_distinguishing_brute(g, aut, k, opts.budget);
    }
    throw input_error("count: unknown backend");
}

Int phi(const Graph& g, const AutGroup& aut, int k, const CountOptions& opts) {
    Int n_k = count_distinguishing(g, aut, k, opts);
    return exact_quotient(n_k, Int(static_cast<unsigned long>(aut.order())),
                          "phi: free-action invariant violated");
}

Int varphi(const Graph& g, const AutGroup& aut, int k, const CountOptions& opts) {
    if (k < 0) throw input_error("varphi: negative k");
    if (k == 0) return 0;
    if (k > g.vertex_count()) return 0; // cannot use more distinct colors than vertices

    // Share one lattice across all the Phi evaluations.
    CountOptions local = opts;
    SubgroupLattice lat;
    if (!local.lattice && local.backend != CountBackend::Brute &&
        aut.order() <= kMaxLatticeOrder) {
        lat = subgroup_lattice(aut);
        local.lattice = &lat;
    }

    std::vector<Int> v(k + 1, 0);
    for (int i = 1; i <= k; ++i) {
        Int acc = phi(g, aut, i, local);
        for (int j = 1; j < i; ++j) acc -= binomial(i, j) * v[j];
        v[i] = std::move(acc);
    }
    return v[k];
}

Int varphi_closed(const Graph& g, const AutGroup& aut, int k) {
    int theta_g = threshold(g, aut);
    if (k < theta_g)
        throw input_error("varphi_closed: requires k >= theta(G) = " + std::to_string(theta_g));
    Int num = factorial(static_cast<std::uint64_t>(k)) * stirling2(g.vertex_count(), k);
    return exact_quotient(num, Int(static_cast<unsigned long>(aut.order())),
                          "varphi_closed: free-action invariant violated");
}

Int phi_grid(int m, int n, int k) {
    if (m < 2 || n < 2) throw input_error("phi_grid: need m,n >= 2");
    if (m == n) throw input_error("phi_grid: factors must be distinct; use phi_square_grid");
    if (k < 1) throw input_error("phi_grid: need k >= 1");
    auto kp = [&](long long e) { return ipow(k, static_cast<std::uint64_t>(e)); };
    auto ceil2 = [](long long x) { return (x + 1) / 2; };
    long long mm = m, nn = n;
    Int total = kp(mm * nn) - kp(mm * ceil2(nn)) - kp(nn * ceil2(mm)) - kp(ceil2(mm * nn)) +
                2 * kp(ceil2(mm) * ceil2(nn));
    if (total < 0) throw internal_error("phi_grid: negative count");
    return exact_quotient(total, 4, "phi_grid");
}

Int phi_square_grid(int n, int k) {
    if (n < 3) throw input_error("phi_square_grid: need n >= 3");
    if (k < 1) throw input_error("phi_square_grid: need k >= 1");
    auto kp = [&](long long e) { return ipow(k, static_cast<std::uint64_t>(e)); };
    auto ceil2 = [](long long x) { return (x + 1) / 2; };
    long long nn = n;
    Int total = kp(nn * nn) - kp(ceil2(nn * nn)) - 2 * kp(nn * ceil2(nn)) -
                2 * kp(nn * (nn + 1) / 2) + 2 * kp(ceil2(nn) * ceil2(nn)) +
                2 * kp(ceil2(nn) * ceil2(nn + 1));
    if (total < 0) throw internal_error("phi_square_grid: negative count");
    return exact_quotient(total, 8, "phi_square_grid");
}

Coloring random_surjective_coloring(int n, int k, std::mt19937_64& rng) {
    if (k < 1 || k > n)
        throw input_error("random surjective coloring: need 1 <= k <= n");
    std::uniform_int_distribution<int> dist(1, k);
    std::vector<int> colors(n);
    for (;;) {
        std::vector<char> hit(k + 1, 0);
        int distinct = 0;
        for (int v = 0; v < n; ++v) {
            colors[v] = dist(rng);
            if (!hit[colors[v]]) {
                hit[colors[v]] = 1;
                ++distinct;
            }
        }
        if (distinct == k) return Coloring(colors, k);
    }
}

Coloring orbit_equalizing_coloring(const Graph& g, const AutGroup& aut) {
    if (aut.is_trivial())
        throw input_error("orbit-equalizing coloring: graph has no non-identity automorphism");
    const Permutation* best = nullptr;
    int best_cycles = -1;
    for (const auto& alpha : aut.elements) {
        if (alpha.is_identity()) continue;
        int c = alpha.cycle_count();
        if (c > best_cycles) {
            best_cycles = c;
            best = &alpha;
        }
    }
    if (!best) throw internal_error("orbit-equalizing coloring: no candidate automorphism");
    std::vector<int> colors(g.vertex_count(), 0);
    int next = 0;
    for (const auto& cyc : best->cycles()) {
        ++next;
        for (int v : cyc) colors[v] = next;
    }
    return Coloring(std::move(colors), next);
}

IndexReport build_index_report(const std::string& graph_id, const Graph& g, const AutGroup& aut,
                               const std::vector<int>& ks, const CountOptions& opts) {
    IndexReport r;
    r.graph_id = graph_id;
    r.n = g.vertex_count();
    r.aut_order = aut.order();
    r.distinguishing = distinguishing_number(g, aut, opts.budget).value;
    r.theta = threshold(g, aut);
    if (!aut.is_trivial()) r.motion = motion_of(aut);
    r.ks = ks;

    CountOptions local = opts;
    SubgroupLattice lat;
    if (!local.lattice && local.backend != CountBackend::Brute &&
        aut.order() <= kMaxLatticeOrder) {
        lat = subgroup_lattice(aut);
        local.lattice = &lat;
    }
    for (int k : ks) {
        r.phi_values.push_back(phi(g, aut, k, local));
        r.varphi_values.push_back(varphi(g, aut, k, local));
    }
    return r;
}

std::string report_to_json(const IndexReport& r) {
    std::ostringstream out;
    out << "{\"graph\": \"" << r.graph_id << "\", \"n\": " << r.n
        << ", \"aut_order\": " << r.aut_order << ", \"D\": " << r.distinguishing
        << ", \"theta\": " << r.theta << ", \"motion\": ";
    if (r.motion) out << *r.motion;
    else out << "null";
    out << ", \"phi\": {";
    for (size_t i = 0; i < r.ks.size(); ++i) {
        if (i) out << ", ";
        out << '"' << r.ks[i] << "\": \"" << r.phi_values[i].get_str() << '"';
    }
    out << "}, \"varphi\": {";
    for (size_t i = 0; i < r.ks.size(); ++i) {
        if (i) out << ", ";
        out << '"' << r.ks[i] << "\": \"" << r.varphi_values[i].get_str() << '"';
    }
    out << "}}";
    return out.str();
}

std::string report_to_csv(const IndexReport& r) {
    std::ostringstream out;
    out << "graph,n,aut_order,D,theta,motion";
    for (int k : r.ks) out << ",phi_" << k << ",varphi_" << k;
    out << '\n' << r.graph_id << ',' << r.n << ',' << r.aut_order << ',' << r.distinguishing
        << ',' << r.theta << ',';
    if (r.motion) out << *r.motion;
    for (size_t i = 0; i < r.ks.size(); ++i)
        out << ',' << r.phi_values[i].get_str() << ',' << r.varphi_values[i].get_str();
    out << '\n';
    return out.str();
}

std::string report_to_table(const IndexReport& r) {
    std::ostringstream out;
    out << "graph: " << r.graph_id << "\n"
        << "|V| = " << r.n << "  |Aut| = " << r.aut_order << "  D = " << r.distinguishing
        << "  theta = " << r.theta << "  motion = ";
    if (r.motion) out << *r.motion;
    else out << '-';
    out << '\n';
    out << std::left << std::setw(8) << "k" << std::setw(24) << "Phi_k" << "varphi_k\n";
    for (size_t i = 0; i < r.ks.size(); ++i)
        out << std::left << std::setw(8) << r.ks[i] << std::setw(24) << r.phi_values[i].get_str()
            << r.varphi_values[i].get_str() << '\n';
    return out.str();
}

} // namespace symbreak
