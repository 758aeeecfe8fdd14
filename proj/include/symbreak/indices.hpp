#ifndef SYMBREAK_INDICES_HPP
#define SYMBREAK_INDICES_HPP

#include "symbreak/automorphism.hpp"
#include "symbreak/bigint.hpp"
#include "symbreak/coloring.hpp"
#include "symbreak/counting.hpp"
#include "symbreak/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace symbreak {

// theta(G) = max cycle count over non-identity automorphisms, plus one.
// Asymmetric graphs get 1: every coloring is distinguishing.
int threshold(const Graph& g, const AutGroup& aut);

// m(G) = minimum number of moved vertices over non-identity automorphisms.
// Undefined (input_error) for asymmetric graphs.
int motion_of(const AutGroup& aut);

// n - m(G) + 2, a lower bound for theta(G).
int motion_lower_bound(const Graph& g, const AutGroup& aut);

// Stirling numbers of the second kind, S(n,k) = k*S(n-1,k) + S(n-1,k-1).
Int stirling2(int n, int k);

struct DistinguishingNumber {
    int value = 0;
    Coloring certificate; // a distinguishing coloring with `value` colors
};

// Smallest palette admitting a distinguishing coloring. Searches palette
// sizes in increasing order, enumerating color-class partitions (restricted
// growth strings) rather than raw colorings; whether a coloring is
// distinguishing depends only on its color classes.
DistinguishingNumber distinguishing_number(const Graph& g, const AutGroup& aut,
                                           std::uint64_t budget = 0);

enum class CountBackend { Auto, Brute, Moebius };

struct CountOptions {
    CountBackend backend = CountBackend::Auto;
    std::uint64_t budget = 0;                 // 0 = default
    const SubgroupLattice* lattice = nullptr; // reused when provided
};

// N_k through the selected backend. Auto prefers Moebius whenever the
// subgroup lattice is within bounds, falling back to brute enumeration.
Int count_distinguishing(const Graph& g, const AutGroup& aut, int k, const CountOptions& opts = {});

// Phi_k = N_k / |Aut|. Aut acts freely on distinguishing colorings, so the
// division must be exact; a nonzero remainder aborts with internal_error.
Int phi(const Graph& g, const AutGroup& aut, int k, const CountOptions& opts = {});

// varphi_k via the recursion varphi_k = Phi_k - sum_{i<k} C(k,i) varphi_i.
// Zero whenever k exceeds the vertex count (a coloring cannot use more
// distinct colors than vertices).
Int varphi(const Graph& g, const AutGroup& aut, int k, const CountOptions& opts = {});

// varphi_k = k! S(n,k) / |Aut|, valid for k >= theta(G) only.
Int varphi_closed(const Graph& g, const AutGroup& aut, int k);

// Closed form for Phi_k(P_m x P_n), m != n, both >= 2.
Int phi_grid(int m, int n, int k);

// Closed form for Phi_k(P_n x P_n), n >= 3.
Int phi_square_grid(int n, int k);

// Uniformly random coloring using exactly k distinct colors.
Coloring random_surjective_coloring(int n, int k, std::mt19937_64& rng);

// Coloring constant on the cycles of a cycle-count-maximal non-identity
// automorphism: it uses exactly theta(G)-1 colors and that automorphism
// preserves it, witnessing that theta(G)-1 colors can fail to distinguish.
Coloring orbit_equalizing_coloring(const Graph& g, const AutGroup& aut);

struct IndexReport {
    std::string graph_id;
    int n = 0;
    std::size_t aut_order = 0;
    int distinguishing = 0;
    int theta = 0;
    std::optional<int> motion;
    std::vector<int> ks;
    std::vector<Int> phi_values;
    std::vector<Int> varphi_values;
};

IndexReport build_index_report(const std::string& graph_id, const Graph& g, const AutGroup& aut,
                               const std::vector<int>& ks, const CountOptions& opts = {});

std::string report_to_json(const IndexReport& r);
std::string report_to_csv(const IndexReport& r);
std::string report_to_table(const IndexReport& r);

} // namespace symbreak

#endif
