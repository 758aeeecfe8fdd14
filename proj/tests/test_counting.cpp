#include "symbreak/counting.hpp"

#include "symbreak/errors.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/lattice.hpp"
#include "symbreak/product.hpp"

#include <doctest.h>

#include <random>

using namespace symbreak;

namespace {

// Test-only oracle, deliberately separate from the library kernels: walks
// colorings with an odometer increment and applies Permutation objects
// directly. Only usable for tiny k^n.
long long oracle_count(const Graph& g, const AutGroup& aut, int k) {
    const int n = g.vertex_count();
    std::vector<int> c(n, 1);
    long long count = 0;
    for (;;) {
        bool trivial_stab = true;
        for (const auto& alpha : aut.elements) {
            if (alpha.is_identity()) continue;
            bool preserved = true;
            for (int v = 0; v < n; ++v)
                if (c[v] != c[alpha(v)]) {
                    preserved = false;
                    break;
                }
            if (preserved) {
                trivial_stab = false;
                break;
            }
        }
        if (trivial_stab) ++count;
        int i = n - 1;
        while (i >= 0 && c[i] == k) c[i--] = 1;
        if (i < 0) break;
        ++c[i];
    }
    return count;
}

} // namespace

TEST_CASE("is_distinguishing") {
    Graph p23 = cartesian_product({path_graph(2), path_graph(3)}).graph();
    AutGroup aut = automorphisms(p23);

    CHECK(is_distinguishing(p23, aut, Coloring({1, 2, 3, 4, 5, 6}, 6)));
    CHECK_FALSE(is_distinguishing(p23, aut, Coloring({1, 1, 1, 1, 1, 1}, 1)));

    Graph k2 = complete_graph(2);
    CHECK_FALSE(is_distinguishing(k2, automorphisms(k2), Coloring({1, 1}, 1)));

    CHECK_THROWS_AS(is_distinguishing(p23, aut, Coloring({1, 2}, 2)), input_error);
}

TEST_CASE("brute counts match frozen oracle values") {
    // values computed by the odometer oracle below and frozen here
    Graph p4 = path_graph(4);
    AutGroup a4 = automorphisms(p4);
    CHECK(count_distinguishing_serial(p4, a4, 2) == 12);
    CHECK(oracle_count(p4, a4, 2) == 12);

    Graph p23 = cartesian_product({path_graph(2), path_graph(3)}).graph();
    AutGroup a23 = automorphisms(p23);
    CHECK(count_distinguishing_serial(p23, a23, 2) == 40);
    CHECK(oracle_count(p23, a23, 2) == 40);

    // one color can never break a symmetric graph
    Graph c4 = cycle_graph(4);
    CHECK(count_distinguishing_serial(c4, automorphisms(c4), 1) == 0);

    Graph p3sq = cartesian_product({path_graph(3), path_graph(3)}).graph();
    AutGroup a9 = automorphisms(p3sq);
    CHECK(count_distinguishing_serial(p3sq, a9, 2) == 288);
    CHECK(oracle_count(p3sq, a9, 2) == 288);
    CHECK(count_distinguishing_serial(p3sq, a9, 3) == 16848); // the 3^9 case
}

TEST_CASE("parallel kernel equals serial reference") {
    for (const Graph& g : {path_graph(5), cycle_graph(6),
                           cartesian_product({path_graph(2), path_graph(4)}).graph(),
                           cartesian_product({path_graph(3), path_graph(3)}).graph()}) {
        AutGroup aut = automorphisms(g);
        for (int k = 1; k <= 3; ++k)
            CHECK(count_distinguishing_parallel(g, aut, k) ==
                  count_distinguishing_serial(g, aut, k));
    }
}

TEST_CASE("moebius route equals brute enumeration") {
    auto agree = [](const Graph& g, int max_k) {
        AutGroup aut = automorphisms(g);
        SubgroupLattice lat = subgroup_lattice(aut);
        for (int k = 1; k <= max_k; ++k)
            CHECK(count_distinguishing_moebius(lat, k) == count_distinguishing_brute(g, aut, k));
    };
    for (int n = 2; n <= 6; ++n) agree(path_graph(n), 3);
    for (int n = 3; n <= 6; ++n) agree(cycle_graph(n), 3);
    agree(cartesian_product({path_graph(2), path_graph(3)}).graph(), 3);
    agree(cartesian_product({path_graph(3), path_graph(3)}).graph(), 3);
}

TEST_CASE("kernels agree with the odometer oracle on random graphs") {
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4); // 3..6
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.push_back({u, v});
        Graph g(n, edges);
        AutGroup aut = automorphisms(g);
        for (int k = 1; k <= 2; ++k) {
            long expected = static_cast<long>(oracle_count(g, aut, k));
            CHECK(count_distinguishing_serial(g, aut, k) == expected);
            CHECK(count_distinguishing_parallel(g, aut, k) == expected);
            CHECK(count_distinguishing_moebius(subgroup_lattice(aut), k) == expected);
        }
    }
}

TEST_CASE("asymmetric graphs: every coloring counts") {
    Graph asym(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}});
    AutGroup aut = automorphisms(asym);
    REQUIRE(aut.is_trivial());
    CHECK(count_distinguishing_brute(asym, aut, 2) == 128); // 2^7
    CHECK(count_distinguishing_moebius(subgroup_lattice(aut), 2) == 128);
}

TEST_CASE("budget is enforced") {
    Graph p8 = path_graph(8);
    AutGroup aut = automorphisms(p8);
    CHECK_THROWS_AS(count_distinguishing_serial(p8, aut, 3, 100), capacity_error);
    CHECK_THROWS_AS(count_distinguishing_parallel(p8, aut, 3, 100), capacity_error);
    CHECK(count_distinguishing_serial(p8, aut, 2, 256) == count_distinguishing_parallel(p8, aut, 2, 256));
}
