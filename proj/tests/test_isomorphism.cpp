#include "symbreak/isomorphism.hpp"

#include "symbreak/graph.hpp"
#include "symbreak/product.hpp"

#include <doctest.h>

#include <random>

using namespace symbreak;

namespace {

bool valid_witness(const Graph& g, const Graph& h, const Permutation& w) {
    if (w.degree() != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (!h.has_edge(w(u), w(v))) return false;
    return true;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph relabel(const Graph& g, const Permutation& p) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.push_back({p(u), p(v)});
    return Graph(g.vertex_count(), edges);
}

} // namespace

TEST_CASE("fixed instances") {
    auto w = find_isomorphism(path_graph(4), path_graph(4));
    REQUIRE(w.has_value());
    CHECK(valid_witness(path_graph(4), path_graph(4), *w));

    CHECK_FALSE(find_isomorphism(path_graph(4), path_graph(5)));
    CHECK_FALSE(find_isomorphism(path_graph(4), cycle_graph(4)));

    Graph q2 = cartesian_product({complete_graph(2), complete_graph(2)}).graph();
    auto w2 = find_isomorphism(q2, cycle_graph(4));
    REQUIRE(w2.has_value());
    CHECK(valid_witness(q2, cycle_graph(4), *w2));

    // same degree sequence, different graphs: C_6 vs two triangles
    Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(find_isomorphism(cycle_graph(6), two_triangles));
}

TEST_CASE("relabeled random graphs are recognized with valid witnesses") {
    std::mt19937_64 rng(7777);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.4, rng);
        std::vector<int> images(n);
        std::iota(images.begin(), images.end(), 0);
        std::shuffle(images.begin(), images.end(), rng);
        Permutation scramble{images};
        Graph h = relabel(g, scramble);
        auto w = find_isomorphism(g, h);
        REQUIRE(w.has_value());
        CHECK(valid_witness(g, h, *w));
    }
}

TEST_CASE("colored isomorphism respects classes") {
    Graph p3 = path_graph(3);
    // colors break the path reflection
    std::vector<int> left{1, 0, 0}, right{0, 0, 1};
    auto w = find_colored_isomorphism(p3, left, p3, right);
    REQUIRE(w.has_value());
    CHECK((*w)(0) == 2); // endpoint color 1 must map to endpoint color 1
    CHECK(valid_witness(p3, p3, *w));

    std::vector<int> mid{0, 1, 0};
    CHECK_FALSE(find_colored_isomorphism(p3, left, p3, mid));
}
