#include "symbreak/product_symmetry.hpp"

#include "symbreak/counting.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/isomorphism.hpp"

#include <doctest.h>

#include <random>

using namespace symbreak;

namespace {

// Example colorings from the grid figures; coordinates are 0-based
// (row, column) pairs, color 2 = red on a black (1) background.
Coloring two_color(const ProductGraph& p, const std::vector<std::vector<int>>& red) {
    std::vector<int> colors(p.graph().vertex_count(), 1);
    for (const auto& cell : red) colors[p.vertex_at(cell)] = 2;
    return Coloring(std::move(colors), 2);
}

ProductGraph grid_product(int m, int n) {
    return cartesian_product({path_graph(m), path_graph(n)});
}

// Every coloring of p.graph() with the given palette, swept in index order.
template <typename Fn>
void sweep_colorings(const ProductGraph& p, int k, Fn fn) {
    const int n = p.graph().vertex_count();
    std::vector<int> colors(n, 1);
    for (;;) {
        fn(Coloring(colors, k));
        int i = n - 1;
        while (i >= 0 && colors[i] == k) colors[i--] = 1;
        if (i < 0) break;
        ++colors[i];
    }
}

} // namespace

TEST_CASE("holographic colors") {
    ProductGraph p23 = grid_product(2, 3);

    Coloring constant({1, 1, 1, 1, 1, 1}, 1);
    for (int v = 0; v < 2; ++v) {
        HolographicColor hc = holographic_color(p23, 0, v, constant);
        CHECK(hc.induced == std::vector<int>{1, 1, 1});
    }

    Coloring distinct({1, 2, 3, 4, 5, 6}, 6);
    HolographicColor row0 = holographic_color(p23, 0, 0, distinct);
    HolographicColor row1 = holographic_color(p23, 0, 1, distinct);
    CHECK(row0.induced == std::vector<int>{1, 2, 3});
    CHECK(row1.induced == std::vector<int>{4, 5, 6});

    // row through both red cells of the third example grid has two reds
    ProductGraph p45 = grid_product(4, 5);
    Coloring ex34 = two_color(p45, {{1, 3}, {2, 1}, {2, 2}});
    HolographicColor row2 = holographic_color(p45, 0, 2, ex34);
    CHECK(std::count(row2.induced.begin(), row2.induced.end(), 2) == 2);

    CHECK_THROWS_AS(holographic_color(p45, 2, 0, ex34), input_error);
    CHECK_THROWS_AS(holographic_color(p45, 0, 9, ex34), input_error);
}

TEST_CASE("alpha equivalence") {
    ProductGraph p45 = grid_product(4, 5);
    Coloring ex32 = two_color(p45, {{1, 1}, {2, 3}});

    HolographicColor a = holographic_color(p45, 0, 1, ex32);
    CHECK(alpha_equivalent(a, a, Permutation::identity(5)));

    // the two red-bearing rows are related by the reflection of the column path
    HolographicColor b = holographic_color(p45, 0, 2, ex32);
    Permutation reflect({4, 3, 2, 1, 0});
    CHECK(alpha_equivalent(a, b, reflect));
    CHECK_FALSE(alpha_equivalent(a, b, Permutation::identity(5)));

    // symmetry in the pair
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> colors(20);
        for (int& c : colors) c = 1 + static_cast<int>(rng() % 2);
        Coloring f(colors, 2);
        int u = static_cast<int>(rng() % 4), v = static_cast<int>(rng() % 4);
        HolographicColor x = holographic_color(p45, 0, u, f);
        HolographicColor y = holographic_color(p45, 0, v, f);
        CHECK(alpha_equivalent(x, y, reflect) == alpha_equivalent(y, x, reflect));
    }

    ProductGraph p23 = grid_product(2, 3);
    HolographicColor other = holographic_color(p23, 0, 0, Coloring({1, 1, 1, 1, 1, 1}, 1));
    CHECK_THROWS_AS(alpha_equivalent(a, other, reflect), input_error);
}

TEST_CASE("worked example colorings") {
    // 4x5 grid, reds at (1,1) and (2,3): swapped by the 180-degree rotation
    ProductGraph p45 = grid_product(4, 5);
    Coloring ex32 = two_color(p45, {{1, 1}, {2, 3}});
    auto r32 = is_distinguishing_product(p45, ex32);
    CHECK_FALSE(r32.distinguishing);
    REQUIRE(r32.witness.has_value());
    CHECK(r32.witness->condition == ProductWitness::Condition::StabilizedPair);
    std::string json = witness_to_json(*r32.witness);
    CHECK(json.find("\"condition\": \"ii\"") != std::string::npos);

    // the identity lifting alone never exposes the symmetry: for every
    // non-identity factor automorphism some layer pair differs under id
    for (int i = 0; i < 2; ++i) {
        const int m = p45.factors()[i].vertex_count();
        const int q = p45.graph().vertex_count() / m;
        for (const auto& beta : automorphisms(p45.factors()[i]).elements) {
            if (beta.is_identity()) continue;
            bool some_pair_differs = false;
            for (int v = 0; v < m && !some_pair_differs; ++v)
                some_pair_differs = !alpha_equivalent(holographic_color(p45, i, v, ex32),
                                                      holographic_color(p45, i, beta(v), ex32),
                                                      Permutation::identity(q));
            CHECK(some_pair_differs);
        }
    }

    // 5x6 grid, reds at (1,1),(1,2),(1,3),(3,4): distinguishing
    ProductGraph p56 = grid_product(5, 6);
    Coloring ex33 = two_color(p56, {{1, 1}, {1, 2}, {1, 3}, {3, 4}});
    CHECK(is_distinguishing_product(p56, ex33).distinguishing);

    // yet equivalence without a fixed alpha would reject it: under the column
    // reflection, every layer pair is related by SOME color-preserving
    // isomorphism of the colored quotient paths, just not by one lifting
    ProductGraph q1 = quotient(p56, 1);
    Permutation col_reflect({5, 4, 3, 2, 1, 0});
    REQUIRE(automorphisms(p56.factors()[1]).elements[1] == col_reflect);
    for (int c = 0; c < 6; ++c) {
        HolographicColor a = holographic_color(p56, 1, c, ex33);
        HolographicColor b = holographic_color(p56, 1, col_reflect(c), ex33);
        CHECK(find_colored_isomorphism(q1.graph(), a.induced, q1.graph(), b.induced).has_value());
    }

    // 4x5 grid, reds at (1,3),(2,1),(2,2): distinguishing
    Coloring ex34 = two_color(p45, {{1, 3}, {2, 1}, {2, 2}});
    CHECK(is_distinguishing_product(p45, ex34).distinguishing);
    CHECK(is_distinguishing_product(p45, ex34, CheckMode::AutF).distinguishing);
}

TEST_CASE("product checker agrees with the direct checker") {
    auto sweep_agrees = [](const ProductGraph& p, int k) {
        AutGroup aut = automorphisms(p.graph());
        sweep_colorings(p, k, [&](const Coloring& f) {
            bool direct = is_distinguishing(p.graph(), aut, f);
            auto full = is_distinguishing_product(p, f, CheckMode::Full);
            auto autf = is_distinguishing_product(p, f, CheckMode::AutF);
            CHECK(full.distinguishing == direct);
            CHECK(autf.distinguishing == direct);
        });
    };
    sweep_agrees(grid_product(2, 3), 2);                                          // 64 colorings
    sweep_agrees(grid_product(3, 3), 2);                                          // 512, equal factors
    sweep_agrees(cartesian_product({complete_graph(2), complete_graph(2),
                                    complete_graph(2)}), 2);                      // 256, three equal factors
}

TEST_CASE("non-involutive quotient automorphisms") {
    // Sweep a product whose quotient group contains order-3 elements.
    ProductGraph prism = cartesian_product({complete_graph(2), cycle_graph(3)});
    AutGroup aut = automorphisms(prism.graph());
    sweep_colorings(prism, 2, [&](const Coloring& f) {
        CHECK(is_distinguishing_product(prism, f).distinguishing ==
              is_distinguishing(prism.graph(), aut, f));
    });

    // A gadget whose automorphism group is exactly the rotation group Z_3:
    // a triangle t0 t1 t2 joined by arms t_i - u_i - v_i - t_{i+1}, with a
    // pendant on u_i so no automorphism can reverse an arm.
    Graph gadget(12, {{0, 1}, {1, 2}, {2, 0},           // triangle t0 t1 t2
                      {0, 3}, {1, 4}, {2, 5},           // t_i - u_i
                      {3, 6}, {4, 7}, {5, 8},           // u_i - v_i
                      {6, 1}, {7, 2}, {8, 0},           // v_i - t_{i+1}
                      {3, 9}, {4, 10}, {5, 11}});       // u_i - w_i
    AutGroup gadget_aut = automorphisms(gadget);
    REQUIRE(gadget_aut.order() == 3);

    // One layer colored as the rotated copy of the other: the rotation lifts
    // layer 0 onto layer 1 color-preservingly, but its inverse is needed in
    // the other direction, and no product automorphism supplies both at
    // once, so the coloring distinguishes.
    ProductGraph p = cartesian_product({complete_graph(2), gadget});
    std::vector<int> colors(24, 1);
    colors[p.vertex_at({1, 0})] = 2; // layer 1 red at t0
    colors[p.vertex_at({0, 2})] = 2; // layer 0 red at t2, the rotation preimage of t0
    Coloring f(colors, 2);
    CHECK(is_distinguishing(p.graph(), automorphisms(p.graph()), f));
    CHECK(is_distinguishing_product(p, f).distinguishing);
    CHECK(is_distinguishing_product(p, f, CheckMode::AutF).distinguishing);

    // 2^18 colorings is too many to sweep; check a seeded batch instead
    std::mt19937_64 rng(2024);
    AutGroup product_aut = automorphisms(p.graph());
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> cs(24);
        for (int& c : cs) c = 1 + static_cast<int>(rng() % 2);
        Coloring g(cs, 2);
        CHECK(is_distinguishing_product(p, g).distinguishing ==
              is_distinguishing(p.graph(), product_aut, g));
    }
}

TEST_CASE("condition i witnesses on equal factors") {
    ProductGraph p33 = grid_product(3, 3);
    Coloring constant(std::vector<int>(9, 1), 1);
    auto r = is_distinguishing_product(p33, constant);
    CHECK_FALSE(r.distinguishing);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->condition == ProductWitness::Condition::FactorSwap);
    std::string json = witness_to_json(*r.witness);
    CHECK(json.find("\"condition\": \"i\"") != std::string::npos);
    CHECK(json.find("factor_j") != std::string::npos);
}

TEST_CASE("factorization grouping") {
    Factorization f1 = make_factorization(grid_product(2, 3));
    CHECK(f1.classes.size() == 2);
    CHECK(f1.classes[0].multiplicity == 1);

    Factorization f2 = make_factorization(grid_product(3, 3));
    REQUIRE(f2.classes.size() == 1);
    CHECK(f2.classes[0].multiplicity == 2);

    Factorization f3 = make_factorization(
        cartesian_product({complete_graph(2), path_graph(3), complete_graph(2)}));
    CHECK(f3.classes.size() == 2);
    CHECK(f3.classes[0].multiplicity == 2);
    CHECK(f3.classes[0].members == std::vector<int>{0, 2});
}

TEST_CASE("theta of products with distinct factors") {
    auto enumerated_theta = [](const Graph& g) { return threshold(g, automorphisms(g)); };

    ProductGraph p23 = grid_product(2, 3);
    CHECK(theta_product_distinct(make_factorization(p23)) == 5);
    CHECK(enumerated_theta(p23.graph()) == 5);

    ProductGraph p2c3 = cartesian_product({path_graph(2), cycle_graph(3)});
    CHECK(theta_product_distinct(make_factorization(p2c3)) == 5);
    CHECK(enumerated_theta(p2c3.graph()) == 5);

    ProductGraph p45 = grid_product(4, 5);
    CHECK(theta_product_distinct(make_factorization(p45)) == 13);
    CHECK(enumerated_theta(p45.graph()) == 13);

    CHECK_THROWS_AS(theta_product_distinct(make_factorization(grid_product(3, 3))), input_error);
}

TEST_CASE("theta of powers") {
    auto enumerated_theta = [](const Graph& g) { return threshold(g, automorphisms(g)); };

    CHECK(theta_power(complete_graph(2), 2) == 4);
    CHECK(enumerated_theta(cycle_graph(4)) == 4); // K_2^2 is C_4

    ProductGraph k3sq = cartesian_product({complete_graph(3), complete_graph(3)});
    CHECK(theta_power(complete_graph(3), 2) == 7);
    CHECK(enumerated_theta(k3sq.graph()) == 7);

    ProductGraph q3 = cartesian_product({complete_graph(2), complete_graph(2), complete_graph(2)});
    CHECK(theta_power(complete_graph(2), 3) == 7);
    CHECK(enumerated_theta(q3.graph()) == 7);

    CHECK_THROWS_AS(theta_power(complete_graph(2), 1), input_error);
    Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(theta_power(disconnected, 2), input_error);
}

TEST_CASE("theta in the general case") {
    // single class reduces to the power formula
    ProductGraph q3 = cartesian_product({complete_graph(2), complete_graph(2), complete_graph(2)});
    ThetaGeneralResult r1 = theta_general(make_factorization(q3));
    CHECK(r1.value == theta_power(complete_graph(2), 3));
    CHECK_FALSE(r1.note.empty());

    // all multiplicities one reduces to the distinct-factor formula
    ProductGraph p23 = grid_product(2, 3);
    CHECK(theta_general(make_factorization(p23)).value == theta_product_distinct(make_factorization(p23)));

    // mixed case, checked against the enumerated-automorphism oracle
    ProductGraph mixed = cartesian_product({complete_graph(2), complete_graph(2), path_graph(3)});
    ThetaGeneralResult r2 = theta_general(make_factorization(mixed));
    CHECK(r2.value == 10);
    CHECK(threshold(mixed.graph(), automorphisms(mixed.graph())) == 10);
}

TEST_CASE("checker input validation") {
    ProductGraph single = cartesian_product({path_graph(4)});
    Coloring c({1, 2, 3, 4}, 4);
    CHECK_THROWS_AS(is_distinguishing_product(single, c), input_error);

    ProductGraph p23 = grid_product(2, 3);
    CHECK_THROWS_AS(is_distinguishing_product(p23, c), input_error);
}
