#include "symbreak/specparse.hpp"

#include "symbreak/errors.hpp"
#include "symbreak/isomorphism.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace symbreak;

TEST_CASE("family specs") {
    CHECK(graph_of(parse_graph_spec("path:5")) == path_graph(5));
    CHECK(graph_of(parse_graph_spec("cycle:6")) == cycle_graph(6));
    CHECK(graph_of(parse_graph_spec("complete:5")) == complete_graph(5));
    CHECK(graph_of(parse_graph_spec("kbipartite:3,3")) == complete_bipartite_graph(3, 3));
    CHECK(graph_of(parse_graph_spec("hypercube:4")) == hypercube_graph(4));
    CHECK(graph_of(parse_graph_spec("grid:4x5")) == grid_graph(4, 5));
}

TEST_CASE("product expressions keep their factorization") {
    ParsedGraph pg = parse_graph_spec("path:4 x path:5");
    const ProductGraph* p = product_of(pg);
    REQUIRE(p != nullptr);
    CHECK(p->factor_count() == 2);
    CHECK(p->graph().vertex_count() == 20);

    ParsedGraph three = parse_graph_spec("complete:2 x complete:2 x complete:2");
    REQUIRE(product_of(three) != nullptr);
    CHECK(product_of(three)->factor_count() == 3);
    CHECK(is_isomorphic(graph_of(three), hypercube_graph(3)));

    CHECK(product_of(parse_graph_spec("path:5")) == nullptr);
}

TEST_CASE("file sources") {
    std::string path = "symbreak_test_tri.el";
    {
        std::ofstream out(path);
        out << "# triangle\n3 3\n0 1\n1 2\n2 0\n";
    }
    Graph g = graph_of(parse_graph_spec("file:" + path));
    CHECK(is_isomorphic(g, cycle_graph(3)));
    std::remove(path.c_str());

    CHECK_THROWS_AS(parse_graph_spec("file:/no/such/file.el"), input_error);
}

TEST_CASE("syntax errors") {
    CHECK_THROWS_AS(parse_graph_spec("paths:4"), input_error);
    CHECK_THROWS_AS(parse_graph_spec("path"), input_error);
    CHECK_THROWS_AS(parse_graph_spec("path:x"), input_error);
    CHECK_THROWS_AS(parse_graph_spec("grid:4"), input_error);
    CHECK_THROWS_AS(parse_graph_spec("path:4 x "), input_error);
    CHECK_THROWS_AS(parse_graph_spec("cycle:2"), input_error);
}

TEST_CASE("round trip: family DSL -> edge list -> isomorphic graph") {
    for (const char* spec : {"path:4", "cycle:6", "complete:5", "kbipartite:3,3",
                             "hypercube:3", "grid:4x5", "path:4 x path:5"}) {
        Graph g = graph_of(parse_graph_spec(spec));
        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream in(out.str());
        Graph back = read_edge_list(in);
        CHECK(is_isomorphic(g, back));
    }
}
