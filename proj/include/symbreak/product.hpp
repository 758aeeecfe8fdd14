#ifndef SYMBREAK_PRODUCT_HPP
#define SYMBREAK_PRODUCT_HPP

#include "symbreak/graph.hpp"

#include <vector>

namespace symbreak {

// Cartesian product of an ordered factor list. Product vertices are numbered
// row-major in their coordinate tuples (last coordinate fastest), so the
// vertex<->tuple maps are pure stride arithmetic and identical across runs.
class ProductGraph {
public:
    explicit ProductGraph(std::vector<Graph> factors);

    const Graph& graph() const { return graph_; }
    const std::vector<Graph>& factors() const { return factors_; }
    int factor_count() const { return static_cast<int>(factors_.size()); }

    std::vector<int> coords(Vertex v) const;
    Vertex vertex_at(const std::vector<int>& coords) const;

    // Replace coordinate i of v.
    Vertex with_coord(Vertex v, int i, int value) const;
    int coord(Vertex v, int i) const;

private:
    std::vector<Graph> factors_;
    std::vector<long long> strides_;
    Graph graph_;
};

ProductGraph cartesian_product(std::vector<Graph> factors);

struct LayerView {
    Graph graph;                    // relabeled copy, vertex j = factor vertex j
    std::vector<Vertex> embedding;  // factor vertex -> product vertex
};

// The copy of factor i through `anchor`: all coordinates except i frozen.
LayerView layer(const ProductGraph& p, int factor_index, Vertex anchor);

// The product of all factors except i, with its own row-major numbering.
ProductGraph quotient(const ProductGraph& p, int factor_index);

// Product vertex whose i-th coordinate is factor_vertex and whose remaining
// coordinates are the coordinates of quotient vertex q (in quotient order).
// This is the embedding of the quotient layer through factor vertex
// `factor_vertex`.
Vertex embed_quotient_vertex(const ProductGraph& p, int factor_index, int factor_vertex, Vertex q);

} // namespace symbreak

#endif
