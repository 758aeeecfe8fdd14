#include "symbreak/product.hpp"

#include "symbreak/errors.hpp"

#include <limits>

namespace symbreak {

namespace {

Graph build_product_graph(const std::vector<Graph>& factors, const std::vector<long long>& strides) {
    long long n = strides[0] * factors[0].vertex_count();
    std::vector<Edge> edges;
    // Two tuples are adjacent iff they differ in exactly one coordinate and
    // that pair is a factor edge: for each factor edge (a,b) at position i,
    // splice in every assignment of the other coordinates.
    for (size_t i = 0; i < factors.size(); ++i) {
        long long outer = 1; // combinations of coordinates before i
        for (size_t j = 0; j < i; ++j) outer *= factors[j].vertex_count();
        long long inner = strides[i]; // combinations after i
        for (auto [a, b] : factors[i].edges())
            for (long long o = 0; o < outer; ++o)
                for (long long in = 0; in < inner; ++in) {
                    long long base = o * strides[i] * factors[i].vertex_count() + in;
                    edges.emplace_back(static_cast<Vertex>(base + a * strides[i]),
                                       static_cast<Vertex>(base + b * strides[i]));
                }
    }
    return Graph(static_cast<int>(n), edges);
}

} // namespace

ProductGraph::ProductGraph(std::vector<Graph> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw input_error("product: need at least one factor");
    long long n = 1;
    for (const auto& f : factors_) {
        if (f.vertex_count() == 0) throw input_error("product: empty factor");
        n *= f.vertex_count();
        if (n > std::numeric_limits<int>::max() / 2)
            throw capacity_error("product: too many vertices");
    }
    strides_.assign(factors_.size(), 1);
    for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * factors_[i + 1].vertex_count();
    graph_ = build_product_graph(factors_, strides_);
}

std::vector<int> ProductGraph::coords(Vertex v) const {
    std::vector<int> c(factors_.size());
    long long rest = v;
    for (size_t i = 0; i < factors_.size(); ++i) {
        c[i] = static_cast<int>(rest / strides_[i]);
        rest %= strides_[i];
    }
    return c;
}

Vertex ProductGraph::vertex_at(const std::vector<int>& coords) const {
    long long v = 0;
    for (size_t i = 0; i < factors_.size(); ++i) v += coords[i] * strides_[i];
    return static_cast<Vertex>(v);
}

Vertex ProductGraph::with_coord(Vertex v, int i, int value) const {
    long long old = (v / strides_[i]) % factors_[i].vertex_count();
    return static_cast<Vertex>(v + (value - old) * strides_[i]);
}

int ProductGraph::coord(Vertex v, int i) const {
    return static_cast<int>((v / strides_[i]) % factors_[i].vertex_count());
}

ProductGraph cartesian_product(std::vector<Graph> factors) {
    return ProductGraph(std::move(factors));
}

LayerView layer(const ProductGraph& p, int factor_index, Vertex anchor) {
    if (factor_index < 0 || factor_index >= p.factor_count())
        throw input_error("layer: factor index out of range");
    if (anchor < 0 || anchor >= p.graph().vertex_count())
        throw input_error("layer: anchor out of range");
    const Graph& f = p.factors()[factor_index];
    LayerView out;
    out.embedding.resize(f.vertex_count());
    for (int j = 0; j < f.vertex_count(); ++j)
        out.embedding[j] = p.with_coord(anchor, factor_index, j);
    out.graph = f;
    return out;
}

ProductGraph quotient(const ProductGraph& p, int factor_index) {
    if (p.factor_count() < 2) throw input_error("quotient: need at least two factors");
    if (factor_index < 0 || factor_index >= p.factor_count())
        throw input_error("quotient: factor index out of range");
    std::vector<Graph> rest;
    for (int i = 0; i < p.factor_count(); ++i)
        if (i != factor_index) rest.push_back(p.factors()[i]);
    return ProductGraph(std::move(rest));
}

Vertex embed_quotient_vertex(const ProductGraph& p, int factor_index, int factor_vertex, Vertex q) {
    // Quotient coordinates are the product coordinates with slot i removed;
    // both sides are row-major so the splice is positional.
    const ProductGraph& whole = p;
    std::vector<int> full(whole.factor_count());
    long long rest = q;
    int qi = 0;
    for (int i = 0; i < whole.factor_count(); ++i) {
        if (i == factor_index) {
            full[i] = factor_vertex;
            continue;
        }
        ++qi;
        long long stride = 1;
        for (int j = i + 1; j < whole.factor_count(); ++j)
            if (j != factor_index) stride *= whole.factors()[j].vertex_count();
        full[i] = static_cast<int>(rest / stride);
        rest %= stride;
    }
    (void)qi;
    return whole.vertex_at(full);
}

} // namespace symbreak
