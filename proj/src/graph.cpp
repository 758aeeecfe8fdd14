#include "symbreak/graph.hpp"

#include "symbreak/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace symbreak {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw input_error("graph: negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("graph: edge endpoint out of range: (" + std::to_string(u) +
                              "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw input_error("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack;
    stack.reserve(n_);
    stack.push_back(0);
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n_;
}

Graph path_graph(int n) {
    if (n < 1) throw input_error("path: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    if (n < 1) throw input_error("complete: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1) throw input_error("kbipartite: need part sizes >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
    return Graph(m + n, e);
}

Graph hypercube_graph(int dim) {
    if (dim < 1) throw input_error("hypercube: need dimension >= 1");
    if (dim > 20) throw input_error("hypercube: dimension too large");
    int n = 1 << dim;
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b) {
            int w = v ^ (1 << b);
            if (v < w) e.emplace_back(v, w);
        }
    return Graph(n, e);
}

Graph grid_graph(int rows, int cols) {
    if (rows < 2 || cols < 2) throw input_error("grid: need both sides >= 2");
    std::vector<Edge> e;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, e);
}

Graph family(const FamilySpec& spec) {
    auto arity = [&](size_t want) {
        if (spec.params.size() != want)
            throw input_error("family: wrong number of parameters");
    };
    switch (spec.kind) {
    case FamilyKind::Path: arity(1); return path_graph(spec.params[0]);
    case FamilyKind::Cycle: arity(1); return cycle_graph(spec.params[0]);
    case FamilyKind::Complete: arity(1); return complete_graph(spec.params[0]);
    case FamilyKind::CompleteBipartite: arity(2); return complete_bipartite_graph(spec.params[0], spec.params[1]);
    case FamilyKind::Hypercube: arity(1); return hypercube_graph(spec.params[0]);
    case FamilyKind::Grid: arity(2); return grid_graph(spec.params[0], spec.params[1]);
    }
    throw input_error("family: unknown kind");
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n >> m) {
                if (n < 0 || m < 0) throw input_error("edge list: bad header");
                continue;
            }
            std::string tok;
            if (std::istringstream(line) >> tok)
                throw input_error("edge list: expected 'n m' header");
            continue; // blank or comment-only line before header
        }
        long u, v;
        if (ls >> u >> v) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw input_error("edge list: missing header");
    if (static_cast<long>(edges.size()) != m)
        throw input_error("edge list: header promised " + std::to_string(m) + " edges, got " +
                          std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace symbreak
