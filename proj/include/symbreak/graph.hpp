#ifndef SYMBREAK_GRAPH_HPP
#define SYMBREAK_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace symbreak {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>; // stored with first < second

// Immutable simple undirected graph on vertices 0..n-1. Adjacency lists are
// built eagerly and kept sorted, so a Graph can be shared freely across
// threads once constructed.
class Graph {
public:
    Graph() = default;

    // Duplicate pairs collapse; self-loops and out-of-range endpoints are
    // rejected with input_error.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(Vertex u, Vertex v) const;
    bool is_connected() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;              // sorted, unique, u < v
    std::vector<std::vector<Vertex>> adj_; // sorted per vertex
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

enum class FamilyKind { Path, Cycle, Complete, CompleteBipartite, Hypercube, Grid };

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;
};

// Canonical vertex numbering: paths/cycles consecutive, grids row-major
// (vertex r*cols + c), hypercubes by binary coordinates.
Graph family(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph hypercube_graph(int dim);
Graph grid_graph(int rows, int cols);

// Edge-list text format: first non-comment line "n m", then m lines "u v".
// Lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace symbreak

#endif
