#ifndef SYMBREAK_BITGRAPH_HPP
#define SYMBREAK_BITGRAPH_HPP

#include "symbreak/errors.hpp"
#include "symbreak/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace symbreak::detail {

// Adjacency rows packed into one 64-bit word. The search code in this
// project is specified for graphs of at most 64 vertices, so one word is
// enough and edge tests are single AND instructions.
struct BitGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    explicit BitGraph(const Graph& g) : n(g.vertex_count()), adj(g.vertex_count(), 0) {
        if (n > 64)
            throw capacity_error("graph has " + std::to_string(n) +
                                 " vertices; isomorphism/automorphism search supports at most 64");
        for (auto [u, v] : g.edges()) {
            adj[u] |= std::uint64_t{1} << v;
            adj[v] |= std::uint64_t{1} << u;
        }
    }

    bool edge(int u, int v) const { return (adj[u] >> v) & 1; }
};

// Equitable refinement of vertex colors on two graphs with a shared color
// space: repeatedly split classes by (color, sorted multiset of neighbor
// colors) until stable. Returns false if the two color multisets ever
// diverge, which proves non-isomorphism.
bool joint_refine(const BitGraph& a, const BitGraph& b, std::vector<int>& ca, std::vector<int>& cb);

// Single-graph refinement (used by the automorphism search).
void refine(const BitGraph& g, std::vector<int>& colors);

// Search order: start in the rarest color class, then always extend by a
// vertex with the most already-placed neighbors so adjacency constraints
// bite early.
std::vector<int> search_order(const BitGraph& g, const std::vector<int>& colors);

} // namespace symbreak::detail

#endif
