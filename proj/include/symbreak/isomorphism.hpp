#ifndef SYMBREAK_ISOMORPHISM_HPP
#define SYMBREAK_ISOMORPHISM_HPP

#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"

#include <optional>
#include <vector>

namespace symbreak {

// Edge-preserving bijection g -> h, if one exists. Partition refinement on
// (degree, neighbor classes) first, then backtracking over the refined
// classes. Intended for graphs of at most 64 vertices.
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h);

// Vertex-colored variant: the witness must also map every vertex onto one
// with the same color id. Color ids are compared across the two graphs.
std::optional<Permutation> find_colored_isomorphism(const Graph& g, const std::vector<int>& g_colors,
                                                    const Graph& h, const std::vector<int>& h_colors);

inline bool is_isomorphic(const Graph& g, const Graph& h) {
    return find_isomorphism(g, h).has_value();
}

} // namespace symbreak

#endif
