#ifndef SYMBREAK_AUTOMORPHISM_HPP
#define SYMBREAK_AUTOMORPHISM_HPP

#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace symbreak {

// Fully enumerated automorphism group. Elements are sorted lexicographically
// by image array, which puts the identity first and makes every downstream
// iteration order reproducible.
struct AutGroup {
    int degree = 0;
    std::vector<Permutation> elements;
    std::vector<Permutation> generators; // greedily minimized, may be empty for trivial groups

    std::size_t order() const { return elements.size(); }
    bool is_trivial() const { return elements.size() <= 1; }
    const Permutation& identity() const { return elements.front(); }
};

// Exact enumeration bounds; beyond either we refuse rather than thrash.
inline constexpr int kMaxAutVertices = 64;
inline constexpr std::size_t kMaxAutOrder = 100000;

// Enumerates Aut(g) by equitable-partition refinement followed by depth-first
// individualization, pruning on refinement-class mismatch.
AutGroup automorphisms(const Graph& g);

// Orbits of a set of permutations acting on 0..degree-1.
std::vector<std::vector<int>> orbits_of(const std::vector<Permutation>& perms, int degree);

// Number of orbits of a subgroup on the vertex set. Verifies the subset is
// closed under composition (a subgroup) and throws input_error otherwise.
int orbit_count(const std::vector<Permutation>& subgroup);

std::string aut_group_to_json(const AutGroup& aut, bool include_elements);

} // namespace symbreak

#endif
