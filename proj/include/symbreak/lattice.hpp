#ifndef SYMBREAK_LATTICE_HPP
#define SYMBREAK_LATTICE_HPP

#include "symbreak/automorphism.hpp"

#include <cstddef>
#include <vector>

namespace symbreak {

// Complete subgroup lattice of a small group, with the Moebius values
// mu(trivial, H) that turn "colorings fixed by at least H" counts into
// "colorings with trivial stabilizer" counts.
struct SubgroupLattice {
    int degree = 0;
    // Each subgroup is a sorted list of indices into the parent AutGroup's
    // element array. subgroups[0] is trivial; the last entry is the full group.
    std::vector<std::vector<int>> subgroups;
    std::vector<long long> moebius;   // mu(trivial, subgroups[i])
    std::vector<int> orbit_counts;    // orbits of subgroups[i] on 0..degree-1

    std::size_t size() const { return subgroups.size(); }
};

// Group order cap for lattice construction; subgroup enumeration by closure
// is exponential in the worst case and this library only needs desk-scale
// groups.
inline constexpr std::size_t kMaxLatticeOrder = 128;

SubgroupLattice subgroup_lattice(const AutGroup& aut);

} // namespace symbreak

#endif
