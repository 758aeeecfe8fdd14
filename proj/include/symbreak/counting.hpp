#ifndef SYMBREAK_COUNTING_HPP
#define SYMBREAK_COUNTING_HPP

#include "symbreak/automorphism.hpp"
#include "symbreak/bigint.hpp"
#include "symbreak/coloring.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/lattice.hpp"

#include <cstdint>

namespace symbreak {

// True iff no non-identity automorphism preserves the coloring.
bool is_distinguishing(const Graph& g, const AutGroup& aut, const Coloring& c);

// Enumeration budget in number of colorings. The default is 2e7 and can be
// overridden by the SYMBREAK_BUDGET environment variable or per call.
std::uint64_t default_enumeration_budget();

// N_k: number of colorings V -> {1..k} with trivial stabilizer in aut.
//
// The sweep over all k^n colorings is embarrassingly parallel; the parallel
// kernel splits the coloring index range across OpenMP threads and reduces
// by exact summation, so its result is schedule-independent. The serial
// kernel is the reference the parallel one is tested (and benchmarked)
// against.
Int count_distinguishing_serial(const Graph& g, const AutGroup& aut, int k,
                                std::uint64_t budget = 0);
Int count_distinguishing_parallel(const Graph& g, const AutGroup& aut, int k,
                                  std::uint64_t budget = 0);

// Dispatches to the parallel kernel (the serial one without OpenMP).
Int count_distinguishing_brute(const Graph& g, const AutGroup& aut, int k,
                               std::uint64_t budget = 0);

// Same count by Moebius inversion over the subgroup lattice:
//   N_k = sum_H mu(trivial,H) * k^(#orbits of H).
// Colorings fixed by at least H are exactly those constant on H-orbits.
Int count_distinguishing_moebius(const SubgroupLattice& lattice, int k);

} // namespace symbreak

#endif
