#ifndef SYMBREAK_PRODUCT_SYMMETRY_HPP
#define SYMBREAK_PRODUCT_SYMMETRY_HPP

#include "symbreak/automorphism.hpp"
#include "symbreak/bigint.hpp"
#include "symbreak/coloring.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"
#include "symbreak/product.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symbreak {

// The coloring a product coloring induces on the quotient layer through one
// factor vertex, read in the quotient's fixed (row-major) vertex order.
struct HolographicColor {
    int factor_index = -1;
    int anchor = -1;            // vertex of factor factor_index
    std::vector<int> induced;   // color of quotient vertex x, in quotient order
};

HolographicColor holographic_color(const ProductGraph& p, int factor_index, int anchor,
                                   const Coloring& f);

// True iff the lifting of alpha or of alpha^-1 maps a's induced coloring
// onto b's: lifting of alpha sends the layer vertex aligned with x to the
// one aligned with alpha(x), so the test is pointwise color equality after
// reindexing. Symmetric in (a, b).
bool alpha_equivalent(const HolographicColor& a, const HolographicColor& b,
                      const Permutation& alpha);

enum class CheckMode { Full, AutF };

struct ProductWitness {
    enum class Condition { FactorSwap, StabilizedPair };
    Condition condition;
    int factor_i = -1;
    int factor_j = -1;     // FactorSwap only
    Permutation alpha;     // StabilizedPair: quotient automorphism; FactorSwap: quotient alignment
    Permutation beta;      // StabilizedPair: factor automorphism;  FactorSwap: factor bijection
};

struct ProductCheckResult {
    bool distinguishing = false;
    std::optional<ProductWitness> witness; // present iff not distinguishing
};

// Distinguishing test for a coloring of a Cartesian product of prime factors
// without enumerating Aut of the whole product:
//   i.  no color-preserving alignment maps the factor-i layer family onto
//       the factor-j layer family (only possible when G_i ~ G_j), and
//   ii. for every quotient automorphism alpha (all of Aut(Q_i) in Full mode,
//       only the factor-respecting subgroup in AutF mode) and every
//       non-identity factor automorphism beta, some layer pair
//       (v, beta(v)) is not alpha-equivalent under one fixed lifting.
// Primality of the supplied factors is the caller's assertion; the verdict
// is only meaningful for prime factor lists.
ProductCheckResult is_distinguishing_product(const ProductGraph& p, const Coloring& f,
                                             CheckMode mode = CheckMode::Full);

std::string witness_to_json(const ProductWitness& w);

// Factor list grouped into isomorphism classes, the input shape taken by the
// product threshold formulas.
struct FactorClass {
    Graph representative;
    std::vector<int> members; // factor positions
    int multiplicity = 0;
};

struct Factorization {
    ProductGraph product;
    std::vector<FactorClass> classes;
};

Factorization make_factorization(ProductGraph p);

// theta of a product of connected, pairwise non-isomorphic prime factors:
//   max_i (theta(G_i) - 1) * |Q_i|, plus one.
Int theta_product_distinct(const Factorization& f);

// theta of the k-th Cartesian power of a connected prime graph:
//   |G|^(k-1) * max{(|G|+1)/2, theta(G)-1}, plus one.
Int theta_power(const Graph& g, int exponent);

struct ThetaGeneralResult {
    Int value;
    std::string note; // provenance of the trailing "+1"
};

// General case over grouped prime factors:
//   max_i (theta(G_i^{t_i}) - 1) * |G| / |G_i^{t_i}|, plus one.
// The printed source formula omits the final increment; the enumerated
// automorphism oracle on explicit products supports the incremented form,
// which is what this returns (see note).
ThetaGeneralResult theta_general(const Factorization& f);

} // namespace symbreak

#endif
