#include "symbreak/product_symmetry.hpp"

#include "symbreak/errors.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symbreak {

namespace {

// Layer colorings of every factor-i layer, indexed [factor vertex][quotient vertex].
std::vector<std::vector<int>> layer_colorings(const ProductGraph& p, int i, int quotient_size,
                                              const Coloring& f) {
    const int m = p.factors()[i].vertex_count();
    std::vector<std::vector<int>> out(m, std::vector<int>(quotient_size));
    for (int v = 0; v < m; ++v)
        for (int x = 0; x < quotient_size; ++x)
            out[v][x] = f.colors[embed_quotient_vertex(p, i, v, x)];
    return out;
}

// The factor-respecting automorphisms of a product: all combinations of
// per-factor automorphisms, acting coordinatewise.
std::vector<Permutation> factor_respecting_automorphisms(const ProductGraph& p) {
    std::vector<AutGroup> per_factor;
    per_factor.reserve(p.factor_count());
    for (const auto& f : p.factors()) per_factor.push_back(automorphisms(f));

    const int n = p.graph().vertex_count();
    std::vector<Permutation> out;
    std::vector<size_t> pick(p.factor_count(), 0);
    for (;;) {
        std::vector<int> images(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> c = p.coords(v);
            for (int i = 0; i < p.factor_count(); ++i)
                c[i] = per_factor[i].elements[pick[i]](c[i]);
            images[v] = p.vertex_at(c);
        }
        out.emplace_back(std::move(images));
        int i = p.factor_count() - 1;
        while (i >= 0 && ++pick[i] == per_factor[i].order()) pick[i--] = 0;
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Permutation& a, const Permutation& b) { return a.images() < b.images(); });
    return out;
}

// True iff mapping layer v to layer beta(v) through the lifting of alpha
// preserves every color, i.e. the product map (beta, alpha) preserves f.
bool lifting_preserves(const std::vector<std::vector<int>>& layers, const Permutation& beta,
                       const Permutation& alpha) {
    const int m = beta.degree();
    const int q = alpha.degree();
    for (int v = 0; v < m; ++v) {
        const auto& from = layers[v];
        const auto& to = layers[beta(v)];
        for (int x = 0; x < q; ++x)
            if (from[x] != to[alpha(x)]) return false;
    }
    return true;
}

} // namespace

HolographicColor holographic_color(const ProductGraph& p, int factor_index, int anchor,
                                   const Coloring& f) {
    if (p.factor_count() < 2) throw input_error("holographic color: need at least two factors");
    if (factor_index < 0 || factor_index >= p.factor_count())
        throw input_error("holographic color: factor index out of range");
    if (anchor < 0 || anchor >= p.factors()[factor_index].vertex_count())
        throw input_error("holographic color: anchor out of range");
    if (f.size() != p.graph().vertex_count())
        throw input_error("holographic color: coloring length mismatch");

    const int q = p.graph().vertex_count() / p.factors()[factor_index].vertex_count();
    HolographicColor out;
    out.factor_index = factor_index;
    out.anchor = anchor;
    out.induced.resize(q);
    for (int x = 0; x < q; ++x)
        out.induced[x] = f.colors[embed_quotient_vertex(p, factor_index, anchor, x)];
    return out;
}

bool alpha_equivalent(const HolographicColor& a, const HolographicColor& b,
                      const Permutation& alpha) {
    if (a.factor_index != b.factor_index || a.induced.size() != b.induced.size())
        throw input_error("alpha_equivalent: colors over different quotients");
    if (alpha.degree() != static_cast<int>(a.induced.size()))
        throw input_error("alpha_equivalent: automorphism degree does not match quotient");
    const int q = alpha.degree();
    bool forward = true, backward = true;
    const Permutation inv = alpha.inverse();
    for (int x = 0; x < q && (forward || backward); ++x) {
        if (a.induced[x] != b.induced[alpha(x)]) forward = false;
        if (a.induced[x] != b.induced[inv(x)]) backward = false;
    }
    return forward || backward;
}

ProductCheckResult is_distinguishing_product(const ProductGraph& p, const Coloring& f,
                                             CheckMode mode) {
    if (p.factor_count() < 2)
        throw input_error("product distinguishing test: need at least two factors");
    if (f.size() != p.graph().vertex_count())
        throw input_error("product distinguishing test: coloring length mismatch");
    for (const auto& factor : p.factors())
        if (factor.vertex_count() < 2)
            throw input_error("product distinguishing test: single-vertex factors are not prime");

    const int k = p.factor_count();

    std::vector<ProductGraph> quotients;
    quotients.reserve(k);
    for (int i = 0; i < k; ++i) quotients.push_back(quotient(p, i));

    std::vector<std::vector<std::vector<int>>> layers(k);
    for (int i = 0; i < k; ++i)
        layers[i] = layer_colorings(p, i, quotients[i].graph().vertex_count(), f);

    std::vector<AutGroup> factor_auts;
    factor_auts.reserve(k);
    for (int i = 0; i < k; ++i) factor_auts.push_back(automorphisms(p.factors()[i]));

    // Condition i: a color-preserving alignment of layer family i onto layer
    // family j would be a non-identity automorphism of the product, so every
    // isomorphic factor pair must be ruled out. The alignment is a pair
    // (rho: G_i -> G_j, lambda: Q_i -> Q_j); lambda candidates are one fixed
    // isomorphism composed with Aut(Q_i), and rho is found by colored
    // isomorphism search once lambda pins the color identification.
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (!find_isomorphism(p.factors()[i], p.factors()[j])) continue;
            auto bridge = find_isomorphism(quotients[i].graph(), quotients[j].graph());
            if (!bridge)
                throw internal_error("product check: isomorphic factors with non-isomorphic quotients");
            const AutGroup q_aut = automorphisms(quotients[i].graph());
            const int q = quotients[i].graph().vertex_count();
            for (const auto& a : q_aut.elements) {
                const Permutation lambda = a.then(*bridge);
                // Color every G_i vertex by its layer pattern and every G_j
                // vertex by its layer pattern pulled back through lambda,
                // then ask for a color-preserving isomorphism rho.
                std::map<std::vector<int>, int> palette;
                auto color_id = [&palette](std::vector<int> pattern) {
                    return palette.emplace(std::move(pattern), static_cast<int>(palette.size()))
                        .first->second;
                };
                std::vector<int> ci, cj;
                for (const auto& pattern : layers[i]) ci.push_back(color_id(pattern));
                for (const auto& pattern : layers[j]) {
                    std::vector<int> pulled(q);
                    for (int x = 0; x < q; ++x) pulled[x] = pattern[lambda(x)];
                    cj.push_back(color_id(pulled));
                }
                auto rho = find_colored_isomorphism(p.factors()[i], ci, p.factors()[j], cj);
                if (rho) {
                    ProductWitness w;
                    w.condition = ProductWitness::Condition::FactorSwap;
                    w.factor_i = i;
                    w.factor_j = j;
                    w.alpha = lambda;
                    w.beta = *rho;
                    return {false, w};
                }
            }
        }
    }

    // Condition ii: scan (alpha, beta) pairs in sorted order; the first
    // stabilized pair found is the lexicographically smallest witness.
    for (int i = 0; i < k; ++i) {
        const std::vector<Permutation> alphas =
            mode == CheckMode::Full ? automorphisms(quotients[i].graph()).elements
                                    : factor_respecting_automorphisms(quotients[i]);
        for (const auto& alpha : alphas) {
            for (const auto& beta : factor_auts[i].elements) {
                if (beta.is_identity()) continue;
                if (lifting_preserves(layers[i], beta, alpha)) {
                    ProductWitness w;
                    w.condition = ProductWitness::Condition::StabilizedPair;
                    w.factor_i = i;
                    w.alpha = alpha;
                    w.beta = beta;
                    return {false, w};
                }
            }
        }
    }
    return {true, std::nullopt};
}

std::string witness_to_json(const ProductWitness& w) {
    std::ostringstream out;
    out << "{\"condition\": \""
        << (w.condition == ProductWitness::Condition::FactorSwap ? "i" : "ii") << "\""
        << ", \"factor_i\": " << w.factor_i;
    if (w.condition == ProductWitness::Condition::FactorSwap)
        out << ", \"factor_j\": " << w.factor_j;
    out << ", \"alpha\": \"" << w.alpha.to_cycle_string() << "\""
        << ", \"beta\": \"" << w.beta.to_cycle_string() << "\"}";
    return out.str();
}

Factorization make_factorization(ProductGraph p) {
    Factorization out{std::move(p), {}};
    for (int i = 0; i < out.product.factor_count(); ++i) {
        const Graph& f = out.product.factors()[i];
        bool placed = false;
        for (auto& cls : out.classes)
            if (find_isomorphism(cls.representative, f)) {
                cls.members.push_back(i);
                ++cls.multiplicity;
                placed = true;
                break;
            }
        if (!placed) out.classes.push_back({f, {i}, 1});
    }
    return out;
}

Int theta_product_distinct(const Factorization& f) {
    if (f.product.factor_count() < 2)
        throw input_error("theta of product: need at least two factors");
    for (const auto& cls : f.classes)
        if (cls.multiplicity > 1)
            throw input_error("theta of product: isomorphic factor pair detected "
                              "(positions " + std::to_string(cls.members[0]) + " and " +
                              std::to_string(cls.members[1]) + "); use the general form");
    Int best = 0;
    const long total = f.product.graph().vertex_count();
    for (const auto& cls : f.classes) {
        const Graph& g = cls.representative;
        if (!g.is_connected())
            throw input_error("theta of product: factors must be connected");
        const int theta_i = threshold(g, automorphisms(g));
        Int term = Int(theta_i - 1) * Int(total / g.vertex_count());
        best = std::max(best, term);
    }
    return best + 1;
}

Int theta_power(const Graph& g, int exponent) {
    if (exponent < 2) throw input_error("theta of power: need exponent >= 2");
    if (g.vertex_count() == 0) throw input_error("theta of power: empty graph");
    if (!g.is_connected()) throw input_error("theta of power: base graph must be connected");
    const unsigned long t = static_cast<unsigned long>(g.vertex_count());
    const int theta_g = threshold(g, automorphisms(g));
    Int scale = ipow(t, static_cast<std::uint64_t>(exponent - 1));
    // max{(t+1)/2, theta-1} decided exactly on 2x both sides; t^(k-1)*(t+1)
    // is always even, so the halved branch stays integral.
    if (t + 1 >= 2 * static_cast<unsigned long>(theta_g - 1))
        return scale * Int(t + 1) / 2 + 1;
    return scale * Int(theta_g - 1) + 1;
}

ThetaGeneralResult theta_general(const Factorization& f) {
    if (f.product.factor_count() < 1) throw input_error("theta: empty factorization");
    const Int total = f.product.graph().vertex_count();
    Int best = 0;
    for (const auto& cls : f.classes) {
        const Graph& g = cls.representative;
        if (!g.is_connected()) throw input_error("theta: factors must be connected");
        Int theta_block = cls.multiplicity >= 2 ? theta_power(g, cls.multiplicity)
                                                : Int(threshold(g, automorphisms(g)));
        Int block_size = ipow(static_cast<unsigned long>(g.vertex_count()),
                              static_cast<std::uint64_t>(cls.multiplicity));
        Int term = (theta_block - 1) * (total / block_size);
        best = std::max(best, term);
    }
    return {best + 1,
            "the source statement of the general case omits the trailing +1 present in the "
            "distinct-factor and power cases; the enumerated-automorphism oracle on explicit "
            "products confirms the +1 reading, which is what this value uses"};
}

} // namespace symbreak
