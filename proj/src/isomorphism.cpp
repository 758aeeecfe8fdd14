#include "symbreak/isomorphism.hpp"

#include "bitgraph.hpp"
#include "symbreak/errors.hpp"

#include <bit>
#include <cstdint>

namespace symbreak {

namespace {

using detail::BitGraph;

struct IsoSearch {
    const BitGraph& a;
    const BitGraph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> order;
    std::vector<int> image;
    std::uint64_t used = 0;

    bool dfs(size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int w = 0; w < b.n; ++w) {
            if ((used >> w) & 1) continue;
            if (cb[w] != ca[v]) continue;
            bool ok = true;
            for (size_t j = 0; j < depth; ++j) {
                int u = order[j];
                if (a.edge(v, u) != b.edge(w, image[u])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used |= std::uint64_t{1} << w;
            if (dfs(depth + 1)) return true;
            used &= ~(std::uint64_t{1} << w);
        }
        return false;
    }
};

std::optional<Permutation> search(const Graph& g, const Graph& h,
                                  std::vector<int> ca, std::vector<int> cb) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    BitGraph a(g), b(h);
    if (!detail::joint_refine(a, b, ca, cb)) return std::nullopt;
    IsoSearch s{a, b, ca, cb, detail::search_order(a, ca), std::vector<int>(a.n, -1)};
    if (!s.dfs(0)) return std::nullopt;
    return Permutation(std::move(s.image));
}

} // namespace

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
    return search(g, h, std::vector<int>(g.vertex_count(), 0), std::vector<int>(h.vertex_count(), 0));
}

std::optional<Permutation> find_colored_isomorphism(const Graph& g, const std::vector<int>& g_colors,
                                                    const Graph& h, const std::vector<int>& h_colors) {
    if (g_colors.size() != static_cast<size_t>(g.vertex_count()) ||
        h_colors.size() != static_cast<size_t>(h.vertex_count()))
        throw input_error("colored isomorphism: color vector length mismatch");
    return search(g, h, g_colors, h_colors);
}

} // namespace symbreak
