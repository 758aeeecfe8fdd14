#include "bitgraph.hpp"

#include <bit>
#include <map>

namespace symbreak::detail {

namespace {

using Signature = std::pair<int, std::vector<int>>;

Signature signature_of(const BitGraph& g, const std::vector<int>& colors, int v) {
    std::vector<int> nb;
    std::uint64_t row = g.adj[v];
    while (row) {
        int w = std::countr_zero(row);
        row &= row - 1;
        nb.push_back(colors[w]);
    }
    std::sort(nb.begin(), nb.end());
    return {colors[v], std::move(nb)};
}

} // namespace

bool joint_refine(const BitGraph& a, const BitGraph& b, std::vector<int>& ca, std::vector<int>& cb) {
    for (;;) {
        std::map<Signature, int> index;
        std::vector<Signature> sa(a.n), sb(b.n);
        for (int v = 0; v < a.n; ++v) sa[v] = signature_of(a, ca, v);
        for (int v = 0; v < b.n; ++v) sb[v] = signature_of(b, cb, v);
        for (const auto& s : sa) index.emplace(s, 0);
        for (const auto& s : sb) index.emplace(s, 0);
        int next = 0;
        for (auto& [sig, id] : index) id = next++;

        std::vector<int> na(a.n), nb(b.n);
        std::vector<int> count_a(next, 0), count_b(next, 0);
        for (int v = 0; v < a.n; ++v) ++count_a[na[v] = index[sa[v]]];
        for (int v = 0; v < b.n; ++v) ++count_b[nb[v] = index[sb[v]]];
        if (count_a != count_b) return false;

        bool stable = (na == ca && nb == cb);
        ca.swap(na);
        cb.swap(nb);
        if (stable) return true;
    }
}

void refine(const BitGraph& g, std::vector<int>& colors) {
    for (;;) {
        std::map<Signature, int> index;
        std::vector<Signature> sigs(g.n);
        for (int v = 0; v < g.n; ++v) index.emplace(sigs[v] = signature_of(g, colors, v), 0);
        int next = 0;
        for (auto& [sig, id] : index) id = next++;
        std::vector<int> fresh(g.n);
        for (int v = 0; v < g.n; ++v) fresh[v] = index[sigs[v]];
        if (fresh == colors) return;
        colors.swap(fresh);
    }
}

std::vector<int> search_order(const BitGraph& g, const std::vector<int>& colors) {
    int classes = 0;
    for (int c : colors) classes = std::max(classes, c + 1);
    std::vector<int> size(classes, 0);
    for (int c : colors) ++size[c];

    std::vector<int> order;
    std::vector<char> placed(g.n, 0);
    std::uint64_t placed_mask = 0;
    for (int step = 0; step < g.n; ++step) {
        int best = -1, best_nb = -1;
        for (int v = 0; v < g.n; ++v) {
            if (placed[v]) continue;
            int nb = std::popcount(g.adj[v] & placed_mask);
            if (best < 0 || nb > best_nb ||
                (nb == best_nb && size[colors[v]] < size[colors[best]])) {
                best = v;
                best_nb = nb;
            }
        }
        if (best < 0) break;
        placed[best] = 1;
        placed_mask |= std::uint64_t{1} << best;
        order.push_back(best);
    }
    return order;
}

} // namespace symbreak::detail
