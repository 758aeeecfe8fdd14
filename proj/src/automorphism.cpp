#include "symbreak/automorphism.hpp"

#include "bitgraph.hpp"
#include "symbreak/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

namespace symbreak {

namespace {

using detail::BitGraph;

struct AutSearch {
    const BitGraph& g;
    const std::vector<int>& colors;
    std::vector<int> order;
    std::vector<int> image;
    std::uint64_t used = 0;
    std::vector<std::vector<int>>& found;

    void dfs(size_t depth) {
        if (depth == order.size()) {
            if (found.size() >= kMaxAutOrder)
                throw capacity_error("automorphism group order exceeds enumeration cap of " +
                                     std::to_string(kMaxAutOrder));
            found.push_back(image);
            return;
        }
        int v = order[depth];
        for (int w = 0; w < g.n; ++w) {
            if ((used >> w) & 1) continue;
            if (colors[w] != colors[v]) continue;
            bool ok = true;
            for (size_t j = 0; j < depth; ++j) {
                int u = order[j];
                if (g.edge(v, u) != g.edge(w, image[u])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used |= std::uint64_t{1} << w;
            dfs(depth + 1);
            used &= ~(std::uint64_t{1} << w);
        }
    }
};

struct ImageLess {
    bool operator()(const Permutation& a, const Permutation& b) const {
        return a.images() < b.images();
    }
};

// Closure of the current generator set, as a sorted element set.
std::set<std::vector<int>> closure_of(const std::vector<Permutation>& gens, int degree) {
    std::set<std::vector<int>> known;
    std::vector<Permutation> frontier{Permutation::identity(degree)};
    known.insert(frontier.front().images());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier)
            for (const auto& gen : gens) {
                Permutation y = x.then(gen);
                if (known.insert(y.images()).second) next.push_back(std::move(y));
            }
        frontier.swap(next);
    }
    return known;
}

std::vector<Permutation> greedy_generators(const std::vector<Permutation>& elements, int degree) {
    std::vector<Permutation> gens;
    std::set<std::vector<int>> known{Permutation::identity(degree).images()};
    for (const auto& e : elements) {
        if (known.count(e.images())) continue;
        gens.push_back(e);
        known = closure_of(gens, degree);
    }
    return gens;
}

} // namespace

AutGroup automorphisms(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxAutVertices)
        throw capacity_error("automorphism enumeration supports at most " +
                             std::to_string(kMaxAutVertices) + " vertices");
    AutGroup out;
    out.degree = n;
    if (n == 0) {
        out.elements.push_back(Permutation::identity(0));
        return out;
    }

    BitGraph bg(g);
    std::vector<int> colors(n, 0);
    detail::refine(bg, colors);

    std::vector<std::vector<int>> found;
    AutSearch search{bg, colors, detail::search_order(bg, colors), std::vector<int>(n, -1), 0, found};
    search.dfs(0);

    out.elements.reserve(found.size());
    for (auto& im : found) out.elements.emplace_back(std::move(im));
    std::sort(out.elements.begin(), out.elements.end(), ImageLess{});
    out.generators = greedy_generators(out.elements, n);
    return out;
}

std::vector<std::vector<int>> orbits_of(const std::vector<Permutation>& perms, int degree) {
    std::vector<int> parent(degree);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& p : perms)
        for (int v = 0; v < degree; ++v) {
            int a = find(v), b = find(p(v));
            if (a != b) parent[a] = b;
        }
    std::vector<std::vector<int>> groups(degree);
    for (int v = 0; v < degree; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& grp : groups)
        if (!grp.empty()) out.push_back(std::move(grp));
    return out;
}

int orbit_count(const std::vector<Permutation>& subgroup) {
    if (subgroup.empty()) throw input_error("orbit_count: empty permutation set");
    int degree = subgroup.front().degree();
    std::set<std::vector<int>> members;
    for (const auto& p : subgroup) {
        if (p.degree() != degree) throw input_error("orbit_count: mixed degrees");
        members.insert(p.images());
    }
    for (const auto& a : subgroup)
        for (const auto& b : subgroup)
            if (!members.count(a.then(b).images()))
                throw input_error("orbit_count: set is not closed under composition");
    return static_cast<int>(orbits_of(subgroup, degree).size());
}

std::string aut_group_to_json(const AutGroup& aut, bool include_elements) {
    std::ostringstream out;
    out << "{\"order\": " << aut.order() << ", \"degree\": " << aut.degree << ", \"generators\": [";
    for (size_t i = 0; i < aut.generators.size(); ++i) {
        if (i) out << ", ";
        out << '"' << aut.generators[i].to_cycle_string() << '"';
    }
    out << ']';
    if (include_elements) {
        out << ", \"elements\": [";
        for (size_t i = 0; i < aut.elements.size(); ++i) {
            if (i) out << ", ";
            out << '"' << aut.elements[i].to_cycle_string() << '"';
        }
        out << ']';
    }
    out << '}';
    return out.str();
}

} // namespace symbreak
