#include "symbreak/lattice.hpp"

#include "symbreak/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace symbreak {

namespace {

// Composition table over element indices: table[a][b] = index of a.then(b).
std::vector<std::vector<int>> composition_table(const AutGroup& aut) {
    const int m = static_cast<int>(aut.order());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < m; ++i) index[aut.elements[i].images()] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            auto it = index.find(aut.elements[a].then(aut.elements[b]).images());
            if (it == index.end())
                throw internal_error("subgroup_lattice: element set not closed");
            table[a][b] = it->second;
        }
    return table;
}

std::vector<int> closure(const std::vector<int>& seed, const std::vector<std::vector<int>>& table) {
    std::set<int> in{0}; // identity has index 0 (elements sorted, identity least)
    std::vector<int> frontier;
    for (int s : seed)
        if (in.insert(s).second) frontier.push_back(s);
    // Each new element is multiplied (both orders) against a snapshot of the
    // set at its turn; any pair is covered at the turn of its later member.
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            std::vector<int> snapshot(in.begin(), in.end());
            for (int y : snapshot) {
                if (in.insert(table[x][y]).second) next.push_back(table[x][y]);
                if (in.insert(table[y][x]).second) next.push_back(table[y][x]);
            }
        }
        frontier.swap(next);
    }
    return std::vector<int>(in.begin(), in.end());
}

} // namespace

SubgroupLattice subgroup_lattice(const AutGroup& aut) {
    if (aut.order() > kMaxLatticeOrder)
        throw capacity_error("subgroup lattice supports group order at most " +
                             std::to_string(kMaxLatticeOrder) + ", got " +
                             std::to_string(aut.order()));
    const auto table = composition_table(aut);

    // All subgroups arise from the trivial one by repeatedly adjoining a
    // single element and closing, so a worklist over (subgroup, element)
    // pairs reaches the fixed point containing every subgroup.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> work{{0}};
    seen.insert(work.front());
    for (size_t i = 0; i < work.size(); ++i) {
        std::vector<int> base = work[i];
        for (int g = 1; g < static_cast<int>(aut.order()); ++g) {
            if (std::binary_search(base.begin(), base.end(), g)) continue;
            std::vector<int> extended = base;
            extended.push_back(g);
            auto closed = closure(extended, table);
            if (seen.insert(closed).second) work.push_back(std::move(closed));
        }
    }

    SubgroupLattice lat;
    lat.degree = aut.degree;
    lat.subgroups.assign(seen.begin(), seen.end());
    std::sort(lat.subgroups.begin(), lat.subgroups.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    // mu(trivial, H) from the defining recurrence: the mu values over all
    // subgroups of H sum to zero unless H is trivial.
    const size_t s = lat.subgroups.size();
    lat.moebius.assign(s, 0);
    lat.moebius[0] = 1;
    for (size_t h = 1; h < s; ++h) {
        long long acc = 0;
        for (size_t k = 0; k < h; ++k)
            if (std::includes(lat.subgroups[h].begin(), lat.subgroups[h].end(),
                              lat.subgroups[k].begin(), lat.subgroups[k].end()))
                acc += lat.moebius[k];
        lat.moebius[h] = -acc;
    }

    lat.orbit_counts.reserve(s);
    for (const auto& sub : lat.subgroups) {
        std::vector<Permutation> perms;
        perms.reserve(sub.size());
        for (int idx : sub) perms.push_back(aut.elements[idx]);
        lat.orbit_counts.push_back(static_cast<int>(orbits_of(perms, aut.degree).size()));
    }
    return lat;
}

} // namespace symbreak
