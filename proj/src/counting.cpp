#include "symbreak/counting.hpp"

#include "symbreak/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symbreak {

namespace {

// Non-identity elements as flat image arrays, for the hot loop.
std::vector<std::vector<int>> moving_elements(const AutGroup& aut) {
    std::vector<std::vector<int>> out;
    out.reserve(aut.order());
    for (const auto& p : aut.elements)
        if (!p.is_identity()) out.push_back(p.images());
    return out;
}

std::uint64_t resolve_budget(std::uint64_t budget) {
    return budget ? budget : default_enumeration_budget();
}

// k^n if it fits the budget, else capacity_error.
std::uint64_t coloring_space(int n, int k, std::uint64_t budget) {
    budget = std::min<std::uint64_t>(budget, std::uint64_t{1} << 62);
    Int total = ipow(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n));
    if (total > Int(static_cast<unsigned long>(budget)))
        throw capacity_error("enumeration of " + total.get_str() + " colorings exceeds budget of " +
                             std::to_string(budget) + " (raise SYMBREAK_BUDGET to override)");
    return total.get_ui();
}

inline bool has_trivial_stabilizer(const int* colors, int n,
                                   const std::vector<std::vector<int>>& perms) {
    for (const auto& im : perms) {
        bool preserved = true;
        for (int v = 0; v < n; ++v)
            if (colors[v] != colors[im[v]]) {
                preserved = false;
                break;
            }
        if (preserved) return false;
    }
    return true;
}

inline void decode_coloring(std::uint64_t index, int n, int k, int* colors) {
    for (int v = n - 1; v >= 0; --v) {
        colors[v] = static_cast<int>(index % k);
        index /= k;
    }
}

} // namespace

bool is_distinguishing(const Graph& g, const AutGroup& aut, const Coloring& c) {
    if (c.size() != g.vertex_count())
        throw input_error("is_distinguishing: coloring length " + std::to_string(c.size()) +
                          " does not match vertex count " + std::to_string(g.vertex_count()));
    for (const auto& alpha : aut.elements) {
        if (alpha.is_identity()) continue;
        bool preserved = true;
        for (int v = 0; v < g.vertex_count() && preserved; ++v)
            preserved = c.colors[v] == c.colors[alpha(v)];
        if (preserved) return false;
    }
    return true;
}

std::uint64_t default_enumeration_budget() {
    if (const char* env = std::getenv("SYMBREAK_BUDGET")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
        throw input_error("SYMBREAK_BUDGET must be a positive integer");
    }
    return 20'000'000;
}

Int count_distinguishing_serial(const Graph& g, const AutGroup& aut, int k, std::uint64_t budget) {
    if (k < 1) throw input_error("count: need k >= 1");
    const int n = g.vertex_count();
    const std::uint64_t total = coloring_space(n, k, resolve_budget(budget));
    const auto perms = moving_elements(aut);

    std::uint64_t count = 0;
    std::vector<int> colors(std::max(n, 1));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        decode_coloring(idx, n, k, colors.data());
        if (has_trivial_stabilizer(colors.data(), n, perms)) ++count;
    }
    return Int(static_cast<unsigned long>(count));
}

Int count_distinguishing_parallel(const Graph& g, const AutGroup& aut, int k, std::uint64_t budget) {
    if (k < 1) throw input_error("count: need k >= 1");
    const int n = g.vertex_count();
    const std::uint64_t total = coloring_space(n, k, resolve_budget(budget));
    const auto perms = moving_elements(aut);

    std::uint64_t count = 0;
    const long long last = static_cast<long long>(total);
#ifdef _OPENMP
#pragma omp parallel reduction(+ : count)
    {
        std::vector<int> colors(std::max(n, 1));
#pragma omp for schedule(static)
        for (long long idx = 0; idx < last; ++idx) {
            decode_coloring(static_cast<std::uint64_t>(idx), n, k, colors.data());
            if (has_trivial_stabilizer(colors.data(), n, perms)) ++count;
        }
    }
#else
    std::vector<int> colors(std::max(n, 1));
    for (long long idx = 0; idx < last; ++idx) {
        decode_coloring(static_cast<std::uint64_t>(idx), n, k, colors.data());
        if (has_trivial_stabilizer(colors.data(), n, perms)) ++count;
    }
#endif
    return Int(static_cast<unsigned long>(count));
}

Int count_distinguishing_brute(const Graph& g, const AutGroup& aut, int k, std::uint64_t budget) {
    return count_distinguishing_parallel(g, aut, k, budget);
}

Int count_distinguishing_moebius(const SubgroupLattice& lattice, int k) {
    if (k < 1) throw input_error("count: need k >= 1");
    Int total = 0;
    for (size_t i = 0; i < lattice.size(); ++i)
        total += Int(static_cast<long>(lattice.moebius[i])) *
                 ipow(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(lattice.orbit_counts[i]));
    return total;
}

} // namespace symbreak
