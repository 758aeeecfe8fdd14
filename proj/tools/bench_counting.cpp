// Benchmark: serial reference vs OpenMP kernel for the distinguishing-
// coloring count, plus the subgroup-lattice route for scale. Results must
// agree exactly; timings go to stdout as a small table.
//
//   ./symbreak_bench [--threads T] [--repeat R]

#include "symbreak/counting.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/product.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

using namespace symbreak;

namespace {

double seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Case {
    std::string name;
    Graph graph;
    int k;
};

} // namespace

int main(int argc, char** argv) {
    int repeat = 3;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) {
#ifdef _OPENMP
            omp_set_num_threads(std::atoi(argv[++i]));
#else
            ++i;
#endif
        } else if (!std::strcmp(argv[i], "--repeat") && i + 1 < argc) {
            repeat = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--threads T] [--repeat R]\n", argv[0]);
            return 2;
        }
    }

    int threads = 1;
#ifdef _OPENMP
#pragma omp parallel
#pragma omp single
    threads = omp_get_num_threads();
#endif
    std::printf("counting kernels, %d thread(s), best of %d runs\n", threads, repeat);
    std::printf("%-22s %-4s %12s %11s %11s %8s\n", "graph", "k", "N_k", "serial[s]", "openmp[s]",
                "speedup");

    std::vector<Case> cases;
    cases.push_back({"path:3 x path:4", cartesian_product({path_graph(3), path_graph(4)}).graph(), 3});
    cases.push_back({"path:4 x path:4", cartesian_product({path_graph(4), path_graph(4)}).graph(), 2});
    cases.push_back({"path:2 x path:4", cartesian_product({path_graph(2), path_graph(4)}).graph(), 6});
    cases.push_back({"cycle:12", cycle_graph(12), 3});
    cases.push_back({"hypercube:4", hypercube_graph(4), 2});

    for (const auto& c : cases) {
        AutGroup aut = automorphisms(c.graph);
        Int serial_count, parallel_count;
        double serial_best = 1e100, parallel_best = 1e100;
        for (int r = 0; r < repeat; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            serial_count = count_distinguishing_serial(c.graph, aut, c.k);
            serial_best = std::min(serial_best, seconds(t0));

            t0 = std::chrono::steady_clock::now();
            parallel_count = count_distinguishing_parallel(c.graph, aut, c.k);
            parallel_best = std::min(parallel_best, seconds(t0));
        }
        if (serial_count != parallel_count) {
            std::fprintf(stderr, "MISMATCH on %s: serial %s, parallel %s\n", c.name.c_str(),
                         serial_count.get_str().c_str(), parallel_count.get_str().c_str());
            return 1;
        }
        std::printf("%-22s %-4d %12s %11.4f %11.4f %7.2fx\n", c.name.c_str(), c.k,
                    serial_count.get_str().c_str(), serial_best, parallel_best,
                    serial_best / parallel_best);
    }
    return 0;
}
