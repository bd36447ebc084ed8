// Benchmark: OpenMP-parallel solver kernels against their serial reference
// implementations, plus the tree DP scaling check.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pdom/exact.hpp"
#include "pdom/families.hpp"
#include "pdom/tree_dp.hpp"

using namespace pdom;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

WeightedTree path_tree(int n) {
    std::vector<int> father(static_cast<std::size_t>(n));
    std::vector<double> weights(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        father[static_cast<std::size_t>(i)] = i + 1 < n ? i + 1 : i;
        weights[static_cast<std::size_t>(i)] = 1.0 + (i * 37) % 100;
    }
    return WeightedTree::from_parts(std::move(father), std::move(weights));
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp: %d thread(s)\n\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled\n\n");
#endif

    {
        Graph g = gen_E(4, 3);  // n = 24
        SolverLimits limits;
        PdsResult serial, parallel;
        double ts = time_ms([&] { serial = min_pds_serial(g, limits); }, 3);
        double tp = time_ms([&] { parallel = min_pds(g, limits); }, 3);
        std::printf("min_pds           E_3 (n=24)          serial %8.2f ms   parallel %8.2f ms   %s\n",
                    ts, tp, serial.set == parallel.set ? "results match" : "RESULTS DIFFER");
    }

    {
        Graph g = line_graph(gen_random_cubic(12, 7));  // n = 18
        std::vector<double> weights;
        for (int v = 0; v < g.vertex_count(); ++v) weights.push_back(1.0 + (v * 61) % 100);
        PdsResult serial, parallel;
        double ts = time_ms([&] { serial = min_weight_pds_serial(g, weights); }, 3);
        double tp = time_ms([&] { parallel = min_weight_pds(g, weights); }, 3);
        std::printf("min_weight_pds    lg(cubic 12) (n=18) serial %8.2f ms   parallel %8.2f ms   %s\n",
                    ts, tp, serial.set == parallel.set ? "results match" : "RESULTS DIFFER");
    }

    {
        WeightedTree small = path_tree(100000);
        WeightedTree large = path_tree(1000000);
        double t_small = time_ms([&] { (void)wpdt(small); }, 5);
        double t_large = time_ms([&] { (void)wpdt(large); }, 5);
        std::printf("wpdt              path 1e5 -> 1e6     %8.2f ms -> %8.2f ms   ratio %.2f\n",
                    t_small, t_large, t_large / t_small);
    }
    return 0;
}
