#pragma once

// Shared corpus generators and independent oracles for the test suites. The
// oracles implement the definitions directly (set-formula recursion, full
// subset scans, random rule application) and never call into the engines
// they are used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "pdom/exact.hpp"
#include "pdom/families.hpp"
#include "pdom/graph.hpp"
#include "pdom/propagation.hpp"
#include "pdom/tree_dp.hpp"

namespace pdom::testing {

struct TestRng {
    std::uint64_t state;

    explicit TestRng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline Graph random_graph(int n, int edge_percent, TestRng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < edge_percent) g.add_edge(u, v);
    return g;
}

inline VertexSet random_subset(int n, int max_size, TestRng& rng) {
    VertexSet s(n);
    if (n == 0) return s;
    int size = rng.below(max_size + 1);
    for (int i = 0; i < size; ++i) s.set(rng.below(n));
    return s;
}

// Literal per-step recursion: P^0 = N[S], and P^{i+1} is the union of the
// closed neighborhoods of vertices in P^i with at most one outside neighbor.
inline std::vector<VertexSet> naive_closure_strata(const Graph& g, const VertexSet& s) {
    const int n = g.vertex_count();
    std::vector<VertexSet> strata{g.closed_neighborhood(s)};
    while (true) {
        const VertexSet& p = strata.back();
        VertexSet next(n);
        for (int v = 0; v < n; ++v) {
            if (!p.test(v)) continue;
            int outside = 0;
            for (int w : g.neighbors(v))
                if (!p.test(w)) ++outside;
            if (outside <= 1) {
                next.set(v);
                for (int w : g.neighbors(v)) next.set(w);
            }
        }
        if (next == p) break;
        strata.push_back(next);
    }
    return strata;
}

// Applies single observation rules in random order until none applies.
inline VertexSet random_order_closure(const Graph& g, const VertexSet& s, const VertexSet& pre,
                                      TestRng& rng) {
    const int n = g.vertex_count();
    VertexSet observed = g.closed_neighborhood(s);
    observed |= pre;
    while (true) {
        std::vector<std::pair<int, int>> moves;  // (observer, target)
        for (int v = 0; v < n; ++v) {
            if (!observed.test(v)) continue;
            int target = -1, unobserved = 0;
            for (int w : g.neighbors(v))
                if (!observed.test(w)) {
                    ++unobserved;
                    target = w;
                }
            if (unobserved == 1) moves.emplace_back(v, target);
        }
        if (moves.empty()) return observed;
        observed.set(moves[static_cast<std::size_t>(rng.below(static_cast<int>(moves.size())))].second);
    }
}

// Exact gamma_p by scanning every subset; independent of the
// cardinality-first search order used by the solver.
inline int brute_force_gamma_p(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    ClosureEngine engine(g);
    int best = n;
    std::vector<int> ids;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        ids.clear();
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) ids.push_back(v);
        if (static_cast<int>(ids.size()) >= best) continue;
        if (engine.covers_all(ids)) best = static_cast<int>(ids.size());
    }
    return best;
}

// Per-class minimum weights by enumerating every subset of the tree.
inline std::array<double, 5> enumerate_class_minima(const WeightedTree& t) {
    const int n = t.vertex_count();
    std::array<double, 5> minima;
    minima.fill(kInfWeight);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet d(n);
        double w = 0.0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) {
                d.set(v);
                w += t.weights[static_cast<std::size_t>(v)];
            }
        PairClass cls = classify_pair(t, d);
        if (cls == PairClass::None) continue;
        auto i = static_cast<std::size_t>(cls);
        minima[i] = std::min(minima[i], w);
    }
    return minima;
}

// Greedy packing: take vertices in a seeded random order, keeping each one
// whose distance to everything already chosen is at least 3.
inline VertexSet greedy_packing(const Graph& g, TestRng& rng) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(rng.below(i + 1))]);
    VertexSet chosen(n);
    for (int v : order) {
        auto dist = bfs_distances(g, v);
        bool ok = true;
        chosen.for_each([&](int u) {
            if (dist[static_cast<std::size_t>(u)] >= 0 && dist[static_cast<std::size_t>(u)] < 3)
                ok = false;
        });
        if (ok) chosen.set(v);
    }
    return chosen;
}

inline WeightedTree path_tree(const std::vector<double>& weights) {
    const int n = static_cast<int>(weights.size());
    std::vector<int> father(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) father[static_cast<std::size_t>(i)] = i + 1 < n ? i + 1 : i;
    return WeightedTree::from_parts(std::move(father), weights);
}

inline WeightedTree star_tree_center_root(double center, const std::vector<double>& leaves) {
    const int n = static_cast<int>(leaves.size()) + 1;
    std::vector<int> father(static_cast<std::size_t>(n), n - 1);
    std::vector<double> weights = leaves;
    weights.push_back(center);
    return WeightedTree::from_parts(std::move(father), std::move(weights));
}

// The composition step as literal sequential assignments (line 8 reading the
// line-7 result, line 10 reading line 9). Kept as the differential witness
// against the snapshot semantics of the real merge.
inline ClassVector merge_child_sequential(const ClassVector& parent, const ClassVector& child) {
    auto v = parent.slot;
    const auto& u = child.slot;
    auto min3 = [](double a, double b, double c) { return std::min(a, std::min(b, c)); };
    v[0] = v[0] + std::min({u[0], u[1], u[2], u[3], u[4]});
    v[1] = std::min(v[1] + min3(u[0], u[1], u[2]), v[3] + std::min(u[0], u[1]));
    v[2] = min3(v[1] + std::min(u[3], u[4]), v[2] + min3(u[0], u[1], u[2]),
                v[4] + std::min(u[0], u[1]));
    v[3] = v[3] + u[2];
    v[4] = std::min(v[3] + std::min(u[3], u[4]), v[4] + u[2]);
    return ClassVector{v};
}

inline double wpdt_value_sequential(const WeightedTree& t) {
    const int n = t.vertex_count();
    std::vector<ClassVector> vec;
    for (int i = 0; i < n; ++i)
        vec.push_back(ClassVector::initial(t.weights[static_cast<std::size_t>(i)]));
    for (int j = 0; j + 1 < n; ++j) {
        int k = t.father[static_cast<std::size_t>(j)];
        vec[static_cast<std::size_t>(k)] =
            merge_child_sequential(vec[static_cast<std::size_t>(k)], vec[static_cast<std::size_t>(j)]);
    }
    const auto& root = vec[static_cast<std::size_t>(n - 1)].slot;
    return std::min({root[0], root[1], root[2]});
}

}  // namespace pdom::testing
