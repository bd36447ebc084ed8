#include "pdom/families.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace pdom {

namespace {

// splitmix64: stable across platforms, unlike the standard distributions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), rejection sampled
    int below(int n) {
        auto un = static_cast<std::uint64_t>(n);
        std::uint64_t threshold = (0 - un) % un;  // 2^64 mod n
        std::uint64_t r = next();
        while (r < threshold) r = next();
        return static_cast<int>(r % un);
    }

    int in_range(int lo, int hi) { return lo + below(hi - lo + 1); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(below(i + 1))]);
    }
};

void add_clique(Graph& g, int base, int size) {
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) g.add_edge(base + i, base + j);
}

}  // namespace

Graph gen_E(int r, int k) {
    if (r < 4 || r % 2 != 0)
        throw InputError("gen_E: r must be an even integer >= 4, got " + std::to_string(r));
    if (k < 0) throw InputError("gen_E: k must be >= 0");
    const int h = r / 2;
    const int chain_base = 2 * r;          // chain copies C_1..C_k
    const int conn_base = 2 * r + k * r;   // connectors w_0..w_k
    Graph g(2 * r + 1 + k * (r + 1));

    add_clique(g, 0, r);  // copy A; vertices 0..h-1 carry the matching
    add_clique(g, r, r);  // copy B; vertices r..r+h-1 carry the matching
    for (int i = 0; i < h; ++i) g.add_edge(i, r + i);
    for (int j = 0; j < k; ++j) add_clique(g, chain_base + j * r, r);

    if (k == 0) {
        // the single bridging vertex u, joined to both unmatched halves
        for (int i = h; i < r; ++i) {
            g.add_edge(conn_base, i);
            g.add_edge(conn_base, r + i);
        }
        return g;
    }
    for (int i = h; i < r; ++i) g.add_edge(conn_base, i);                    // w_0 - A
    for (int i = 0; i < h; ++i) g.add_edge(conn_base, chain_base + i);       // w_0 - C_1
    for (int j = 1; j < k; ++j) {
        int w = conn_base + j;
        for (int i = h; i < r; ++i) g.add_edge(w, chain_base + (j - 1) * r + i);
        for (int i = 0; i < h; ++i) g.add_edge(w, chain_base + j * r + i);
    }
    for (int i = h; i < r; ++i) g.add_edge(conn_base + k, chain_base + (k - 1) * r + i);
    for (int i = h; i < r; ++i) g.add_edge(conn_base + k, r + i);            // w_k - B
    return g;
}

Graph gen_L(int k) {
    if (k < 2) throw InputError("gen_L: k must be >= 2, got " + std::to_string(k));
    Graph g(4 * k);
    for (int i = 0; i < k; ++i) add_clique(g, 4 * i, 4);
    for (int i = 0; i + 1 < k; ++i) {
        g.add_edge(4 * i + 2, 4 * i + 4);
        g.add_edge(4 * i + 3, 4 * i + 5);
    }
    return g;
}

Graph gen_path(int n) {
    if (n < 1) throw InputError("gen_path: n must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw InputError("gen_cycle: n must be >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph gen_star(int leaves) {
    if (leaves < 1) throw InputError("gen_star: need at least one leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph gen_complete(int n) {
    if (n < 1) throw InputError("gen_complete: n must be >= 1");
    Graph g(n);
    add_clique(g, 0, n);
    return g;
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InputError("gen_complete_bipartite: both sides must be >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph gen_standard(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Path: return gen_path(spec.n);
        case Family::Cycle: return gen_cycle(spec.n);
        case Family::Star: return gen_star(spec.n);
        case Family::Complete: return gen_complete(spec.n);
        case Family::CompleteBipartite: return gen_complete_bipartite(spec.n, spec.m);
        default: throw InputError("gen_standard: not a standard deterministic family");
    }
}

Graph gen_random_cubic(int n, std::uint64_t seed, int max_attempts) {
    if (n < 4 || n % 2 != 0)
        throw InputError("gen_random_cubic: n must be an even integer >= 4, got " +
                         std::to_string(n));
    Rng rng(seed);
    std::vector<int> points(static_cast<std::size_t>(3 * n));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (int i = 0; i < 3 * n; ++i) points[static_cast<std::size_t>(i)] = i / 3;
        rng.shuffle(points);

        std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        bool ok = true;
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<std::size_t>(3 * n / 2));
        for (int i = 0; i < 3 * n && ok; i += 2) {
            int u = points[static_cast<std::size_t>(i)];
            int v = points[static_cast<std::size_t>(i + 1)];
            if (u == v) {
                ok = false;  // loop
                break;
            }
            auto idx = static_cast<std::size_t>(std::min(u, v)) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(std::max(u, v));
            if (seen[idx]) {
                ok = false;  // multi-edge
                break;
            }
            seen[idx] = 1;
            pairs.emplace_back(u, v);
        }
        if (!ok) continue;

        Graph g(n);
        for (auto [u, v] : pairs) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
    throw ResourceError("gen_random_cubic: no valid sample after " +
                        std::to_string(max_attempts) + " attempts");
}

WeightedTree gen_random_tree(int n, int lo, int hi, std::uint64_t seed) {
    if (n < 1) throw InputError("gen_random_tree: n must be >= 1");
    if (lo <= 0 || lo > hi)
        throw InputError("gen_random_tree: weight range must satisfy 0 < lo <= hi");
    Rng rng(seed);

    std::vector<std::pair<int, int>> edges;
    if (n >= 2) {
        // Pruefer sequence, decoded smallest-leaf-first.
        std::vector<int> seq(static_cast<std::size_t>(n - 2));
        for (int& x : seq) x = rng.below(n);
        std::vector<int> deg(static_cast<std::size_t>(n), 1);
        for (int x : seq) ++deg[static_cast<std::size_t>(x)];
        std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
        for (int x : seq) {
            int leaf = leaves.top();
            leaves.pop();
            edges.emplace_back(leaf, x);
            if (--deg[static_cast<std::size_t>(x)] == 1) leaves.push(x);
        }
        int u = leaves.top();
        leaves.pop();
        edges.emplace_back(u, leaves.top());
    }

    std::vector<double> old_weights(static_cast<std::size_t>(n));
    for (double& w : old_weights) w = rng.in_range(lo, hi);

    TreeOrdering ord = tree_ordering(n, edges, n - 1);
    std::vector<double> weights(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        weights[static_cast<std::size_t>(ord.new_of_old[static_cast<std::size_t>(v)])] =
            old_weights[static_cast<std::size_t>(v)];
    return WeightedTree::from_parts(std::move(ord.father), std::move(weights));
}

}  // namespace pdom
