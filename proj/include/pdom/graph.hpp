#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pdom/errors.hpp"

namespace pdom {

// Fixed-universe bitset over vertex ids 0..universe-1.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) {
        if (universe < 0) throw InputError("VertexSet: negative universe");
        universe_ = universe;
        words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
    }

    static VertexSet of(int universe, std::initializer_list<int> ids) {
        VertexSet s(universe);
        for (int v : ids) s.set(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    int universe() const { return universe_; }

    int count() const;
    bool empty() const { return count() == 0; }

    bool test(int v) const {
        check(v);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() { words_.assign(words_.size(), 0); }

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    bool is_subset_of(const VertexSet& o) const;

    // Same membership carried into a universe of different size; members must fit.
    VertexSet resized(int new_universe) const;

    std::vector<int> ids() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                int b = std::countr_zero(bits);
                f(static_cast<int>(w * 64) + b);
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    // Lexicographic comparison of the ascending member sequences; returns
    // <0, 0, >0. Used for deterministic tie-breaking in the solvers.
    static int compare_members(const VertexSet& a, const VertexSet& b);

private:
    void check(int v) const {
        if (v < 0 || v >= universe_) throw InputError("VertexSet: vertex id out of range");
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Undirected simple graph with sorted adjacency lists. Vertex ids are dense
// 0-based integers internally; the I/O layer maps 1-based labels.
class Graph {
public:
    Graph() = default;

    explicit Graph(int vertex_count) {
        if (vertex_count < 0) throw InputError("Graph: negative vertex count");
        adj_.resize(static_cast<std::size_t>(vertex_count));
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    // Inserts u-v keeping both lists sorted; rejects self-loops, duplicate
    // edges and out-of-range ids.
    void add_edge(int u, int v);

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, ascending lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet closed_neighborhood(const VertexSet& s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count()) throw InputError("Graph: vertex id out of range");
    }

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

bool is_regular(const Graph& g, int k);

// Centered-triple scan: true iff no vertex has three pairwise non-adjacent
// neighbors (any induced K_{1,3} is centered at some vertex).
bool is_claw_free(const Graph& g);

// True iff all members of s are pairwise at distance >= 3.
bool is_packing(const Graph& g, const VertexSet& s);

// One BFS from vertex 0; the empty graph counts as connected.
bool is_connected(const Graph& g);

// BFS shortest-path edge count; nullopt for disconnected pairs.
std::optional<int> distance(const Graph& g, int u, int v);

// All BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

// Vertices are the edges of g in ascending (u, v) order; two of them are
// adjacent iff the underlying edges share an endpoint.
Graph line_graph(const Graph& g);

}  // namespace pdom
