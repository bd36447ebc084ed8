#include "pdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace pdom {

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    if (universe_ != o.universe_) throw InputError("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    if (universe_ != o.universe_) throw InputError("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    if (universe_ != o.universe_) throw InputError("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
}

VertexSet VertexSet::resized(int new_universe) const {
    VertexSet out(new_universe);
    for_each([&](int v) { out.set(v); });  // throws if a member does not fit
    return out;
}

std::vector<int> VertexSet::ids() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

int VertexSet::compare_members(const VertexSet& a, const VertexSet& b) {
    std::vector<int> ia = a.ids();
    std::vector<int> ib = b.ids();
    if (std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end())) return -1;
    if (std::lexicographical_compare(ib.begin(), ib.end(), ia.begin(), ia.end())) return 1;
    return 0;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("Graph: self-loop at vertex " + std::to_string(u));
    auto insert_sorted = [](std::vector<int>& list, int x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it != list.end() && *it == x) return false;
        list.insert(it, x);
        return true;
    };
    if (!insert_sorted(adj_[static_cast<std::size_t>(u)], v))
        throw InputError("Graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
    if (s.universe() != vertex_count())
        throw InputError("closed_neighborhood: set universe mismatch");
    VertexSet out(vertex_count());
    s.for_each([&](int v) {
        out.set(v);
        for (int w : neighbors(v)) out.set(w);
    });
    return out;
}

bool is_regular(const Graph& g, int k) {
    if (k < 0) throw InputError("is_regular: negative degree");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return false;
    return true;  // vacuously true on the empty graph
}

bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto ns = g.neighbors(v);
        int d = static_cast<int>(ns.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.has_edge(ns[i], ns[j])) continue;
                for (int k = j + 1; k < d; ++k)
                    if (!g.has_edge(ns[i], ns[k]) && !g.has_edge(ns[j], ns[k])) return false;
            }
    }
    return true;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    if (g.vertex_count() == 0) return dist;
    dist[static_cast<std::size_t>(source)] = 0;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

bool is_packing(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count()) throw InputError("is_packing: set universe mismatch");
    // Depth-2 BFS from each member; any other member within distance 2 breaks it.
    bool ok = true;
    s.for_each([&](int src) {
        if (!ok) return;
        std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
        dist[static_cast<std::size_t>(src)] = 0;
        std::vector<int> queue{src};
        for (std::size_t head = 0; head < queue.size() && ok; ++head) {
            int u = queue[head];
            int du = dist[static_cast<std::size_t>(u)];
            if (du >= 2) continue;
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] >= 0) continue;
                dist[static_cast<std::size_t>(w)] = du + 1;
                if (w != src && s.test(w)) {
                    ok = false;
                    break;
                }
                queue.push_back(w);
            }
        }
    });
    return ok;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw InputError("distance: vertex id out of range");
    if (u == v) return 0;
    auto dist = bfs_distances(g, u);
    int d = dist[static_cast<std::size_t>(v)];
    if (d < 0) return std::nullopt;
    return d;
}

Graph line_graph(const Graph& g) {
    auto edge_list = g.edges();
    Graph lg(static_cast<int>(edge_list.size()));
    // Edges incident to a common vertex become pairwise adjacent; in a simple
    // graph two edges share at most one endpoint, so no pair repeats.
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t e = 0; e < edge_list.size(); ++e) {
        incident[static_cast<std::size_t>(edge_list[e].first)].push_back(static_cast<int>(e));
        incident[static_cast<std::size_t>(edge_list[e].second)].push_back(static_cast<int>(e));
    }
    for (const auto& ids : incident)
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j) lg.add_edge(ids[i], ids[j]);
    return lg;
}

}  // namespace pdom
