#include "pdom/tree_dp.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

namespace pdom {

WeightedTree WeightedTree::from_parts(std::vector<int> father, std::vector<double> weights) {
    const int n = static_cast<int>(father.size());
    if (n < 1) throw InputError("WeightedTree: must have at least one vertex");
    if (weights.size() != father.size())
        throw InputError("WeightedTree: weight count does not match vertex count");
    for (int i = 0; i < n - 1; ++i)
        if (father[static_cast<std::size_t>(i)] <= i || father[static_cast<std::size_t>(i)] >= n)
            throw InputError("WeightedTree: father of v" + std::to_string(i + 1) +
                             " must come later in the ordering");
    if (father[static_cast<std::size_t>(n - 1)] != n - 1)
        throw InputError("WeightedTree: the root must be its own father");
    for (double w : weights)
        if (!(w > 0.0) || !std::isfinite(w))
            throw InputError("WeightedTree: weights must be positive finite numbers");
    WeightedTree t;
    t.father = std::move(father);
    t.weights = std::move(weights);
    return t;
}

Graph WeightedTree::to_graph() const {
    Graph g(vertex_count());
    for (int i = 0; i + 1 < vertex_count(); ++i) g.add_edge(i, father[static_cast<std::size_t>(i)]);
    return g;
}

TreeOrdering tree_ordering(int n, std::span<const std::pair<int, int>> edges, int root) {
    if (n < 1) throw InputError("tree_ordering: need at least one vertex");
    if (root < 0 || root >= n) throw InputError("tree_ordering: root id out of range");
    if (static_cast<int>(edges.size()) != n - 1)
        throw InputError("tree_ordering: a tree on " + std::to_string(n) +
                         " vertices needs exactly " + std::to_string(n - 1) + " edges");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);  // rejects self-loops and duplicates

    // Orient every edge toward the root.
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> bfs{root};
    parent[static_cast<std::size_t>(root)] = root;
    for (std::size_t head = 0; head < bfs.size(); ++head)
        for (int w : g.neighbors(bfs[head]))
            if (parent[static_cast<std::size_t>(w)] < 0) {
                parent[static_cast<std::size_t>(w)] = bfs[head];
                bfs.push_back(w);
            }
    if (static_cast<int>(bfs.size()) != n)
        throw InputError("tree_ordering: edges do not form a connected tree");

    // Smallest-id-first topological numbering of the child relation. Keeps
    // any input that already satisfies the ordering exactly as it is.
    std::vector<int> pending(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        if (v != root) ++pending[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (pending[static_cast<std::size_t>(v)] == 0) ready.push(v);

    TreeOrdering out;
    out.new_of_old.assign(static_cast<std::size_t>(n), -1);
    int next_label = 0;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        out.new_of_old[static_cast<std::size_t>(v)] = next_label++;
        if (v != root) {
            int p = parent[static_cast<std::size_t>(v)];
            if (--pending[static_cast<std::size_t>(p)] == 0) ready.push(p);
        }
    }

    out.father.assign(static_cast<std::size_t>(n), n - 1);
    for (int v = 0; v < n; ++v) {
        int nv = out.new_of_old[static_cast<std::size_t>(v)];
        out.father[static_cast<std::size_t>(nv)] =
            v == root ? nv : out.new_of_old[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return out;
}

namespace {

struct Term {
    std::int8_t parent_slot;
    std::int8_t child_slot;
};

// Candidate (parent-slot, child-slot) compositions per resulting slot, listed
// in tie-break order: lowest child class letter first, then lowest parent
// letter. Derived from the class composition table:
//   a <- a.(a|b|c|d|e)
//   b <- b.(a|b|c), d.(a|b)
//   c <- b.(d|e), c.(a|b|c), e.(a|b)
//   d <- d.c
//   e <- d.(d|e), e.c
constexpr Term kTermsA[] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}};
constexpr Term kTermsB[] = {{1, 0}, {3, 0}, {1, 1}, {3, 1}, {1, 2}};
constexpr Term kTermsC[] = {{2, 0}, {4, 0}, {2, 1}, {4, 1}, {2, 2}, {1, 3}, {1, 4}};
constexpr Term kTermsD[] = {{3, 2}};
constexpr Term kTermsE[] = {{4, 2}, {3, 3}, {3, 4}};

constexpr std::span<const Term> kTerms[5] = {kTermsA, kTermsB, kTermsC, kTermsD, kTermsE};

ClassVector merge_impl(const ClassVector& parent, const ClassVector& child, MergeBack* back) {
    ClassVector out{};
    for (int s = 0; s < 5; ++s) {
        double best = kInfWeight;
        MergeChoice pick;
        for (Term t : kTerms[s]) {
            double v = parent.slot[static_cast<std::size_t>(t.parent_slot)] +
                       child.slot[static_cast<std::size_t>(t.child_slot)];
            if (v < best) {
                best = v;
                pick = MergeChoice{t.parent_slot, t.child_slot};
            }
        }
        out.slot[static_cast<std::size_t>(s)] = best;
        if (back != nullptr) back->choice[static_cast<std::size_t>(s)] = pick;
    }
    return out;
}

std::vector<ClassVector> fold(const WeightedTree& t, std::vector<MergeBack>* backs) {
    const int n = t.vertex_count();
    std::vector<ClassVector> vec;
    vec.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        vec.push_back(ClassVector::initial(t.weights[static_cast<std::size_t>(i)]));
    if (backs != nullptr) backs->assign(static_cast<std::size_t>(n > 0 ? n - 1 : 0), MergeBack{});
    for (int j = 0; j + 1 < n; ++j) {
        int k = t.father[static_cast<std::size_t>(j)];
        auto& parent = vec[static_cast<std::size_t>(k)];
        parent = backs != nullptr
                     ? merge_impl(parent, vec[static_cast<std::size_t>(j)],
                                  &(*backs)[static_cast<std::size_t>(j)])
                     : merge_impl(parent, vec[static_cast<std::size_t>(j)], nullptr);
    }
    return vec;
}

void validate(const WeightedTree& t) {
    // from_parts re-run; callers may hand-build the struct
    const int n = t.vertex_count();
    if (n < 1 || t.weights.size() != t.father.size())
        throw InputError("WeightedTree: malformed");
    for (int i = 0; i < n - 1; ++i)
        if (t.father[static_cast<std::size_t>(i)] <= i || t.father[static_cast<std::size_t>(i)] >= n)
            throw InputError("WeightedTree: invalid tree ordering");
    if (t.father[static_cast<std::size_t>(n - 1)] != n - 1)
        throw InputError("WeightedTree: the root must be its own father");
    for (double w : t.weights)
        if (!(w > 0.0) || !std::isfinite(w)) throw InputError("WeightedTree: non-positive weight");
}

}  // namespace

ClassVector merge_child(const ClassVector& parent, const ClassVector& child) {
    return merge_impl(parent, child, nullptr);
}

ClassVector merge_child(const ClassVector& parent, const ClassVector& child, MergeBack& back) {
    return merge_impl(parent, child, &back);
}

std::array<double, 5> dp_class_minima(const WeightedTree& t) {
    validate(t);
    return fold(t, nullptr).back().slot;
}

PdsResult wpdt(const WeightedTree& t) {
    validate(t);
    const int n = t.vertex_count();
    std::vector<MergeBack> backs;
    std::vector<ClassVector> vec = fold(t, &backs);

    const auto& root_vec = vec[static_cast<std::size_t>(n - 1)];
    int best_slot = 0;  // classes a, b, c are the ones that finish a PDS
    for (int s = 1; s < 3; ++s)
        if (root_vec.slot[static_cast<std::size_t>(s)] < root_vec.slot[static_cast<std::size_t>(best_slot)])
            best_slot = s;
    const double answer = root_vec.slot[static_cast<std::size_t>(best_slot)];

    // Walk the merges backwards. Each vertex ends up demanding a slot of its
    // initial vector, which is finite only for "in the set" (a) and "not in
    // the set" (d).
    std::vector<std::int8_t> demanded(static_cast<std::size_t>(n), -1);
    demanded[static_cast<std::size_t>(n - 1)] = static_cast<std::int8_t>(best_slot);
    for (int j = n - 2; j >= 0; --j) {
        int k = t.father[static_cast<std::size_t>(j)];
        MergeChoice pick =
            backs[static_cast<std::size_t>(j)].choice[static_cast<std::size_t>(demanded[static_cast<std::size_t>(k)])];
        if (pick.parent_slot < 0) throw std::logic_error("wpdt: infeasible slot demanded");
        demanded[static_cast<std::size_t>(k)] = pick.parent_slot;
        demanded[static_cast<std::size_t>(j)] = pick.child_slot;
    }

    VertexSet set(n);
    double reconstructed_weight = 0.0;
    for (int v = 0; v < n; ++v) {
        auto d = demanded[static_cast<std::size_t>(v)];
        if (d == static_cast<std::int8_t>(DpClass::A)) {
            set.set(v);
            reconstructed_weight += t.weights[static_cast<std::size_t>(v)];
        } else if (d != static_cast<std::int8_t>(DpClass::D)) {
            throw std::logic_error("wpdt: initial vector demanded an infinite slot");
        }
    }

    Graph graph = t.to_graph();
    ObservationTrace cert = closure_trace(graph, set);
    if (cert.observed_count() != n)
        throw std::logic_error("wpdt: reconstructed set fails the observation check");
    if (!(std::abs(reconstructed_weight - answer) <=
          1e-9 * std::max(1.0, std::abs(answer))))
        throw std::logic_error("wpdt: reconstructed weight differs from the DP answer");

    PdsResult res;
    res.set = std::move(set);
    res.cardinality = res.set.count();
    res.weight = answer;
    res.optimal = true;
    res.certificate = std::move(cert);
    return res;
}

}  // namespace pdom
