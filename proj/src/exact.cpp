#include "pdom/exact.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdom {

namespace {

PdsResult empty_graph_result() {
    PdsResult res;
    res.set = VertexSet(0);
    res.cardinality = 0;
    res.weight = 0.0;
    res.optimal = true;
    return res;  // the empty set power-dominates the empty graph
}

PdsResult finish(const Graph& g, VertexSet set, double weight) {
    PdsResult res;
    res.certificate = closure_trace(g, set);
    if (res.certificate.observed_count() != g.vertex_count())
        throw std::logic_error("exact solver: winning set fails the observation check");
    res.cardinality = set.count();
    res.set = std::move(set);
    res.weight = weight;
    res.optimal = true;
    return res;
}

VertexSet set_of_ids(int n, std::span<const int> ids) {
    VertexSet s(n);
    for (int v : ids) s.set(v);
    return s;
}

void check_cardinality_cap(const Graph& g, const SolverLimits& limits) {
    if (g.vertex_count() > limits.cardinality_cap)
        throw ResourceError("min_pds: vertex count " + std::to_string(g.vertex_count()) +
                            " exceeds cap " + std::to_string(limits.cardinality_cap));
}

// Lexicographic successor of an ascending c-combination over {lo..n-1} with
// positions [from..c-1] free. Returns false when exhausted.
bool next_combination(std::vector<int>& combo, int n, int from) {
    int c = static_cast<int>(combo.size());
    for (int i = c - 1; i >= from; --i) {
        if (combo[static_cast<std::size_t>(i)] < n - c + i) {
            ++combo[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < c; ++j)
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// First power dominating set, in lexicographic order, among the
// c-combinations that start with the fixed element `first`.
bool first_hit_with_prefix(ClosureEngine& engine, int n, int c, int first,
                           std::vector<int>& combo) {
    combo.resize(static_cast<std::size_t>(c));
    combo[0] = first;
    for (int i = 1; i < c; ++i) combo[static_cast<std::size_t>(i)] = first + i;
    if (combo.back() >= n) return false;
    do {
        if (engine.covers_all(combo)) return true;
    } while (next_combination(combo, n, 1));
    return false;
}

}  // namespace

PdsResult min_pds_serial(const Graph& g, const SolverLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0) return empty_graph_result();
    check_cardinality_cap(g, limits);
    ClosureEngine engine(g);
    std::vector<int> combo;
    for (int c = 1; c <= n; ++c) {
        combo.resize(static_cast<std::size_t>(c));
        std::iota(combo.begin(), combo.end(), 0);
        do {
            if (engine.covers_all(combo))
                return finish(g, set_of_ids(n, combo), static_cast<double>(c));
        } while (next_combination(combo, n, 0));
    }
    throw std::logic_error("min_pds: the full vertex set must power-dominate");
}

PdsResult min_pds(const Graph& g, const SolverLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0) return empty_graph_result();
    check_cardinality_cap(g, limits);
    for (int c = 1; c <= n; ++c) {
        std::vector<std::vector<int>> hit(static_cast<std::size_t>(n - c + 1));
        std::atomic<int> best_first{n};
#pragma omp parallel for schedule(dynamic, 1)
        for (int f = 0; f <= n - c; ++f) {
            // Blocks with a larger leading element than a known hit cannot
            // win the lexicographic tie-break; skip them.
            if (f > best_first.load(std::memory_order_relaxed)) continue;
            ClosureEngine engine(g);
            std::vector<int> combo;
            if (first_hit_with_prefix(engine, n, c, f, combo)) {
                hit[static_cast<std::size_t>(f)] = std::move(combo);
                int cur = best_first.load(std::memory_order_relaxed);
                while (f < cur && !best_first.compare_exchange_weak(cur, f)) {
                }
            }
        }
        for (const auto& combo : hit)
            if (!combo.empty()) return finish(g, set_of_ids(n, combo), static_cast<double>(c));
    }
    throw std::logic_error("min_pds: the full vertex set must power-dominate");
}

namespace {

void check_weights(const Graph& g, std::span<const double> weights, const SolverLimits& limits) {
    if (g.vertex_count() > limits.weighted_cap)
        throw ResourceError("min_weight_pds: vertex count " + std::to_string(g.vertex_count()) +
                            " exceeds cap " + std::to_string(limits.weighted_cap));
    if (static_cast<int>(weights.size()) != g.vertex_count())
        throw InputError("min_weight_pds: weight count does not match vertex count");
    for (double w : weights)
        if (!(w > 0.0) || !std::isfinite(w))
            throw InputError("min_weight_pds: weights must be positive finite numbers");
}

struct WeightedCandidate {
    double weight = 0.0;
    int cardinality = 0;
    std::uint32_t mask = 0;
    bool valid = false;
};

VertexSet set_of_mask(int n, std::uint32_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.set(v);
    return s;
}

// Strict (weight, cardinality, member-lexicographic) order.
bool beats(const WeightedCandidate& a, const WeightedCandidate& b, int n) {
    if (!a.valid || !b.valid) return a.valid;
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.cardinality != b.cardinality) return a.cardinality < b.cardinality;
    return VertexSet::compare_members(set_of_mask(n, a.mask), set_of_mask(n, b.mask)) < 0;
}

// Scans masks in [lo, hi). Keeps the best candidate under `beats`; skips the
// observation run when the candidate already loses on weight alone.
void scan_masks(const Graph& g, std::span<const double> weights, std::uint32_t lo,
                std::uint32_t hi, WeightedCandidate& best) {
    const int n = g.vertex_count();
    ClosureEngine engine(g);
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(n));
    for (std::uint32_t mask = lo; mask < hi; ++mask) {
        if (mask == 0) continue;
        double w = 0.0;
        ids.clear();
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) {
                w += weights[static_cast<std::size_t>(v)];
                ids.push_back(v);
            }
        if (best.valid && w > best.weight) continue;
        WeightedCandidate cand{w, static_cast<int>(ids.size()), mask, true};
        if (best.valid && !beats(cand, best, n)) continue;
        if (engine.covers_all(ids)) best = cand;
    }
}

PdsResult finish_weighted(const Graph& g, std::span<const double> weights,
                          const WeightedCandidate& best) {
    if (!best.valid) throw std::logic_error("min_weight_pds: no candidate found");
    VertexSet set = set_of_mask(g.vertex_count(), best.mask);
    double w = 0.0;
    set.for_each([&](int v) { w += weights[static_cast<std::size_t>(v)]; });
    return finish(g, std::move(set), w);
}

}  // namespace

PdsResult min_weight_pds_serial(const Graph& g, std::span<const double> weights,
                                const SolverLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0) return empty_graph_result();
    check_weights(g, weights, limits);
    WeightedCandidate best;
    scan_masks(g, weights, 1, std::uint32_t{1} << n, best);
    return finish_weighted(g, weights, best);
}

PdsResult min_weight_pds(const Graph& g, std::span<const double> weights,
                         const SolverLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0) return empty_graph_result();
    check_weights(g, weights, limits);

    const std::uint32_t total = std::uint32_t{1} << n;
    const int chunks = total > 4096 ? 64 : 1;
    const std::uint32_t chunk_size = (total + chunks - 1) / static_cast<std::uint32_t>(chunks);
    std::vector<WeightedCandidate> local(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < chunks; ++i) {
        std::uint32_t lo = static_cast<std::uint32_t>(i) * chunk_size;
        std::uint32_t hi = std::min(total, lo + chunk_size);
        scan_masks(g, weights, std::max<std::uint32_t>(lo, 1), hi,
                   local[static_cast<std::size_t>(i)]);
    }
    WeightedCandidate best;
    for (const auto& cand : local)
        if (cand.valid && (!best.valid || beats(cand, best, n))) best = cand;
    return finish_weighted(g, weights, best);
}

char pair_class_letter(PairClass c) {
    switch (c) {
        case PairClass::A: return 'a';
        case PairClass::B: return 'b';
        case PairClass::C: return 'c';
        case PairClass::D: return 'd';
        case PairClass::E: return 'e';
        default: return '-';
    }
}

PairClass classify_pair(const WeightedTree& t, const VertexSet& d) {
    const int n = t.vertex_count();
    if (d.universe() != n) throw InputError("classify_pair: set universe mismatch");
    const int root = t.root();
    Graph tg = t.to_graph();

    const bool pds_t = is_pds(tg, d);
    if (d.test(root)) return pds_t ? PairClass::A : PairClass::None;

    // t with a pendant attached to the root
    Graph tbar(n + 1);
    for (int i = 0; i + 1 < n; ++i) tbar.add_edge(i, t.father[static_cast<std::size_t>(i)]);
    tbar.add_edge(root, n);
    if (is_pds(tbar, d.resized(n + 1))) return PairClass::B;
    if (pds_t) return PairClass::C;

    // t minus the root (the root is the last index, so ids carry over)
    Graph tminus(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        int f = t.father[static_cast<std::size_t>(i)];
        if (f != root) tminus.add_edge(i, f);
    }
    if (is_pds(tminus, d.resized(n - 1))) return PairClass::D;

    VertexSet pre(n);
    pre.set(root);
    if (closure(tg, d, pre).count() == n) return PairClass::E;
    return PairClass::None;
}

}  // namespace pdom
