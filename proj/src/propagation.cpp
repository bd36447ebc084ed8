#include "pdom/propagation.hpp"

#include <algorithm>

namespace pdom {

std::vector<int> ObservationTrace::observed_ids() const {
    std::vector<int> out = ids;
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet ObservationTrace::observed_set(int universe) const {
    VertexSet out(universe);
    for (int v : ids) out.set(v);
    return out;
}

ClosureEngine::ClosureEngine(const Graph& g) : g_(&g) {
    auto n = static_cast<std::size_t>(g.vertex_count());
    count_.assign(n, 0);
    observed_mark_.assign(n, 0);
    queued_mark_.assign(n, 0);
    pending_mark_.assign(n, 0);
}

void ClosureEngine::bump_epoch() {
    if (++epoch_ == 0) {  // wrapped; wipe stale marks once per 2^32 runs
        std::fill(observed_mark_.begin(), observed_mark_.end(), 0u);
        std::fill(queued_mark_.begin(), queued_mark_.end(), 0u);
        std::fill(pending_mark_.begin(), pending_mark_.end(), 0u);
        epoch_ = 1;
    }
}

// One observation run. Step 0 observes N[seed] plus the pre-observed ids;
// every later step applies, simultaneously, the rule "an observed vertex
// with exactly one unobserved neighbor observes it". Counters plus a queue
// of rule-eligible vertices keep the whole run O(n+m).
int ClosureEngine::run(std::span<const int> seed_ids, std::span<const int> pre_ids,
                       ObservationTrace* trace_out) {
    const Graph& g = *g_;
    const int n = g.vertex_count();
    bump_epoch();
    order_.clear();
    cur_.clear();
    next_.clear();
    if (trace_out != nullptr) {
        trace_out->step_offsets.assign(1, 0);
        trace_out->ids.clear();
    }

    auto mark_observed = [&](int v) {
        auto i = static_cast<std::size_t>(v);
        if (observed_mark_[i] == epoch_) return;
        observed_mark_[i] = epoch_;
        order_.push_back(v);
    };

    for (int v : seed_ids) {
        mark_observed(v);
        for (int w : g.neighbors(v)) mark_observed(w);
    }
    for (int p : pre_ids) mark_observed(p);

    for (int v = 0; v < n; ++v) count_[static_cast<std::size_t>(v)] = g.degree(v);
    for (int u : order_)
        for (int w : g.neighbors(u)) --count_[static_cast<std::size_t>(w)];

    std::sort(order_.begin(), order_.end());
    if (trace_out != nullptr) {
        trace_out->ids = order_;
        trace_out->step_offsets.push_back(static_cast<int>(order_.size()));
    }

    auto enqueue = [&](std::vector<int>& q, int v) {
        auto i = static_cast<std::size_t>(v);
        if (queued_mark_[i] == epoch_) return;
        queued_mark_[i] = epoch_;
        q.push_back(v);
    };
    for (int v : order_)
        if (count_[static_cast<std::size_t>(v)] == 1) enqueue(cur_, v);

    int observed_count = static_cast<int>(order_.size());

    while (!cur_.empty()) {
        // Collect this step's observations against frozen counters, so every
        // eligibility test sees the same previous-step state.
        newly_.clear();
        for (int v : cur_) {
            if (count_[static_cast<std::size_t>(v)] != 1) continue;
            for (int w : g.neighbors(v)) {
                auto iw = static_cast<std::size_t>(w);
                if (observed_mark_[iw] == epoch_ || pending_mark_[iw] == epoch_) continue;
                pending_mark_[iw] = epoch_;
                newly_.push_back(w);
                break;
            }
        }
        if (newly_.empty()) break;

        std::sort(newly_.begin(), newly_.end());
        for (int u : newly_) mark_observed(u);
        observed_count += static_cast<int>(newly_.size());
        if (trace_out != nullptr) {
            trace_out->ids.insert(trace_out->ids.end(), newly_.begin(), newly_.end());
            trace_out->step_offsets.push_back(static_cast<int>(trace_out->ids.size()));
        }

        next_.clear();
        for (int u : newly_)
            for (int w : g.neighbors(u)) {
                auto iw = static_cast<std::size_t>(w);
                if (--count_[iw] == 1 && observed_mark_[iw] == epoch_) enqueue(next_, w);
            }
        for (int u : newly_)
            if (count_[static_cast<std::size_t>(u)] == 1) enqueue(next_, u);

        std::swap(cur_, next_);
    }
    return observed_count;
}

namespace {

std::vector<int> ids_of(const VertexSet& s) { return s.ids(); }

void check_universe(const Graph& g, const VertexSet& s, const char* what) {
    if (s.universe() != g.vertex_count())
        throw InputError(std::string(what) + ": set universe does not match the graph");
}

}  // namespace

VertexSet ClosureEngine::closure(const VertexSet& s, const VertexSet& pre) {
    check_universe(*g_, s, "closure");
    check_universe(*g_, pre, "closure");
    scratch_seed_ = ids_of(s);
    scratch_pre_ = ids_of(pre);
    run(scratch_seed_, scratch_pre_, nullptr);
    VertexSet out(g_->vertex_count());
    for (int v : order_) out.set(v);
    return out;
}

ObservationTrace ClosureEngine::trace(const VertexSet& s, const VertexSet& pre) {
    check_universe(*g_, s, "closure_trace");
    check_universe(*g_, pre, "closure_trace");
    scratch_seed_ = ids_of(s);
    scratch_pre_ = ids_of(pre);
    ObservationTrace t;
    run(scratch_seed_, scratch_pre_, &t);
    return t;
}

bool ClosureEngine::covers_all(const VertexSet& s) {
    check_universe(*g_, s, "covers_all");
    scratch_seed_ = ids_of(s);
    return run(scratch_seed_, {}, nullptr) == g_->vertex_count();
}

bool ClosureEngine::covers_all(std::span<const int> seed_ids) {
    return run(seed_ids, {}, nullptr) == g_->vertex_count();
}

VertexSet closure(const Graph& g, const VertexSet& s, const VertexSet& pre) {
    ClosureEngine engine(g);
    return engine.closure(s, pre);
}

VertexSet closure(const Graph& g, const VertexSet& s) {
    return closure(g, s, VertexSet(g.vertex_count()));
}

bool is_pds(const Graph& g, const VertexSet& s) {
    ClosureEngine engine(g);
    return engine.covers_all(s);
}

ObservationTrace closure_trace(const Graph& g, const VertexSet& s, const VertexSet& pre) {
    ClosureEngine engine(g);
    return engine.trace(s, pre);
}

ObservationTrace closure_trace(const Graph& g, const VertexSet& s) {
    return closure_trace(g, s, VertexSet(g.vertex_count()));
}

}  // namespace pdom
