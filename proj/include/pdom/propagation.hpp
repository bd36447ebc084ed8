#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pdom/graph.hpp"

namespace pdom {

// Step-stratified record of one observation run. Entries are grouped by
// step; step 0 always exists and holds N[S] plus the pre-observed seeds.
// Stored flat so a run on a large tree stays linear in memory.
struct ObservationTrace {
    std::vector<int> step_offsets{0};  // size steps()+1
    std::vector<int> ids;              // ascending within each step

    int steps() const { return static_cast<int>(step_offsets.size()) - 1; }

    std::span<const int> newly(int step) const {
        return {ids.data() + step_offsets[static_cast<std::size_t>(step)],
                ids.data() + step_offsets[static_cast<std::size_t>(step) + 1]};
    }

    int observed_count() const { return static_cast<int>(ids.size()); }
    std::vector<int> observed_ids() const;  // union of all steps, ascending
    VertexSet observed_set(int universe) const;
};

// Observation-process engine bound to one graph. Reusable across seed sets,
// so subset-search solvers avoid per-candidate allocation. Single-use state
// per run; not shareable across threads (make one engine per thread).
class ClosureEngine {
public:
    explicit ClosureEngine(const Graph& g);

    VertexSet closure(const VertexSet& s, const VertexSet& pre);
    ObservationTrace trace(const VertexSet& s, const VertexSet& pre);

    // True iff the run starting from seed set s observes every vertex.
    bool covers_all(const VertexSet& s);
    bool covers_all(std::span<const int> seed_ids);

private:
    int run(std::span<const int> seed_ids, std::span<const int> pre_ids,
            ObservationTrace* trace_out);
    void bump_epoch();
    bool observed(int v) const { return observed_mark_[static_cast<std::size_t>(v)] == epoch_; }

    const Graph* g_;
    std::vector<int> count_;  // unobserved-neighbor counters
    std::vector<std::uint32_t> observed_mark_, queued_mark_, pending_mark_;
    std::vector<int> cur_, next_, newly_, order_;
    std::vector<int> scratch_seed_, scratch_pre_;
    std::uint32_t epoch_ = 0;
};

// P^inf(S) computed from the initial observed set N[S] (plus any pre-observed
// vertices, whose neighbors are NOT granted observation), then the
// one-unobserved-neighbor rule to fixpoint. O(n+m).
VertexSet closure(const Graph& g, const VertexSet& s, const VertexSet& pre);
VertexSet closure(const Graph& g, const VertexSet& s);

bool is_pds(const Graph& g, const VertexSet& s);

ObservationTrace closure_trace(const Graph& g, const VertexSet& s, const VertexSet& pre);
ObservationTrace closure_trace(const Graph& g, const VertexSet& s);

}  // namespace pdom
