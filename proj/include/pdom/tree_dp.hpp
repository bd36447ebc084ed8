#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "pdom/graph.hpp"
#include "pdom/pds_result.hpp"

namespace pdom {

// Infeasible-slot sentinel. Always the real infinity, never a large finite
// number: sums through it must stay infinite.
inline constexpr double kInfWeight = std::numeric_limits<double>::infinity();

// Rooted weighted tree in tree-ordering form: vertices are numbered so each
// non-root precedes its father; the root is the last vertex and is its own
// father.
struct WeightedTree {
    std::vector<int> father;
    std::vector<double> weights;  // positive

    int vertex_count() const { return static_cast<int>(father.size()); }
    int root() const { return vertex_count() - 1; }

    // Validates the ordering invariant (father[i] > i, self-fathered root)
    // and positive weights.
    static WeightedTree from_parts(std::vector<int> father, std::vector<double> weights);

    Graph to_graph() const;
};

struct TreeOrdering {
    std::vector<int> father;      // father map in the new labels
    std::vector<int> new_of_old;  // old id -> new id
};

// Relabels a tree given as an edge list so the root becomes the last vertex
// and every vertex precedes its father. Inputs that already satisfy the
// ordering come back unchanged, which keeps document round-trips exact.
TreeOrdering tree_ordering(int n, std::span<const std::pair<int, int>> edges, int root);

enum class DpClass : std::int8_t { A = 0, B, C, D, E };

// Per-vertex minimum weight of a partial solution in each of the five
// tree-subset classes.
struct ClassVector {
    std::array<double, 5> slot;

    static ClassVector initial(double vertex_weight) {
        return ClassVector{{vertex_weight, kInfWeight, kInfWeight, 0.0, kInfWeight}};
    }

    double operator[](DpClass c) const { return slot[static_cast<std::size_t>(c)]; }
};

// Argmin provenance of one child-into-father merge, per resulting slot.
// parent_slot/child_slot are DpClass values; -1 marks an infeasible slot.
struct MergeChoice {
    std::int8_t parent_slot = -1;
    std::int8_t child_slot = -1;
};
struct MergeBack {
    std::array<MergeChoice, 5> choice;
};

// One composition step: folds a finished child vector into its father's.
// All five new slots are computed from a snapshot of the old parent vector.
// Ties go to the lowest child class letter, then the lowest parent letter.
ClassVector merge_child(const ClassVector& parent, const ClassVector& child);
ClassVector merge_child(const ClassVector& parent, const ClassVector& child, MergeBack& back);

// Final root vector after folding every child, before the answer min.
std::array<double, 5> dp_class_minima(const WeightedTree& t);

// Minimum-weight power dominating set of a weighted tree in O(n) time and
// memory, with the optimal set reconstructed from merge backpointers.
PdsResult wpdt(const WeightedTree& t);

}  // namespace pdom
