#pragma once

#include <span>

#include "pdom/graph.hpp"
#include "pdom/pds_result.hpp"
#include "pdom/tree_dp.hpp"

namespace pdom {

struct SolverLimits {
    int cardinality_cap = 24;  // min_pds
    int weighted_cap = 20;     // min_weight_pds
};

// Exact gamma_p by subset search in increasing cardinality; the returned set
// is the lexicographically smallest optimum. The default entry point runs
// the search OpenMP-parallel partitioned by subset prefix; the _serial
// variant is the plain reference implementation kept for differential
// testing and benchmarking. Both return identical results.
PdsResult min_pds(const Graph& g, const SolverLimits& limits = {});
PdsResult min_pds_serial(const Graph& g, const SolverLimits& limits = {});

// Exact gamma_p^w by exhaustive subset enumeration; ties broken toward
// smaller cardinality, then lexicographically smallest membership.
PdsResult min_weight_pds(const Graph& g, std::span<const double> weights,
                         const SolverLimits& limits = {});
PdsResult min_weight_pds_serial(const Graph& g, std::span<const double> weights,
                                const SolverLimits& limits = {});

// The five tree-subset classes of the weighted-tree DP, plus None for pairs
// no class covers (those never enter the DP accounting).
enum class PairClass : int { A = 0, B, C, D, E, None };

char pair_class_letter(PairClass c);

// Decides the class of (t, d) by running observation closures on t, on t
// with a pendant attached to the root, on t minus the root, and on t with
// the root pre-observed.
PairClass classify_pair(const WeightedTree& t, const VertexSet& d);

}  // namespace pdom
