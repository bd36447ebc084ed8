#pragma once

#include <cstdint>

#include "pdom/graph.hpp"
#include "pdom/tree_dp.hpp"

namespace pdom {

enum class Family {
    E,
    L,
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    RandomTree,
    RandomCubic,
};

// Parameters of one generated instance. Same spec + seed always produces the
// same adjacency, bit for bit.
struct FamilySpec {
    Family family = Family::Path;
    int r = 0;          // E: regularity degree
    int k = 0;          // E, L: copy count
    int n = 0;          // order / first partite size / leaf count
    int m = 0;          // second partite size
    int weight_lo = 1;  // random tree weight range
    int weight_hi = 1;
    std::uint64_t seed = 0;
};

// The r-regular claw-free extremal family: two K_r copies joined by an
// r/2-edge matching, a chain of k further K_r copies, and k+1 connector
// vertices of degree r/2 + r/2. |V| = 2r + 1 + k(r+1).
//
// Layout: copy A is 0..r-1 and copy B is r..2r-1 (first r/2 of each are the
// matched vertices), then the k chain copies, then connectors w_0..w_k. For
// k = 0 the single connector is the bridging vertex u.
Graph gen_E(int r, int k);

// k copies of K_4 in a row, consecutive copies joined by two independent
// edges. Copy i occupies ids 4i..4i+3; edges (4i+2, 4i+4) and (4i+3, 4i+5).
Graph gen_L(int k);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_star(int leaves);  // K_{1,leaves}; the center is vertex 0
Graph gen_complete(int n);
Graph gen_complete_bipartite(int a, int b);

// Dispatch for the deterministic standard families (Path, Cycle, Star,
// Complete, CompleteBipartite).
Graph gen_standard(const FamilySpec& spec);

// Connected simple 3-regular graph sampled from the pairing model with
// rejection of loops, multi-edges and disconnected outcomes.
Graph gen_random_cubic(int n, std::uint64_t seed, int max_attempts = 10000);

// Uniform random labeled tree (Pruefer decoding) rooted at the last vertex,
// with integer weights drawn uniformly from [lo, hi].
WeightedTree gen_random_tree(int n, int lo, int hi, std::uint64_t seed);

}  // namespace pdom
