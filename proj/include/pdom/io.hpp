#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pdom/graph.hpp"
#include "pdom/tree_dp.hpp"

namespace pdom {

// Edge-list document: optional '#' comment lines, a "n m" header, then m
// lines "u v" with 1-based endpoints. Errors carry the offending line number.
Graph parse_graph(std::string_view text);
std::string render_graph(const Graph& g);

// Tree document: optional '#' comment lines, a "n" header, then n lines
// "id parent weight" with exactly one parent 0 marking the root. The tree is
// brought into tree-ordering form rooted there. The overload reports the
// document id (0-based) behind each ordering position.
WeightedTree parse_tree(std::string_view text);
WeightedTree parse_tree(std::string_view text, std::vector<int>* old_of_new);
std::string render_tree(const WeightedTree& t);

// Whitespace-separated positive per-vertex weights, '#' comments allowed.
std::vector<double> parse_weights(std::string_view text, int expected_count);

// "{1, 2, 3}" with 1-based ids.
std::string format_id_set(const VertexSet& s);

}  // namespace pdom
