#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace graphfp {

// Backtracking isomorphism test with degree/loop pruning. When a mapping is
// found it is verified edge-by-edge before being returned. Intended as an
// independent oracle for small graphs.
struct IsoResult {
  bool isomorphic = false;
  std::vector<int> mapping;  // node i of `a` maps to mapping[i] in `b`
};
IsoResult brute_force_isomorphic(const Graph& a, const Graph& b);

bool is_tree(const Graph& g);

// AHU canonical encoding, rooted at the tree center (minimum over the at
// most two centers). Equal strings iff the trees are isomorphic.
std::string tree_canonical(const Graph& g);

// One representative per isomorphism class of simple graphs on n nodes
// (n <= 7). Enumerates edge masks up to half the total edge count and adds
// complements, so only half the mask space is scanned.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace graphfp
