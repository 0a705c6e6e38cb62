#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace graphfp {

// Common constructions.
Graph path_graph(int n);
Graph path_with_loop(int n);  // loop on the last node
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph prism_graph(int k);      // two k-cycles joined by rungs
Graph antiprism_graph(int k);  // two k-cycles, cross-linked
Graph wheel_graph(int k);      // k-cycle plus a hub (node k)
Graph shrikhande_graph();
Graph rook_graph_4x4();
Graph figure1_graph();  // the 11-node example; marked pair below
constexpr int kFigure1MarkedA = 0;  // v1
constexpr int kFigure1MarkedB = 4;  // v5

// The bundled 35-node strongly regular graph with its two marked nodes.
struct AppendixSrg {
  Graph graph;
  int u, v;
};
const AppendixSrg& appendix_srg();

// A 3-connected planar fixture together with three nodes on a common face.
struct PolyhedronFixture {
  std::string name;
  Graph graph;
  std::array<int, 3> face_triple;
};
const std::vector<PolyhedronFixture>& polyhedron_fixtures();

// Deterministic catalog of every named fixture.
const std::map<std::string, Graph>& fixtures();

}  // namespace graphfp
