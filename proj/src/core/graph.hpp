#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graphfp {

// Undirected simple graph with optional loops. A loop on node i is kept as a
// per-node flag; it contributes i once to its own neighbor multiset and 1 to
// the diagonal of the adjacency matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n), loop_(n, false) {}

  int node_count() const { return n_; }
  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  bool has_loop(int i) const { return loop_[i]; }
  int degree(int i) const {
    return static_cast<int>(adj_[i].size()) + (loop_[i] ? 1 : 0);
  }

  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);  // i == j adds a loop; duplicates rejected
  void set_loop(int i, bool v = true);

  long edge_count() const;  // loops counted once
  long loop_count() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_node(int i) const;

  int n_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted, no self entries
  std::vector<bool> loop_;
};

struct NamedGraph {
  Graph graph;
  std::string id;
  std::string source;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Graph complement(const Graph& g);

// The two identifications of two disjoint copies of g at nodes u, v:
// first = straight (u'=u'', v'=v''), second = crossed (u'=v'', v'=u'').
// Copy-1 nodes keep their ids, copy-2 nodes shift by n, the merged nodes
// take the copy-1 ids of u and v. Coincident edges collapse.
std::pair<Graph, Graph> glue_pair(const Graph& g, int u, int v);

constexpr int kUnreachable = -1;

std::vector<int> distances(const Graph& g, int i);

// diameter; nullopt means infinite (disconnected or empty).
std::optional<int> diameter(const Graph& g);

int component_count(const Graph& g);

// All node subsets X, |X| <= k, whose removal strictly increases the number
// of connected components. Exhaustive; meant for small k.
std::vector<std::vector<int>> find_separators(const Graph& g, int k);

bool is_connected(const Graph& g);
bool is_k_connected(const Graph& g, int k);

struct SrgParameters {
  int n, d, lambda, mu;
  bool operator==(const SrgParameters&) const = default;
};
std::optional<SrgParameters> srg_parameters(const Graph& g);

// Relabel nodes: node i of g becomes perm[i] in the result.
Graph permuted(const Graph& g, const std::vector<int>& perm);

}  // namespace graphfp
