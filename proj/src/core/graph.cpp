#include "core/graph.hpp"

#include <algorithm>
#include <numeric>

namespace graphfp {

void Graph::check_node(int i) const {
  if (i < 0 || i >= n_) throw ArgumentError("node id out of range");
}

bool Graph::has_edge(int i, int j) const {
  check_node(i);
  check_node(j);
  if (i == j) return loop_[i];
  return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

void Graph::add_edge(int i, int j) {
  check_node(i);
  check_node(j);
  if (i == j) {
    if (loop_[i]) throw ArgumentError("duplicate loop");
    loop_[i] = true;
    return;
  }
  if (has_edge(i, j)) throw ArgumentError("duplicate edge");
  adj_[i].insert(std::upper_bound(adj_[i].begin(), adj_[i].end(), j), j);
  adj_[j].insert(std::upper_bound(adj_[j].begin(), adj_[j].end(), i), i);
}

void Graph::set_loop(int i, bool v) {
  check_node(i);
  loop_[i] = v;
}

long Graph::edge_count() const {
  long twice = 0;
  for (const auto& a : adj_) twice += static_cast<long>(a.size());
  return twice / 2 + loop_count();
}

long Graph::loop_count() const {
  return std::count(loop_.begin(), loop_.end(), true);
}

Graph complement(const Graph& g) {
  const int n = g.node_count();
  Graph c(n);
  for (int i = 0; i < n; ++i) {
    if (g.has_loop(i)) c.set_loop(i);
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) c.add_edge(i, j);
  }
  return c;
}

std::pair<Graph, Graph> glue_pair(const Graph& g, int u, int v) {
  const int n = g.node_count();
  if (u == v) throw ArgumentError("glue_pair: u and v must differ");
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw ArgumentError("glue_pair: node out of range");

  // Copy-2 node x maps to: u or v when identified, else a shifted fresh id.
  auto build = [&](int image_of_u2, int image_of_v2) {
    std::vector<int> map2(n);
    int next = n;
    for (int x = 0; x < n; ++x) {
      if (x == u)
        map2[x] = image_of_u2;
      else if (x == v)
        map2[x] = image_of_v2;
      else
        map2[x] = next++;
    }
    Graph out(2 * n - 2);
    for (int i = 0; i < n; ++i) {
      if (g.has_loop(i)) out.set_loop(i);
      for (int j : g.neighbors(i))
        if (i < j) out.add_edge(i, j);
    }
    for (int i = 0; i < n; ++i) {
      if (g.has_loop(i)) out.set_loop(map2[i]);
      for (int j : g.neighbors(i))
        if (i < j && !out.has_edge(map2[i], map2[j]))
          out.add_edge(map2[i], map2[j]);
    }
    return out;
  };
  return {build(u, v), build(v, u)};
}

std::vector<int> distances(const Graph& g, int i) {
  const int n = g.node_count();
  std::vector<int> dist(n, kUnreachable);
  std::vector<int> queue;
  dist[i] = 0;
  queue.push_back(i);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::optional<int> diameter(const Graph& g) {
  if (g.node_count() == 0) return std::nullopt;
  int best = 0;
  for (int i = 0; i < g.node_count(); ++i) {
    for (int d : distances(g, i)) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

namespace {

int component_count_excluding(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.node_count();
  std::vector<bool> seen(n, false);
  int comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    ++comps;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u))
        if (!removed[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

}  // namespace

int component_count(const Graph& g) {
  std::vector<bool> removed(g.node_count(), false);
  return component_count_excluding(g, removed);
}

std::vector<std::vector<int>> find_separators(const Graph& g, int k) {
  const int n = g.node_count();
  const int base = component_count(g);
  std::vector<std::vector<int>> result;
  std::vector<int> subset;
  std::vector<bool> removed(n, false);

  auto recurse = [&](auto&& self, int start, int remaining) -> void {
    if (!subset.empty() &&
        component_count_excluding(g, removed) > base)
      result.push_back(subset);
    if (remaining == 0) return;
    for (int x = start; x < n; ++x) {
      subset.push_back(x);
      removed[x] = true;
      self(self, x + 1, remaining - 1);
      removed[x] = false;
      subset.pop_back();
    }
  };
  recurse(recurse, 0, std::min(k, n));
  return result;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_k_connected(const Graph& g, int k) {
  if (g.node_count() <= k) return false;
  if (!is_connected(g)) return false;
  if (k <= 1) return true;
  return find_separators(g, k - 1).empty();
}

std::optional<SrgParameters> srg_parameters(const Graph& g) {
  const int n = g.node_count();
  if (n < 2 || g.loop_count() > 0) return std::nullopt;
  const int d = g.degree(0);
  for (int i = 1; i < n; ++i)
    if (g.degree(i) != d) return std::nullopt;

  std::optional<int> lambda, mu;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int common = 0;
      const auto &a = g.neighbors(i), &b = g.neighbors(j);
      size_t p = 0, q = 0;
      while (p < a.size() && q < b.size()) {
        if (a[p] == b[q]) ++common, ++p, ++q;
        else if (a[p] < b[q]) ++p;
        else ++q;
      }
      auto& slot = g.has_edge(i, j) ? lambda : mu;
      if (!slot) slot = common;
      else if (*slot != common) return std::nullopt;
    }
  }
  // Complete graphs have no non-adjacent pair; they are conventionally not
  // strongly regular here (mu undefined).
  if (!lambda || !mu) return std::nullopt;
  return SrgParameters{n, d, *lambda, *mu};
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  const int n = g.node_count();
  if (static_cast<int>(perm.size()) != n)
    throw ArgumentError("permutation size mismatch");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<size_t>(p)])
      throw ArgumentError("not a permutation");
    seen[static_cast<size_t>(p)] = 1;
  }
  Graph out(n);
  for (int i = 0; i < n; ++i) {
    if (g.has_loop(i)) out.set_loop(perm[i]);
    for (int j : g.neighbors(i))
      if (i < j) out.add_edge(perm[i], perm[j]);
  }
  return out;
}

}  // namespace graphfp
