#include "core/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "core/digest.hpp"

namespace graphfp {

namespace {

bool verify_mapping(const Graph& a, const Graph& b, const std::vector<int>& map) {
  const int n = a.node_count();
  for (int i = 0; i < n; ++i) {
    if (a.has_loop(i) != b.has_loop(map[static_cast<size_t>(i)])) return false;
    for (int j = i + 1; j < n; ++j)
      if (a.has_edge(i, j) !=
          b.has_edge(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]))
        return false;
  }
  return true;
}

bool extend(const Graph& a, const Graph& b, std::vector<int>& map,
            std::vector<char>& used, int depth) {
  const int n = a.node_count();
  if (depth == n) return verify_mapping(a, b, map);
  for (int cand = 0; cand < n; ++cand) {
    if (used[static_cast<size_t>(cand)]) continue;
    if (a.degree(depth) != b.degree(cand)) continue;
    if (a.has_loop(depth) != b.has_loop(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < depth; ++prev) {
      if (a.has_edge(prev, depth) != b.has_edge(map[static_cast<size_t>(prev)], cand)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[static_cast<size_t>(depth)] = cand;
    used[static_cast<size_t>(cand)] = 1;
    if (extend(a, b, map, used, depth + 1)) return true;
    used[static_cast<size_t>(cand)] = 0;
  }
  return false;
}

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(static_cast<size_t>(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i) d[static_cast<size_t>(i)] = g.degree(i);
  std::sort(d.begin(), d.end());
  return d;
}

// Color-refinement signature used to bucket graphs before the expensive
// isomorphism check; isomorphic graphs always share a signature.
uint64_t refinement_signature(const Graph& g) {
  const int n = g.node_count();
  std::vector<uint64_t> cur(static_cast<size_t>(n)), next(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    cur[static_cast<size_t>(i)] =
        mix64(static_cast<uint64_t>(g.degree(i)), g.has_loop(i) ? 1 : 0);
  std::vector<uint64_t> neigh;
  for (int round = 0; round < n; ++round) {
    for (int i = 0; i < n; ++i) {
      neigh.clear();
      for (int j : g.neighbors(i)) neigh.push_back(cur[static_cast<size_t>(j)]);
      if (g.has_loop(i)) neigh.push_back(cur[static_cast<size_t>(i)]);
      std::sort(neigh.begin(), neigh.end());
      next[static_cast<size_t>(i)] = hash_words64(cur[static_cast<size_t>(i)], neigh);
    }
    cur.swap(next);
  }
  std::sort(cur.begin(), cur.end());
  return hash_words64(static_cast<uint64_t>(g.edge_count()), cur);
}

}  // namespace

IsoResult brute_force_isomorphic(const Graph& a, const Graph& b) {
  IsoResult result;
  if (a.node_count() != b.node_count()) return result;
  if (a.edge_count() != b.edge_count() || a.loop_count() != b.loop_count()) return result;
  if (sorted_degrees(a) != sorted_degrees(b)) return result;
  const int n = a.node_count();
  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  if (extend(a, b, map, used, 0)) {
    result.isomorphic = true;
    result.mapping = std::move(map);
  }
  return result;
}

bool is_tree(const Graph& g) {
  if (g.loop_count() != 0) return false;
  if (g.node_count() == 0) return false;
  return g.edge_count() == g.node_count() - 1 && is_connected(g);
}

namespace {

std::string ahu_encode(const Graph& g, int node, int parent) {
  std::vector<std::string> parts;
  for (int c : g.neighbors(node))
    if (c != parent) parts.push_back(ahu_encode(g, c, node));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

std::vector<int> tree_centers(const Graph& g) {
  const int n = g.node_count();
  if (n == 1) return {0};
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<int> layer;
  for (int i = 0; i < n; ++i) {
    deg[static_cast<size_t>(i)] = g.degree(i);
    if (deg[static_cast<size_t>(i)] <= 1) layer.push_back(i);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int leaf : layer)
      for (int j : g.neighbors(leaf))
        if (--deg[static_cast<size_t>(j)] == 1) next.push_back(j);
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

std::string tree_canonical(const Graph& g) {
  if (!is_tree(g)) throw ArgumentError("graph is not a tree");
  std::string best;
  for (int c : tree_centers(g)) {
    std::string enc = ahu_encode(g, c, -1);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > 7) throw ArgumentError("enumeration supports 1 <= n <= 7");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const int bits = static_cast<int>(slots.size());
  const int half = bits / 2;

  auto build = [&](uint32_t mask) {
    Graph g(n);
    for (int s = 0; s < bits; ++s)
      if (mask & (1u << s)) g.add_edge(slots[static_cast<size_t>(s)].first,
                                       slots[static_cast<size_t>(s)].second);
    return g;
  };

  std::unordered_map<uint64_t, std::vector<size_t>> buckets;
  std::vector<Graph> classes;
  for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
    if (std::popcount(mask) > half) continue;
    Graph g = build(mask);
    uint64_t sig = refinement_signature(g);
    auto& bucket = buckets[sig];
    bool fresh = true;
    for (size_t idx : bucket) {
      if (brute_force_isomorphic(classes[idx], g).isomorphic) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      bucket.push_back(classes.size());
      classes.push_back(std::move(g));
    }
  }

  std::vector<Graph> result;
  result.reserve(classes.size() * 2);
  for (const Graph& g : classes) {
    result.push_back(g);
    // Complements of classes strictly below half the edge count are new
    // classes; at exactly half, the complement is already enumerated.
    if (2 * g.edge_count() < static_cast<long>(bits)) result.push_back(complement(g));
  }
  return result;
}

}  // namespace graphfp
