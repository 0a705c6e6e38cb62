#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/digest.hpp"
#include "core/graph.hpp"

namespace graphfp {

// Ordered tuple of distinct anchor nodes; node i_q (1-based q) seeds value q.
using AnchorTuple = std::vector<int>;

using LabelId = uint32_t;

enum class LabelMode { exact, hashed };

// Canonical small-integer encoding of nested labels. Ids 0..k are reserved
// for the seed values; fresh ids are issued in first-appearance order. One
// Interner session must span both graphs of an exact comparison.
class Interner {
 public:
  explicit Interner(int k);

  LabelId seed(int value) const;

  // Structure (own previous label, sorted neighbor label multiset).
  LabelId node_label(LabelId own_prev, const std::vector<LabelId>& sorted_neighbors);

  // Tagged multiset of previously issued values (tuple rows, aggregation
  // levels). Distinct tags keep structures from different levels apart.
  LabelId fold(uint32_t tag, const std::vector<LabelId>& sorted_members);

  size_t size() const { return map_.size(); }

 private:
  LabelId intern(std::vector<uint32_t>&& key);

  struct KeyHash {
    size_t operator()(const std::vector<uint32_t>& v) const;
  };
  std::unordered_map<std::vector<uint32_t>, LabelId, KeyHash> map_;
  LabelId max_seed_;
  LabelId next_;
};

// Fold tags shared by the exact and hashed backends.
inline constexpr uint32_t kTagTupleRows = 100;  // multiset of final node labels
inline constexpr uint32_t kTagSFoldBase = 200;  // + q, Notation s^k(i_1..i_q)
inline constexpr uint32_t kTagTFoldBase = 300;  // + q, Notation t^k(...; i)
inline constexpr uint32_t kTagTTop = 400;

// Exact refinement columns: columns[l][i] = label of node i at iteration l.
// `iters` = number of columns produced (>= 1); the default everywhere else
// is n+1 columns.
std::vector<std::vector<LabelId>> refine(const Graph& g, const AnchorTuple& anchors,
                                         int iters, Interner& interner);

// First l at which the induced partition stops refining.
int stabilization_hint(const std::vector<std::vector<LabelId>>& columns);

// Canonical value of one anchored matrix (multiset of final-column labels).
LabelId tuple_label_exact(const Graph& g, const AnchorTuple& anchors,
                          Interner& interner, int iters = 0 /* 0 => n+1 */);
uint64_t tuple_label_hashed(const Graph& g, const AnchorTuple& anchors,
                            int iters = 0);

struct MethodDescriptor {
  char family = 's';  // 's' or 't'
  int k = 1;
  int iters = 0;  // columns used
  LabelMode mode = LabelMode::hashed;
  std::string hash_version = kHashVersion;
  bool operator==(const MethodDescriptor&) const = default;
};

struct Fingerprint {
  MethodDescriptor method;
  uint64_t digest64 = 0;
  std::optional<WideDigest> wide;

  // `family k iters mode hashver digest64hex [widehex]`
  std::string line() const;
  static Fingerprint parse_line(const std::string& line);
};

Fingerprint fingerprint_s(const Graph& g, int k, LabelMode mode,
                          bool wide = false, int jobs = 1);
Fingerprint fingerprint_t(const Graph& g, int k, LabelMode mode,
                          bool wide = false, int jobs = 1);

struct EquivalenceOptions {
  bool full_iterations = false;  // disable the joint-stabilization early stop
  bool hashed_prepass = true;    // reject by 64-bit digests before interning
  int jobs = 1;
};

// Exact s^k-equivalence. A hashed pre-pass may reject early (hash difference
// proves structural difference); equality is always confirmed by a shared
// exact Interner session.
bool s_equivalent(const Graph& g1, const Graph& g2, int k,
                  const EquivalenceOptions& opts = {});

// 64-bit hashed verdict only (no interner); false is definitive.
bool s_equivalent_hashed(const Graph& g1, const Graph& g2, int k,
                         const EquivalenceOptions& opts = {});

bool t_equivalent(const Graph& g1, const Graph& g2, int k,
                  const EquivalenceOptions& opts = {});

// Node-level aggregates s^k_G(i) for both graphs under one shared session;
// values are comparable across the two returned vectors.
std::pair<std::vector<LabelId>, std::vector<LabelId>> node_level_aggregates(
    const Graph& g1, const Graph& g2, int k);

// Number of walks whose seed-value sequence matches `pattern` and that end
// at node `end`; a pattern of length 1 counts walks of length zero.
mpz_class pattern_walk_count(const Graph& g, const AnchorTuple& anchors,
                             const std::vector<int>& pattern, int end);

void for_each_tuple(int n, int k, const std::function<void(const AnchorTuple&)>& fn);

}  // namespace graphfp
