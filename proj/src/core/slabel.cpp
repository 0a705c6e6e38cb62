#include "core/slabel.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace graphfp {

namespace {

constexpr uint64_t kTagSeed = 11;
constexpr uint64_t kTagNode = 12;

void check_anchors(const Graph& g, const AnchorTuple& anchors) {
  std::vector<char> seen(static_cast<size_t>(g.node_count()), 0);
  for (int a : anchors) {
    if (a < 0 || a >= g.node_count()) throw ArgumentError("anchor node out of range");
    if (seen[static_cast<size_t>(a)]) throw ArgumentError("anchor nodes must be distinct");
    seen[static_cast<size_t>(a)] = 1;
  }
}

int resolve_iters(const Graph& g, int iters) {
  if (iters == 0) return g.node_count() + 1;
  if (iters < 1) throw ArgumentError("iteration count must be >= 1");
  return iters;
}

void check_k(const Graph& g, int k) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  if (k > g.node_count()) throw ArgumentError("k exceeds node count");
}

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  if (jobs < 1) {
    unsigned hw = std::thread::hardware_concurrency();
    jobs = hw ? static_cast<int>(hw) : 1;
  }
  jobs = static_cast<int>(std::min<size_t>(static_cast<size_t>(jobs), count));
  if (jobs <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

struct Hash64Backend {
  using Value = uint64_t;
  static constexpr bool kParallel = true;
  Value seed(int v) const {
    uint64_t w = static_cast<uint64_t>(v);
    return hash_words64(kTagSeed, std::span<const uint64_t>(&w, 1));
  }
  Value node(Value own, const std::vector<Value>& sorted_neigh) const {
    std::vector<uint64_t> words;
    words.reserve(sorted_neigh.size() + 1);
    words.push_back(own);
    words.insert(words.end(), sorted_neigh.begin(), sorted_neigh.end());
    return hash_words64(kTagNode, words);
  }
  Value fold(uint32_t tag, const std::vector<Value>& sorted_members) const {
    return hash_words64(tag, sorted_members);
  }
};

struct WideBackend {
  using Value = WideDigest;
  static constexpr bool kParallel = true;
  Value seed(int v) const {
    uint64_t w = static_cast<uint64_t>(v);
    return sha_words(kTagSeed, {}, std::span<const uint64_t>(&w, 1));
  }
  Value node(Value own, const std::vector<Value>& sorted_neigh) const {
    std::vector<WideDigest> parts;
    parts.reserve(sorted_neigh.size() + 1);
    parts.push_back(own);
    parts.insert(parts.end(), sorted_neigh.begin(), sorted_neigh.end());
    return sha_words(kTagNode, parts, {});
  }
  Value fold(uint32_t tag, const std::vector<Value>& sorted_members) const {
    return sha_words(tag, sorted_members, {});
  }
};

struct ExactBackend {
  using Value = LabelId;
  static constexpr bool kParallel = false;
  Interner* interner;
  Value seed(int v) const { return interner->seed(v); }
  Value node(Value own, const std::vector<Value>& sorted_neigh) const {
    return interner->node_label(own, sorted_neigh);
  }
  Value fold(uint32_t tag, const std::vector<Value>& sorted_members) const {
    return interner->fold(tag, sorted_members);
  }
};

template <class B>
std::vector<typename B::Value> seed_column(const Graph& g, const AnchorTuple& anchors, B& b) {
  std::vector<typename B::Value> col(static_cast<size_t>(g.node_count()), b.seed(0));
  for (size_t q = 0; q < anchors.size(); ++q)
    col[static_cast<size_t>(anchors[q])] = b.seed(static_cast<int>(q) + 1);
  return col;
}

// One refinement step: next label of i is (previous label, multiset of the
// previous labels of i's neighbors). A loop contributes i's own previous
// label to the multiset once.
template <class B>
void advance_column(const Graph& g, const typename B::Value* prev,
                    typename B::Value* next, B& b,
                    std::vector<typename B::Value>& scratch) {
  const int n = g.node_count();
  for (int i = 0; i < n; ++i) {
    scratch.clear();
    for (int j : g.neighbors(i)) scratch.push_back(prev[j]);
    if (g.has_loop(i)) scratch.push_back(prev[i]);
    std::sort(scratch.begin(), scratch.end());
    next[i] = b.node(prev[i], scratch);
  }
}

template <class B>
std::vector<typename B::Value> final_column(const Graph& g, const AnchorTuple& anchors,
                                            int iters, B& b) {
  auto cur = seed_column(g, anchors, b);
  std::vector<typename B::Value> next(cur.size());
  std::vector<typename B::Value> scratch;
  for (int l = 1; l < iters; ++l) {
    advance_column(g, cur.data(), next.data(), b, scratch);
    cur.swap(next);
  }
  return cur;
}

template <class B>
typename B::Value tuple_value(const Graph& g, const AnchorTuple& anchors, int iters, B& b) {
  auto col = final_column(g, anchors, iters, b);
  std::sort(col.begin(), col.end());
  return b.fold(kTagTupleRows, col);
}

template <class B>
typename B::Value s_value_seq(const Graph& g, B& b, AnchorTuple& prefix,
                              std::vector<char>& used, int k, int iters) {
  if (static_cast<int>(prefix.size()) == k) return tuple_value(g, prefix, iters, b);
  const int n = g.node_count();
  std::vector<typename B::Value> members;
  members.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (used[static_cast<size_t>(j)]) continue;
    used[static_cast<size_t>(j)] = 1;
    prefix.push_back(j);
    members.push_back(s_value_seq(g, b, prefix, used, k, iters));
    prefix.pop_back();
    used[static_cast<size_t>(j)] = 0;
  }
  std::sort(members.begin(), members.end());
  return b.fold(kTagSFoldBase + static_cast<uint32_t>(prefix.size()), members);
}

template <class B>
typename B::Value s_top(const Graph& g, int k, int iters, int jobs, B& b) {
  const int n = g.node_count();
  if (k == 0) return tuple_value(g, {}, iters, b);
  std::vector<typename B::Value> members(static_cast<size_t>(n));
  if constexpr (B::kParallel) {
    parallel_for(static_cast<size_t>(n), jobs, [&](size_t i) {
      B local = b;
      AnchorTuple prefix{static_cast<int>(i)};
      std::vector<char> used(static_cast<size_t>(n), 0);
      used[i] = 1;
      members[i] = s_value_seq(g, local, prefix, used, k, iters);
    });
  } else {
    for (int i = 0; i < n; ++i) {
      AnchorTuple prefix{i};
      std::vector<char> used(static_cast<size_t>(n), 0);
      used[static_cast<size_t>(i)] = 1;
      members[static_cast<size_t>(i)] = s_value_seq(g, b, prefix, used, k, iters);
    }
  }
  std::sort(members.begin(), members.end());
  return b.fold(kTagSFoldBase, members);
}

template <class B>
std::vector<typename B::Value> t_level(const Graph& g, B& b, AnchorTuple& prefix,
                                       std::vector<char>& used, int k, int iters) {
  using Value = typename B::Value;
  const int n = g.node_count();
  if (static_cast<int>(prefix.size()) == k) return final_column(g, prefix, iters, b);
  std::vector<std::vector<Value>> child(static_cast<size_t>(n));
  std::vector<char> have(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    if (used[static_cast<size_t>(j)]) continue;
    used[static_cast<size_t>(j)] = 1;
    prefix.push_back(j);
    child[static_cast<size_t>(j)] = t_level(g, b, prefix, used, k, iters);
    prefix.pop_back();
    used[static_cast<size_t>(j)] = 0;
    have[static_cast<size_t>(j)] = 1;
  }
  std::vector<Value> out(static_cast<size_t>(n));
  std::vector<Value> members;
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<size_t>(i)]) continue;
    members.clear();
    for (int j = 0; j < n; ++j)
      if (have[static_cast<size_t>(j)] && j != i)
        members.push_back(child[static_cast<size_t>(j)][static_cast<size_t>(i)]);
    std::sort(members.begin(), members.end());
    out[static_cast<size_t>(i)] =
        b.fold(kTagTFoldBase + static_cast<uint32_t>(prefix.size()), members);
  }
  return out;
}

template <class B>
typename B::Value t_top(const Graph& g, int k, int iters, int jobs, B& b) {
  using Value = typename B::Value;
  const int n = g.node_count();
  std::vector<Value> vals;
  if (k == 0) {
    vals = final_column(g, {}, iters, b);
  } else {
    std::vector<std::vector<Value>> child(static_cast<size_t>(n));
    if constexpr (B::kParallel) {
      parallel_for(static_cast<size_t>(n), jobs, [&](size_t j) {
        B local = b;
        AnchorTuple prefix{static_cast<int>(j)};
        std::vector<char> used(static_cast<size_t>(n), 0);
        used[j] = 1;
        child[j] = t_level(g, local, prefix, used, k, iters);
      });
    } else {
      for (int j = 0; j < n; ++j) {
        AnchorTuple prefix{j};
        std::vector<char> used(static_cast<size_t>(n), 0);
        used[static_cast<size_t>(j)] = 1;
        child[static_cast<size_t>(j)] = t_level(g, b, prefix, used, k, iters);
      }
    }
    vals.resize(static_cast<size_t>(n));
    std::vector<Value> members;
    for (int i = 0; i < n; ++i) {
      members.clear();
      for (int j = 0; j < n; ++j)
        if (j != i) members.push_back(child[static_cast<size_t>(j)][static_cast<size_t>(i)]);
      std::sort(members.begin(), members.end());
      vals[static_cast<size_t>(i)] = b.fold(kTagTFoldBase, members);
    }
  }
  std::sort(vals.begin(), vals.end());
  return b.fold(kTagTTop, vals);
}

// Level-synchronized comparison of the nested aggregates of two graphs. One
// refinement level is applied to every anchored matrix of both graphs before
// the aggregates are compared, so a difference found at level l is final. If
// the joint label partition over all (graph, tuple, node) items stops
// refining, later levels only rename labels injectively, so the verdict at
// that level is also final.
template <class B>
bool sync_equivalent(const Graph& g1, const Graph& g2, int k,
                     const EquivalenceOptions& opts, B& b) {
  using Value = typename B::Value;
  const int n = g1.node_count();
  std::vector<AnchorTuple> tuples;
  for_each_tuple(n, k, [&](const AnchorTuple& t) { tuples.push_back(t); });
  const size_t count = tuples.size();
  const size_t stride = static_cast<size_t>(n);

  const Graph* gs[2] = {&g1, &g2};
  std::array<std::vector<Value>, 2> cur;
  for (int gi = 0; gi < 2; ++gi) {
    cur[gi].resize(count * stride);
    for (size_t t = 0; t < count; ++t) {
      auto col = seed_column(*gs[gi], tuples[t], b);
      std::copy(col.begin(), col.end(), cur[gi].begin() + static_cast<ptrdiff_t>(t * stride));
    }
  }

  auto advance_all = [&](int gi) {
    const Graph& g = *gs[gi];
    auto step = [&](size_t t, B& bk, std::vector<Value>& scratch, std::vector<Value>& next) {
      Value* slice = cur[gi].data() + t * stride;
      advance_column(g, slice, next.data(), bk, scratch);
      std::copy(next.begin(), next.end(), slice);
    };
    if constexpr (B::kParallel) {
      unsigned hw = std::thread::hardware_concurrency();
      int jobs = opts.jobs >= 1 ? opts.jobs : (hw ? static_cast<int>(hw) : 1);
      jobs = static_cast<int>(std::min<size_t>(static_cast<size_t>(jobs), count));
      if (jobs <= 1) {
        std::vector<Value> scratch, next(stride);
        for (size_t t = 0; t < count; ++t) step(t, b, scratch, next);
        return;
      }
      std::atomic<size_t> idx{0};
      std::vector<std::thread> pool;
      for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
          B local = b;
          std::vector<Value> scratch, next(stride);
          for (;;) {
            size_t t = idx.fetch_add(1);
            if (t >= count) return;
            step(t, local, scratch, next);
          }
        });
      }
      for (auto& th : pool) th.join();
    } else {
      std::vector<Value> scratch, next(stride);
      for (size_t t = 0; t < count; ++t) step(t, b, scratch, next);
    }
  };

  // Nested fold over the tuple prefix tree; the recursion visits leaves in
  // the same order the tuples were enumerated.
  auto aggregate = [&](int gi) -> Value {
    size_t idx = 0;
    std::vector<char> used(stride, 0);
    std::function<Value(int)> rec = [&](int q) -> Value {
      if (q == k) {
        const Value* row = cur[gi].data() + idx * stride;
        ++idx;
        std::vector<Value> rows(row, row + stride);
        std::sort(rows.begin(), rows.end());
        return b.fold(kTagTupleRows, rows);
      }
      std::vector<Value> members;
      for (int j = 0; j < n; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        used[static_cast<size_t>(j)] = 1;
        members.push_back(rec(q + 1));
        used[static_cast<size_t>(j)] = 0;
      }
      std::sort(members.begin(), members.end());
      return b.fold(kTagSFoldBase + static_cast<uint32_t>(q), members);
    };
    return rec(0);
  };

  auto joint_classes = [&]() -> size_t {
    std::vector<Value> all;
    all.reserve(cur[0].size() + cur[1].size());
    all.insert(all.end(), cur[0].begin(), cur[0].end());
    all.insert(all.end(), cur[1].begin(), cur[1].end());
    std::sort(all.begin(), all.end());
    return static_cast<size_t>(std::unique(all.begin(), all.end()) - all.begin());
  };

  size_t prev_classes = opts.full_iterations ? 0 : joint_classes();
  for (int l = 1; l <= n; ++l) {
    advance_all(0);
    advance_all(1);
    if (aggregate(0) != aggregate(1)) return false;
    if (!opts.full_iterations) {
      size_t classes = joint_classes();
      if (classes == prev_classes) return true;
      prev_classes = classes;
    }
  }
  return true;
}

}  // namespace

void for_each_tuple(int n, int k, const std::function<void(const AnchorTuple&)>& fn) {
  AnchorTuple prefix;
  std::vector<char> used(static_cast<size_t>(std::max(n, 1)), 0);
  std::function<void()> rec = [&] {
    if (static_cast<int>(prefix.size()) == k) {
      fn(prefix);
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      used[static_cast<size_t>(j)] = 1;
      prefix.push_back(j);
      rec();
      prefix.pop_back();
      used[static_cast<size_t>(j)] = 0;
    }
  };
  rec();
}

size_t Interner::KeyHash::operator()(const std::vector<uint32_t>& v) const {
  uint64_t h = static_cast<uint64_t>(v.size());
  for (uint32_t x : v) h = mix64(h, x);
  return static_cast<size_t>(h);
}

Interner::Interner(int k) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  max_seed_ = static_cast<LabelId>(k);
  next_ = static_cast<LabelId>(k) + 1;
}

LabelId Interner::seed(int value) const {
  if (value < 0 || static_cast<LabelId>(value) > max_seed_)
    throw ArgumentError("seed value out of range");
  return static_cast<LabelId>(value);
}

LabelId Interner::intern(std::vector<uint32_t>&& key) {
  auto [it, inserted] = map_.try_emplace(std::move(key), next_);
  if (inserted) ++next_;
  return it->second;
}

LabelId Interner::node_label(LabelId own_prev, const std::vector<LabelId>& sorted_neighbors) {
  std::vector<uint32_t> key;
  key.reserve(sorted_neighbors.size() + 2);
  key.push_back(1);
  key.push_back(own_prev);
  key.insert(key.end(), sorted_neighbors.begin(), sorted_neighbors.end());
  return intern(std::move(key));
}

LabelId Interner::fold(uint32_t tag, const std::vector<LabelId>& sorted_members) {
  std::vector<uint32_t> key;
  key.reserve(sorted_members.size() + 2);
  key.push_back(2);
  key.push_back(tag);
  key.insert(key.end(), sorted_members.begin(), sorted_members.end());
  return intern(std::move(key));
}

std::vector<std::vector<LabelId>> refine(const Graph& g, const AnchorTuple& anchors,
                                         int iters, Interner& interner) {
  if (iters < 1) throw ArgumentError("iteration count must be >= 1");
  check_anchors(g, anchors);
  ExactBackend b{&interner};
  std::vector<std::vector<LabelId>> columns;
  columns.push_back(seed_column(g, anchors, b));
  std::vector<LabelId> scratch;
  for (int l = 1; l < iters; ++l) {
    std::vector<LabelId> next(columns.back().size());
    advance_column(g, columns.back().data(), next.data(), b, scratch);
    columns.push_back(std::move(next));
  }
  return columns;
}

int stabilization_hint(const std::vector<std::vector<LabelId>>& columns) {
  auto classes = [](const std::vector<LabelId>& col) {
    std::vector<LabelId> c = col;
    std::sort(c.begin(), c.end());
    return std::unique(c.begin(), c.end()) - c.begin();
  };
  for (size_t l = 0; l + 1 < columns.size(); ++l)
    if (classes(columns[l]) == classes(columns[l + 1])) return static_cast<int>(l);
  return static_cast<int>(columns.size()) - 1;
}

LabelId tuple_label_exact(const Graph& g, const AnchorTuple& anchors,
                          Interner& interner, int iters) {
  check_anchors(g, anchors);
  ExactBackend b{&interner};
  return tuple_value(g, anchors, resolve_iters(g, iters), b);
}

uint64_t tuple_label_hashed(const Graph& g, const AnchorTuple& anchors, int iters) {
  check_anchors(g, anchors);
  Hash64Backend b;
  return tuple_value(g, anchors, resolve_iters(g, iters), b);
}

namespace {

const char* mode_name(LabelMode m) { return m == LabelMode::exact ? "exact" : "hashed"; }

uint64_t digest64_from_wide(const WideDigest& w) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | w[static_cast<size_t>(i)];
  return v;
}

template <class TopFn>
Fingerprint make_fingerprint(char family, const Graph& g, int k, LabelMode mode,
                             bool wide, int jobs, TopFn&& top) {
  check_k(g, k);
  const int iters = g.node_count() + 1;
  Fingerprint fp;
  fp.method = MethodDescriptor{family, k, iters, mode, kHashVersion};
  if (mode == LabelMode::exact || wide) {
    // Exact mode commits to the collision-resistant digest; its low 64 bits
    // double as the short digest so the two modes stay comparable.
    WideBackend bw;
    fp.wide = top(bw, iters, jobs);
  }
  if (mode == LabelMode::exact) {
    fp.digest64 = digest64_from_wide(*fp.wide);
  } else {
    Hash64Backend b64;
    fp.digest64 = top(b64, iters, jobs);
  }
  return fp;
}

}  // namespace

Fingerprint fingerprint_s(const Graph& g, int k, LabelMode mode, bool wide, int jobs) {
  return make_fingerprint('s', g, k, mode, wide, jobs, [&](auto& b, int iters, int j) {
    return s_top(g, k, iters, j, b);
  });
}

Fingerprint fingerprint_t(const Graph& g, int k, LabelMode mode, bool wide, int jobs) {
  return make_fingerprint('t', g, k, mode, wide, jobs, [&](auto& b, int iters, int j) {
    return t_top(g, k, iters, j, b);
  });
}

std::string Fingerprint::line() const {
  std::ostringstream out;
  out << method.family << ' ' << method.k << ' ' << method.iters << ' '
      << mode_name(method.mode) << ' ' << method.hash_version << ' ' << hex(digest64);
  if (wide) out << ' ' << hex(*wide);
  return out.str();
}

Fingerprint Fingerprint::parse_line(const std::string& line) {
  std::istringstream in(line);
  std::string family, mode, hashver, d64, widehex;
  int k = -1, iters = -1;
  if (!(in >> family >> k >> iters >> mode >> hashver >> d64))
    throw ArgumentError("malformed fingerprint line: " + line);
  in >> widehex;
  Fingerprint fp;
  if (family.size() != 1 || (family[0] != 's' && family[0] != 't'))
    throw ArgumentError("unknown fingerprint family: " + family);
  fp.method.family = family[0];
  if (k < 0 || iters < 1) throw ArgumentError("malformed fingerprint line: " + line);
  fp.method.k = k;
  fp.method.iters = iters;
  if (mode == "exact")
    fp.method.mode = LabelMode::exact;
  else if (mode == "hashed")
    fp.method.mode = LabelMode::hashed;
  else
    throw ArgumentError("unknown fingerprint mode: " + mode);
  fp.method.hash_version = hashver;
  auto parse_hex = [&](const std::string& s, size_t digits) -> std::vector<uint8_t> {
    if (s.size() != digits) throw ArgumentError("malformed fingerprint digest: " + s);
    std::vector<uint8_t> out(digits / 2);
    for (size_t i = 0; i < out.size(); ++i) {
      auto nib = [&](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw ArgumentError("malformed fingerprint digest: " + s);
      };
      out[i] = static_cast<uint8_t>(nib(s[2 * i]) * 16 + nib(s[2 * i + 1]));
    }
    return out;
  };
  auto b = parse_hex(d64, 16);
  fp.digest64 = 0;
  for (uint8_t byte : b) fp.digest64 = (fp.digest64 << 8) | byte;
  if (!widehex.empty()) {
    auto wb = parse_hex(widehex, 64);
    WideDigest w;
    std::copy(wb.begin(), wb.end(), w.begin());
    fp.wide = w;
  }
  return fp;
}

bool s_equivalent_hashed(const Graph& g1, const Graph& g2, int k,
                         const EquivalenceOptions& opts) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  if (g1.node_count() != g2.node_count()) return false;
  check_k(g1, k);
  Hash64Backend b;
  return sync_equivalent(g1, g2, k, opts, b);
}

bool s_equivalent(const Graph& g1, const Graph& g2, int k, const EquivalenceOptions& opts) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  if (g1.node_count() != g2.node_count()) return false;
  check_k(g1, k);
  if (opts.hashed_prepass && !s_equivalent_hashed(g1, g2, k, opts)) return false;
  Interner interner(k);
  ExactBackend b{&interner};
  return sync_equivalent(g1, g2, k, opts, b);
}

bool t_equivalent(const Graph& g1, const Graph& g2, int k, const EquivalenceOptions& opts) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  if (g1.node_count() != g2.node_count()) return false;
  check_k(g1, k);
  const int iters = g1.node_count() + 1;
  if (opts.hashed_prepass) {
    Hash64Backend b64;
    if (t_top(g1, k, iters, opts.jobs, b64) != t_top(g2, k, iters, opts.jobs, b64))
      return false;
  }
  Interner interner(k);
  ExactBackend b{&interner};
  return t_top(g1, k, iters, 1, b) == t_top(g2, k, iters, 1, b);
}

std::pair<std::vector<LabelId>, std::vector<LabelId>> node_level_aggregates(
    const Graph& g1, const Graph& g2, int k) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  check_k(g1, k);
  check_k(g2, k);
  Interner interner(k);
  ExactBackend b{&interner};
  auto per_node = [&](const Graph& g) {
    const int n = g.node_count();
    std::vector<LabelId> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      AnchorTuple prefix{i};
      std::vector<char> used(static_cast<size_t>(n), 0);
      used[static_cast<size_t>(i)] = 1;
      out[static_cast<size_t>(i)] = s_value_seq(g, b, prefix, used, k, n + 1);
    }
    return out;
  };
  return {per_node(g1), per_node(g2)};
}

mpz_class pattern_walk_count(const Graph& g, const AnchorTuple& anchors,
                             const std::vector<int>& pattern, int end) {
  check_anchors(g, anchors);
  if (pattern.empty()) throw ArgumentError("pattern must be non-empty");
  for (int p : pattern)
    if (p < 0 || p > static_cast<int>(anchors.size()))
      throw ArgumentError("pattern value out of range");
  if (end < 0 || end >= g.node_count()) throw ArgumentError("end node out of range");

  const int n = g.node_count();
  std::vector<int> value(static_cast<size_t>(n), 0);
  for (size_t q = 0; q < anchors.size(); ++q)
    value[static_cast<size_t>(anchors[q])] = static_cast<int>(q) + 1;

  std::vector<mpz_class> cnt(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    cnt[static_cast<size_t>(i)] = (value[static_cast<size_t>(i)] == pattern[0]) ? 1 : 0;
  for (size_t step = 1; step < pattern.size(); ++step) {
    std::vector<mpz_class> next(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      if (value[static_cast<size_t>(j)] != pattern[step]) continue;
      mpz_class acc = 0;
      for (int i : g.neighbors(j)) acc += cnt[static_cast<size_t>(i)];
      if (g.has_loop(j)) acc += cnt[static_cast<size_t>(j)];
      next[static_cast<size_t>(j)] = acc;
    }
    cnt.swap(next);
  }
  return cnt[static_cast<size_t>(end)];
}

}  // namespace graphfp
