#include "core/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "core/fixtures.hpp"
#include "core/formats.hpp"
#include "core/oracle.hpp"
#include "core/slabel.hpp"
#include "core/walk.hpp"

namespace graphfp {

namespace {

void parallel_cases(size_t count, int jobs,
                    const std::function<void(size_t)>& fn) {
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

std::string compact(const Graph& g) {
  std::string s = serialize_graph(g, Format::edgelist);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

// Runs `count` independent cases (possibly in parallel) and merges failures
// in case order so reports are schedule-independent.
template <class Fn>
void run_cases(SuiteReport& rep, size_t count, int jobs, Fn&& fn) {
  std::vector<std::optional<std::string>> res(count);
  parallel_cases(count, jobs, [&](size_t i) { res[i] = fn(i); });
  rep.cases += count;
  for (size_t i = 0; i < count; ++i)
    if (res[i]) rep.failures.push_back({i, *res[i]});
}

struct PairCase {
  Graph a, b;
};

// Random pair with a coin-flip between an independent draw and a relabeled
// copy, so both verdicts are exercised.
PairCase random_pair(std::mt19937_64& rng, int n_max, bool allow_loops) {
  std::uniform_int_distribution<int> nd(2, n_max);
  const double ps[3] = {0.2, 0.5, 0.8};
  int n = nd(rng);
  double p = ps[rng() % 3];
  Graph a = random_graph(n, p, rng);
  if (allow_loops && rng() % 2 == 0) {
    for (int i = 0; i < n; ++i)
      if (rng() % 5 == 0) a.set_loop(i);
  }
  Graph b;
  if (rng() % 2 == 0) {
    b = permuted(a, random_permutation(n, rng));
  } else {
    b = random_graph(n, p, rng);
    if (allow_loops && rng() % 2 == 0) {
      for (int i = 0; i < n; ++i)
        if (rng() % 5 == 0) b.set_loop(i);
    }
  }
  return {std::move(a), std::move(b)};
}

std::string pair_detail(const PairCase& c, const std::string& what) {
  return what + " | a=" + compact(c.a) + " | b=" + compact(c.b);
}

size_t default_pairs(const SuiteParams& p, size_t dflt) {
  return p.pairs > 0 ? static_cast<size_t>(p.pairs) : dflt;
}

// ---- individual suites ----

void suite_trees(SuiteReport& rep, const SuiteParams& p) {
  std::mt19937_64 rng(p.seed);
  size_t count = default_pairs(p, 1000);
  std::vector<PairCase> cases;
  cases.reserve(count);
  std::uniform_int_distribution<int> nd(2, 16);
  for (size_t i = 0; i < count; ++i) {
    int n = nd(rng);
    Graph a = random_tree(n, rng);
    Graph b = rng() % 2 == 0 ? permuted(a, random_permutation(n, rng))
                             : random_tree(n, rng);
    cases.push_back({std::move(a), std::move(b)});
  }
  run_cases(rep, count, p.jobs, [&](size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    bool canon = tree_canonical(c.a) == tree_canonical(c.b);
    bool sv = s_equivalent(c.a, c.b, 1);
    if (canon != sv)
      return pair_detail(c, "k=1 verdict " + std::to_string(sv) +
                                " != canonical verdict " + std::to_string(canon));
    return std::nullopt;
  });
}

void suite_srg_s1(SuiteReport& rep, const SuiteParams&) {
  Graph a = shrikhande_graph();
  Graph b = rook_graph_4x4();
  rep.cases += 1;
  std::string bad;
  auto pa = srg_parameters(a), pb = srg_parameters(b);
  if (!pa || !pb || !(*pa == *pb) || pa->n != 16 || pa->d != 6 || pa->lambda != 2 ||
      pa->mu != 2)
    bad += "srg parameters not (16,6,2,2); ";
  if (brute_force_isomorphic(a, b).isomorphic) bad += "unexpectedly isomorphic; ";
  if (!s_equivalent(a, b, 1)) bad += "k=1 not equivalent; ";
  if (fingerprint_s(a, 1, LabelMode::hashed).digest64 !=
      fingerprint_s(b, 1, LabelMode::hashed).digest64)
    bad += "k=1 digests differ; ";
  if (s_equivalent(a, b, 2)) bad += "k=2 unexpectedly equivalent; ";
  if (fingerprint_s(a, 2, LabelMode::hashed).digest64 ==
      fingerprint_s(b, 2, LabelMode::hashed).digest64)
    bad += "k=2 digests collide; ";
  if (!bad.empty()) rep.failures.push_back({0, bad});
}

void suite_complement(SuiteReport& rep, const SuiteParams& p) {
  std::mt19937_64 rng(p.seed);
  size_t count = default_pairs(p, 500);
  std::vector<PairCase> cases;
  for (size_t i = 0; i < count; ++i) cases.push_back(random_pair(rng, 8, false));
  run_cases(rep, count, p.jobs, [&](size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    Graph ca = complement(c.a), cb = complement(c.b);
    for (int k = 1; k <= 2; ++k) {
      bool direct = s_equivalent(c.a, c.b, k);
      bool comp = s_equivalent(ca, cb, k);
      if (direct != comp)
        return pair_detail(c, "k=" + std::to_string(k) + " verdict changes under complement");
    }
    return std::nullopt;
  });
}

void suite_separator(SuiteReport& rep, const SuiteParams& p) {
  std::mt19937_64 rng(p.seed);
  size_t count = default_pairs(p, 200);
  std::vector<PairCase> cases;
  for (size_t i = 0; i < count; ++i) cases.push_back(random_pair(rng, 8, false));
  run_cases(rep, count, p.jobs, [&](size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    if (c.a.node_count() != c.b.node_count()) return std::nullopt;
    for (int k = 2; k <= 3; ++k) {
      if (k > c.a.node_count()) continue;
      auto [agg1, agg2] = node_level_aggregates(c.a, c.b, k);
      auto member = [&](const Graph& g) {
        std::vector<char> in(static_cast<size_t>(g.node_count()), 0);
        for (const auto& sep : find_separators(g, k - 1))
          for (int v : sep) in[static_cast<size_t>(v)] = 1;
        return in;
      };
      auto m1 = member(c.a), m2 = member(c.b);
      for (int u = 0; u < c.a.node_count(); ++u)
        for (int v = 0; v < c.b.node_count(); ++v)
          if (agg1[static_cast<size_t>(u)] == agg2[static_cast<size_t>(v)] &&
              m1[static_cast<size_t>(u)] != m2[static_cast<size_t>(v)])
            return pair_detail(c, "k=" + std::to_string(k) + " nodes " +
                                      std::to_string(u) + "," + std::to_string(v) +
                                      " equal aggregates, separator membership differs");
    }
    return std::nullopt;
  });
}

void suite_connectivity(SuiteReport& rep, const SuiteParams& p) {
  std::mt19937_64 rng(p.seed);
  size_t count = default_pairs(p, 200);
  std::vector<PairCase> cases;
  // Fixed catalog pairs: a k-connected graph against a non-k-connected one.
  cases.push_back({complete_graph(4), path_graph(4)});
  cases.push_back({prism_graph(4), cycle_graph(8)});
  cases.push_back({antiprism_graph(4), prism_graph(4)});  // 4- vs 3-connected
  for (size_t i = cases.size(); i < count; ++i) cases.push_back(random_pair(rng, 8, false));
  run_cases(rep, cases.size(), p.jobs, [&](size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    for (int k = 2; k <= 3; ++k) {
      if (is_k_connected(c.a, k) == is_k_connected(c.b, k)) continue;
      if (s_equivalent(c.a, c.b, k))
        return pair_detail(c, "k=" + std::to_string(k) +
                                  " connectivity differs but graphs are equivalent");
    }
    return std::nullopt;
  });
}

void suite_spectra(SuiteReport& rep, const SuiteParams& p) {
  std::mt19937_64 rng(p.seed);
  size_t count = default_pairs(p, 500);
  std::vector<PairCase> cases;
  Graph star(5);
  for (long leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
  cases.push_back({star, disjoint_union(cycle_graph(4), Graph(1))});
  for (size_t i = cases.size(); i < count; ++i) cases.push_back(random_pair(rng, 10, false));
  run_cases(rep, cases.size(), p.jobs, [&](size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    bool cosp = cospectral(c.a, c.b);
    bool weq = w_equivalent(c.a, c.b);
    if (weq && !cosp) return pair_detail(c, "w-equivalent but not cospectral");
    if (i == 0) {
      // K_{1,4} vs C4+K1: the saltire cospectral non-equivalent pair.
      if (!cosp) return pair_detail(c, "saltire pair should be cospectral");
      if (weq) return pair_detail(c, "saltire pair should not be w-equivalent");
    }
    return std::nullopt;
  });
}

std::vector<std::string> sorted_rows(const Graph& g, int node, int cols) {
  WalkMatrix m = walk_matrix(g, node, cols);
  std::vector<std::string> rows;
  for (int j = 0; j < g.node_count(); ++j) {
    std::vector<mpz_class> row(static_cast<size_t>(cols));
    for (int l = 0; l < cols; ++l) row[static_cast<size_t>(l)] = m.cols[static_cast<size_t>(l)][static_cast<size_t>(j)];
    rows.push_back(serialize_row(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

void suite_truncation(SuiteReport& rep, const SuiteParams& p) {
  // Tightness: the path endpoint with vs without a far-end loop agrees on
  // the first n columns and separates only at column n+1.
  for (int n = 3; n <= 8; ++n) {
    rep.cases += 1;
    Graph a = path_graph(n);
    Graph b = path_with_loop(n);
    bool short_equal = sorted_rows(a, 0, n) == sorted_rows(b, 0, n);
    bool long_equal = sorted_rows(a, 0, n + 1) == sorted_rows(b, 0, n + 1);
    if (!short_equal || long_equal)
      rep.failures.push_back(
          {rep.cases - 1, "path tightness failed at n=" + std::to_string(n) +
                              " short_equal=" + std::to_string(short_equal) +
                              " long_equal=" + std::to_string(long_equal)});
  }
  std::mt19937_64 rng(p.seed);
  size_t count = default_pairs(p, 500);
  std::vector<PairCase> cases;
  for (size_t i = 0; i < count; ++i) cases.push_back(random_pair(rng, 8, true));
  run_cases(rep, count, p.jobs, [&](size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    std::vector<CanonicalWalkLabel> fa, fb, ra, rb;
    for (int v = 0; v < c.a.node_count(); ++v) {
      fa.push_back(canonical_w_label(c.a, v, Truncation::n_plus_1));
      ra.push_back(canonical_w_label(c.a, v, Truncation::rank_based));
    }
    for (int v = 0; v < c.b.node_count(); ++v) {
      fb.push_back(canonical_w_label(c.b, v, Truncation::n_plus_1));
      rb.push_back(canonical_w_label(c.b, v, Truncation::rank_based));
    }
    if (c.a.node_count() == c.b.node_count()) {
      for (size_t u = 0; u < fa.size(); ++u)
        for (size_t v = 0; v < fb.size(); ++v)
          if (labels_equal(fa[u], fb[v]) != labels_equal(ra[u], rb[v]))
            return pair_detail(c, "rank-based and full verdicts differ at nodes " +
                                      std::to_string(u) + "," + std::to_string(v));
    }
    return std::nullopt;
  });
}

void suite_hierarchy(SuiteReport& rep, const SuiteParams& p) {
  std::mt19937_64 rng(p.seed);
  size_t count = default_pairs(p, 500);
  std::vector<PairCase> cases;
  for (size_t i = 0; i < count; ++i) cases.push_back(random_pair(rng, 8, false));
  run_cases(rep, count, p.jobs, [&](size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    for (int k = 0; k <= 1; ++k) {
      // the nested fold over the remaining nodes is empty below k+2 nodes,
      // which collapses the finer invariant; the implications need n >= k+2
      if (c.a.node_count() < k + 2 || c.b.node_count() < k + 2) continue;
      if (s_equivalent(c.a, c.b, k + 1) && !t_equivalent(c.a, c.b, k))
        return pair_detail(c, "s^" + std::to_string(k + 1) + " equal but t^" +
                                  std::to_string(k) + " differs");
      if (t_equivalent(c.a, c.b, k + 1) && !s_equivalent(c.a, c.b, k))
        return pair_detail(c, "t^" + std::to_string(k + 1) + " equal but s^" +
                                  std::to_string(k) + " differs");
    }
    return std::nullopt;
  });
}

void suite_monotonicity(SuiteReport& rep, const SuiteParams& p) {
  std::mt19937_64 rng(p.seed);
  size_t count = default_pairs(p, 500);
  std::vector<PairCase> cases;
  for (size_t i = 0; i < count; ++i) cases.push_back(random_pair(rng, 8, false));
  run_cases(rep, count, p.jobs, [&](size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    for (int k = 0; k <= 1; ++k) {
      if (c.a.node_count() < k + 1 || c.b.node_count() < k + 1) continue;
      if (!s_equivalent(c.a, c.b, k) && s_equivalent(c.a, c.b, k + 1))
        return pair_detail(c, "s^" + std::to_string(k) + " differs but s^" +
                                  std::to_string(k + 1) + " agrees");
    }
    return std::nullopt;
  });
}

void suite_planar3(SuiteReport& rep, const SuiteParams& p) {
  const auto& fx = polyhedron_fixtures();
  std::mt19937_64 rng(p.seed);
  struct Case {
    std::string what;
    Graph a, b;
    bool expect;
  };
  std::vector<Case> cases;
  for (size_t i = 0; i < fx.size(); ++i) {
    Graph shuffled = permuted(fx[i].graph, random_permutation(fx[i].graph.node_count(), rng));
    cases.push_back({fx[i].name + " vs relabeled self", fx[i].graph, shuffled, true});
    for (size_t j = i + 1; j < fx.size(); ++j) {
      bool iso = brute_force_isomorphic(fx[i].graph, fx[j].graph).isomorphic;
      cases.push_back({fx[i].name + " vs " + fx[j].name, fx[i].graph, fx[j].graph, iso});
    }
  }
  run_cases(rep, cases.size(), p.jobs, [&](size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    if (s_equivalent(c.a, c.b, 3) != c.expect)
      return c.what + ": s^3 verdict disagrees with isomorphism";
    return std::nullopt;
  });
  // Face-triple lemma: anchoring at three nodes of a common face separates
  // every node of the graph.
  for (const auto& f : fx) {
    rep.cases += 1;
    Interner interner(3);
    AnchorTuple anchors(f.face_triple.begin(), f.face_triple.end());
    auto cols = refine(f.graph, anchors, f.graph.node_count() + 1, interner);
    std::vector<LabelId> last = cols.back();
    std::sort(last.begin(), last.end());
    if (std::adjacent_find(last.begin(), last.end()) != last.end())
      rep.failures.push_back(
          {rep.cases - 1, f.name + ": face-triple labels not pairwise distinct"});
  }
}

void suite_glue(SuiteReport& rep, const SuiteParams& p) {
  const auto& srg = appendix_srg();
  auto [g1, g2] = glue_pair(srg.graph, srg.u, srg.v);
  EquivalenceOptions opts;
  opts.jobs = p.jobs;
  rep.cases += 2;
  if (!s_equivalent(g1, g2, 2, opts))
    rep.failures.push_back({0, "glued pair should be s^2-equivalent"});
  if (s_equivalent(g1, g2, 3, opts))
    rep.failures.push_back({1, "glued pair should not be s^3-equivalent"});
}

void suite_figure1(SuiteReport& rep, const SuiteParams&) {
  Graph g = figure1_graph();
  rep.cases += 2;
  auto la = canonical_w_label(g, kFigure1MarkedA, Truncation::n_plus_1);
  auto lb = canonical_w_label(g, kFigure1MarkedB, Truncation::n_plus_1);
  if (!labels_equal(la, lb))
    rep.failures.push_back({0, "marked nodes should have equal walk labels"});
  Interner interner(1);
  if (tuple_label_exact(g, {kFigure1MarkedA}, interner) ==
      tuple_label_exact(g, {kFigure1MarkedB}, interner))
    rep.failures.push_back({1, "marked nodes should have different anchored labels"});
}

void suite_remark_neighbors(SuiteReport& rep, const SuiteParams&) {
  const auto& srg = appendix_srg();
  rep.cases += 1;
  auto agg = node_level_aggregates(srg.graph, srg.graph, 2).first;
  auto bag = [&](int node) {
    std::vector<LabelId> out;
    for (int j : srg.graph.neighbors(node)) out.push_back(agg[static_cast<size_t>(j)]);
    std::sort(out.begin(), out.end());
    return out;
  };
  if (bag(srg.u) == bag(srg.v))
    rep.failures.push_back(
        {0, "neighbor aggregate multisets of the marked nodes should differ"});
}

void suite_exact_hash_agreement(SuiteReport& rep, const SuiteParams& p) {
  std::mt19937_64 rng(p.seed);
  size_t count = default_pairs(p, 1000);
  std::vector<PairCase> cases;
  std::vector<int> ks;
  for (size_t i = 0; i < count; ++i) {
    cases.push_back(random_pair(rng, 8, true));
    ks.push_back(static_cast<int>(rng() % 3));
  }
  run_cases(rep, count, p.jobs, [&](size_t i) -> std::optional<std::string> {
    const auto& c = cases[i];
    int k = std::min({ks[i], c.a.node_count(), c.b.node_count()});
    EquivalenceOptions exact_opts;
    exact_opts.hashed_prepass = false;
    bool exact = s_equivalent(c.a, c.b, k, exact_opts);
    bool hashed = s_equivalent_hashed(c.a, c.b, k);
    if (exact != hashed) {
      // A 64-bit collision would make hashed=true, exact=false; escalate to
      // the wide digest and report either way.
      auto wa = fingerprint_s(c.a, k, LabelMode::hashed, true);
      auto wb = fingerprint_s(c.b, k, LabelMode::hashed, true);
      return pair_detail(c, "k=" + std::to_string(k) + " exact=" + std::to_string(exact) +
                                " hashed=" + std::to_string(hashed) + " wide_equal=" +
                                std::to_string(wa.wide == wb.wide));
    }
    return std::nullopt;
  });
}

void suite_determinism(SuiteReport& rep, const SuiteParams& p) {
  for (const auto& [name, g] : fixtures()) {
    rep.cases += 1;
    int k = g.node_count() <= 40 ? 2 : 1;
    auto one = fingerprint_s(g, k, LabelMode::hashed, true, 1).line();
    auto two = fingerprint_s(g, k, LabelMode::hashed, true, p.jobs > 1 ? p.jobs : 8).line();
    auto three = fingerprint_s(g, k, LabelMode::hashed, true, 1).line();
    if (one != two || one != three)
      rep.failures.push_back(
          {rep.cases - 1, name + ": fingerprint lines differ across runs/schedules"});
  }
}

using SuiteFn = void (*)(SuiteReport&, const SuiteParams&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"trees", suite_trees},
      {"srg-s1", suite_srg_s1},
      {"complement", suite_complement},
      {"separator", suite_separator},
      {"connectivity", suite_connectivity},
      {"spectra", suite_spectra},
      {"truncation", suite_truncation},
      {"hierarchy", suite_hierarchy},
      {"monotonicity", suite_monotonicity},
      {"planar3", suite_planar3},
      {"glue", suite_glue},
      {"figure1", suite_figure1},
      {"remark-neighbors", suite_remark_neighbors},
      {"exact-hash-agreement", suite_exact_hash_agreement},
      {"determinism", suite_determinism},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteReport rep;
    rep.name = name;
    rep.seed = params.seed;
    auto t0 = std::chrono::steady_clock::now();
    fn(rep, params);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const SuiteFailure& a, const SuiteFailure& b) {
                return a.case_index < b.case_index;
              });
    return rep;
  }
  throw ArgumentError("unknown suite: " + name);
}

std::string SuiteReport::summary_line() const {
  std::ostringstream out;
  out << name << ' ' << (passed() ? "pass" : "fail") << " cases=" << cases
      << " failures=" << failures.size() << " seed=" << seed << " wall="
      << wall_seconds;
  return out.str();
}

std::string SuiteReport::text_report() const {
  std::ostringstream out;
  out << summary_line() << '\n';
  for (const auto& f : failures)
    out << "  case " << f.case_index << ": " << f.detail << '\n';
  return out.str();
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pd(0, i - 1);
    g.add_edge(pd(rng), i);
  }
  return g;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace graphfp
