#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "core/fixtures.hpp"
#include "core/oracle.hpp"
#include "core/suites.hpp"

using namespace graphfp;

TEST_CASE("brute force isomorphism") {
  Graph c6 = cycle_graph(6);
  Graph kk = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK_FALSE(brute_force_isomorphic(c6, kk).isomorphic);

  std::mt19937_64 rng(3);
  Graph g = random_graph(8, 0.5, rng);
  auto perm = random_permutation(8, rng);
  auto verdict = brute_force_isomorphic(g, permuted(g, perm));
  REQUIRE(verdict.isomorphic);
  // The witness must be edge-preserving, not merely reported.
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      CHECK(g.has_edge(i, j) ==
            permuted(g, perm).has_edge(verdict.mapping[i], verdict.mapping[j]));

  CHECK_FALSE(brute_force_isomorphic(shrikhande_graph(), rook_graph_4x4()).isomorphic);
}

TEST_CASE("tree canonical forms") {
  Graph p4 = path_graph(4);
  CHECK(tree_canonical(p4) == tree_canonical(permuted(p4, {2, 0, 3, 1})));

  Graph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK(tree_canonical(star) != tree_canonical(p4));

  // The spider S(2,1,1) and P5: same degree multiset, different trees.
  Graph spider(5);
  spider.add_edge(0, 1);
  spider.add_edge(1, 2);
  spider.add_edge(1, 3);
  spider.add_edge(3, 4);
  CHECK(tree_canonical(spider) != tree_canonical(path_graph(5)));

  CHECK_THROWS_AS(tree_canonical(cycle_graph(4)), ArgumentError);
  CHECK(tree_canonical(path_graph(1)) == "()");
}

TEST_CASE("tree oracle agrees with brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph a = random_tree(n, rng);
    Graph b = rng() % 2 ? permuted(a, random_permutation(n, rng)) : random_tree(n, rng);
    CHECK((tree_canonical(a) == tree_canonical(b)) ==
          brute_force_isomorphic(a, b).isomorphic);
  }
}

TEST_CASE("exhaustive class counts") {
  CHECK(enumerate_graphs(1).size() == 1);
  CHECK(enumerate_graphs(2).size() == 2);
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(5).size() == 34);
  CHECK(enumerate_graphs(6).size() == 156);
  CHECK_THROWS_AS(enumerate_graphs(8), ArgumentError);
}

TEST_CASE("enumeration closure under complement") {
  auto classes = enumerate_graphs(5);
  for (const auto& g : classes) {
    Graph c = complement(g);
    bool found = false;
    for (const auto& h : classes)
      if (brute_force_isomorphic(c, h).isomorphic) {
        found = true;
        break;
      }
    CHECK(found);
  }
  // Pairwise distinct representatives (spot-check against the count).
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j)
      CHECK_FALSE(brute_force_isomorphic(classes[i], classes[j]).isomorphic);
}

TEST_CASE("suite registry") {
  CHECK_THROWS_AS(run_suite("no-such-suite"), ArgumentError);
  const auto& names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "glue") != names.end());
  CHECK(std::find(names.begin(), names.end(), "trees") != names.end());
}

TEST_CASE("cheap suites pass") {
  SuiteParams p;
  p.jobs = 4;
  p.pairs = 40;  // keep the unit test fast; full sizes run in acceptance
  for (const char* name : {"figure1", "srg-s1", "trees", "spectra", "truncation",
                           "complement", "monotonicity", "connectivity"}) {
    SuiteReport rep = run_suite(name, p);
    INFO(rep.text_report());
    CHECK(rep.passed());
    CHECK(rep.cases > 0);
  }
}

TEST_CASE("suite reports are reproducible and informative") {
  SuiteParams p;
  p.pairs = 25;
  SuiteReport a = run_suite("trees", p);
  SuiteReport b = run_suite("trees", p);
  CHECK(a.cases == b.cases);
  CHECK(a.failures.size() == b.failures.size());
  CHECK(a.summary_line().find("trees") == 0);
  CHECK(a.summary_line().find("seed=") != std::string::npos);
}
