#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "core/fixtures.hpp"
#include "core/index_store.hpp"
#include "core/suites.hpp"

using namespace graphfp;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

IndexRecord make_record(const Graph& g, const std::string& id) {
  IndexRecord rec;
  rec.fingerprint = fingerprint_s(g, 2, LabelMode::hashed, true);
  rec.id = id;
  rec.source = "test";
  return rec;
}

}  // namespace

TEST_CASE("store round trip") {
  TempFile tmp("gfp_store_roundtrip.tsv");
  IndexStore store;
  store.append(make_record(cycle_graph(5), "c5"));
  store.append(make_record(path_graph(5), "p5"));
  store.save(tmp.path);

  IndexStore back = IndexStore::load(tmp.path);
  REQUIRE(back.records().size() == 2);
  CHECK(back.records()[0].id == "c5");
  CHECK(back.records()[1].source == "test");
  CHECK(back.records()[0].fingerprint.digest64 ==
        store.records()[0].fingerprint.digest64);
}

TEST_CASE("query matches digests and confirms wide") {
  IndexStore store;
  store.append(make_record(cycle_graph(5), "c5"));
  store.append(make_record(path_graph(5), "p5"));

  auto q = fingerprint_s(cycle_graph(5), 2, LabelMode::hashed, true);
  CHECK(store.query(q) == std::vector<std::string>{"c5"});

  // A relabeled copy still finds the original.
  std::mt19937_64 rng(5);
  Graph shuffled = permuted(cycle_graph(5), random_permutation(5, rng));
  CHECK(store.query(fingerprint_s(shuffled, 2, LabelMode::hashed, true)) ==
        std::vector<std::string>{"c5"});

  // Absent graph: empty candidate set.
  CHECK(store.query(fingerprint_s(complete_graph(5), 2, LabelMode::hashed, true)).empty());

  // Different method descriptor never matches.
  auto q1 = fingerprint_s(cycle_graph(5), 1, LabelMode::hashed, true);
  CHECK(store.query(q1).empty());

  // Wide-digest confirmation rejects a fabricated 64-bit collision.
  IndexRecord forged = make_record(cycle_graph(5), "forged");
  (*forged.fingerprint.wide)[0] ^= 0xff;
  IndexStore forged_store;
  forged_store.append(forged);
  CHECK(forged_store.query(q).empty());
}

TEST_CASE("load failures") {
  CHECK_THROWS_AS(IndexStore::load("/nonexistent/gfp.tsv"), StoreError);

  TempFile tmp("gfp_store_bad.tsv");
  {
    std::ofstream out(tmp.path);
    out << "graphfp-index 1 v999\n";
  }
  CHECK_THROWS_AS(IndexStore::load(tmp.path), StoreError);

  {
    std::ofstream out(tmp.path);
    out << "graphfp-index 1 v1\n";
    out << fingerprint_s(cycle_graph(4), 2, LabelMode::hashed).line() << "\tok\tsrc\n";
    out << "garbage without tabs\n";
  }
  try {
    IndexStore::load(tmp.path);
    FAIL("expected StoreError");
  } catch (const StoreError& e) {
    CHECK(e.line() == 3);  // the corrupt record's line number
  }
}

TEST_CASE("append validates hash version") {
  IndexRecord rec = make_record(cycle_graph(4), "c4");
  rec.fingerprint.method.hash_version = "v0";
  IndexStore store;
  CHECK_THROWS_AS(store.append(rec), StoreError);
  rec.fingerprint.method.hash_version = kHashVersion;
  rec.id = "";
  CHECK_THROWS_AS(store.append(rec), StoreError);
}

TEST_CASE("catalog index has unique s2 entries at n=6") {
  // Kept small here; the full n=6 class-catalog uniqueness claim is covered
  // by the exhaustive acceptance run.
  IndexStore store;
  store.append(make_record(cycle_graph(6), "c6"));
  store.append(make_record(disjoint_union(complete_graph(3), complete_graph(3)), "2k3"));
  store.append(make_record(prism_graph(3), "prism3"));
  for (const auto& rec : store.records())
    CHECK(store.query(rec.fingerprint) == std::vector<std::string>{rec.id});
}
