// Exercises the shared library's C interface end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>

#include "graphfp.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  gfp_string_free(s);
  return out;
}

struct GraphHandle {
  gfp_graph* g = nullptr;
  ~GraphHandle() { gfp_graph_free(g); }
};

gfp_graph* must_parse(const std::string& bytes, const char* format) {
  gfp_graph* g = nullptr;
  REQUIRE(gfp_graph_parse(bytes.data(), bytes.size(), format, &g) == GFP_OK);
  return g;
}

}  // namespace

TEST_CASE("version and error strings") {
  CHECK(std::string(gfp_version()).find("hash v1") != std::string::npos);
  gfp_graph* g = nullptr;
  CHECK(gfp_graph_parse("!!!", 3, "graph6", &g) == GFP_ERR_FORMAT);
  CHECK(std::strlen(gfp_last_error()) > 0);
  CHECK(gfp_graph_parse("A_", 2, "dot", &g) == GFP_ERR_ARGUMENT);
}

TEST_CASE("parse, inspect, serialize") {
  GraphHandle h{must_parse("A_", "graph6")};
  CHECK(gfp_graph_node_count(h.g) == 2);
  CHECK(gfp_graph_edge_count(h.g) == 1);
  char* out = nullptr;
  REQUIRE(gfp_graph_serialize(h.g, "edgelist", &out) == GFP_OK);
  CHECK(take(out) == "2\n0 1\n");

  GraphHandle loopy{must_parse("2\n0 0\n0 1\n", "edgelist")};
  char* bad = nullptr;
  CHECK(gfp_graph_serialize(loopy.g, "graph6", &bad) == GFP_ERR_UNSUPPORTED);
  REQUIRE(gfp_graph_serialize(loopy.g, "sparse6", &bad) == GFP_OK);
  std::string s6 = take(bad);
  CHECK(s6[0] == ':');
}

TEST_CASE("fixtures are reachable") {
  char* names = nullptr;
  REQUIRE(gfp_fixture_names(&names) == GFP_OK);
  std::string all = take(names);
  CHECK(all.find("shrikhande") != std::string::npos);

  gfp_graph* g = nullptr;
  REQUIRE(gfp_fixture("rook44", &g) == GFP_OK);
  CHECK(gfp_graph_node_count(g) == 16);
  gfp_graph_free(g);
  CHECK(gfp_fixture("nope", &g) == GFP_ERR_ARGUMENT);
}

TEST_CASE("fingerprints through the C API") {
  gfp_graph* a = nullptr;
  gfp_graph* b = nullptr;
  REQUIRE(gfp_fixture("shrikhande", &a) == GFP_OK);
  REQUIRE(gfp_fixture("rook44", &b) == GFP_OK);

  char* la = nullptr;
  char* lb = nullptr;
  REQUIRE(gfp_fingerprint(a, "s1", "hashed", 0, 2, &la) == GFP_OK);
  REQUIRE(gfp_fingerprint(b, "s1", "hashed", 0, 2, &lb) == GFP_OK);
  CHECK(take(la) == take(lb));

  REQUIRE(gfp_fingerprint(a, "s2", "hashed", 1, 2, &la) == GFP_OK);
  REQUIRE(gfp_fingerprint(b, "s2", "hashed", 1, 2, &lb) == GFP_OK);
  std::string wa = take(la), wb = take(lb);
  CHECK(wa != wb);
  CHECK(wa.substr(0, 2) == "s ");

  CHECK(gfp_fingerprint(a, "w", "hashed", 0, 1, &la) == GFP_ERR_ARGUMENT);
  CHECK(gfp_fingerprint(a, "s99", "hashed", 0, 1, &la) == GFP_ERR_ARGUMENT);

  gfp_graph_free(a);
  gfp_graph_free(b);
}

TEST_CASE("compare through the C API") {
  GraphHandle p3a{must_parse("3\n0 1\n1 2\n", "edgelist")};
  GraphHandle p3b{must_parse("3\n0 2\n2 1\n", "edgelist")};
  GraphHandle star{must_parse("4\n0 1\n0 2\n0 3\n", "edgelist")};

  int eq = -1;
  REQUIRE(gfp_compare(p3a.g, p3b.g, "s1", nullptr, 1, &eq) == GFP_OK);
  CHECK(eq == 1);
  REQUIRE(gfp_compare(p3a.g, star.g, "s1", "exact", 1, &eq) == GFP_OK);
  CHECK(eq == 0);  // size mismatch is a verdict, not an error
  REQUIRE(gfp_compare(p3a.g, p3b.g, "w", nullptr, 1, &eq) == GFP_OK);
  CHECK(eq == 1);
  REQUIRE(gfp_compare(p3a.g, p3b.g, "t1", "hashed", 1, &eq) == GFP_OK);
  CHECK(eq == 1);
  CHECK(gfp_compare(p3a.g, p3b.g, "x1", nullptr, 1, &eq) == GFP_ERR_ARGUMENT);
}

TEST_CASE("index through the C API") {
  std::string store = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                      "/gfp_capi_store.tsv";
  gfp_graph* c6 = nullptr;
  gfp_graph* kk = nullptr;
  REQUIRE(gfp_fixture("c6", &c6) == GFP_OK);
  REQUIRE(gfp_fixture("2k3", &kk) == GFP_OK);
  const gfp_graph* graphs[2] = {c6, kk};
  const char* ids[2] = {"c6", "2k3"};
  REQUIRE(gfp_index_build(graphs, ids, nullptr, 2, "s2", store.c_str(), 2) == GFP_OK);

  char* out = nullptr;
  REQUIRE(gfp_index_query(c6, "s2", store.c_str(), &out) == GFP_OK);
  CHECK(take(out) == "c6");
  CHECK(gfp_index_query(c6, "s2", "/nonexistent/store.tsv", &out) == GFP_ERR_STORE);
  gfp_graph_free(c6);
  gfp_graph_free(kk);
  std::remove(store.c_str());
}

TEST_CASE("suites through the C API") {
  char* names = nullptr;
  REQUIRE(gfp_suite_names(&names) == GFP_OK);
  CHECK(take(names).find("figure1") != std::string::npos);

  int passed = 0;
  char* report = nullptr;
  REQUIRE(gfp_run_suite("figure1", 0, 1, 0, &passed, &report) == GFP_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("figure1 pass") == 0);
  CHECK(gfp_run_suite("bogus", 0, 1, 0, &passed, nullptr) == GFP_ERR_ARGUMENT);
}
