#include "core/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace graphfp {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph path_with_loop(int n) {
  Graph g = path_graph(n);
  g.set_loop(n - 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.node_count();
  Graph g(na + b.node_count());
  for (int i = 0; i < na; ++i) {
    if (a.has_loop(i)) g.set_loop(i);
    for (int j : a.neighbors(i))
      if (i < j) g.add_edge(i, j);
  }
  for (int i = 0; i < b.node_count(); ++i) {
    if (b.has_loop(i)) g.set_loop(na + i);
    for (int j : b.neighbors(i))
      if (i < j) g.add_edge(na + i, na + j);
  }
  return g;
}

Graph prism_graph(int k) {
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(k + i, k + (i + 1) % k);
    g.add_edge(i, k + i);
  }
  return g;
}

Graph antiprism_graph(int k) {
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(k + i, k + (i + 1) % k);
    g.add_edge(i, k + i);
    g.add_edge(i, k + (i + 1) % k);
  }
  return g;
}

Graph wheel_graph(int k) {
  Graph g(k + 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(i, k);
  }
  return g;
}

Graph shrikhande_graph() {
  // Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
  Graph g(16);
  auto id = [](int a, int b) { return ((a & 3) << 2) | (b & 3); };
  const int dirs[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto& d : dirs) {
        int u = id(a, b), v = id(a + d[0], b + d[1]);
        if (!g.has_edge(u, v)) g.add_edge(u, v);
      }
  return g;
}

Graph rook_graph_4x4() {
  Graph g(16);
  for (int i = 0; i < 16; ++i)
    for (int j = i + 1; j < 16; ++j)
      if (i / 4 == j / 4 || i % 4 == j % 4) g.add_edge(i, j);
  return g;
}

Graph figure1_graph() {
  // 0..7 form an 8-cycle, 9 is a high-degree center, 8 and 10 are pendants.
  Graph g(11);
  for (int i = 0; i + 1 < 8; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, 7);
  for (int x : {0, 1, 4, 5, 6, 8}) g.add_edge(x, 9);
  g.add_edge(1, 10);
  g.add_edge(3, 10);
  return g;
}

namespace {

std::string data_file_path(const std::string& name) {
  if (const char* env = std::getenv("GRAPHFP_DATA_DIR"))
    return std::string(env) + "/" + name;
  return std::string(GRAPHFP_DATA_DIR) + "/" + name;
}

AppendixSrg load_appendix_srg() {
  const std::string path = data_file_path("appendix_srg35.txt");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture data: " + path);
  std::string header;
  std::getline(in, header);
  int u = -1, v = -1;
  if (std::sscanf(header.c_str(), "u=%d v=%d", &u, &v) != 2)
    throw std::runtime_error("bad fixture header in " + path);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<int> row;
    int x;
    while (ls >> x) row.push_back(x);
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::runtime_error("ragged fixture matrix in " + path);
    for (int j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i])
        throw std::runtime_error("asymmetric fixture matrix in " + path);
      if (rows[i][j]) g.add_edge(i, j);
    }
  }
  return {std::move(g), u, v};
}

Graph icosahedron_graph() {
  // Pentagonal antiprism on 1..10 plus apexes 0 and 11.
  Graph g(12);
  for (int i = 1; i <= 5; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % 5 + 1);
    g.add_edge(i + 5, i % 5 + 6);
    g.add_edge(11, i + 5);
    g.add_edge(i, i + 5);
    g.add_edge(i, i % 5 + 6);
  }
  return g;
}

struct Dodecahedron {
  Graph graph;
  std::array<int, 3> face;
};

Dodecahedron dodecahedron_graph() {
  // Dual of the icosahedron: one node per triangle, adjacency = shared edge.
  // Every edge of the icosahedron lies on exactly two triangles, so the
  // 3-cliques are precisely the 20 faces.
  Graph ico = icosahedron_graph();
  std::vector<std::array<int, 3>> tris;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      for (int k = j + 1; k < 12; ++k)
        if (ico.has_edge(i, j) && ico.has_edge(i, k) && ico.has_edge(j, k))
          tris.push_back({i, j, k});
  Graph g(static_cast<int>(tris.size()));
  for (size_t a = 0; a < tris.size(); ++a)
    for (size_t b = a + 1; b < tris.size(); ++b) {
      int shared = 0;
      for (int x : tris[a])
        for (int y : tris[b])
          if (x == y) ++shared;
      if (shared == 2) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  // The triangles around icosahedron vertex 0 bound one pentagonal face of
  // the dual; any three of them share that face.
  std::array<int, 3> face{};
  int found = 0;
  for (size_t a = 0; a < tris.size() && found < 3; ++a)
    if (tris[a][0] == 0) face[found++] = static_cast<int>(a);
  return {std::move(g), face};
}

}  // namespace

const AppendixSrg& appendix_srg() {
  static const AppendixSrg fixture = load_appendix_srg();
  return fixture;
}

const std::vector<PolyhedronFixture>& polyhedron_fixtures() {
  static const std::vector<PolyhedronFixture> list = [] {
    std::vector<PolyhedronFixture> v;
    v.push_back({"k4", complete_graph(4), {0, 1, 2}});
    // Side face of a prism is {i, i+1, k+i, k+i+1}.
    v.push_back({"prism3", prism_graph(3), {0, 1, 3}});
    v.push_back({"cube", prism_graph(4), {0, 1, 4}});
    v.push_back({"prism5", prism_graph(5), {0, 1, 5}});
    v.push_back({"prism6", prism_graph(6), {0, 1, 6}});
    // Antiprism triangles: {i, i+1, k+i+1}.
    v.push_back({"octahedron", antiprism_graph(3), {0, 1, 4}});
    v.push_back({"antiprism4", antiprism_graph(4), {0, 1, 5}});
    v.push_back({"antiprism5", antiprism_graph(5), {0, 1, 6}});
    v.push_back({"antiprism6", antiprism_graph(6), {0, 1, 7}});
    v.push_back({"wheel5", wheel_graph(5), {0, 1, 5}});
    v.push_back({"wheel6", wheel_graph(6), {0, 1, 6}});
    v.push_back({"icosahedron", icosahedron_graph(), {0, 1, 2}});
    auto dodeca = dodecahedron_graph();
    v.push_back({"dodecahedron", std::move(dodeca.graph), dodeca.face});
    return v;
  }();
  return list;
}

const std::map<std::string, Graph>& fixtures() {
  static const std::map<std::string, Graph> catalog = [] {
    std::map<std::string, Graph> m;
    for (int n = 3; n <= 8; ++n) {
      m["p" + std::to_string(n)] = path_graph(n);
      m["p" + std::to_string(n) + "-loop"] = path_with_loop(n);
    }
    m["c6"] = cycle_graph(6);
    m["2k3"] = disjoint_union(complete_graph(3), complete_graph(3));
    m["figure1"] = figure1_graph();
    m["shrikhande"] = shrikhande_graph();
    m["rook44"] = rook_graph_4x4();
    const auto& app = appendix_srg();
    m["appendix-srg"] = app.graph;
    auto glued = glue_pair(app.graph, app.u, app.v);
    m["glued-g1"] = glued.first;
    m["glued-g2"] = glued.second;
    for (const auto& p : polyhedron_fixtures()) m[p.name] = p.graph;
    return m;
  }();
  return catalog;
}

}  // namespace graphfp
