#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "linkhom/graph.hpp"
#include "oracles.hpp"

using namespace linkhom;

namespace {

AbstractGraph theta3() {
  return AbstractGraph::make({1, 2}, {{1, 1, 2}, {2, 1, 2}, {3, 1, 2}});
}

AbstractGraph k4() {
  return AbstractGraph::make({1, 2, 3, 4},
                             {{1, 1, 2}, {2, 1, 3}, {3, 1, 4}, {4, 2, 3}, {5, 2, 4}, {6, 3, 4}});
}

AbstractGraph random_graph(std::mt19937& rng) {
  int n = 2 + static_cast<int>(rng() % 5);
  std::vector<int> verts;
  for (int v = 1; v <= n; ++v) verts.push_back(v);
  std::vector<Edge> edges;
  // spanning path keeps it connected, then extra random edges
  for (int v = 1; v < n; ++v) edges.push_back({v, v, v + 1});
  int extra = static_cast<int>(rng() % 4);
  int id = n;
  for (int k = 0; k < extra; ++k) {
    int a = 1 + static_cast<int>(rng() % n), b = 1 + static_cast<int>(rng() % n);
    edges.push_back({id++, a, b});
  }
  return AbstractGraph::make(verts, edges);
}

}  // namespace

TEST_CASE("theta graph basics") {
  AbstractGraph g = theta3();
  CHECK(g.color_count() == 1);
  CHECK(g.betti(1) == 2);
  CHECK(g.degree(1) == 3);
  CHECK(simple_cycles(g, 1).size() == 3);
}

TEST_CASE("K4 has seven simple cycles") {
  AbstractGraph g = k4();
  CHECK(simple_cycles(g, 1).size() == 7);
  CHECK(oracles::count_simple_cycles(g, 1) == 7);
}

TEST_CASE("loops and parallel edges") {
  AbstractGraph g = AbstractGraph::make({1, 2}, {{1, 1, 1}, {2, 1, 2}, {3, 2, 1}});
  CHECK(g.degree(1) == 4);
  CHECK(g.betti(1) == 2);
  auto cycles = simple_cycles(g, 1);
  CHECK(cycles.size() == 2);
  CHECK(oracles::count_simple_cycles(g, 1) == 2);
}

TEST_CASE("cycle enumeration matches the exhaustive oracle") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    AbstractGraph g = random_graph(rng);
    auto cycles = simple_cycles(g, 1, 100000);
    std::set<Cycle> dedup(cycles.begin(), cycles.end());
    CHECK(dedup.size() == cycles.size());
    CHECK(cycles.size() == oracles::count_simple_cycles(g, 1));
  }
}

TEST_CASE("spanning tree accounts for the Betti number") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    AbstractGraph g = random_graph(rng);
    SpanningTree t = spanning_tree(g, 1);
    CHECK(static_cast<int>(t.non_tree_edges.size()) == g.betti(1));
    CHECK(t.tree_edges.size() == g.component_vertices(1).size() - 1);
    for (int e : t.non_tree_edges) {
      auto path = tree_path(g, 1, e);
      const Edge& ed = g.edge(e);
      if (ed.tail == ed.head) CHECK(path.empty());
    }
  }
}

TEST_CASE("tree_path rejects tree edges") {
  AbstractGraph g = theta3();
  SpanningTree t = spanning_tree(g, 1);
  int tree_edge = *t.tree_edges.begin();
  CHECK_THROWS_AS(tree_path(g, 1, tree_edge), EdgeInTree);
}

TEST_CASE("constituent selection count") {
  // two components with c1 and c2 cycles give (c1+1)(c2+1)-1 selections
  std::vector<int> verts = {1, 2, 3, 4};
  std::vector<Edge> edges = {{1, 1, 2}, {2, 1, 2}, {3, 1, 2},   // theta: 3 cycles
                             {4, 3, 4}, {5, 3, 4}};             // bigon: 1 cycle
  AbstractGraph g = AbstractGraph::make(verts, edges);
  CHECK(constituent_selections(g).size() == 4 * 2 - 1);
  CHECK(constituent_selections(g, 2).size() == 4);
  CHECK(constituent_selections(g, 1).size() == 3 * 2);
}

TEST_CASE("cycle cap throws") {
  AbstractGraph g = k4();
  CHECK_THROWS_AS(simple_cycles(g, 1, 3), CapExceeded);
}

TEST_CASE("colored construction validates the partition") {
  std::vector<int> verts = {1, 2};
  std::vector<Edge> edges = {{1, 1, 1}, {2, 2, 2}};
  CHECK_NOTHROW(AbstractGraph::make_colored(verts, edges, {{1, 1}, {2, 2}}));
  CHECK_NOTHROW(AbstractGraph::make_colored(verts, edges, {{1, 3}, {2, 7}}));
  CHECK_THROWS_AS(AbstractGraph::make_colored(verts, edges, {{1, 1}, {2, 1}}), ValidationError);
  CHECK_THROWS_AS(AbstractGraph::make_colored(verts, edges, {{1, 7}, {2, 3}}), ValidationError);
}
