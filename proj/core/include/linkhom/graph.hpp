#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linkhom/errors.hpp"

namespace linkhom {

struct Edge {
  int id = 0;
  int tail = 0;
  int head = 0;

  bool operator==(const Edge&) const = default;
};

// Finite multigraph (loops and parallel edges allowed) with one color per
// connected component. Immutable after construction.
class AbstractGraph {
 public:
  AbstractGraph() = default;

  // Colors 1..n assigned by smallest vertex id per component.
  static AbstractGraph make(std::vector<int> vertices, std::vector<Edge> edges);
  // Colors supplied by the caller (per vertex). The label set may be any set
  // of distinct ints but must partition exactly into connected components and
  // must be ordered consistently with smallest-vertex order.
  static AbstractGraph make_colored(std::vector<int> vertices, std::vector<Edge> edges,
                                    std::map<int, int> vertex_color);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const;
  bool has_vertex(int v) const;

  int vertex_color(int v) const;
  int edge_color(int e) const;
  const std::vector<int>& colors() const { return colors_; }
  int color_count() const { return static_cast<int>(colors_.size()); }

  std::vector<int> component_vertices(int color) const;
  std::vector<int> component_edges(int color) const;  // ascending edge ids
  // Incident edge ids at v in ascending order (loops listed once).
  std::vector<int> incident_edges(int v) const;
  int degree(int v) const;  // loops count twice

  // First Betti number E - V + 1 of a component.
  int betti(int color) const;

  bool operator==(const AbstractGraph&) const = default;

 private:
  void finish(std::map<int, int> vertex_color);

  std::vector<int> vertices_;  // sorted, unique
  std::vector<Edge> edges_;    // sorted by id
  std::map<int, int> vertex_color_;
  std::map<int, int> edge_color_;
  std::vector<int> colors_;  // sorted
};

// Simple cycle in canonical form: vertices distinct, vertices[0] is the
// smallest, edges[k] = (edge id, traversed tail->head?) joins vertices[k] to
// vertices[k+1 mod n]. Loops have one vertex and one edge.
struct Cycle {
  std::vector<int> vertices;
  std::vector<std::pair<int, bool>> edges;

  bool operator==(const Cycle& o) const { return vertices == o.vertices && edges == o.edges; }
  bool operator<(const Cycle& o) const;
  std::string str() const;
};

// At most one simple cycle per color; the abstract shadow of a constituent
// link.
struct CycleSelection {
  std::map<int, Cycle> cycles;  // color -> cycle

  bool operator==(const CycleSelection& o) const { return cycles == o.cycles; }
  bool operator<(const CycleSelection& o) const { return cycles < o.cycles; }
  std::string str() const;
};

struct SpanningTree {
  int color = 0;
  int root = 0;
  std::set<int> tree_edges;
  // vertex -> (parent vertex, connecting edge); absent for the root.
  std::map<int, std::pair<int, int>> parent;
  std::map<int, int> depth;
  std::vector<int> non_tree_edges;  // ascending; index j-1 names x_{color,j}
};

// Connected components as subgraphs, keyed by color.
std::map<int, AbstractGraph> components(const AbstractGraph& g);

// Deterministic BFS tree: rooted at the component's smallest vertex, frontier
// in discovery order, incident edges in id order.
SpanningTree spanning_tree(const AbstractGraph& g, int color);

// Unique tree path from head(edge) back to tail(edge); empty for loops.
// Steps are (edge id, traversed tail->head?).
std::vector<std::pair<int, bool>> tree_path(const AbstractGraph& g, int color, int edge_id);

// All simple cycles of the component in canonical form, sorted. Throws
// CapExceeded past `cap` cycles.
std::vector<Cycle> simple_cycles(const AbstractGraph& g, int color, size_t cap = 10000);

// Every selection of at most one cycle per color and at least one cycle in
// total; with `required` set, only selections containing a cycle of that
// color. Sorted deterministically.
std::vector<CycleSelection> constituent_selections(const AbstractGraph& g,
                                                   std::optional<int> required = std::nullopt,
                                                   size_t cap = 10000);

}  // namespace linkhom
