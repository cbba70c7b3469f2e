#include "linkhom/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace linkhom {

namespace {

std::map<int, int> color_by_bfs(const std::vector<int>& vertices,
                                const std::vector<Edge>& edges) {
  std::map<int, std::vector<int>> adj;
  for (int v : vertices) adj[v];
  for (const Edge& e : edges) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::map<int, int> color;
  int next = 1;
  for (int v : vertices) {
    if (color.count(v)) continue;
    std::deque<int> q{v};
    color[v] = next;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : adj[u])
        if (!color.count(w)) {
          color[w] = next;
          q.push_back(w);
        }
    }
    ++next;
  }
  return color;
}

}  // namespace

AbstractGraph AbstractGraph::make(std::vector<int> vertices, std::vector<Edge> edges) {
  AbstractGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  std::sort(g.vertices_.begin(), g.vertices_.end());
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  g.finish(color_by_bfs(g.vertices_, g.edges_));
  return g;
}

AbstractGraph AbstractGraph::make_colored(std::vector<int> vertices, std::vector<Edge> edges,
                                          std::map<int, int> vertex_color) {
  AbstractGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  std::sort(g.vertices_.begin(), g.vertices_.end());
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });

  // Stored labels must induce exactly the connected-component partition,
  // ordered consistently with smallest-vertex order.
  std::map<int, int> canonical = color_by_bfs(g.vertices_, g.edges_);
  std::map<int, int> canon_to_given;
  for (int v : g.vertices_) {
    auto it = vertex_color.find(v);
    if (it == vertex_color.end())
      throw ValidationError("vertex " + std::to_string(v) + " has no component label");
    auto [pos, inserted] = canon_to_given.emplace(canonical[v], it->second);
    if (!inserted && pos->second != it->second)
      throw ValidationError("component labels split a connected component at vertex " +
                            std::to_string(v));
  }
  std::set<int> seen;
  int prev = 0;
  bool first = true;
  for (const auto& [canon, given] : canon_to_given) {
    if (!seen.insert(given).second)
      throw ValidationError("component label " + std::to_string(given) +
                            " used for two distinct components");
    if (!first && given <= prev)
      throw ValidationError("component labels out of order relative to smallest vertex ids");
    prev = given;
    first = false;
  }
  g.finish(std::move(vertex_color));
  return g;
}

void AbstractGraph::finish(std::map<int, int> vertex_color) {
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw ValidationError("duplicate vertex id");
  std::set<int> vset(vertices_.begin(), vertices_.end());
  std::set<int> eids;
  for (const Edge& e : edges_) {
    if (!eids.insert(e.id).second)
      throw ValidationError("duplicate edge id " + std::to_string(e.id));
    if (!vset.count(e.tail) || !vset.count(e.head))
      throw ValidationError("edge " + std::to_string(e.id) + " has an unknown endpoint");
  }
  vertex_color_ = std::move(vertex_color);
  for (const Edge& e : edges_) edge_color_[e.id] = vertex_color_.at(e.tail);
  std::set<int> cs;
  for (const auto& [v, c] : vertex_color_) cs.insert(c);
  colors_.assign(cs.begin(), cs.end());
}

const Edge& AbstractGraph::edge(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, int v) { return e.id < v; });
  if (it == edges_.end() || it->id != id)
    throw ValidationError("no edge " + std::to_string(id));
  return *it;
}

bool AbstractGraph::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int AbstractGraph::vertex_color(int v) const {
  auto it = vertex_color_.find(v);
  if (it == vertex_color_.end()) throw ValidationError("no vertex " + std::to_string(v));
  return it->second;
}

int AbstractGraph::edge_color(int e) const {
  auto it = edge_color_.find(e);
  if (it == edge_color_.end()) throw ValidationError("no edge " + std::to_string(e));
  return it->second;
}

std::vector<int> AbstractGraph::component_vertices(int color) const {
  std::vector<int> r;
  for (int v : vertices_)
    if (vertex_color_.at(v) == color) r.push_back(v);
  return r;
}

std::vector<int> AbstractGraph::component_edges(int color) const {
  std::vector<int> r;
  for (const Edge& e : edges_)
    if (edge_color_.at(e.id) == color) r.push_back(e.id);
  return r;
}

std::vector<int> AbstractGraph::incident_edges(int v) const {
  std::vector<int> r;
  for (const Edge& e : edges_)
    if (e.tail == v || e.head == v) r.push_back(e.id);
  return r;
}

int AbstractGraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.tail == v) ++d;
    if (e.head == v) ++d;
  }
  return d;
}

int AbstractGraph::betti(int color) const {
  int e = static_cast<int>(component_edges(color).size());
  int v = static_cast<int>(component_vertices(color).size());
  return e - v + 1;
}

bool Cycle::operator<(const Cycle& o) const {
  if (vertices.size() != o.vertices.size()) return vertices.size() < o.vertices.size();
  if (vertices != o.vertices) return vertices < o.vertices;
  return edges < o.edges;
}

std::string Cycle::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) os << " ";
    os << edges[i].first;
  }
  os << ")";
  return os.str();
}

std::string CycleSelection::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, cyc] : cycles) {
    if (!first) os << " ";
    os << c << ":" << cyc.str();
    first = false;
  }
  return os.str();
}

std::map<int, AbstractGraph> components(const AbstractGraph& g) {
  std::map<int, AbstractGraph> r;
  for (int c : g.colors()) {
    std::vector<int> vs = g.component_vertices(c);
    std::vector<Edge> es;
    for (int e : g.component_edges(c)) es.push_back(g.edge(e));
    std::map<int, int> col;
    for (int v : vs) col[v] = c;
    r.emplace(c, AbstractGraph::make_colored(std::move(vs), std::move(es), std::move(col)));
  }
  return r;
}

SpanningTree spanning_tree(const AbstractGraph& g, int color) {
  std::vector<int> vs = g.component_vertices(color);
  if (vs.empty()) throw ValidationError("no component with color " + std::to_string(color));
  SpanningTree t;
  t.color = color;
  t.root = vs.front();
  std::set<int> visited{t.root};
  t.depth[t.root] = 0;
  std::deque<int> q{t.root};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int eid : g.incident_edges(u)) {
      const Edge& e = g.edge(eid);
      int w = (e.tail == u) ? e.head : e.tail;
      if (visited.count(w)) continue;
      visited.insert(w);
      t.tree_edges.insert(eid);
      t.parent[w] = {u, eid};
      t.depth[w] = t.depth[u] + 1;
      q.push_back(w);
    }
  }
  for (int eid : g.component_edges(color))
    if (!t.tree_edges.count(eid)) t.non_tree_edges.push_back(eid);
  return t;
}

std::vector<std::pair<int, bool>> tree_path(const AbstractGraph& g, int color, int edge_id) {
  SpanningTree t = spanning_tree(g, color);
  if (t.tree_edges.count(edge_id))
    throw EdgeInTree("edge " + std::to_string(edge_id) + " lies in the spanning tree");
  const Edge& e = g.edge(edge_id);
  if (e.tail == e.head) return {};

  auto ascend = [&](int v) {
    std::vector<int> chain{v};
    while (t.parent.count(chain.back())) chain.push_back(t.parent.at(chain.back()).first);
    return chain;
  };
  std::vector<int> up = ascend(e.head);
  std::vector<int> down = ascend(e.tail);
  // Trim common suffix above the meeting vertex.
  while (up.size() > 1 && down.size() > 1 && up[up.size() - 2] == down[down.size() - 2]) {
    up.pop_back();
    down.pop_back();
  }
  std::vector<std::pair<int, bool>> path;
  for (size_t i = 0; i + 1 < up.size(); ++i) {
    int eid = t.parent.at(up[i]).second;
    path.emplace_back(eid, g.edge(eid).tail == up[i]);
  }
  for (size_t i = down.size() - 1; i >= 1; --i) {
    int eid = t.parent.at(down[i - 1]).second;
    path.emplace_back(eid, g.edge(eid).tail == down[i]);
  }
  return path;
}

namespace {

Cycle canonical_cycle(const std::vector<int>& verts,
                      const std::vector<std::pair<int, bool>>& edges) {
  size_t k = verts.size();
  if (k == 1) {
    Cycle c;
    c.vertices = verts;
    c.edges = {{edges[0].first, true}};  // loops traversed forward
    return c;
  }
  // verts[0] is the smallest by construction; compare the two directions.
  Cycle fwd;
  fwd.vertices = verts;
  fwd.edges = edges;
  Cycle rev;
  rev.vertices.push_back(verts[0]);
  for (size_t i = k - 1; i >= 1; --i) rev.vertices.push_back(verts[i]);
  for (size_t i = 0; i < k; ++i) {
    const auto& [eid, f] = edges[k - 1 - i];
    rev.edges.emplace_back(eid, !f);
  }
  return rev < fwd ? rev : fwd;
}

}  // namespace

std::vector<Cycle> simple_cycles(const AbstractGraph& g, int color, size_t cap) {
  std::set<Cycle> found;
  std::vector<int> vs = g.component_vertices(color);
  std::set<int> comp(vs.begin(), vs.end());

  struct Step {
    int edge;
    int to;
    bool forward;
  };
  std::map<int, std::vector<Step>> adj;
  for (int eid : g.component_edges(color)) {
    const Edge& e = g.edge(eid);
    if (e.tail == e.head) {
      adj[e.tail].push_back({eid, e.head, true});
    } else {
      adj[e.tail].push_back({eid, e.head, true});
      adj[e.head].push_back({eid, e.tail, false});
    }
  }

  for (int start : vs) {
    std::vector<int> pverts{start};
    std::vector<std::pair<int, bool>> pedges;
    std::set<int> on_path{start};

    auto dfs = [&](auto&& self, int u) -> void {
      for (const Step& s : adj[u]) {
        if (s.to == start) {
          if (u == start) {
            // loop edge at the start vertex: a 1-cycle
            found.insert(canonical_cycle({start}, {{s.edge, true}}));
          } else if (!pedges.empty() && s.edge != pedges.back().first) {
            pedges.emplace_back(s.edge, s.forward);
            found.insert(canonical_cycle(pverts, pedges));
            pedges.pop_back();
          }
          if (found.size() > cap)
            throw CapExceeded("cycle enumeration exceeded cap of " + std::to_string(cap));
          continue;
        }
        if (s.to < start || on_path.count(s.to)) continue;
        if (g.edge(s.edge).tail == g.edge(s.edge).head) continue;
        pverts.push_back(s.to);
        pedges.emplace_back(s.edge, s.forward);
        on_path.insert(s.to);
        self(self, s.to);
        on_path.erase(s.to);
        pedges.pop_back();
        pverts.pop_back();
      }
    };
    dfs(dfs, start);
  }
  return {found.begin(), found.end()};
}

std::vector<CycleSelection> constituent_selections(const AbstractGraph& g,
                                                   std::optional<int> required, size_t cap) {
  std::vector<int> cols = g.colors();
  std::map<int, std::vector<Cycle>> per_color;
  for (int c : cols) per_color[c] = simple_cycles(g, c, cap);

  std::vector<CycleSelection> out;
  CycleSelection cur;
  auto rec = [&](auto&& self, size_t ci) -> void {
    if (ci == cols.size()) {
      if (cur.cycles.empty()) return;
      if (required && !cur.cycles.count(*required)) return;
      out.push_back(cur);
      return;
    }
    int c = cols[ci];
    self(self, ci + 1);  // skip this color
    for (const Cycle& cyc : per_color[c]) {
      cur.cycles[c] = cyc;
      self(self, ci + 1);
      cur.cycles.erase(c);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace linkhom
