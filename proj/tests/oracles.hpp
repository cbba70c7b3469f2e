#pragma once

// Test-side oracles, written independently of the library internals: linking
// numbers by signed crossing counting, simple-cycle counting by exhaustive
// walk enumeration, Magnus expansion by a direct one-pass polynomial
// multiplication, and a random link-code generator.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "linkhom/diagram.hpp"
#include "linkhom/magnus.hpp"

namespace oracles {

// lk(i,j) = sum of signs over crossings where component j passes under
// component i. On a planar diagram this equals half the total signed count;
// for arbitrary (virtual) codes it is exactly the degree-2 longitude
// coefficient, so it is the quantity the library must reproduce.
inline long long linking_number(const linkhom::EmbeddingCode& code, int over_color,
                                int under_color) {
  std::map<int, int> crossing_over_color, crossing_sign;
  for (const auto& [eid, events] : code.passages)
    for (const auto& ev : events)
      if (ev.role == linkhom::Role::Over) {
        crossing_over_color[ev.crossing] = code.graph.edge_color(eid);
        crossing_sign[ev.crossing] = ev.sign;
      }
  long long lk = 0;
  for (const auto& [eid, events] : code.passages) {
    if (code.graph.edge_color(eid) != under_color) continue;
    for (const auto& ev : events)
      if (ev.role == linkhom::Role::Under && crossing_over_color.at(ev.crossing) == over_color)
        lk += crossing_sign.at(ev.crossing);
  }
  return lk;
}

// Number of simple cycles of one component, counted as distinct edge sets of
// closed walks with no repeated vertex. Exponential and tiny on purpose.
inline size_t count_simple_cycles(const linkhom::AbstractGraph& g, int color) {
  std::set<std::set<int>> found;
  std::vector<int> verts = g.component_vertices(color);
  for (int start : verts) {
    // walk state: current vertex, visited vertices, edge set used
    struct Frame {
      int at;
      std::set<int> visited;
      std::set<int> used;
    };
    std::vector<Frame> stack{{start, {start}, {}}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      for (const linkhom::Edge& e : g.edges()) {
        if (g.edge_color(e.id) != color || f.used.count(e.id)) continue;
        int to = -1;
        if (e.tail == f.at)
          to = e.head;
        else if (e.head == f.at)
          to = e.tail;
        else
          continue;
        if (to == start && (f.used.size() >= 1 || e.tail == e.head)) {
          auto cyc = f.used;
          cyc.insert(e.id);
          // a 2-cycle needs parallel edges, not the same edge twice
          if (cyc.size() >= 2 || e.tail == e.head) found.insert(cyc);
          continue;
        }
        if (f.visited.count(to)) continue;
        Frame g2 = f;
        g2.at = to;
        g2.visited.insert(to);
        g2.used.insert(e.id);
        stack.push_back(g2);
      }
    }
  }
  return found.size();
}

// Independent Magnus expansion: monomials as color sequences, multiplication
// by concatenation, same-color repetition killed on the spot, inverses by the
// finite geometric series. Only the color of each generator matters here, so
// it checks single-index universes.
using Poly = std::map<std::vector<int>, long long>;

inline Poly poly_one() { return {{{}, 1}}; }

inline Poly poly_mul(const Poly& a, const Poly& b, int max_colors) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      if (static_cast<int>(m.size()) > max_colors) continue;
      std::set<int> distinct(m.begin(), m.end());
      if (distinct.size() != m.size()) continue;
      out[m] += ca * cb;
      if (out[m] == 0) out.erase(m);
    }
  return out;
}

inline Poly poly_gen(int color) { return {{{}, 1}, {{color}, 1}}; }

inline Poly poly_inv(const Poly& a, int max_colors) {
  Poly x = a;
  const std::vector<int> unit;
  x[unit] -= 1;
  if (x[unit] == 0) x.erase(unit);
  Poly out = poly_one(), pw = poly_one();
  long long sign = -1;
  for (int k = 1; k <= max_colors; ++k) {
    pw = poly_mul(pw, x, max_colors);
    for (const auto& [m, c] : pw) out[m] += sign * c;
    sign = -sign;
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

inline Poly poly_expand(const std::vector<std::pair<int, int>>& word, int max_colors) {
  Poly out = poly_one();
  for (const auto& [color, exp] : word) {
    Poly g = poly_gen(color);
    out = poly_mul(out, exp > 0 ? g : poly_inv(g, max_colors), max_colors);
  }
  return out;
}

// Random valid link code: 2-3 circle components, up to `max_crossings`
// crossings placed between uniformly random (possibly equal) edges, event
// order shuffled per edge. Often virtual; always passes validation.
inline linkhom::EmbeddingCode random_link_code(std::mt19937& rng, int max_crossings = 8) {
  using namespace linkhom;
  int ncomp = 2 + static_cast<int>(rng() % 2);
  std::vector<int> vertices;
  std::vector<Edge> edges;
  for (int i = 1; i <= ncomp; ++i) {
    vertices.push_back(i);
    edges.push_back({i, i, i});
  }
  int ncross = static_cast<int>(rng() % (max_crossings + 1));
  std::map<int, std::vector<CrossingEvent>> passages;
  for (int i = 1; i <= ncomp; ++i) passages[i] = {};
  for (int c = 1; c <= ncross; ++c) {
    int over = 1 + static_cast<int>(rng() % ncomp);
    int under = 1 + static_cast<int>(rng() % ncomp);
    int sign = (rng() % 2) ? +1 : -1;
    passages[over].push_back({c, Role::Over, sign});
    passages[under].push_back({c, Role::Under, sign});
  }
  for (auto& [eid, events] : passages) std::shuffle(events.begin(), events.end(), rng);
  EmbeddingCode code;
  code.graph = AbstractGraph::make(vertices, edges);
  code.passages = std::move(passages);
  for (int i = 1; i <= ncomp; ++i) code.rotations[i] = {{i, false}, {i, true}};
  return code;
}

}  // namespace oracles
