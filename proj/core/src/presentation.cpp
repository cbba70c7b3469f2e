#include "linkhom/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace linkhom {

const MagnusSeries& PresentationBundle::base_meridian(const Variable& v) const {
  return arcs.at(generator_edge.at(v)).front();
}

const MagnusSeries& PresentationBundle::arc_at_end(const EdgeEnd& end) const {
  const auto& a = arcs.at(end.edge);
  return end.head ? a.back() : a.front();
}

namespace {

// Arc index holding the event at `pos`: arcs split at undercrossings only.
size_t arc_index(const std::vector<CrossingEvent>& events, size_t pos) {
  size_t k = 0;
  for (size_t i = 0; i < pos; ++i)
    if (events[i].role == Role::Under) ++k;
  return k;
}

struct Resolver {
  const EmbeddingCode& code;
  PresentationBundle& b;
  // crossing id -> (edge, arc index) of its over passage
  std::map<int, std::pair<int, size_t>> over_arc_site;

  const MagnusSeries& over_arc(int crossing) const {
    const auto& [eid, k] = over_arc_site.at(crossing);
    return b.arcs.at(eid)[k];
  }

  void propagate_forward(int eid) {
    auto pit = code.passages.find(eid);
    if (pit == code.passages.end()) return;
    const auto& events = pit->second;
    auto& a = b.arcs.at(eid);
    size_t k = 0;
    for (const CrossingEvent& ev : events) {
      if (ev.role != Role::Under) continue;
      const MagnusSeries& w = over_arc(ev.crossing);
      const MagnusSeries wi = w.inverse();
      a[k + 1] = (ev.sign > 0) ? w * a[k] * wi : wi * a[k] * w;
      ++k;
    }
  }

  void propagate_backward(int eid) {
    auto pit = code.passages.find(eid);
    if (pit == code.passages.end()) return;
    const auto& events = pit->second;
    auto& a = b.arcs.at(eid);
    size_t k = a.size() - 1;
    for (auto it = events.rbegin(); it != events.rend(); ++it) {
      if (it->role != Role::Under) continue;
      const MagnusSeries& w = over_arc(it->crossing);
      const MagnusSeries wi = w.inverse();
      a[k - 1] = (it->sign > 0) ? wi * a[k] * w : w * a[k] * wi;
      --k;
    }
  }

  // Contribution of one edge-end to a vertex relation: (arc series)^{+1} for
  // an outgoing (tail) end, ^{-1} for an incoming (head) end.
  MagnusSeries end_factor(const EdgeEnd& end) const {
    const MagnusSeries& s = b.arc_at_end(end);
    return end.head ? s.inverse() : s;
  }

  // Rotation order starting from the smallest (edge id, tail-before-head) end.
  std::vector<EdgeEnd> relation_order(int v) const {
    auto it = code.rotations.find(v);
    if (it == code.rotations.end()) return {};
    std::vector<EdgeEnd> ends = it->second;
    if (ends.empty()) return ends;
    size_t start = 0;
    for (size_t i = 1; i < ends.size(); ++i)
      if (ends[i] < ends[start]) start = i;
    std::rotate(ends.begin(), ends.begin() + static_cast<long>(start), ends.end());
    return ends;
  }

  MagnusSeries relation_series(int v) const {
    MagnusSeries r = MagnusSeries::one(b.universe, b.max_degree);
    for (const EdgeEnd& end : relation_order(v)) r = r * end_factor(end);
    return r;
  }

  // Solve the relation at v for the arc of the parent tree edge at v's end,
  // then refresh all arcs of that edge from the solved one.
  void solve_vertex(int v, int parent_edge) {
    std::vector<EdgeEnd> ends = relation_order(v);
    size_t at = ends.size();
    for (size_t i = 0; i < ends.size(); ++i)
      if (ends[i].edge == parent_edge) at = i;
    if (at == ends.size())
      throw NonConvergence("parent edge missing from rotation at vertex " + std::to_string(v));

    MagnusSeries left = MagnusSeries::one(b.universe, b.max_degree);
    for (size_t i = 0; i < at; ++i) left = left * end_factor(ends[i]);
    MagnusSeries right = MagnusSeries::one(b.universe, b.max_degree);
    for (size_t i = at + 1; i < ends.size(); ++i) right = right * end_factor(ends[i]);

    // left * T^eps * right = 1
    bool outgoing = !ends[at].head;
    MagnusSeries t = outgoing ? left.inverse() * right.inverse() : right * left;
    auto& a = b.arcs.at(parent_edge);
    if (outgoing) {
      a.front() = std::move(t);
      propagate_forward(parent_edge);
    } else {
      a.back() = std::move(t);
      propagate_backward(parent_edge);
    }
  }
};

}  // namespace

PresentationBundle resolve_meridians(const EmbeddingCode& code, int max_degree) {
  validate(code);
  const AbstractGraph& g = code.graph;

  PresentationBundle b;
  std::vector<Variable> vars;
  for (int color : g.colors()) {
    SpanningTree t = spanning_tree(g, color);
    for (size_t j = 0; j < t.non_tree_edges.size(); ++j) {
      Variable v{color, static_cast<int>(j) + 1};
      vars.push_back(v);
      b.edge_generator[t.non_tree_edges[j]] = v;
      b.generator_edge[v] = t.non_tree_edges[j];
    }
    b.trees.emplace(color, std::move(t));
  }
  b.universe = make_universe(std::move(vars));
  b.max_degree = max_degree < 0 ? g.color_count() : max_degree;

  // (a) initialize: non-tree bases are pinned at 1 + X; tree arcs start at 1.
  for (const Edge& e : g.edges()) {
    size_t unders = 0;
    auto it = code.passages.find(e.id);
    if (it != code.passages.end())
      for (const CrossingEvent& ev : it->second)
        if (ev.role == Role::Under) ++unders;
    auto gen = b.edge_generator.find(e.id);
    MagnusSeries init = gen != b.edge_generator.end()
                            ? MagnusSeries::generator(b.universe, gen->second, b.max_degree)
                            : MagnusSeries::one(b.universe, b.max_degree);
    b.arcs[e.id] = std::vector<MagnusSeries>(unders + 1, init);
  }

  Resolver r{code, b, {}};
  for (const auto& [eid, events] : code.passages)
    for (size_t i = 0; i < events.size(); ++i)
      if (events[i].role == Role::Over)
        r.over_arc_site[events[i].crossing] = {eid, arc_index(events, i)};

  // Non-root vertices per color, leaves to root.
  std::map<int, std::vector<int>> solve_order;
  for (const auto& [color, t] : b.trees) {
    std::vector<int> vs;
    for (const auto& [v, p] : t.parent) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), [&](int a, int c) {
      if (t.depth.at(a) != t.depth.at(c)) return t.depth.at(a) > t.depth.at(c);
      return a < c;
    });
    solve_order[color] = std::move(vs);
  }

  auto sweep = [&]() {
    for (const Edge& e : g.edges()) r.propagate_forward(e.id);
    for (const auto& [color, vs] : solve_order)
      for (int v : vs) r.solve_vertex(v, b.trees.at(color).parent.at(v).second);
  };

  // Each sweep is exact one degree further; D+2 sweeps then a stability check.
  for (int i = 0; i < b.max_degree + 2; ++i) sweep();
  auto snapshot = b.arcs;
  sweep();
  if (b.arcs != snapshot)
    throw NonConvergence("meridian resolution failed its stability sweep");

  for (const auto& [eid, v] : b.edge_generator) {
    std::vector<std::pair<int, bool>> walk{{eid, true}};
    auto path = tree_path(g, v.color, eid);
    walk.insert(walk.end(), path.begin(), path.end());
    b.longitudes.emplace(v, walk_longitude(b, code, walk));
  }

  for (int color : g.colors()) {
    MagnusSeries ri = MagnusSeries::one(b.universe, b.max_degree);
    for (const auto& [eid, v] : b.edge_generator) {
      if (v.color != color) continue;
      ri = ri * commutator_series(b.base_meridian(v), b.longitudes.at(v));
    }
    b.surface.emplace(color, std::move(ri));
    b.root_relation.emplace(color, r.relation_series(b.trees.at(color).root));
  }
  return b;
}

MagnusSeries walk_longitude(const PresentationBundle& bundle, const EmbeddingCode& code,
                            const std::vector<std::pair<int, bool>>& walk) {
  const AbstractGraph& g = code.graph;
  MagnusSeries l = MagnusSeries::one(bundle.universe, bundle.max_degree);
  if (walk.empty()) return l;

  auto start_of = [&](const std::pair<int, bool>& step) {
    const Edge& e = g.edge(step.first);
    return step.second ? e.tail : e.head;
  };
  auto end_of = [&](const std::pair<int, bool>& step) {
    const Edge& e = g.edge(step.first);
    return step.second ? e.head : e.tail;
  };
  for (size_t i = 0; i < walk.size(); ++i) {
    if (end_of(walk[i]) != start_of(walk[(i + 1) % walk.size()]))
      throw BadWalk("walk is not a closed chain of consecutive edges");
  }

  std::map<int, std::pair<int, size_t>> over_site;
  for (const auto& [eid, events] : code.passages)
    for (size_t i = 0; i < events.size(); ++i)
      if (events[i].role == Role::Over) over_site[events[i].crossing] = {eid, arc_index(events, i)};

  for (const auto& [eid, fwd] : walk) {
    auto it = code.passages.find(eid);
    if (it == code.passages.end()) continue;
    std::vector<CrossingEvent> events = it->second;
    if (!fwd) std::reverse(events.begin(), events.end());
    for (const CrossingEvent& ev : events) {
      if (ev.role != Role::Under) continue;
      const auto& [oe, ok] = over_site.at(ev.crossing);
      const MagnusSeries& w = bundle.arcs.at(oe)[ok];
      int exp = fwd ? ev.sign : -ev.sign;
      l = l * (exp > 0 ? w : w.inverse());
    }
  }
  return l;
}

std::map<int, MagnusSeries> surface_elements(const PresentationBundle& bundle,
                                             const EmbeddingCode& code) {
  std::map<int, MagnusSeries> out;
  for (int color : code.graph.colors()) {
    MagnusSeries ri = MagnusSeries::one(bundle.universe, bundle.max_degree);
    for (const auto& [eid, v] : bundle.edge_generator) {
      if (v.color != color) continue;
      ri = ri * commutator_series(bundle.base_meridian(v), bundle.longitudes.at(v));
    }
    out.emplace(color, std::move(ri));
  }
  return out;
}

namespace {

// Recursive-descent parser for relator words.
struct WordParser {
  const std::string& s;
  size_t pos = 0;
  int lineno;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool at(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(lineno, std::string("expected '") + c + "' in relator word");
    ++pos;
  }

  int parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError(lineno, "expected a number in relator word");
    return std::stoi(s.substr(start, pos - start));
  }

  GroupWord parse_atom() {
    skip_ws();
    if (pos >= s.size()) throw ParseError(lineno, "unexpected end of relator word");
    if (s[pos] == '[') {
      ++pos;
      GroupWord a = parse_word("],");
      expect(',');
      GroupWord b = parse_word("]");
      expect(']');
      return GroupWord::commutator(a, b);
    }
    if (s[pos] == 'm') {
      ++pos;
      int i = parse_uint();
      expect(',');
      int j = parse_uint();
      GroupWord w;
      w.push({i, j}, 1);
      return w;
    }
    throw ParseError(lineno, std::string("unexpected '") + s[pos] + "' in relator word");
  }

  GroupWord parse_word(const std::string& stops) {
    GroupWord w;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (stops.find(s[pos]) != std::string::npos) break;
      GroupWord a = parse_atom();
      skip_ws();
      int exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        skip_ws();
        int sign = 1;
        if (pos < s.size() && s[pos] == '-') {
          sign = -1;
          ++pos;
        }
        exp = sign * parse_uint();
      }
      GroupWord factor = exp < 0 ? a.inverse() : a;
      for (int k = 0; k < std::abs(exp); ++k) w.append(factor);
    }
    return w;
  }
};

}  // namespace

DirectPresentation parse_presentation(const std::string& text) {
  DirectPresentation p;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "gen") {
      std::string tok;
      if (!(ls >> tok) || tok.size() < 4 || tok[0] != 'm')
        throw ParseError(lineno, "expected: gen m<i>,<j>");
      size_t comma = tok.find(',');
      if (comma == std::string::npos) throw ParseError(lineno, "expected: gen m<i>,<j>");
      try {
        p.generators.push_back({std::stoi(tok.substr(1, comma - 1)),
                                std::stoi(tok.substr(comma + 1))});
      } catch (const std::exception&) {
        throw ParseError(lineno, "expected: gen m<i>,<j>");
      }
    } else if (kind == "rel") {
      std::string rest;
      std::getline(ls, rest);
      WordParser wp{rest, 0, lineno};
      GroupWord w = wp.parse_word("");
      // trim for the record
      size_t a = rest.find_first_not_of(" \t");
      size_t z = rest.find_last_not_of(" \t");
      p.relator_text.push_back(a == std::string::npos ? "" : rest.substr(a, z - a + 1));
      p.relators.push_back(std::move(w));
    } else {
      throw ParseError(lineno, "unknown directive '" + kind + "'");
    }
  }
  // relator letters must come from declared generators
  std::set<Variable> gens(p.generators.begin(), p.generators.end());
  for (size_t i = 0; i < p.relators.size(); ++i)
    for (const auto& [v, e] : p.relators[i].letters())
      if (!gens.count(v))
        throw UnknownGenerator("relator " + std::to_string(i + 1) + " uses undeclared generator m" +
                               std::to_string(v.color) + "," + std::to_string(v.index));
  return p;
}

std::vector<MagnusSeries> expand_direct(const DirectPresentation& p, int max_degree) {
  UniversePtr u = make_universe(p.generators);
  std::vector<MagnusSeries> out;
  out.reserve(p.relators.size());
  for (const GroupWord& w : p.relators) out.push_back(expand(w, u, max_degree));
  return out;
}

}  // namespace linkhom
