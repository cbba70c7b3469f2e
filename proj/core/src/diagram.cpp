#include "linkhom/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace linkhom {

void validate(const EmbeddingCode& code) {
  const AbstractGraph& g = code.graph;

  for (const auto& [eid, events] : code.passages) {
    g.edge(eid);  // throws if unknown
    (void)events;
  }

  // Every crossing id occurs exactly twice, once over and once under, with
  // equal signs.
  struct Seen {
    int overs = 0, unders = 0;
    std::set<int> signs;
  };
  std::map<int, Seen> seen;
  for (const auto& [eid, events] : code.passages) {
    for (const CrossingEvent& ev : events) {
      Seen& s = seen[ev.crossing];
      (ev.role == Role::Over ? s.overs : s.unders)++;
      if (ev.sign != 1 && ev.sign != -1)
        throw ValidationError("crossing " + std::to_string(ev.crossing) + " has sign " +
                              std::to_string(ev.sign));
      s.signs.insert(ev.sign);
    }
  }
  for (const auto& [cid, s] : seen) {
    if (s.overs != 1 || s.unders != 1)
      throw ValidationError("crossing " + std::to_string(cid) + " seen " +
                            std::to_string(s.overs) + " times over and " +
                            std::to_string(s.unders) + " times under");
    if (s.signs.size() != 1)
      throw ValidationError("crossing " + std::to_string(cid) +
                            " carries different signs at its two passages");
  }

  // Rotations list each incident edge-end exactly once.
  for (int v : g.vertices()) {
    std::multiset<EdgeEnd> expected;
    for (int eid : g.incident_edges(v)) {
      const Edge& e = g.edge(eid);
      if (e.tail == v) expected.insert({eid, false});
      if (e.head == v) expected.insert({eid, true});
    }
    auto it = code.rotations.find(v);
    std::multiset<EdgeEnd> got;
    if (it != code.rotations.end()) got.insert(it->second.begin(), it->second.end());
    if (got != expected)
      throw ValidationError("rotation at vertex " + std::to_string(v) +
                            " does not list each incident edge-end exactly once");
  }
  for (const auto& [v, ends] : code.rotations) {
    if (!g.has_vertex(v)) throw ValidationError("rotation for unknown vertex " + std::to_string(v));
    (void)ends;
  }
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

CrossingEvent parse_event(const std::string& tok, int lineno) {
  if (tok.size() < 4 || tok[0] != 'X')
    throw ParseError(lineno, "bad event '" + tok + "' (expected X<id><o|u><+|->)");
  char dir = tok[tok.size() - 2];
  char sgn = tok[tok.size() - 1];
  std::string num = tok.substr(1, tok.size() - 3);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(lineno, "bad crossing id in event '" + tok + "'");
  CrossingEvent ev;
  ev.crossing = std::stoi(num);
  if (dir == 'o')
    ev.role = Role::Over;
  else if (dir == 'u')
    ev.role = Role::Under;
  else
    throw ParseError(lineno, "bad role in event '" + tok + "'");
  if (sgn == '+')
    ev.sign = 1;
  else if (sgn == '-')
    ev.sign = -1;
  else
    throw ParseError(lineno, "bad sign in event '" + tok + "'");
  return ev;
}

EdgeEnd parse_end(const std::string& tok, int lineno) {
  if (tok.size() < 2 || (tok.back() != 't' && tok.back() != 'h'))
    throw ParseError(lineno, "bad edge-end '" + tok + "' (expected <eid>t or <eid>h)");
  std::string num = tok.substr(0, tok.size() - 1);
  if (num.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(lineno, "bad edge id in edge-end '" + tok + "'");
  return {std::stoi(num), tok.back() == 'h'};
}

int parse_int(const std::string& tok, int lineno, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(lineno, std::string("bad ") + what + " '" + tok + "'");
  }
}

}  // namespace

EmbeddingCode parse_code(const std::string& text) {
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::map<int, int> vcolor_given;
  std::map<int, int> ecolor_given;
  std::map<int, std::vector<CrossingEvent>> passages;
  std::map<int, std::vector<EdgeEnd>> rotations;

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "vertex") {
      if (toks.size() < 3 || toks[2] != "rotation")
        throw ParseError(lineno, "expected: vertex <vid> rotation <end>...");
      int vid = parse_int(toks[1], lineno, "vertex id");
      if (rotations.count(vid)) throw ParseError(lineno, "vertex " + toks[1] + " declared twice");
      vertices.push_back(vid);
      std::vector<EdgeEnd> ends;
      for (size_t i = 3; i < toks.size(); ++i) ends.push_back(parse_end(toks[i], lineno));
      rotations[vid] = std::move(ends);
    } else if (toks[0] == "edge") {
      if (toks.size() < 9 || toks[2] != "component" || toks[4] != "from" || toks[6] != "to" ||
          toks[8] != "passes") {
        throw ParseError(lineno, "expected: edge <eid> component <i> from <vid> to <vid> passes ...");
      }
      Edge e;
      e.id = parse_int(toks[1], lineno, "edge id");
      int comp = parse_int(toks[3], lineno, "component");
      e.tail = parse_int(toks[5], lineno, "vertex id");
      e.head = parse_int(toks[7], lineno, "vertex id");
      if (passages.count(e.id)) throw ParseError(lineno, "edge " + toks[1] + " declared twice");
      std::vector<CrossingEvent> events;
      for (size_t i = 9; i < toks.size(); ++i) events.push_back(parse_event(toks[i], lineno));
      edges.push_back(e);
      ecolor_given[e.id] = comp;
      passages[e.id] = std::move(events);
    } else {
      throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
    }
  }

  EmbeddingCode code;
  code.graph = AbstractGraph::make(std::move(vertices), std::move(edges));
  code.passages = std::move(passages);
  code.rotations = std::move(rotations);

  // Declared component labels must match the recomputed canonical ones.
  for (const auto& [eid, comp] : ecolor_given) {
    if (code.graph.edge_color(eid) != comp)
      throw ValidationError("edge " + std::to_string(eid) + " declares component " +
                            std::to_string(comp) + " but lies in component " +
                            std::to_string(code.graph.edge_color(eid)));
  }
  validate(code);
  return code;
}

std::string serialize_code(const EmbeddingCode& code) {
  std::ostringstream os;
  for (int v : code.graph.vertices()) {
    os << "vertex " << v << " rotation";
    auto it = code.rotations.find(v);
    if (it != code.rotations.end())
      for (const EdgeEnd& e : it->second) os << " " << e.edge << (e.head ? "h" : "t");
    os << "\n";
  }
  for (const Edge& e : code.graph.edges()) {
    os << "edge " << e.id << " component " << code.graph.edge_color(e.id) << " from " << e.tail
       << " to " << e.head << " passes";
    auto it = code.passages.find(e.id);
    if (it != code.passages.end())
      for (const CrossingEvent& ev : it->second)
        os << " X" << ev.crossing << (ev.role == Role::Over ? "o" : "u")
           << (ev.sign > 0 ? "+" : "-");
    os << "\n";
  }
  return os.str();
}

std::pair<CrossingSite, CrossingSite> crossing_sites(const EmbeddingCode& code, int crossing) {
  CrossingSite over{-1, 0}, under{-1, 0};
  for (const auto& [eid, events] : code.passages) {
    for (size_t i = 0; i < events.size(); ++i) {
      if (events[i].crossing != crossing) continue;
      if (events[i].role == Role::Over)
        over = {eid, i};
      else
        under = {eid, i};
    }
  }
  if (over.edge < 0 || under.edge < 0)
    throw ValidationError("no crossing " + std::to_string(crossing));
  return {over, under};
}

EmbeddingCode crossing_change(const EmbeddingCode& code, int crossing) {
  auto [over, under] = crossing_sites(code, crossing);
  if (code.graph.edge_color(over.edge) != code.graph.edge_color(under.edge))
    throw IllegalMove("crossing " + std::to_string(crossing) +
                      " joins different components; not a component homotopy");
  EmbeddingCode out = code;
  for (CrossingSite s : {over, under}) {
    CrossingEvent& ev = out.passages[s.edge][s.position];
    ev.role = (ev.role == Role::Over) ? Role::Under : Role::Over;
    ev.sign = -ev.sign;
  }
  return out;
}

EmbeddingCode extract_sublink(const EmbeddingCode& code, const CycleSelection& sel) {
  // Which edges survive, and whether the cycle runs them backwards.
  std::map<int, bool> kept_forward;
  for (const auto& [color, cyc] : sel.cycles) {
    if (code.graph.edge_color(cyc.edges.front().first) != color)
      throw ValidationError("cycle selected for color " + std::to_string(color) +
                            " lies in a different component");
    for (const auto& [eid, fwd] : cyc.edges) kept_forward[eid] = fwd;
  }

  // A crossing survives iff both its passages lie on kept edges. Its sign
  // negates when exactly one passage sits on a reversed edge.
  std::map<int, int> passage_count, reversed_count;
  for (const auto& [eid, events] : code.passages) {
    auto it = kept_forward.find(eid);
    for (const CrossingEvent& ev : events) {
      passage_count[ev.crossing]++;
      if (it != kept_forward.end()) {
        passage_count[ev.crossing]--;  // only count missing passages
        if (!it->second) reversed_count[ev.crossing]++;
      }
    }
  }

  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::map<int, int> vcolor;
  std::map<int, std::vector<CrossingEvent>> passages;
  std::map<int, std::vector<EdgeEnd>> rotations;

  for (const auto& [color, cyc] : sel.cycles) {
    int vid = cyc.vertices.front();
    int eid = cyc.edges.front().first;
    for (const auto& [e, f] : cyc.edges) eid = std::min(eid, e);
    std::vector<CrossingEvent> events;
    for (const auto& [e, fwd] : cyc.edges) {
      auto it = code.passages.find(e);
      std::vector<CrossingEvent> evs = it == code.passages.end() ? std::vector<CrossingEvent>{}
                                                                 : it->second;
      if (!fwd) std::reverse(evs.begin(), evs.end());
      for (CrossingEvent ev : evs) {
        if (passage_count[ev.crossing] != 0) continue;  // partner deleted
        if (reversed_count[ev.crossing] == 1) ev.sign = -ev.sign;
        events.push_back(ev);
      }
    }
    vertices.push_back(vid);
    edges.push_back({eid, vid, vid});
    vcolor[vid] = color;
    passages[eid] = std::move(events);
    rotations[vid] = {{eid, false}, {eid, true}};
  }

  EmbeddingCode out;
  out.graph = AbstractGraph::make_colored(std::move(vertices), std::move(edges), std::move(vcolor));
  out.passages = std::move(passages);
  out.rotations = std::move(rotations);
  validate(out);
  return out;
}

EmbeddingCode delete_component(const EmbeddingCode& code, int color) {
  const AbstractGraph& g = code.graph;
  if (std::find(g.colors().begin(), g.colors().end(), color) == g.colors().end())
    throw ValidationError("no component with color " + std::to_string(color));

  std::set<int> dead_crossings;
  for (const auto& [eid, events] : code.passages)
    if (g.edge_color(eid) == color)
      for (const CrossingEvent& ev : events) dead_crossings.insert(ev.crossing);

  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::map<int, std::vector<CrossingEvent>> passages;
  std::map<int, std::vector<EdgeEnd>> rotations;

  for (int v : g.vertices())
    if (g.vertex_color(v) != color) {
      vertices.push_back(v);
      auto it = code.rotations.find(v);
      if (it != code.rotations.end()) rotations[v] = it->second;
    }
  for (const Edge& e : g.edges()) {
    if (g.edge_color(e.id) == color) continue;
    edges.push_back(e);
    std::vector<CrossingEvent> events;
    auto it = code.passages.find(e.id);
    if (it != code.passages.end())
      for (const CrossingEvent& ev : it->second)
        if (!dead_crossings.count(ev.crossing)) events.push_back(ev);
    passages[e.id] = std::move(events);
  }

  EmbeddingCode out;
  out.graph = AbstractGraph::make(std::move(vertices), std::move(edges));
  out.passages = std::move(passages);
  out.rotations = std::move(rotations);
  validate(out);
  return out;
}

}  // namespace linkhom
