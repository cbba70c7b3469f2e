#pragma once

#include <map>
#include <string>
#include <vector>

#include "linkhom/graph.hpp"

namespace linkhom {

enum class Role { Over, Under };

struct CrossingEvent {
  int crossing = 0;
  Role role = Role::Over;
  int sign = +1;

  bool operator==(const CrossingEvent&) const = default;
};

// One end of an edge as it meets a vertex. Loops contribute two ends.
struct EdgeEnd {
  int edge = 0;
  bool head = false;  // false: tail end

  auto operator<=>(const EdgeEnd&) const = default;
};

// Combinatorial diagram of a spatial graph: per-edge passage sequences
// through signed crossings, plus a cyclic rotation of edge-ends at each
// vertex. Realizability (planarity) is never checked; every computation in
// this library is well defined for virtual codes.
//
// Sign convention: +1 means the understrand passes from right to left when
// looking along the overstrand orientation (the usual positive crossing).
struct EmbeddingCode {
  AbstractGraph graph;
  std::map<int, std::vector<CrossingEvent>> passages;  // edge id -> events, tail to head
  std::map<int, std::vector<EdgeEnd>> rotations;       // vertex id -> cyclic order

  bool operator==(const EmbeddingCode&) const = default;
};

// Throws ValidationError naming the violated invariant.
void validate(const EmbeddingCode& code);

// Line-oriented text format, one document per spatial graph:
//   vertex <vid> rotation <end>...      end = <eid>t | <eid>h
//   edge <eid> component <i> from <vid> to <vid> passes <event>...
//                                       event = X<cid><o|u><+|->
// '#' starts a comment; blank lines ignored.
EmbeddingCode parse_code(const std::string& text);
std::string serialize_code(const EmbeddingCode& code);

struct CrossingSite {
  int edge = 0;
  size_t position = 0;  // index into the edge's passage list
};

// Both passages of a crossing; .first is the over passage.
std::pair<CrossingSite, CrossingSite> crossing_sites(const EmbeddingCode& code, int crossing);

// The component-homotopy generator: swap over/under and negate the sign at
// one crossing. Throws IllegalMove unless both passages lie in the same
// component.
EmbeddingCode crossing_change(const EmbeddingCode& code, int crossing);

// Restrict the diagram to the selected cycles, one circle per selected
// color: unselected edges are deleted together with their crossings, and
// each cycle's passages are concatenated into a single loop edge. Traversing
// an edge against its orientation reverses its event order; a crossing with
// exactly one passage on a reversed edge has its sign negated.
EmbeddingCode extract_sublink(const EmbeddingCode& code, const CycleSelection& sel);

// Drop one component and every crossing touching it; remaining components
// are relabeled 1..n-1 stably.
EmbeddingCode delete_component(const EmbeddingCode& code, int color);

}  // namespace linkhom
