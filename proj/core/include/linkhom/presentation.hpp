#pragma once

#include <map>
#include <string>
#include <vector>

#include "linkhom/diagram.hpp"
#include "linkhom/magnus.hpp"

namespace linkhom {

// Computational image of the complement presentation: every arc meridian
// resolved as a series in the non-tree-edge generators, longitudes of the
// generator loops, and the per-component surface elements prod_j [m_ij,l_ij].
//
// Longitudes carry no framing correction: framing multiplies a longitude by
// powers of its own meridian, which only perturbs monomials containing the
// walk's own color, and those are excluded from every downstream coefficient
// read.
struct PresentationBundle {
  UniversePtr universe;
  int max_degree = 0;
  std::map<int, SpanningTree> trees;         // color -> spanning tree
  std::map<int, Variable> edge_generator;    // non-tree edge id -> x_{ij}
  std::map<Variable, int> generator_edge;
  std::map<int, std::vector<MagnusSeries>> arcs;  // edge id -> arc meridians, tail to head
  std::map<Variable, MagnusSeries> longitudes;    // l_ij
  std::map<int, MagnusSeries> surface;            // color -> r_i
  // Expansion of the root vertex relation per color; not imposed during
  // resolution, kept as a consistency handle (its lowest-degree data matches
  // the surface element up to conjugation).
  std::map<int, MagnusSeries> root_relation;

  const MagnusSeries& base_meridian(const Variable& v) const;
  const MagnusSeries& arc_at_end(const EdgeEnd& end) const;
};

// Fixpoint resolution of all arc meridians: initialize non-tree bases to
// 1 + X, propagate through crossings (next arc = conjugate of the previous
// by the overstrand arc, direction set by the crossing sign), and solve each
// non-root vertex relation for its parent tree edge, leaves to root. A final
// sweep must change nothing; otherwise NonConvergence (an internal error,
// not a mathematical possibility).
PresentationBundle resolve_meridians(const EmbeddingCode& code, int max_degree = -1);

// Product, in traversal order, of (overstrand arc)^sign over every
// undercrossing passage of a closed walk; traversal against an edge's
// orientation reverses its event order and flips the exponent.
MagnusSeries walk_longitude(const PresentationBundle& bundle, const EmbeddingCode& code,
                            const std::vector<std::pair<int, bool>>& walk);

// r_i = prod_j [m_ij, l_ij] in j order (recomputed from the bundle).
std::map<int, MagnusSeries> surface_elements(const PresentationBundle& bundle,
                                             const EmbeddingCode& code);

// A presentation given directly as relator words in colored generators, for
// figure-based inputs.
//
// Text format: `gen m<i>,<j>` lines declare generators; `rel <word>` lines
// declare relators. Word syntax: generators `m<i>,<j>`, commutators `[a,b]`,
// inverses/powers `a^-1`, juxtaposition.
struct DirectPresentation {
  std::vector<Variable> generators;
  std::vector<GroupWord> relators;
  std::vector<std::string> relator_text;
};

DirectPresentation parse_presentation(const std::string& text);

// Magnus expansion of each relator, in declaration order.
std::vector<MagnusSeries> expand_direct(const DirectPresentation& p, int max_degree = -1);

}  // namespace linkhom
