#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkhom/presentation.hpp"

namespace linkhom {

struct MuBarEntry {
  std::vector<int> index;  // pairwise-distinct colors; last = longitude's component
  Int coeff;
};

struct MuBarReport {
  std::vector<int> colors;
  std::map<int, MagnusSeries> longitudes;  // color -> longitude series
  bool trivial = true;
  std::optional<int> first_length;
  // Entries at the first nonvanishing length (these feed verdicts), then
  // everything of greater length with a nonzero coefficient; the latter are
  // subject to Milnor indeterminacy and never drive a verdict.
  std::vector<MuBarEntry> first_nonvanishing;
  std::vector<MuBarEntry> higher;
};

// Milnor link-homotopy invariants of a link code (every component a circle).
// mu(i1...ik) is the coefficient of X_{i1}...X_{i(k-1)} in the longitude of
// component ik. Throws NotALink unless each component is homeomorphic to a
// circle.
MuBarReport mu_bar(const EmbeddingCode& code, int max_degree = -1);

struct ObstructionWitness {
  std::string relator;   // rendered relator / surface element name
  std::string monomial;  // rendered monomial containing the color
};

struct Obstruction {
  bool obstructed = false;
  std::optional<ObstructionWitness> witness;
};

// Named relator expansions: the common currency between diagram-derived
// surface elements and direct presentations.
using RelatorExpansions = std::vector<std::pair<std::string, MagnusSeries>>;

RelatorExpansions relator_expansions(const PresentationBundle& bundle);
RelatorExpansions relator_expansions(const DirectPresentation& p, int max_degree = -1);

// Sound (possibly incomplete) obstruction to separating component i: some
// relator expansion mentions a color-i variable. True means "not i-separable";
// false means "no obstruction found", never "separable".
Obstruction i_split_obstruction(const RelatorExpansions& relators, int color);

struct SplitReport {
  bool completely_split = true;
  std::optional<CycleSelection> witness;  // a non-trivial constituent link
  std::optional<MuBarReport> witness_mu;
  std::map<int, Obstruction> obstruction;  // per color, from surface elements
};

// Decide complete splittability by checking every constituent link (at most
// one cycle per component) for link-homotopy triviality.
SplitReport is_completely_split(const EmbeddingCode& code, size_t cap = 10000,
                                int max_degree = -1);

// min over relators of the lowest degree of a monomial mentioning `color`.
std::optional<int> lambda_from_relators(const RelatorExpansions& relators, int color);

// min over constituent links containing a cycle of `color` of the first
// nonvanishing mu-bar length.
std::optional<int> lambda_from_links(const EmbeddingCode& code, int color, size_t cap = 10000,
                                     int max_degree = -1);

struct LambdaReport {
  // color -> lambda, by each route; nullopt means "absent up to the ring
  // degree bound", which the truncation argument makes genuinely absent.
  std::map<int, std::optional<int>> by_relators;
  std::map<int, std::optional<int>> by_links;
};

LambdaReport lambda_report(const EmbeddingCode& code, size_t cap = 10000, int max_degree = -1);

}  // namespace linkhom
