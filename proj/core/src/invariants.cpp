#include "linkhom/invariants.hpp"

#include <algorithm>
#include <functional>

namespace linkhom {

namespace {

void require_link(const AbstractGraph& g) {
  for (int v : g.vertices())
    if (g.degree(v) != 2)
      throw NotALink("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                     "; every component of a link is a circle");
  for (int c : g.colors())
    if (g.betti(c) != 1)
      throw NotALink("component " + std::to_string(c) + " has first Betti number " +
                     std::to_string(g.betti(c)));
}

// All ordered tuples of k-1 distinct colors drawn from `others`, in
// lexicographic order.
void tuples(const std::vector<int>& others, int len, std::vector<int>& cur,
            std::vector<bool>& used, const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == len) {
    emit(cur);
    return;
  }
  for (size_t i = 0; i < others.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    cur.push_back(others[i]);
    tuples(others, len, cur, used, emit);
    cur.pop_back();
    used[i] = false;
  }
}

}  // namespace

MuBarReport mu_bar(const EmbeddingCode& code, int max_degree) {
  require_link(code.graph);
  PresentationBundle b = resolve_meridians(code, max_degree);

  MuBarReport rep;
  rep.colors = code.graph.colors();
  for (int c : rep.colors) rep.longitudes.emplace(c, b.longitudes.at(Variable{c, 1}));

  int n = static_cast<int>(rep.colors.size());
  int maxlen = std::min(n, b.max_degree + 1);
  for (int k = 2; k <= maxlen; ++k) {
    std::vector<MuBarEntry> found;
    for (int last : rep.colors) {
      const MagnusSeries& l = rep.longitudes.at(last);
      std::vector<int> others;
      for (int c : rep.colors)
        if (c != last) others.push_back(c);
      std::vector<int> cur;
      std::vector<bool> used(others.size(), false);
      tuples(others, k - 1, cur, used, [&](const std::vector<int>& idx) {
        std::vector<Variable> mono;
        for (int c : idx) mono.push_back({c, 1});
        Int coeff = l.coefficient(mono);
        if (coeff == 0) return;
        MuBarEntry e;
        e.index = idx;
        e.index.push_back(last);
        e.coeff = coeff;
        found.push_back(std::move(e));
      });
    }
    std::sort(found.begin(), found.end(),
              [](const MuBarEntry& a, const MuBarEntry& b) { return a.index < b.index; });
    if (!found.empty() && !rep.first_length) {
      rep.first_length = k;
      rep.first_nonvanishing = std::move(found);
    } else {
      rep.higher.insert(rep.higher.end(), found.begin(), found.end());
    }
  }
  rep.trivial = !rep.first_length.has_value();
  return rep;
}

RelatorExpansions relator_expansions(const PresentationBundle& bundle) {
  RelatorExpansions out;
  for (const auto& [color, s] : bundle.surface)
    out.emplace_back("r_" + std::to_string(color), s);
  return out;
}

RelatorExpansions relator_expansions(const DirectPresentation& p, int max_degree) {
  RelatorExpansions out;
  std::vector<MagnusSeries> exps = expand_direct(p, max_degree);
  for (size_t i = 0; i < exps.size(); ++i)
    out.emplace_back(p.relator_text[i], std::move(exps[i]));
  return out;
}

Obstruction i_split_obstruction(const RelatorExpansions& relators, int color) {
  Obstruction o;
  std::optional<int> best;
  for (const auto& [name, s] : relators) {
    const auto& uni = *s.universe();
    for (const auto& [m, c] : s.terms()) {
      bool hit = false;
      for (char ch : m)
        if (uni.color_of(static_cast<unsigned char>(ch)) == color) {
          hit = true;
          break;
        }
      if (!hit) continue;
      int d = static_cast<int>(m.size());
      if (!best || d < *best) {
        best = d;
        std::vector<Variable> mono;
        for (char ch : m) mono.push_back(uni.var(static_cast<unsigned char>(ch)));
        std::string rendered;
        for (const Variable& v : mono) rendered += to_string(v);
        o.witness = ObstructionWitness{name, rendered};
      }
    }
  }
  o.obstructed = best.has_value();
  return o;
}

SplitReport is_completely_split(const EmbeddingCode& code, size_t cap, int max_degree) {
  SplitReport rep;
  std::vector<CycleSelection> sels = constituent_selections(code.graph, std::nullopt, cap);
  for (const CycleSelection& sel : sels) {
    EmbeddingCode sub = extract_sublink(code, sel);
    MuBarReport mu = mu_bar(sub, max_degree);
    if (!mu.trivial) {
      rep.completely_split = false;
      rep.witness = sel;
      rep.witness_mu = std::move(mu);
      break;
    }
  }
  PresentationBundle b = resolve_meridians(code, max_degree);
  RelatorExpansions rel = relator_expansions(b);
  for (int c : code.graph.colors()) rep.obstruction.emplace(c, i_split_obstruction(rel, c));
  return rep;
}

std::optional<int> lambda_from_relators(const RelatorExpansions& relators, int color) {
  std::optional<int> best;
  for (const auto& [name, s] : relators) {
    auto d = lowest_degree_with_color(s, color);
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

std::optional<int> lambda_from_links(const EmbeddingCode& code, int color, size_t cap,
                                     int max_degree) {
  std::optional<int> best;
  for (const CycleSelection& sel : constituent_selections(code.graph, color, cap)) {
    EmbeddingCode sub = extract_sublink(code, sel);
    MuBarReport mu = mu_bar(sub, max_degree);
    if (mu.first_length && (!best || *mu.first_length < *best)) best = mu.first_length;
  }
  return best;
}

LambdaReport lambda_report(const EmbeddingCode& code, size_t cap, int max_degree) {
  LambdaReport rep;
  PresentationBundle b = resolve_meridians(code, max_degree);
  RelatorExpansions rel = relator_expansions(b);
  for (int c : code.graph.colors()) {
    rep.by_relators[c] = lambda_from_relators(rel, c);
    rep.by_links[c] = lambda_from_links(code, c, cap, max_degree);
  }
  return rep;
}

}  // namespace linkhom
