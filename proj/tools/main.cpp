#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "linkhom/diagram.hpp"
#include "linkhom/invariants.hpp"
#include "linkhom/presentation.hpp"
#include "linkhom/report.hpp"

using nlohmann::json;
using namespace linkhom;

namespace {

struct Options {
  std::string input;
  std::string format = "text";
  size_t cap = 10000;
  unsigned seed = 1;
  bool presentation = false;
  int max_degree = -1;
  bool verbose = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EmbeddingCode load_code(const Options& opt) {
  EmbeddingCode code = parse_code(slurp(opt.input));
  validate(code);
  return code;
}

DirectPresentation load_presentation(const Options& opt) {
  return parse_presentation(slurp(opt.input));
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string lambda_cell(const std::optional<int>& v, int max_degree) {
  if (v) return std::to_string(*v);
  return "none up to " + std::to_string(max_degree);
}

int cmd_present(const Options& opt) {
  json j = report_header("present");
  std::ostringstream t;
  if (opt.presentation) {
    DirectPresentation p = load_presentation(opt);
    j.update(presentation_json(p, opt.max_degree));
    t << "generators:";
    for (const Variable& v : p.generators) t << " m" << v.color << "," << v.index;
    t << "\n";
    std::vector<MagnusSeries> exps = expand_direct(p, opt.max_degree);
    for (size_t i = 0; i < exps.size(); ++i)
      t << "relator " << p.relator_text[i] << "\n  = " << exps[i].str() << "\n";
  } else {
    EmbeddingCode code = load_code(opt);
    PresentationBundle b = resolve_meridians(code, opt.max_degree);
    j.update(presentation_json(b));
    t << "generators:";
    for (const Variable& v : b.universe->variables()) t << " " << to_string(v);
    t << "\n";
    for (const auto& [c, s] : b.surface)
      t << "surface element r_" << c << " = " << s.str() << "\n";
  }
  emit(opt, j, t.str());
  return 0;
}

int cmd_mu(const Options& opt) {
  EmbeddingCode code = load_code(opt);
  MuBarReport rep = mu_bar(code, opt.max_degree);
  json j = report_header("mu");
  j.update(to_json(rep));
  std::ostringstream t;
  t << "verdict: " << (rep.trivial ? "link-homotopically trivial" : "non-trivial") << "\n";
  if (rep.first_length) {
    t << "first nonvanishing length: " << *rep.first_length << "\n";
    for (const MuBarEntry& e : rep.first_nonvanishing)
      t << "  mu(" << mu_index_key(e.index) << ") = " << e.coeff << "\n";
  }
  for (const MuBarEntry& e : rep.higher)
    t << "  mu(" << mu_index_key(e.index) << ") = " << e.coeff
      << "  (subject to indeterminacy)\n";
  if (opt.verbose)
    for (const auto& [c, s] : rep.longitudes) t << "longitude l_" << c << " = " << s.str() << "\n";
  emit(opt, j, t.str());
  return 0;
}

int cmd_split(const Options& opt) {
  EmbeddingCode code = load_code(opt);
  SplitReport rep = is_completely_split(code, opt.cap, opt.max_degree);
  json j = report_header("split");
  j.update(to_json(rep));
  std::ostringstream t;
  t << "completely split: " << (rep.completely_split ? "yes" : "no") << "\n";
  if (rep.witness) {
    t << "witness constituent link: " << rep.witness->str() << "\n";
    if (rep.witness_mu && rep.witness_mu->first_length) {
      for (const MuBarEntry& e : rep.witness_mu->first_nonvanishing)
        t << "  mu(" << mu_index_key(e.index) << ") = " << e.coeff << "\n";
    }
  }
  emit(opt, j, t.str());
  return 0;
}

int cmd_isplit(const Options& opt, int color) {
  RelatorExpansions rel;
  if (opt.presentation) {
    rel = relator_expansions(load_presentation(opt), opt.max_degree);
  } else {
    EmbeddingCode code = load_code(opt);
    rel = relator_expansions(resolve_meridians(code, opt.max_degree));
  }
  Obstruction o = i_split_obstruction(rel, color);
  json j = report_header("isplit");
  j["color"] = color;
  j["obstructed"] = o.obstructed;
  std::ostringstream t;
  if (o.obstructed) {
    j["witness"] = {{"relator", o.witness->relator}, {"monomial", o.witness->monomial}};
    t << "component " << color << ": not " << color << "-separable\n";
    t << "  witness: relator " << o.witness->relator << ", monomial " << o.witness->monomial
      << "\n";
  } else {
    t << "component " << color << ": no obstruction found (inconclusive)\n";
  }
  emit(opt, j, t.str());
  return 0;
}

int cmd_lambda(const Options& opt) {
  json j = report_header("lambda");
  std::ostringstream t;
  if (opt.presentation) {
    DirectPresentation p = load_presentation(opt);
    RelatorExpansions rel = relator_expansions(p, opt.max_degree);
    std::set<int> colors;
    for (const Variable& v : p.generators) colors.insert(v.color);
    int d = opt.max_degree > 0 ? opt.max_degree : static_cast<int>(colors.size());
    json by = json::object();
    for (int c : colors) {
      auto v = lambda_from_relators(rel, c);
      by[std::to_string(c)] = v ? json(*v) : json(nullptr);
      t << "lambda(" << c << ") = " << lambda_cell(v, d) << "\n";
    }
    j["lambda_by_relators"] = by;
  } else {
    EmbeddingCode code = load_code(opt);
    LambdaReport rep = lambda_report(code, opt.cap, opt.max_degree);
    j.update(to_json(rep));
    int d = opt.max_degree > 0 ? opt.max_degree : code.graph.color_count();
    for (const auto& [c, v] : rep.by_relators) {
      t << "lambda(" << c << ") = " << lambda_cell(v, d)
        << "  (by links: " << lambda_cell(rep.by_links.at(c), d) << ")\n";
    }
  }
  emit(opt, j, t.str());
  return 0;
}

struct InvariantSnapshot {
  std::map<int, std::optional<int>> lambda;
  bool completely_split = false;
  std::optional<int> mu_first_length;
  std::vector<std::pair<std::vector<int>, Int>> mu_first;

  bool operator==(const InvariantSnapshot&) const = default;
};

InvariantSnapshot snapshot(const EmbeddingCode& code, const Options& opt) {
  InvariantSnapshot s;
  LambdaReport lam = lambda_report(code, opt.cap, opt.max_degree);
  s.lambda = lam.by_relators;
  s.completely_split = is_completely_split(code, opt.cap, opt.max_degree).completely_split;
  bool is_link = true;
  for (int v : code.graph.vertices())
    if (code.graph.degree(v) != 2) is_link = false;
  if (is_link) {
    MuBarReport mu = mu_bar(code, opt.max_degree);
    s.mu_first_length = mu.first_length;
    for (const MuBarEntry& e : mu.first_nonvanishing) s.mu_first.emplace_back(e.index, e.coeff);
  }
  return s;
}

int cmd_check(const Options& opt, int moves) {
  EmbeddingCode code = load_code(opt);
  InvariantSnapshot base = snapshot(code, opt);

  std::vector<int> crossings;
  for (const auto& [eid, events] : code.passages)
    for (const CrossingEvent& ev : events)
      if (ev.role == Role::Over) crossings.push_back(ev.crossing);
  std::mt19937 rng(opt.seed);

  int applied = 0, skipped = 0;
  for (int k = 0; k < moves && !crossings.empty(); ++k) {
    int c = crossings[rng() % crossings.size()];
    try {
      code = crossing_change(code, c);
      ++applied;
      if (opt.verbose) std::cerr << "changed crossing " << c << "\n";
    } catch (const IllegalMove&) {
      ++skipped;
      if (opt.verbose) std::cerr << "skipped inter-component crossing " << c << "\n";
    }
  }

  InvariantSnapshot after = snapshot(code, opt);
  bool ok = after == base;
  json j = report_header("check");
  j["moves_applied"] = applied;
  j["moves_skipped"] = skipped;
  j["invariants_stable"] = ok;
  std::ostringstream t;
  t << "applied " << applied << " crossing changes, skipped " << skipped << "\n";
  t << "invariants " << (ok ? "unchanged" : "CHANGED") << "\n";
  emit(opt, j, t.str());
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link-homotopy invariants of spatial graph diagrams"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--cap", opt.cap, "Cycle enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Random seed (check)");
  app.add_flag("--presentation", opt.presentation,
               "Input is a presentation file, not a diagram code");
  app.add_option("--max-degree", opt.max_degree,
                 "Override series degree bound (approximate when below the component count)");
  app.add_flag("-v,--verbose", opt.verbose, "Verbose output");

  int isplit_color = 0;
  int moves = 10;

  CLI::App* present = app.add_subcommand("present", "Print the complement presentation data");
  present->add_option("input", opt.input)->required();
  CLI::App* split = app.add_subcommand("split", "Decide complete splittability");
  split->add_option("input", opt.input)->required();
  CLI::App* isplit = app.add_subcommand("isplit", "Obstruction to separating one component");
  isplit->add_option("color", isplit_color, "Component to test")->required();
  isplit->add_option("input", opt.input)->required();
  CLI::App* lambda = app.add_subcommand("lambda", "Compute lambda for every component");
  lambda->add_option("input", opt.input)->required();
  CLI::App* mu = app.add_subcommand("mu", "Milnor invariants of a link code");
  mu->add_option("input", opt.input)->required();
  CLI::App* check = app.add_subcommand("check", "Verify invariance under random moves");
  check->add_option("input", opt.input)->required();
  check->add_option("--moves", moves, "Number of crossing changes")->capture_default_str();

  for (CLI::App* sc : {present, split, isplit, lambda, mu, check}) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (present->parsed()) return cmd_present(opt);
    if (split->parsed()) return cmd_split(opt);
    if (isplit->parsed()) return cmd_isplit(opt, isplit_color);
    if (lambda->parsed()) return cmd_lambda(opt);
    if (mu->parsed()) return cmd_mu(opt);
    if (check->parsed()) return cmd_check(opt, moves);
  } catch (const NonConvergence& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
