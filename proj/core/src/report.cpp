#include "linkhom/report.hpp"

namespace linkhom {

using nlohmann::json;

namespace {

json series_json(const MagnusSeries& s) { return s.str(); }

std::string coeff_str(const Int& c) { return c.str(); }

json entries_json(const std::vector<MuBarEntry>& entries) {
  json table = json::object();
  for (const MuBarEntry& e : entries) table[mu_index_key(e.index)] = coeff_str(e.coeff);
  return table;
}

json obstruction_json(const Obstruction& o) {
  json j;
  j["obstructed"] = o.obstructed;
  if (o.witness) {
    j["witness"] = {{"relator", o.witness->relator}, {"monomial", o.witness->monomial}};
  }
  return j;
}

}  // namespace

std::string mu_index_key(const std::vector<int>& index) {
  std::string key;
  for (size_t i = 0; i < index.size(); ++i) {
    if (i) key += ' ';
    key += std::to_string(index[i]);
  }
  return key;
}

json report_header(const std::string& command) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  return j;
}

json to_json(const MuBarReport& rep) {
  json j;
  j["colors"] = rep.colors;
  json longs = json::object();
  for (const auto& [c, s] : rep.longitudes) longs[std::to_string(c)] = series_json(s);
  j["longitudes"] = longs;
  j["trivial"] = rep.trivial;
  if (rep.first_length) j["first_nonvanishing_length"] = *rep.first_length;
  j["mu_bar"] = entries_json(rep.first_nonvanishing);
  j["mu_bar_higher"] = entries_json(rep.higher);
  return j;
}

json to_json(const SplitReport& rep) {
  json j;
  j["completely_split"] = rep.completely_split;
  if (rep.witness) j["witness_selection"] = rep.witness->str();
  if (rep.witness_mu) j["witness_mu"] = to_json(*rep.witness_mu);
  json obs = json::object();
  for (const auto& [c, o] : rep.obstruction) obs[std::to_string(c)] = obstruction_json(o);
  j["obstruction"] = obs;
  return j;
}

json to_json(const LambdaReport& rep) {
  json j;
  json byrel = json::object(), bylink = json::object();
  for (const auto& [c, v] : rep.by_relators)
    byrel[std::to_string(c)] = v ? json(*v) : json(nullptr);
  for (const auto& [c, v] : rep.by_links)
    bylink[std::to_string(c)] = v ? json(*v) : json(nullptr);
  j["lambda_by_relators"] = byrel;
  j["lambda_by_links"] = bylink;
  json agree = json::object();
  for (const auto& [c, v] : rep.by_relators) {
    auto it = rep.by_links.find(c);
    agree[std::to_string(c)] = it != rep.by_links.end() && it->second == v;
  }
  j["routes_agree"] = agree;
  return j;
}

json presentation_json(const PresentationBundle& bundle) {
  json j;
  j["max_degree"] = bundle.max_degree;
  json gens = json::array();
  for (const Variable& v : bundle.universe->variables()) gens.push_back(to_string(v));
  j["generators"] = gens;
  json longs = json::object();
  for (const auto& [v, s] : bundle.longitudes) longs[to_string(v)] = series_json(s);
  j["longitudes"] = longs;
  json surf = json::object();
  for (const auto& [c, s] : bundle.surface) surf[std::to_string(c)] = series_json(s);
  j["surface_elements"] = surf;
  return j;
}

json presentation_json(const DirectPresentation& p, int max_degree) {
  json j;
  json gens = json::array();
  for (const Variable& v : p.generators) gens.push_back(to_string(v));
  j["generators"] = gens;
  std::vector<MagnusSeries> exps = expand_direct(p, max_degree);
  json rels = json::array();
  for (size_t i = 0; i < exps.size(); ++i) {
    rels.push_back({{"relator", p.relator_text[i]}, {"expansion", series_json(exps[i])}});
  }
  j["relators"] = rels;
  return j;
}

}  // namespace linkhom
