#pragma once

// JSON views of the core types.  ordered_json keeps object keys in insertion
// order, which together with the canonical term order makes every dump
// byte-stable.  Coefficients travel as decimal strings since they routinely
// exceed 64 bits.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "groth/fkgraph.hpp"
#include "groth/hecke.hpp"
#include "groth/laurent.hpp"
#include "groth/oracles.hpp"
#include "groth/perm.hpp"
#include "groth/verify.hpp"

namespace groth {

using Json = nlohmann::ordered_json;

inline Json poly_to_json(const LaurentPoly& f) {
  Json out = Json::array();
  for (const auto& [mono, coeff] : f.terms()) {
    Json term;
    term["coeff"] = coeff.get_str();
    Json exps = Json::object();
    for (const auto& [var, e] : mono.factors()) exps[to_string(var)] = e;
    term["mono"] = std::move(exps);
    out.push_back(std::move(term));
  }
  return out;
}

inline LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  LaurentPoly out;
  for (const Json& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("mono"))
      throw std::invalid_argument("polynomial JSON term needs coeff and mono");
    if (!term["coeff"].is_string())
      throw std::invalid_argument("polynomial coefficient must be a decimal string");
    if (!term["mono"].is_object())
      throw std::invalid_argument("polynomial monomial must be an object");
    Int coeff;
    try {
      coeff = Int(term["coeff"].get<std::string>());
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("polynomial coefficient must be a decimal string");
    }
    std::vector<std::pair<Var, int>> entries;
    for (const auto& [name, e] : term["mono"].items()) {
      if (!e.is_number_integer())
        throw std::invalid_argument("monomial exponent must be an integer");
      entries.emplace_back(parse_var(name), e.get<int>());
    }
    out += LaurentPoly::term(Monomial(entries), coeff);
  }
  return out;
}

inline Json hecke_to_json(const HeckeElt& e) {
  Json out = Json::array();
  for (const auto& [w, c] : e.support()) {
    Json entry;
    entry["perm"] = to_csv_string(w);
    entry["coeff"] = poly_to_json(c);
    out.push_back(std::move(entry));
  }
  return out;
}

inline HeckeElt hecke_from_json(const Json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("algebra element JSON must be an array");
  HeckeElt out(n);
  for (const Json& entry : j) {
    if (!entry.is_object() || !entry.contains("perm") || !entry.contains("coeff"))
      throw std::invalid_argument("algebra element JSON entry needs perm and coeff");
    out.add(parse_permutation(entry["perm"].get<std::string>()).embed(n),
            poly_from_json(entry["coeff"]));
  }
  return out;
}

inline Json fkgraph_to_json(const FKGraph& g) {
  Json out;
  out["v"] = to_csv_string(g.diagram.v);
  Json subset = Json::array();
  Json nu_word = Json::array();
  for (const Crossing& x : g.subset) {
    subset.push_back(Json::array({x.row, x.col}));
    nu_word.push_back(x.nu);
  }
  out["subset"] = std::move(subset);
  out["nu_word"] = std::move(nu_word);
  out["sign"] = g.sign;
  out["w"] = to_csv_string(g.result);
  out["reduced"] = g.reduced;
  return out;
}

inline FKGraph fkgraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("v") || !j.contains("subset"))
    throw std::invalid_argument("FK-graph JSON needs v and subset");
  const Permutation v = parse_permutation(j["v"].get<std::string>());
  std::vector<std::pair<int, int>> pairs;
  for (const Json& cell : j["subset"]) {
    if (!cell.is_array() || cell.size() != 2)
      throw std::invalid_argument("FK-graph subset entries must be [row, col] pairs");
    pairs.emplace_back(cell[0].get<int>(), cell[1].get<int>());
  }
  FKGraph g = classify_subset(crossing_diagram(v), pairs);
  if (fkgraph_to_json(g) != j) throw std::invalid_argument("inconsistent FK-graph JSON");
  return g;
}

inline Json table_to_json(const PolyTable& t) {
  Json out;
  out["n"] = t.n;
  out["family"] = t.family;
  Json entries = Json::object();
  for (const auto& [w, f] : t.entries) entries[to_csv_string(w)] = poly_to_json(f);
  out["entries"] = std::move(entries);
  return out;
}

inline PolyTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("family") || !j.contains("entries"))
    throw std::invalid_argument("table JSON needs n, family, entries");
  PolyTable t{j["n"].get<int>(), j["family"].get<std::string>(), {}};
  for (const auto& [key, val] : j["entries"].items())
    t.entries.emplace(parse_permutation(key), poly_from_json(val));
  return t;
}

inline Json report_to_json(const VerificationReport& r) {
  Json out;
  out["suite"] = r.suite;
  out["n"] = r.n;
  out["pairs_checked"] = r.pairs_checked;
  if (r.seed)
    out["seed"] = *r.seed;
  else
    out["seed"] = nullptr;
  Json failures = Json::array();
  for (const VerifyFailure& f : r.failures) {
    Json entry;
    entry["v"] = f.v;
    entry["w"] = f.w;
    entry["lhs"] = f.lhs;
    entry["rhs"] = f.rhs;
    failures.push_back(std::move(entry));
  }
  out["failures"] = std::move(failures);
  out["result"] = r.passed() ? "PASS" : "FAIL";
  return out;
}

}  // namespace groth
