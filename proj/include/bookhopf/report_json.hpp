#pragma once

// JSON forms of the verification and classification reports.
//
//   AxiomResult:    {axiom, status, mode, checked, violations: [{lhs, rhs, at, basis}], elapsed_ms}
//   AxiomReport:    {p, s, permissive, seed, status, axioms: [AxiomResult...]}
//   Classification: {p, s, pairs: [{i, j, implements_s2, stable, beta_l, closed_form_agrees}],
//                    mpi: [{i, j}], implements: [{i, j}]}
//   Table:          {p, rows: [{s, mpi_exists, mpi, implements, beta_l: [..]}]}
//
// Scalars are rendered as polynomials in q; monomials as "x^b y^c g^a".

#include "bookhopf/hopf_checks.hpp"
#include "bookhopf/mpi_search.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bookhopf {

using nlohmann::json;

inline void to_json(json& j, const PairIndex& v) { j = json{{"i", v.i}, {"j", v.j}}; }
inline void from_json(const json& j, PairIndex& v) {
  j.at("i").get_to(v.i);
  j.at("j").get_to(v.j);
}

inline void to_json(json& j, const Violation& v) {
  std::vector<std::string> basis;
  for (const auto& m : v.basis) basis.push_back(m.to_string());
  j = json{{"lhs", v.lhs}, {"rhs", v.rhs}, {"at", v.at}, {"basis", basis}};
}

inline void to_json(json& j, const AxiomResult& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(v);
  j = json{{"axiom", r.axiom},           {"status", r.passed() ? "pass" : "fail"}, {"mode", r.mode},
           {"checked", r.checked},       {"violations", violations},               {"elapsed_ms", r.elapsed_ms}};
}

inline void from_json(const json& j, AxiomResult& r) {
  j.at("axiom").get_to(r.axiom);
  j.at("mode").get_to(r.mode);
  j.at("checked").get_to(r.checked);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  r.violations.clear();
  for (const auto& v : j.at("violations")) {
    Violation out{r.axiom, v.at("at").get<std::string>(), v.at("lhs").get<std::string>(), v.at("rhs").get<std::string>(), {}};
    if (v.contains("basis"))
      for (const auto& m : v.at("basis")) out.basis.push_back(Monomial::parse(m.get<std::string>()));
    r.violations.push_back(std::move(out));
  }
  const std::string status = j.at("status").get<std::string>();
  if ((status == "pass") != r.passed()) throw std::invalid_argument("axiom status contradicts its violation list");
}

inline void to_json(json& j, const AxiomReport& r) {
  j = json{{"p", r.p},
           {"s", r.s},
           {"permissive", r.permissive},
           {"seed", r.seed},
           {"status", r.passed() ? "pass" : "fail"},
           {"axioms", r.results}};
}

inline void from_json(const json& j, AxiomReport& r) {
  j.at("p").get_to(r.p);
  j.at("s").get_to(r.s);
  j.at("permissive").get_to(r.permissive);
  j.at("seed").get_to(r.seed);
  j.at("axioms").get_to(r.results);
}

inline json pair_report_json(const PairReport& r) {
  return json{{"i", r.i},
              {"j", r.j},
              {"implements_s2", r.implements_s2},
              {"stable", r.stable},
              {"beta_l", r.beta_l.to_string()},
              {"closed_form_agrees", r.closed_form_agrees}};
}

inline void to_json(json& j, const Classification& c) {
  json pairs = json::array();
  for (const auto& r : c.pairs) pairs.push_back(pair_report_json(r));
  j = json{{"p", c.p}, {"s", c.s}, {"pairs", pairs}, {"mpi", c.mpi()}, {"implements", c.implements()}};
}

/// Rebuilds a Classification; the mpi and implements lists must match the
/// per-pair flags.
inline Classification classification_from_json(const json& j) {
  Classification c{j.at("p").get<int>(), j.at("s").get<int>(), {}};
  for (const auto& r : j.at("pairs")) {
    c.pairs.push_back(PairReport{r.at("i").get<int>(), r.at("j").get<int>(), r.at("implements_s2").get<bool>(),
                                 r.at("stable").get<bool>(), CycScalar::parse(c.p, r.at("beta_l").get<std::string>()),
                                 r.value("closed_form_agrees", true)});
  }
  if (j.at("mpi").get<std::vector<PairIndex>>() != c.mpi() ||
      j.at("implements").get<std::vector<PairIndex>>() != c.implements())
    throw std::invalid_argument("classification subsets contradict the per-pair flags");
  return c;
}

inline json table_row_json(const TableRow& r) {
  std::vector<std::string> betas;
  for (const auto& b : r.beta_l) betas.push_back(b.to_string());
  return json{{"s", r.s}, {"mpi_exists", r.mpi_exists}, {"mpi", r.mpi}, {"implements", r.implements}, {"beta_l", betas}};
}

inline void to_json(json& j, const Table& t) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back(table_row_json(r));
  j = json{{"p", t.p}, {"rows", rows}};
}

inline Table table_from_json(const json& j) {
  Table t{j.at("p").get<int>(), {}};
  for (const auto& r : j.at("rows")) {
    TableRow row{r.at("s").get<int>(), r.at("mpi_exists").get<bool>(), r.at("mpi").get<std::vector<PairIndex>>(),
                 r.at("implements").get<std::vector<PairIndex>>(), {}};
    for (const auto& b : r.at("beta_l")) row.beta_l.push_back(CycScalar::parse(t.p, b.get<std::string>()));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace bookhopf
