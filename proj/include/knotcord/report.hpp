#pragma once

// Canonical JSON documents: sorted keys, integers, and "p/q" strings only.
// Multiprecision integers are written as decimal strings.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "knotcord/constructions.hpp"
#include "knotcord/harness.hpp"
#include "knotcord/invariants.hpp"
#include "knotcord/obstructions.hpp"

namespace knotcord {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

namespace json {

inline Json integer(const Integer& x) { return x.get_str(); }

inline Json matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json vector(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer(x));
  return out;
}

inline Json laurent(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, integer(c)}));
  return {{"text", p.to_string()}, {"terms", terms}};
}

inline Json profile(const SignatureProfile& prof, const std::vector<RationalAngle>& order) {
  Json samples = Json::array();
  for (const auto& x : order)
    if (const auto it = prof.samples.find(x); it != prof.samples.end())
      samples.push_back({{"angle", x.to_string()}, {"sigma", it->second}});
  Json jumps = Json::array();
  for (const auto& x : order)
    if (prof.jump_angles.contains(x)) jumps.push_back(x.to_string());
  return {{"samples", samples}, {"jump_angles", jumps}};
}

inline Json bound(const BoundReport& r) {
  Json out{{"subject", r.subject},
           {"quantity", std::string(to_string(r.quantity))},
           {"lower", r.lower},
           {"lower_provenance", r.lower_provenance},
           {"upper", r.upper},
           {"upper_provenance", r.upper_provenance},
           {"tight", r.tight},
           {"assumptions", r.assumptions}};
  out["lower_witness"] = r.lower_witness ? Json(r.lower_witness->to_string()) : Json(nullptr);
  return out;
}

inline Json sigma_row(const SigmaRow& s) {
  return {{"1/3", s.s13}, {"1/7", s.s17}, {"2/7", s.s27}, {"3/7", s.s37}, {"sum_sevenths", s.sum7()}};
}

inline Json selection(const SelectionCertificate& cert) {
  Json rows = Json::array();
  for (const auto& r : cert.checks)
    rows.push_back({{"g", r.g},
                    {"a", r.a},
                    {"b", r.b},
                    {"one_third_combination", r.thm12_center},
                    {"one_third_forces", r.thm12_forces},
                    {"sevenths_combination", r.general_value},
                    {"sevenths_forces", r.general_forces}});
  return {{"n", cert.n},
          {"cg_bound", cert.C},
          {"A", to_string(cert.A)},
          {"B", to_string(cert.B)},
          {"sigma_A", sigma_row(cert.sigma_A)},
          {"sigma_B", sigma_row(cert.sigma_B)},
          {"checks", rows},
          {"base_matrix", matrix(cert.base)},
          {"base_surgered_dimension", cert.base_reduced_dimension},
          {"conclusion", "g4(nK(A,B)) = n = g4(nK(A,B) # -nK(A,B)^r), n = " + std::to_string(cert.n)},
          {"notes", cert.notes}};
}

inline Json theorem1(const Theorem1Certificate& c) {
  return {{"genus", c.genus},
          {"sum_matrix", matrix(c.sum_matrix.entries())},
          {"class", vector(c.surgery_class.vector)},
          {"framing", integer(c.surgery_class.framing)},
          {"reduced", matrix(c.reduced.entries())},
          {"reduced_dimension", c.reduced.dimension()},
          {"conclusion", "d(K,K^r) <= " + std::to_string(c.d_upper)}};
}

}  // namespace json

/// The common envelope of every command's output.
inline Json report_document(std::string command, std::string subject, Json results,
                            std::vector<std::string> assumptions = {}) {
  return {{"schema_version", kSchemaVersion},
          {"command", std::move(command)},
          {"subject", std::move(subject)},
          {"results", std::move(results)},
          {"assumptions", std::move(assumptions)}};
}

inline Json invariants_report(const KnotExpr& k, const std::vector<RationalAngle>& angles) {
  const SeifertMatrix v = eval_expr(k);
  const SignatureFunction f(v);
  Json results{{"genus", g3_upper(k)},
               {"seifert_matrix", json::matrix(v.entries())},
               {"alexander", json::laurent(f.alexander())},
               {"determinant", json::integer(f.determinant())},
               {"signature_profile", json::profile(signature_profile(f, angles), angles)}};
  return report_document("invariants", to_string(k), std::move(results));
}

inline Json bounds_report(const KnotExpr& k, const std::vector<RationalAngle>& grid) {
  Json bounds = Json::array();
  std::vector<std::string> assumptions;
  for (const auto& r : reconcile(k, grid)) {
    bounds.push_back(json::bound(r));
    assumptions.insert(assumptions.end(), r.assumptions.begin(), r.assumptions.end());
  }
  return report_document("bounds", to_string(k), {{"bounds", bounds}}, assumptions);
}

inline Json distance_report_document(const KnotExpr& k, const KnotExpr& j, const std::vector<RationalAngle>& grid) {
  const BoundReport r = distance_report(k, j, grid);
  return report_document("distance", to_string(k) + " ; " + to_string(j), {{"distance", json::bound(r)}});
}

inline Json surgery_report(const KnotExpr& k, const IntVector& alpha) {
  return report_document("surgery", to_string(k), {{"certificate", json::theorem1(theorem1_certificate(k, alpha))}});
}

inline Json selection_report(const SelectionCertificate& cert, const Verdict& verdict) {
  Json results{{"certificate", json::selection(cert)}, {"verified", verdict.valid}};
  if (!verdict.valid) results["verification_failure"] = verdict.reason;
  return report_document("select-ab", "K(A,B)", std::move(results),
                         {"every Casson-Gordon sum lies in [-nC, nC] with C = " + std::to_string(cert.C)});
}

inline Json harness_report(const HarnessReport& report) {
  Json claims = Json::array();
  long failed = 0;
  for (const auto& c : report.claims) {
    Json entry{{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}, {"checked", c.checked}};
    if (!c.passed) {
      entry["failure"] = c.detail;
      ++failed;
    }
    claims.push_back(std::move(entry));
  }
  Json results{{"claims", claims},
               {"passed", static_cast<long>(report.claims.size()) - failed},
               {"failed", failed},
               {"all_passed", failed == 0}};
  if (const Claim* first = report.first_failure()) results["first_failure"] = first->id;
  return report_document("verify-paper", "built-in claim set", std::move(results),
                         {"Casson-Gordon sums bounded by the stated C", "split curve counts supplied as assumptions"});
}

/// Canonical text: two-space indentation, sorted keys, trailing newline.
inline std::string serialize(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace knotcord
