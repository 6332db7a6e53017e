#pragma once

// JSON documents for coverings, verification reports, and pull-back reports.
// Rational data is serialized as exact strings; rational functions as
// integer-string coefficient arrays scaled by a common factor.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "heunpb/covering.hpp"
#include "heunpb/identities.hpp"
#include "heunpb/pullback.hpp"

namespace heunpb {

using Json = nlohmann::ordered_json;

inline Json rational_strings(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}

inline Json poly_rational_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

// num/den as integer-string arrays with a single common rational scale
// divided out: f = num/den exactly, gcd of all integer contents is 1.
inline Json rf_json(const RationalFunction& f) {
  auto [zn, sn] = f.num().integer_form();
  auto [zd, sd] = f.den().integer_form();
  // f = (sn/sd) * zn/zd; fold the rational sn/sd into the integer arrays
  Rational ratio = f.num().is_zero() ? Rational(1) : sn / sd;
  std::vector<Int> n(zn), d(zd);
  for (auto& v : n) v *= ratio.num();
  for (auto& v : d) v *= ratio.den();
  Int g(0);
  for (const auto& v : n) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (const auto& v : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) g = 1;
  Json jn = Json::array(), jd = Json::array();
  for (auto& v : n) jn.push_back(Int(v / g).get_str());
  for (auto& v : d) jd.push_back(Int(v / g).get_str());
  if (jn.empty()) jn.push_back("0");
  return Json{{"num", jn}, {"den", jd}};
}

inline Json passport_json(const Passport& p) {
  return Json{{"0", p.over0}, {"1", p.over1}, {"inf", p.over_inf}};
}

inline Json covering_json(const Covering& c, const DihedralPair* pair = nullptr) {
  Json j;
  j["family"] = c.family.empty() ? Json(nullptr) : Json(c.family);
  if (c.N) j["N"] = *c.N;
  if (c.M) j["M"] = *c.M;
  if (c.s) j["s"] = c.s->str();
  j["degree"] = c.degree;
  j["phi"] = rf_json(c.phi);
  j["passport"] = passport_json(c.passport);
  j["belyi"] = c.belyi;
  Json extra = Json::array();
  for (const auto& eb : c.extra_branch_values) {
    Json e{{"order", eb.order}, {"value", eb.value ? Json(eb.value->str()) : Json(nullptr)}};
    e["locus"] = poly_rational_json(eb.locus);
    extra.push_back(std::move(e));
  }
  j["extra_branch"] = std::move(extra);
  if (pair) {
    j["theta1"] = poly_rational_json(pair->Theta1);
    j["theta2"] = poly_rational_json(pair->Theta2);
    j["t"] = Rational(pair->M * pair->M, pair->N * pair->N).str();
  }
  return j;
}

// One verification report as a JSON object.  Runtime is excluded so that
// identical seeded invocations emit byte-identical JSON; it appears in the
// CSV summary instead.
inline Json report_json(const VerificationReport& r) {
  Json j;
  j["id"] = r.id;
  j["status"] = r.pass ? "pass" : "fail";
  j["mode"] = r.mode;
  j["worst_relative_error"] = r.worst_error.empty() ? Json(nullptr) : Json(r.worst_error);
  j["witness"] = r.witness.empty() ? Json(nullptr) : Json(r.witness);
  j["samples"] = r.samples;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline std::string report_csv_header() { return "id,status,worst_error,samples,ms"; }

inline std::string report_csv_row(const VerificationReport& r) {
  char ms[32];
  std::snprintf(ms, sizeof(ms), "%.1f", r.ms);
  return r.id + "," + (r.pass ? "pass" : "fail") + "," + r.worst_error + "," +
         std::to_string(r.samples) + "," + ms;
}

inline Json theta_json(const PowerProduct& theta) {
  Json arr = Json::array();
  for (const auto& f : theta.factors())
    arr.push_back(Json{{"base", poly_rational_json(f.base)}, {"exp", f.exp.str()}});
  return arr;
}

inline Json pullback_report_json(const std::string& scenario, const ODE& source,
                                 const RationalFunction& phi, const PowerProduct& theta,
                                 const ODE& result, bool match,
                                 const std::vector<Rational>& exponent_differences) {
  Json j;
  j["scenario"] = scenario;
  j["source"] = Json{{"p1", rf_json(source.p1)}, {"p0", rf_json(source.p0)}};
  j["phi"] = rf_json(phi);
  j["theta"] = theta_json(theta);
  j["result"] = Json{{"p1", rf_json(result.p1)}, {"p0", rf_json(result.p0)}};
  j["match"] = match;
  j["exponent_differences"] = rational_strings(exponent_differences);
  return j;
}

}  // namespace heunpb
