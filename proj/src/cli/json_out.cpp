#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "twistor/cli.hpp"

namespace twistor::cli {

namespace {

template <class M>
Json mat_json(const M& m, auto entry) {
  return Json::array({Json::array({entry(m.a), entry(m.b)}), Json::array({entry(m.c), entry(m.d)})});
}

Json complex_json(const locus::CLD& z) { return Json{{"re", number10(z.real())}, {"im", number10(z.imag())}}; }

}  // namespace

Json zpoly_json(const rings::ZPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

Json bivar_json(const rings::BivarPoly& p) {
  Json rows = Json::array();
  for (const auto& row : p.rows()) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    rows.push_back(r);
  }
  return rows;
}

Json number10(long double v) {
  if (v == 0) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", static_cast<double>(v));
  return std::strtod(buf, nullptr);
}

Json padic_json(const rings::Padic& a) {
  Json digits = Json::array();
  for (auto d : a.digits()) digits.push_back(std::to_string(d));
  return Json{{"value", a.str()}, {"digits", digits}};
}

Json ppoly_json(const defo::PPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

Json root_json(const locus::RootDatum& r) {
  return Json{{"l", r.l},
              {"cos_index", r.cos_index},
              {"x", number10(r.x)},
              {"nonacyclic", r.kind == locus::RootKind::Nonacyclic},
              {"kind", locus::kind_name(r.kind)},
              {"t_angle", number10(r.t_angle)},
              {"f_residual", number10(r.f_residual)},
              {"tau", number10(r.tau_value)},
              {"valid", r.valid}};
}

Json tangent_json(const locus::TangentReport& t) {
  Json j{{"alpha", number10(t.alpha)},
         {"direction", t.direction},
         {"infinite_slope", t.infinite_slope},
         {"slope_f", number10(t.slope_f)},
         {"slope_tau", number10(t.slope_tau)},
         {"slope_f_fd", number10(t.slope_f_fd)},
         {"slope_tau_fd", number10(t.slope_tau_fd)},
         {"d2_diff_closed", number10(t.d2_diff_closed)},
         {"d2_diff_fd", number10(t.d2_diff_fd)},
         {"d2tau_closed", number10(t.d2tau_closed)},
         {"d2tau_fd", number10(t.d2tau_fd)},
         {"d2tau_printed", number10(t.d2tau_printed)},
         {"partials_rel_err", number10(t.partials_rel_err)},
         {"ok", t.ok()}};
  return j;
}

Json dehn_json(const locus::DehnReport& d) {
  return Json{{"alpha", number10(d.alpha)},
              {"nonacyclic", d.nonacyclic},
              {"L", complex_json(d.L)},
              {"residual_a3lambda", number10(d.residual_a3lambda)},
              {"order3_residual", number10(d.order3_residual)},
              {"c_minus_identity", number10(d.c_minus_identity)},
              {"trace_c", complex_json(d.trace_c)}};
}

Json modp_root_json(const modp::ModpRoot& r) {
  return Json{{"alpha", r.alpha},
              {"signed", r.signed_alpha},
              {"mult", r.multiplicity},
              {"regular", r.is_regular},
              {"nonacyclic", r.is_nonacyclic},
              {"abelian", r.is_abelian_locus},
              {"dfdx_nonzero", r.dfdx_nonzero},
              {"dfdy_nonzero", r.dfdy_nonzero}};
}

Json modp_rep_json(const modp::ModpRepData& d) {
  auto entry = [](const rings::Fp2& a) { return a.str(); };
  Json j{{"n", d.n},
         {"p", d.p},
         {"x", d.x},
         {"y", d.y},
         {"variant", modp::variant_name(d.variant)},
         {"field", d.field_used},
         {"t_squared", d.ctx.d},
         {"A", mat_json(d.A, entry)},
         {"B", mat_json(d.B, entry)},
         {"det_ok", d.det_ok},
         {"relation_ok", d.relation_ok}};
  if (d.sqrt_x_minus_2_in_fp) j["sqrt_x_minus_2_in_fp"] = *d.sqrt_x_minus_2_in_fp;
  if (d.containment_matches) j["containment_matches"] = *d.containment_matches;
  return j;
}

Json survey_row_json(const modp::SurveyRow& row) {
  Json roots = Json::array();
  for (const auto& r : row.roots) roots.push_back(modp_root_json(r));
  return Json{{"n", row.n}, {"p", row.p}, {"listed", modp::has_small_root(row)}, {"roots", roots}};
}

Json identity_json(const families::IdentityReport& rep) {
  Json fams = Json::array();
  for (const auto& f : rep.families) {
    Json failing = Json::array();
    for (const auto& v : f.verdicts)
      if (v.applicable && !v.pass) failing.push_back(v.n);
    Json j{{"id", f.id}, {"description", f.description}, {"pass", f.pass()}, {"failing_n", failing}};
    if (f.first_counterexample) j["first_counterexample"] = *f.first_counterexample;
    fams.push_back(j);
  }
  Json eps = Json::object();
  for (auto [n, s] : rep.c_identity_sign) eps[std::to_string(n)] = s;
  return Json{{"range", {rep.lo, rep.hi}}, {"pass", rep.pass()}, {"families", fams}, {"c_identity_sign", eps}};
}

Json lfunction_json(const defo::LFunctionResult& L) {
  Json j{{"alpha", L.root.alpha.str()},
         {"alpha_digits", padic_json(L.root.alpha)["digits"]},
         {"residue", L.root.residue},
         {"multiplicity", L.root.multiplicity},
         {"method", L.root.method},
         {"direction", defo::direction_name(L.direction)},
         {"weierstrass_r", L.prep.r_string()},
         {"weierstrass_degree", L.prep.s},
         {"weierstrass", ppoly_json(L.prep.g)},
         {"kn_squared_weierstrass", ppoly_json(L.kn_squared_weierstrass)},
         {"compare_precision", L.compare_precision},
         {"verdict", L.verdict},
         {"unit_part_check", L.unit_part_check},
         {"second_taylor_coeff", L.second_taylor_coeff.str()},
         {"taylor_matches", L.taylor_matches},
         {"taylor_matches_negated", L.taylor_matches_negated},
         {"order_two_ok", L.order_two_ok},
         {"reduction_ok", L.reduction_ok}};
  if (L.first_mismatch) j["first_mismatch"] = *L.first_mismatch;
  if (L.taylor_closed) {
    j["taylor_closed"] = L.taylor_closed->str();
    j["taylor_precision"] = L.taylor_precision;
  }
  if (L.cross_direction_ok) j["cross_direction_ok"] = *L.cross_direction_ok;
  return j;
}

Json parabolic_json(const defo::ParabolicResult& P) {
  Json L = Json::array();
  for (int i = 0; i <= std::min(P.L.order(), 8); ++i) L.push_back(P.L[i].str());
  return Json{{"n", P.n},
              {"p", P.p},
              {"direction", defo::direction_name(P.direction)},
              {"beta", P.beta.str()},
              {"beta_residue", P.beta_residue},
              {"square_root_taken", P.square_root_taken},
              {"series_head", L},
              {"weierstrass_r", P.prep.r_string()},
              {"weierstrass_degree", P.prep.s},
              {"weierstrass", ppoly_json(P.prep.g)}};
}

}  // namespace twistor::cli
