#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "twistor/cli.hpp"
#include "twistor/parallel.hpp"

namespace twistor::cli {

using rings::u64;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 1;

  std::string family;
  int n = 0;
  u64 p = 0;
  std::string alpha;
  int l = 0;
  std::string range;
  std::string ext = "auto";
  int prec = defo::kDefaultPrecision;
  int series_order = 0;
  std::string direction;
  std::string beta;
  std::string variant = "riley";
  std::string window = "-3,-3,4,4";
  int resolution = 800;
  int count = 20;
  bool listed_only = false;
};

struct Outcome {
  Json doc;
  std::string text;
  bool mismatch = false;
};

long long parse_int(const std::string& s, const char* flag) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (...) {
  }
  throw Usage(std::string("--") + flag + " expects an integer, got '" + s + "'");
}

long double parse_real(const std::string& s, const char* flag) {
  try {
    size_t used = 0;
    long double v = std::stold(s, &used);
    if (used == s.size() && std::isfinite(v)) return v;
  } catch (...) {
  }
  throw Usage(std::string("--") + flag + " expects a number, got '" + s + "'");
}

std::pair<int, int> range_or(const std::string& s, std::pair<int, int> dflt) {
  if (s.empty()) return dflt;
  auto r = parse_range(s);
  if (!r) throw Usage("--range expects A..B with A <= B, got '" + s + "'");
  return *r;
}

std::optional<defo::Direction> direction_of(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto d = defo::parse_direction(s);
  if (!d) throw Usage("--direction expects y-of-x or x-of-y");
  return d;
}

int ext_of(const std::string& s) {
  if (s == "auto") return 0;
  if (s == "1" || s == "2" || s == "3") return std::stoi(s);
  throw Usage("--ext expects 1, 2, 3 or auto");
}

void need_p(const Options& o) {
  if (o.p == 0) throw Usage("--p is required");
  rings::require_odd_prime(o.p);
}

std::string fmt(long double v, int digits = 10) {
  std::ostringstream s;
  s << std::setprecision(digits) << static_cast<double>(v);
  return s.str();
}

locus::RootDatum pick_root(const Options& o) {
  if (o.l != 0) {
    for (const auto& r : locus::nonacyclic_roots(o.n))
      if (r.l == o.l) return r;
    throw Usage("no non-acyclic root with l = " + std::to_string(o.l) + " for n = " + std::to_string(o.n));
  }
  return locus::snap_root(o.n, parse_real(o.alpha, "alpha"), false);
}

Json tagged(const char* command, const Json& body) {
  Json j{{"command", command}};
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

// ---- subcommands ----

Outcome cmd_poly(const Options& o) {
  if (!families::is_family_name(o.family)) throw Usage("unknown family '" + o.family + "'");
  auto v = families::family_value(o.family, o.n);
  Outcome r;
  r.doc = Json{{"command", "poly"}, {"family", o.family}, {"n", o.n}, {"bivariate", v.bivariate}, {"var", v.var}};
  r.doc["coeffs"] = v.bivariate ? bivar_json(v.bi) : zpoly_json(v.uni);
  std::string expanded = v.bivariate ? v.bi.str() : v.uni.str(v.var);
  auto printed = families::table_form(o.family, o.n);
  r.text = o.family + "_" + std::to_string(o.n) + " = " + (printed ? *printed : expanded) + "\n";
  if (printed) r.text += "  expanded: " + expanded + "\n";
  return r;
}

Outcome cmd_identities(const Options& o) {
  auto [lo, hi] = range_or(o.range, {-12, 12});
  auto rep = families::verify_identities(lo, hi, worker_count());
  Outcome r;
  r.doc = tagged("identities", identity_json(rep));
  r.mismatch = !rep.pass();
  for (const auto& f : rep.families) {
    r.text += (f.pass() ? "PASS " : "FAIL ") + f.id + "  " + f.description;
    if (f.first_counterexample) r.text += "  (" + *f.first_counterexample + ")";
    r.text += "\n";
  }
  r.text += std::string(rep.pass() ? "all identities hold" : "identity failures") + " for n in [" +
            std::to_string(lo) + ", " + std::to_string(hi) + "]\n";
  return r;
}

Outcome cmd_roots(const Options& o) {
  Outcome r;
  if (o.l != 0 || !o.alpha.empty()) {
    auto root = pick_root(o);
    r.doc = Json{{"command", "roots"}, {"n", o.n}, {"root", root_json(root)}};
    r.text = "n = " + std::to_string(o.n) + ", x = " + fmt(root.x) + " (" + locus::kind_name(root.kind) + ")\n";
    if (root.kind == locus::RootKind::Nonacyclic) {
      auto t = locus::tangent_report(o.n, root.x);
      r.doc["tangent"] = tangent_json(t);
      r.mismatch = !t.ok();
      r.text += "  slopes (" + t.direction + "): f " + fmt(t.slope_f) + ", tau " + fmt(t.slope_tau) + "\n";
      r.text += "  d2 difference: closed " + fmt(t.d2_diff_closed) + ", traced " + fmt(t.d2_diff_fd) + "\n";
      r.text += "  d2 tau: " + fmt(t.d2tau_closed) + " (printed constant " + fmt(t.d2tau_printed) + ")\n";
      r.text += std::string("  tangent checks ") + (t.ok() ? "pass" : "FAIL") + "\n";
    }
    auto d = locus::dehn_and_order_checks(o.n, root.x);
    r.doc["dehn"] = dehn_json(d);
    r.text += "  |A^-3 lambda - I| = " + fmt(d.residual_a3lambda, 3) + ", tr(a^-1 w^n) = " + fmt(d.trace_c.real()) + "\n";
    return r;
  }
  auto roots = locus::complex_char_roots(o.n);
  Json arr = Json::array();
  int nonacyclic = 0;
  for (const auto& x : roots) {
    arr.push_back(root_json(x));
    nonacyclic += x.kind == locus::RootKind::Nonacyclic;
    if (!x.valid) r.mismatch = true;
    r.text += std::string(x.kind == locus::RootKind::Nonacyclic ? "nonacyclic " : "charvariety ") +
              "L=" + std::to_string(x.cos_index) + "  x = " + fmt(x.x) + "  |f| = " + fmt(x.f_residual, 3) +
              "  tau = " + fmt(x.tau_value, 3) + "\n";
  }
  int expected = o.n == 0 || o.n == 1 ? 0 : (std::abs(3 * o.n - 1) - 1) / 2;
  if (nonacyclic != expected) r.mismatch = true;
  r.doc = Json{{"command", "roots"}, {"n", o.n}, {"nonacyclic_count", nonacyclic}, {"roots", arr}};
  r.text += std::to_string(nonacyclic) + " non-acyclic roots\n";
  return r;
}

Outcome cmd_roots_modp(const Options& o) {
  need_p(o);
  auto roots = modp::kn_roots_modp(o.n, o.p);
  Outcome r;
  Json arr = Json::array();
  for (const auto& x : roots) {
    arr.push_back(modp_root_json(x));
    r.text += "alpha = " + std::to_string(x.signed_alpha) + " (mult " + std::to_string(x.multiplicity) + ")" +
              (x.is_abelian_locus ? " abelian" : "") + (x.is_regular ? " regular" : " singular") +
              (x.is_nonacyclic ? " nonacyclic" : "") + "\n";
  }
  if (roots.empty()) r.text = "no roots of k_" + std::to_string(o.n) + " mod " + std::to_string(o.p) + "\n";
  r.doc = Json{{"command", "roots-modp"}, {"n", o.n}, {"p", o.p}, {"roots", arr}};
  return r;
}

Outcome cmd_survey(const Options& o) {
  std::vector<int> ns;
  if (o.range.empty())
    ns = {-3, -2, -1, 2, 3};
  else
    for (auto [lo, hi] = range_or(o.range, {0, 0}); lo <= hi; ++lo) ns.push_back(lo);
  u64 pmax = o.p == 0 ? 41 : o.p;
  auto rows = modp::survey(ns, pmax, worker_count());
  Outcome r;
  Json arr = Json::array();
  for (const auto& row : rows) {
    if (o.listed_only && !modp::has_small_root(row)) continue;
    arr.push_back(survey_row_json(row));
    if (row.roots.empty()) continue;
    r.text += "n=" + std::to_string(row.n) + " p=" + std::to_string(row.p) + ":";
    for (const auto& x : row.roots) {
      r.text += " " + std::to_string(x.signed_alpha);
      if (x.multiplicity > 1) r.text += "^" + std::to_string(x.multiplicity);
    }
    r.text += "\n";
  }
  r.doc = Json{{"command", "survey"}, {"p_max", pmax}, {"rows", arr}};
  return r;
}

Outcome cmd_riley(const Options& o) {
  Outcome r;
  if (o.p != 0) {
    need_p(o);
    if (o.alpha.empty()) throw Usage("--alpha is required with --p");
    long long a = parse_int(o.alpha, "alpha");
    long long y = o.beta.empty() ? a : parse_int(o.beta, "beta");
    modp::Variant v;
    if (o.variant == "riley")
      v = modp::Variant::Riley;
    else if (o.variant == "repU")
      v = modp::Variant::RepU;
    else
      throw Usage("--variant expects riley or repU");
    auto d = modp::rep_matrices_modp(o.n, o.p, a, y, v);
    r.doc = tagged("riley", modp_rep_json(d));
    r.mismatch = !(d.det_ok && d.relation_ok);
    r.text = std::string(modp::variant_name(v)) + " over " + d.field_used + ": A = [[" + d.A.a.str() + ", " + d.A.b.str() +
             "], [" + d.A.c.str() + ", " + d.A.d.str() + "]], B = [[" + d.B.a.str() + ", " + d.B.b.str() + "], [" +
             d.B.c.str() + ", " + d.B.d.str() + "]]\n" + "relation " + (d.relation_ok ? "holds" : "FAILS") + "\n";
    return r;
  }
  auto root = pick_root(o);
  auto R = locus::riley_matrices(o.n, locus::CLD(root.x, 0), locus::CLD(root.x, 0));
  auto d = locus::dehn_and_order_checks(o.n, root.x);
  auto c = [](const locus::CLD& z) { return Json{{"re", number10(z.real())}, {"im", number10(z.imag())}}; };
  auto m = [&](const locus::CMat& M) {
    return Json::array({Json::array({c(M.a), c(M.b)}), Json::array({c(M.c), c(M.d)})});
  };
  r.doc = Json{{"command", "riley"},
               {"n", o.n},
               {"x", number10(root.x)},
               {"A", m(R.A)},
               {"B", m(R.B)},
               {"relation_residual", number10(R.relation_residual)},
               {"dehn", dehn_json(d)}};
  bool ok = R.relation_residual < 1e-8 && d.residual_a3lambda < 1e-8;
  if (d.nonacyclic) ok = ok && d.order3_residual < 1e-8 && std::abs(d.trace_c.real() + 1) < 1e-8;
  r.mismatch = !ok;
  r.text = "x = " + fmt(root.x) + ": relation residual " + fmt(R.relation_residual, 3) + ", |A^-3 lambda - I| " +
           fmt(d.residual_a3lambda, 3) + ", |C^3 - I| " + fmt(d.order3_residual, 3) + ", tr C " +
           fmt(d.trace_c.real()) + "\n";
  return r;
}

Outcome cmd_lfun(const Options& o) {
  need_p(o);
  if (o.alpha.empty()) throw Usage("--alpha is required");
  if (o.prec < 4) throw Usage("--prec-digits must be at least 4");
  auto lifts = defo::lift_root(o.n, o.p, parse_int(o.alpha, "alpha"), ext_of(o.ext), o.prec);
  auto dir = direction_of(o.direction);
  Outcome r;
  Json arr = Json::array();
  bool all_match = true;
  int N = 0;
  for (const auto& lift : lifts) {
    auto L = defo::l_function(o.n, lift, dir, o.series_order);
    N = L.N;
    arr.push_back(lfunction_json(L));
    all_match = all_match && L.verdict == "match";
    r.text += "alpha = " + lift.alpha.str() + " [" + defo::direction_name(L.direction) + "]\n";
    r.text += "  L = p^" + L.prep.r_string() + " * (" + L.prep.g.str("T") + ") * unit\n";
    r.text += "  k_n^2 Weierstrass: " + L.kn_squared_weierstrass.str("T") + "\n";
    r.text += "  verdict: " + L.verdict + " (mod pi^" + std::to_string(L.compare_precision) + ")\n";
  }
  r.doc = Json{{"command", "lfun"},
               {"n", o.n},
               {"p", o.p},
               {"ext", {{"e", lifts.front().ring->e()}}},
               {"M", o.prec},
               {"N", N},
               {"verdict", all_match ? "match" : "mismatch"},
               {"lifts", arr}};
  r.mismatch = !all_match;
  return r;
}

Outcome cmd_lfun_parabolic(const Options& o) {
  need_p(o);
  int e = ext_of(o.ext);
  auto R = rings::PadicRing::make(o.p, e == 0 ? 1 : e, o.prec);
  auto dir = direction_of(o.direction).value_or(defo::Direction::XofY);
  std::optional<mpz_class> beta;
  if (!o.beta.empty()) beta = mpz_class(static_cast<long>(parse_int(o.beta, "beta")));
  auto P = defo::l_function_parabolic(o.n, R, dir, beta, o.series_order);
  Outcome r;
  r.doc = tagged("lfun-parabolic", parabolic_json(P));
  r.text = std::string("beta = ") + P.beta.str() + " [" + defo::direction_name(dir) + "]\n  L = p^" + P.prep.r_string() +
           " * (" + P.prep.g.str("T") + ") * unit" + (P.square_root_taken ? " (square root taken)" : "") + "\n";
  return r;
}

Outcome cmd_torsion_check(const Options& o) {
  std::pair<int, int> rg = o.range.empty() && o.n != 0 ? std::pair{o.n, o.n} : range_or(o.range, {-3, 3});
  if (o.count < 1) throw Usage("--count must be positive");
  Outcome r;
  Json arr = Json::array();
  for (int n = rg.first; n <= rg.second; ++n) {
    auto pts = locus::variety_points(n, o.count, o.seed);
    long double worst = 0;
    for (const auto& pt : pts) {
      auto fox = locus::fox_torsion(n, pt.x, pt.y);
      auto tau = locus::eval_tau(n, pt.x, pt.y);
      long double scale = std::max<long double>(std::abs(tau), 1);
      long double err = std::min(std::abs(fox - tau), std::abs(fox + tau)) / scale;
      worst = std::max(worst, err);
    }
    bool pass = worst < 1e-8;
    r.mismatch = r.mismatch || !pass;
    arr.push_back(Json{{"n", n}, {"points", pts.size()}, {"max_rel_err", number10(worst)}, {"pass", pass}});
    r.text += "n=" + std::to_string(n) + ": " + std::to_string(pts.size()) + " points, max rel err " + fmt(worst, 3) +
              (pts.empty() ? " (empty variety)" : "") + (pass ? "" : "  FAIL") + "\n";
  }
  r.doc = Json{{"command", "torsion-check"}, {"seed", o.seed}, {"results", arr}};
  return r;
}

locus::Window parse_window(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(static_cast<double>(parse_real(part, "window")));
  if (v.size() != 4 || !(v[0] < v[2]) || !(v[1] < v[3])) throw Usage("--window expects x0,y0,x1,y1 with x0<x1, y0<y1");
  return locus::Window{v[0], v[2], v[1], v[3]};
}

}  // namespace

std::optional<std::pair<int, int>> parse_range(const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?\d+)\s*\.\.\s*([+-]?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  try {
    int a = std::stoi(m[1]), b = std::stoi(m[2]);
    if (a > b) return std::nullopt;
    return std::pair{a, b};
  } catch (...) {
    return std::nullopt;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Twist knot representation invariants", "twistor"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", o.out_path, "write the document to PATH");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.fallthrough();

  auto* poly = app.add_subcommand("poly", "print a polynomial family member");
  poly->add_option("--family", o.family)->required();
  poly->add_option("--n", o.n)->required();

  auto* ident = app.add_subcommand("identities", "verify the identity families");
  ident->add_option("--range", o.range, "A..B, default -12..12");

  auto* roots = app.add_subcommand("roots", "complex roots of f_n(x,x), or details at one root");
  roots->add_option("--n", o.n)->required();
  roots->add_option("--alpha", o.alpha, "a root to within 1e-8");
  roots->add_option("--l", o.l, "non-acyclic root index");

  auto* rmodp = app.add_subcommand("roots-modp", "roots of k_n mod p with flags");
  rmodp->add_option("--n", o.n)->required();
  rmodp->add_option("--p", o.p)->required();

  auto* surv = app.add_subcommand("survey", "roots of k_n mod p for all odd p up to --p");
  surv->add_option("--range", o.range, "n range, default the list -3,-2,-1,2,3");
  surv->add_option("--p", o.p, "largest prime, default 41");
  surv->add_flag("--listed-only", o.listed_only, "only rows with a root of absolute value at most 5");

  auto* riley = app.add_subcommand("riley", "Riley matrices over C (with --alpha/--l) or mod p (with --p)");
  riley->add_option("--n", o.n)->required();
  riley->add_option("--alpha", o.alpha);
  riley->add_option("--l", o.l);
  riley->add_option("--p", o.p);
  riley->add_option("--beta", o.beta, "y coordinate mod p, default y = x");
  riley->add_option("--variant", o.variant, "riley or repU");

  auto* lfun = app.add_subcommand("lfun", "L-function at the lifts of a root of k_n mod p");
  lfun->add_option("--n", o.n)->required();
  lfun->add_option("--p", o.p)->required();
  lfun->add_option("--alpha", o.alpha, "residue")->required();
  lfun->add_option("--ext", o.ext, "1, 2, 3 or auto");
  lfun->add_option("--prec-digits", o.prec, "pi-adic precision M");
  lfun->add_option("--series-order", o.series_order, "truncation order N");
  lfun->add_option("--direction", o.direction, "y-of-x or x-of-y");

  auto* lpar = app.add_subcommand("lfun-parabolic", "L-function at a residual point with x = 2");
  lpar->add_option("--n", o.n)->required();
  lpar->add_option("--p", o.p)->required();
  lpar->add_option("--ext", o.ext, "1, 2, 3 or auto");
  lpar->add_option("--prec-digits", o.prec);
  lpar->add_option("--series-order", o.series_order);
  lpar->add_option("--direction", o.direction, "x-of-y (default) or y-of-x");
  lpar->add_option("--beta", o.beta, "integer representative of y at x = 2");

  auto* tors = app.add_subcommand("torsion-check", "Fox-calculus torsion against tau_n at random points");
  tors->add_option("--n", o.n);
  tors->add_option("--range", o.range, "default -3..3");
  tors->add_option("--count", o.count, "points per n");

  auto* plot = app.add_subcommand("plot", "SVG of the real curves f_n = 0 and tau_n = 0");
  plot->add_option("--n", o.n)->required();
  plot->add_option("--window", o.window, "x0,y0,x1,y1");
  plot->add_option("--resolution", o.resolution, "grid cells per side");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  Outcome res;
  try {
    if (poly->parsed()) res = cmd_poly(o);
    else if (ident->parsed()) res = cmd_identities(o);
    else if (roots->parsed()) res = cmd_roots(o);
    else if (rmodp->parsed()) res = cmd_roots_modp(o);
    else if (surv->parsed()) res = cmd_survey(o);
    else if (riley->parsed()) res = cmd_riley(o);
    else if (lfun->parsed()) res = cmd_lfun(o);
    else if (lpar->parsed()) res = cmd_lfun_parabolic(o);
    else if (tors->parsed()) res = cmd_torsion_check(o);
    else if (plot->parsed()) {
      auto w = parse_window(o.window);
      locus::PlotSummary s;
      std::string svg = locus::plot_svg(o.n, w, o.resolution, &s);
      if (o.out_path.empty()) {
        out << svg;
        return kOk;
      }
      locus::plot_curves(o.n, w, o.resolution, o.out_path);
      res.doc = Json{{"command", "plot"},     {"n", o.n},
                     {"path", o.out_path},   {"resolution", o.resolution},
                     {"f_segments", s.f_segments}, {"tau_segments", s.tau_segments},
                     {"markers", s.markers}};
      res.text = "wrote " + o.out_path + " (" + std::to_string(s.f_segments) + " f segments, " +
                 std::to_string(s.tau_segments) + " tau segments, " + std::to_string(s.markers) + " markers)\n";
      o.out_path.clear();
    }
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidArgument:
      case ErrorKind::CompositeModulus:
      case ErrorKind::EvenCharacteristic:
        return kUsage;
      default:
        return kComputation;
    }
  }

  std::string body = o.format == "json" ? res.doc.dump(2) + "\n" : res.text;
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out_path << "\n";
      return kComputation;
    }
    f << body;
  } else {
    out << body;
  }
  if (res.mismatch) err << "verification mismatch\n";
  return res.mismatch ? kMismatch : kOk;
}

}  // namespace twistor::cli
