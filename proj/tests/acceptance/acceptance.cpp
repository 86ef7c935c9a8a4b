// One PASS/FAIL line per acceptance criterion; indented lines carry detail.
// Exit status is nonzero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "support/oracle.hpp"
#include "twistor/deformation.hpp"
#include "twistor/families.hpp"
#include "twistor/locus.hpp"
#include "twistor/modp.hpp"

using namespace twistor;
using defo::Direction;
using defo::PPoly;
using rings::Padic;
using rings::PadicRing;
using rings::u64;

namespace {

int failures = 0;
std::vector<std::string> pending;  // detail lines, printed under the verdict

void verdict(int k, bool pass, const std::string& summary) {
  std::printf("[%d] %s  %s\n", k, pass ? "PASS" : "FAIL", summary.c_str());
  for (const auto& s : pending) std::printf("    %s\n", s.c_str());
  pending.clear();
  failures += !pass;
}

void note(const std::string& s) { pending.push_back(s); }

std::string fixture(const std::string& name) { return std::string(TWISTOR_FIXTURES) + "/" + name; }

oracle::Poly to_oracle(const rings::ZPoly& p) {
  oracle::Poly r;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeffs()[i] != 0) r.t[{i, 0}] = p.coeffs()[i].get_si();
  return r;
}

oracle::Poly to_oracle(const rings::BivarPoly& p) {
  oracle::Poly r;
  for (int i = 0; i <= p.degree_x(); ++i)
    for (int j = 0; j <= p.degree_y(); ++j)
      if (p.coeff(i, j) != 0) r.t[{i, j}] = p.coeff(i, j).get_si();
  return r;
}

std::string fmt(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3g", v);
  return b;
}

// ---------------------------------------------------------------------------

void criterion1() {
  int total = 0;
  std::vector<std::string> bad;
  for (const auto& e : oracle::load_tables(fixture("printed_tables.txt"))) {
    ++total;
    oracle::Poly printed = oracle::expand(e.form);
    auto v = families::family_value(e.family, e.n);
    oracle::Poly computed = v.bivariate ? to_oracle(v.bi) : to_oracle(v.uni);
    if (!(printed == computed)) bad.push_back(e.family + "_" + std::to_string(e.n));
  }
  std::string s = std::to_string(total - bad.size()) + "/" + std::to_string(total) + " table cells equal";
  for (const auto& b : bad) {
    note("mismatch: " + b);
    if (b == "h_-5") {
      bool is_minus_k = oracle::expand(*families::table_form("h", -5)) == -to_oracle(families::k_poly(-5));
      note(std::string("the reference cell for h_-5 expands to ") + (is_minus_k ? "-k_-5" : "an unrelated polynomial") +
           "; computed h_-5 = " + families::h_poly(-5).str());
    }
  }
  verdict(1, bad.empty(), "tables: " + s);
}

void criterion2() {
  auto rep = families::verify_identities(-12, 12);
  int pass = 0;
  for (const auto& f : rep.families) pass += f.pass();
  verdict(2, rep.pass() && rep.families.size() == 10,
          "identities: " + std::to_string(pass) + "/" + std::to_string(rep.families.size()) +
              " families hold for n in [-12, 12]");
  for (const auto& f : rep.families)
    if (!f.pass()) note("failed: " + f.id + (f.first_counterexample ? " (" + *f.first_counterexample + ")" : ""));
}

void criterion3() {
  bool ok = true;
  int roots = 0;
  double worst_f = 0, worst_tau = 0, least_odd = 1e300;
  for (int n : {-3, -2, -1, 2, 3, 5}) {
    auto all = locus::complex_char_roots(n);
    int count = 0;
    for (const auto& r : all) {
      double f = std::fabs(static_cast<double>(locus::eval_f(n, r.x, r.x)));
      double t = std::fabs(static_cast<double>(locus::eval_tau(n, r.x, r.x)));
      // expanded reference polynomials as a second evaluation
      double f2 = std::fabs(static_cast<double>(oracle::f(n).eval(r.x, r.x)));
      worst_f = std::max({worst_f, f, f2});
      if (r.kind == locus::RootKind::Nonacyclic) {
        ++count;
        ++roots;
        worst_tau = std::max(worst_tau, t);
        if (f >= 1e-9 || f2 >= 1e-9 || t >= 1e-9) ok = false;
      } else {
        least_odd = std::min(least_odd, t);
        if (f >= 1e-9 || f2 >= 1e-9 || t <= 1e-3) ok = false;
      }
    }
    int expected = (std::abs(3 * n - 1) - 1) / 2;
    if (count != expected) {
      ok = false;
      note("n=" + std::to_string(n) + ": " + std::to_string(count) + " roots, expected " + std::to_string(expected));
    }
  }
  verdict(3, ok,
          "non-acyclic roots: " + std::to_string(roots) + " found; max |f| " + fmt(worst_f) + ", max |tau| " +
              fmt(worst_tau) + ", min |tau| at odd roots " + fmt(least_odd));
}

void criterion4() {
  bool ok = true;
  int checked = 0;
  double worst_slope = 0, worst_d2 = 0;
  for (int n = -6; n <= 6; ++n)
    for (const auto& r : locus::nonacyclic_roots(n)) {
      auto t = locus::tangent_report(n, r.x);
      ++checked;
      double sl = std::max(std::fabs(static_cast<double>(t.slope_f - t.slope_f_fd)),
                           std::fabs(static_cast<double>(t.slope_tau - t.slope_tau_fd)));
      double d2 = std::fabs(static_cast<double>((t.d2_diff_fd - t.d2_diff_closed) / t.d2_diff_closed));
      worst_slope = std::max(worst_slope, sl);
      worst_d2 = std::max(worst_d2, d2);
      if (!t.ok()) {
        ok = false;
        note("n=" + std::to_string(n) + " x=" + fmt(static_cast<double>(r.x)) + " fails");
      }
    }
  verdict(4, ok,
          "common tangent at " + std::to_string(checked) + " roots; max slope deviation " + fmt(worst_slope) +
              ", max relative second-derivative deviation " + fmt(worst_d2));
}

void criterion5() {
  bool ok = true;
  int checked = 0;
  double w1 = 0, w2 = 0, w3 = 0;
  for (int n = -6; n <= 6; ++n)
    for (const auto& r : locus::nonacyclic_roots(n)) {
      auto d = locus::dehn_and_order_checks(n, r.x);
      ++checked;
      double tr = std::abs(d.trace_c + locus::CLD(1));
      w1 = std::max(w1, static_cast<double>(d.residual_a3lambda));
      w2 = std::max(w2, static_cast<double>(d.order3_residual));
      w3 = std::max(w3, tr);
      if (!(d.residual_a3lambda < 1e-8 && d.order3_residual < 1e-8 && d.c_minus_identity > 0.1 && tr < 1e-8)) ok = false;
    }
  verdict(5, ok,
          "Dehn filling and order three at " + std::to_string(checked) + " roots; max residuals " + fmt(w1) + ", " +
              fmt(w2) + ", trace deviation " + fmt(w3));
}

void criterion6() {
  bool ok = true;
  double worst = 0;
  int points = 0;
  for (int n = -3; n <= 3; ++n) {
    auto pts = locus::variety_points(n, 20, 20260601);
    if (n == 0) {
      note("n=0: f_0 = 1, the variety is empty");
      continue;
    }
    if (pts.size() != 20) ok = false;
    for (const auto& p : pts) {
      ++points;
      auto fox = locus::fox_torsion(n, p.x, p.y);
      auto tau = locus::eval_tau(n, p.x, p.y);
      long double scale = std::max<long double>(std::abs(tau), 1e-300L);
      double err = static_cast<double>(std::min(std::abs(fox - tau), std::abs(fox + tau)) / scale);
      worst = std::max(worst, err);
      if (err >= 1e-8) ok = false;
    }
  }
  verdict(6, ok, "Fox torsion vs tau_n at " + std::to_string(points) + " points; max relative error " + fmt(worst));
}

void criterion7() {
  std::ifstream in(fixture("survey_table.txt"));
  std::string line;
  int rows = 0, bad = 0;
  bool flags_ok = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    int n;
    long long p;
    is >> n >> p;
    std::set<long long> printed;
    for (long long a; is >> a;) printed.insert(a);
    std::vector<u64> primes = p == 0 ? modp::odd_primes_up_to(41) : std::vector<u64>{static_cast<u64>(p)};
    for (u64 q : primes) {
      ++rows;
      std::set<long long> want, got;
      for (long long a : printed) want.insert(static_cast<long long>(rings::reduce_signed(a, q)));
      auto roots = modp::kn_roots_modp(n, q);
      for (const auto& r : roots) {
        got.insert(static_cast<long long>(r.alpha));
        if (!r.is_abelian_locus && !r.is_nonacyclic) flags_ok = false;
      }
      if (want != got) {
        ++bad;
        std::string g, w;
        for (const auto& r : roots) g += " " + std::to_string(r.signed_alpha);
        for (long long a : printed) w += " " + std::to_string(a);
        note("n=" + std::to_string(n) + " p=" + std::to_string(q) + ": reference" + w + ", computed" + g);
      }
    }
  }
  std::map<long long, int> mult;
  for (const auto& r : modp::kn_roots_modp(-3, 5)) mult[r.alpha] = r.multiplicity;
  bool mult_ok = mult == std::map<long long, int>{{3, 2}, {4, 2}};  // {-1: 2, 3: 2}
  if (!mult_ok) note("multiplicities of k_-3 mod 5 differ from {-1:2, 3:2}");
  if (!flags_ok) note("a listed non-abelian root lacks the non-acyclic flag");
  verdict(7, bad == 0 && mult_ok && flags_ok && rows > 0,
          "survey: " + std::to_string(rows - bad) + "/" + std::to_string(rows) + " reference rows equal as sets mod p");
}

PPoly monomial(const rings::PadicCtx& R, int k) { return PPoly::monomial(R, Padic(R, mpz_class(1)), k); }

struct EInstance {
  std::string label;
  defo::LFunctionResult L;
};
std::vector<EInstance> lifted_instances;

void criterion8() {
  bool all = true;
  auto record = [&](const std::string& label, const defo::LFunctionResult& L, bool ok) {
    lifted_instances.push_back({label, L});
    note(label + ": " + (ok ? "ok" : "FAILED") + ", Weierstrass " + L.prep.g.str("T") + " [" +
         defo::direction_name(L.direction) + "], verdict " + L.verdict);
    all = all && ok;
  };

  {
    auto r = defo::lift_root(2, 11, 5);
    auto L = defo::l_function(2, r[0]);
    bool ok = r.size() == 1 && r[0].alpha.congruent(Padic(r[0].ring, mpz_class(38)), 2) &&
              L.prep.g == monomial(r[0].ring, 2) && L.verdict == "match";
    record("(a) n=2 p=11", L, ok);
  }
  {
    auto r = defo::lift_root(-3, 11, -2);
    auto L = defo::l_function(-3, r[0], Direction::YofX);
    record("(b) n=-3 p=11", L, L.prep.g == monomial(r[0].ring, 2) && L.verdict == "match");
  }
  {
    auto lifts = defo::lift_root(-3, 5, 3, 2);
    const auto& R = lifts.front().ring;
    Padic half = Padic::from_rational(R, 1, 2), pi = Padic::pi(R);
    Padic plus = half + half * pi;
    bool found = false;
    for (const auto& r : lifts) {
      bool is_plus = r.alpha == plus;
      auto L = defo::l_function(-3, r);
      Padic two_pi = Padic(R, mpz_class(2)) * pi;
      PPoly expect(R, {Padic(R), Padic(R), Padic(R, mpz_class(5)), is_plus ? two_pi : -two_pi, Padic(R, mpz_class(1))});
      bool ok = L.verdict == "match" && L.compare_precision >= 40 &&
                !defo::first_difference(L.prep.g, expect, 40).has_value() && L.prep.g.degree() == 4;
      found = found || is_plus;
      record(std::string("(c) n=-3 p=5 alpha=(1") + (is_plus ? "+" : "-") + "pi)/2", L, ok);
    }
    all = all && found && lifts.size() == 2;
  }
  for (u64 p : {5ull, 7ull, 13ull}) {
    auto r = defo::lift_root(-1, p, 1);
    auto L = defo::l_function(-1, r[0]);
    bool ok = L.direction == Direction::XofY && L.prep.g == monomial(r[0].ring, 2) && L.verdict == "match";
    record("(d) n=-1 p=" + std::to_string(p), L, ok);
  }
  {
    auto q = rings::zpoly({1, -1, -2, 1});
    auto lifts = defo::lift_root(5, 7, 3, 3);
    for (size_t i = 0; i < lifts.size(); ++i) {
      auto L = defo::l_function(5, lifts[i]);
      auto ref = defo::squared_weierstrass(q, lifts[i].alpha, L.N);
      bool ok = L.verdict == "match" && !defo::first_difference(L.prep.g, ref, L.compare_precision).has_value();
      record("(e) n=5 p=7 lift " + std::to_string(i + 1), L, ok);
    }
    all = all && lifts.size() == 3;
  }
  verdict(8, all, "deformation L-functions: " + std::to_string(lifted_instances.size()) + " instances");
}

void criterion9() {
  bool ok = true;
  auto R5 = PadicRing::make(5, 1, 48);
  auto attempt = [&](const std::string& label, auto fn) -> std::optional<ErrorKind> {
    try {
      auto P = fn();
      note(label + ": Weierstrass " + P.prep.g.str("T") + ", beta = " + P.beta.str());
      return std::nullopt;
    } catch (const Error& e) {
      note(label + ": " + e.what());
      return e.kind();
    }
  };
  // x-direction at alpha = 2
  auto a = attempt("p=5 y-of-x", [&] { return defo::l_function_parabolic(-1, R5, Direction::YofX); });
  if (a) ok = false;
  // beta = (5 + sqrt 14) / 2 with sqrt 14 = 17 mod 25
  mpz_class beta = (mpz_class(5) + 17) / 2;
  auto b = attempt("p=5 x-of-y, beta=(5+17)/2",
                   [&] { return defo::l_function_parabolic(-1, R5, Direction::XofY, beta); });
  if (b) ok = false;
  auto R3 = PadicRing::make(3, 1, 48);
  auto c = attempt("p=3 x-of-y", [&] { return defo::l_function_parabolic(-1, R3, Direction::XofY); });
  if (c != ErrorKind::NonUnitDerivative) ok = false;
  note("f_-1(2, y) = y^2 - 5y + 7 has discriminant -3, a non-residue mod 5");
  auto R7 = PadicRing::make(7, 1, 48);
  attempt("p=7 y-of-x (informational)", [&] { return defo::l_function_parabolic(-1, R7, Direction::YofX); });
  attempt("p=7 x-of-y (informational)", [&] { return defo::l_function_parabolic(-1, R7, Direction::XofY); });
  verdict(9, ok, "parabolic case at n=-1");
}

void criterion10() {
  int literal = 0, negated = 0;
  for (const auto& [label, L] : lifted_instances) {
    literal += L.taylor_matches;
    negated += L.taylor_matches_negated;
    note(label + ": T^2 coefficient " + L.second_taylor_coeff.str() + ", closed form " +
         (L.taylor_closed ? L.taylor_closed->str() : std::string("not integral")) + (L.taylor_matches ? " (equal)" : "") +
         (L.taylor_matches_negated ? " (equal to the negative)" : ""));
  }
  int total = static_cast<int>(lifted_instances.size());
  note(std::to_string(negated) + "/" + std::to_string(total) + " instances equal the negated closed form");
  verdict(10, total > 0 && literal == total,
          "Taylor coefficient: " + std::to_string(literal) + "/" + std::to_string(total) + " instances equal the closed form");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
