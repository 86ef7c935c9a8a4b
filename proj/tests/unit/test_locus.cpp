#include <doctest.h>

#include <cmath>
#include <fstream>
#include <regex>

#include "support/helpers.hpp"
#include "support/oracle.hpp"
#include "twistor/locus.hpp"

using namespace twistor;
using namespace twistor::locus;

namespace {

int expected_count(int n) { return (std::abs(3 * n - 1) - 1) / 2; }

// Fox derivative by the letter-sum formula: sum over b^{+-1} letters of the
// prefix (times b^-1 with a minus sign for inverse letters).
CLD fox_oracle(int n, CLD x, CLD y) {
  RileyData r = riley_matrices(n, x, y);
  auto letter = [&](int g) {
    return g == 1 ? r.A : g == -1 ? r.A.adjugate() : g == 2 ? r.B : r.B.adjugate();
  };
  std::vector<int> w = {1, -2, -1, 2}, winv = {-2, 1, 2, -1}, rel = {1};
  for (int i = 0; i < std::abs(n); ++i) rel.insert(rel.end(), (n > 0 ? w : winv).begin(), (n > 0 ? w : winv).end());
  rel.push_back(-2);
  for (int i = 0; i < std::abs(n); ++i) rel.insert(rel.end(), (n > 0 ? winv : w).begin(), (n > 0 ? winv : w).end());
  CMat prefix = CMat::identity(rings::NoCtx{}), sum{0, 0, 0, 0};
  for (int g : rel) {
    if (g == 2) sum = sum + prefix;
    if (g == -2) sum = sum - prefix * r.B.adjugate();
    prefix = prefix * letter(g);
  }
  return sum.det() / (CLD(2) - x);
}

CLD oracle_eval(const oracle::Poly& p, CLD x, CLD y) {
  CLD s = 0;
  for (auto& [k, v] : p.t) s += CLD(static_cast<LD>(v)) * std::pow(x, k.first) * std::pow(y, k.second);
  return s;
}

}  // namespace

TEST_SUITE("locus") {
  TEST_CASE("cosine roots: examples") {
    auto r2 = nonacyclic_roots(2);
    REQUIRE(r2.size() == 2);
    CHECK(std::fabs(r2[0].x - (3 - std::sqrt(5.0L)) / 2) < 1e-15L);
    CHECK(std::fabs(r2[1].x - (3 + std::sqrt(5.0L)) / 2) < 1e-15L);
    for (auto& r : r2) CHECK(std::fabs(oracle::k(2).eval(r.x, 0)) < 1e-15L);
    auto rm1 = nonacyclic_roots(-1);
    REQUIRE(rm1.size() == 1);
    CHECK(std::fabs(rm1[0].x - 1) < 1e-15L);
    CHECK(rm1[0].l == 1);
    CHECK(nonacyclic_roots(0).empty());
    CHECK(nonacyclic_roots(1).empty());
    CHECK(complex_char_roots(1).size() == 1);
  }

  TEST_CASE("cosine roots: counts, residuals and exactness") {
    for (int n = -6; n <= 6; ++n) {
      if (n == 0 || n == 1) continue;
      auto all = complex_char_roots(n);
      CHECK(static_cast<int>(all.size()) == std::abs(3 * n - 1) - 1);
      CHECK(static_cast<int>(nonacyclic_roots(n).size()) == expected_count(n));
      auto fd = oracle::f(n).diag(), td = oracle::tau(n).diag();
      for (auto& r : all) {
        CHECK(r.valid);
        CHECK(std::fabs(fd.eval(r.x, 0)) < 1e-9L);
        if (r.kind == RootKind::Nonacyclic) {
          CHECK(r.l > 0);
          CHECK(2 * r.l <= std::abs(3 * n - 1) - 1);
          CHECK(std::fabs(td.eval(r.x, 0)) < 1e-9L);
          CHECK(std::fabs(oracle::k(n).eval(r.x, 0)) < 1e-9L);
        } else {
          CHECK(std::fabs(td.eval(r.x, 0)) > 1e-3L);
        }
        CHECK(std::fabs(2 * std::cos(r.t_angle) - (1 - r.x)) < 1e-15L);
      }
    }
  }

  TEST_CASE("tangent report at n = 2") {
    LD a = (3 + std::sqrt(5.0L)) / 2;
    auto t = tangent_report(2, a);
    CHECK_FALSE(t.infinite_slope);
    CHECK(std::fabs(t.slope_f - t.slope_tau) < 1e-15L);
    CHECK(std::fabs(t.slope_f - t.slope_f_fd) < 1e-8L);
    // Oracle: dy/dx = -f_x / f_y by central differences of the expanded polynomial.
    auto F = oracle::f(2);
    LD h = 1e-6L;
    LD fx = (F.eval(a + h, a) - F.eval(a - h, a)) / (2 * h), fy = (F.eval(a, a + h) - F.eval(a, a - h)) / (2 * h);
    CHECK(std::fabs(-fx / fy - t.slope_f) < 1e-6L);
    LD D = 2 * a * a - 4 * a - 1;
    CHECK(std::fabs(t.d2tau_printed - 2 * 25 / ((a - 2) * D * D)) < 1e-12L);
    // The traced second derivative of tau along f = 0 has the opposite sign to
    // the printed constant; it equals f_y-weighted d2 difference.
    CHECK(std::fabs(t.d2tau_fd - t.d2tau_closed) < 1e-6L * std::fabs(t.d2tau_closed));
    CHECK(std::fabs(t.d2tau_closed + t.d2tau_printed) < 1e-12L);
    CHECK(std::fabs(t.d2tau_closed - t.symbolic.ty * t.d2_diff_closed) < 1e-9L * std::fabs(t.d2tau_closed));
    CHECK(t.ok());
  }

  TEST_CASE("tangent report flags the vertical tangent") {
    auto t = tangent_report(-1, 1.0L);
    CHECK(t.infinite_slope);
    CHECK(t.direction == "x-of-y");
    CHECK(std::fabs(t.slope_f) < 1e-15L);  // dx/dy = -D/D' = 0
    CHECK(t.ok());
    CHECK(thrown_kind([] { tangent_report(2, 0.5L); }) == ErrorKind::NotALocusPoint);
    CHECK(thrown_kind([] { tangent_report(2, 1 - 2 * std::cos(M_PIl / 5)); }) == ErrorKind::NotALocusPoint);
  }

  TEST_CASE("tangent property over n in [-6, 6]") {
    for (int n = -6; n <= 6; ++n)
      for (auto& r : nonacyclic_roots(n)) {
        auto t = tangent_report(n, r.x);
        INFO("n = " << n << " alpha = " << static_cast<double>(r.x));
        CHECK(t.ok());
        CHECK(t.partials_rel_err < 1e-8L);
        CHECK(std::fabs(t.d2tau_fd - t.d2tau_closed) < 1e-6L * std::fabs(t.d2tau_closed));
      }
  }

  TEST_CASE("Riley matrices") {
    auto r = riley_matrices(-1, 1, 1);
    CHECK(r.relation_residual < 1e-10L);
    CHECK(std::abs(r.A.det() - CLD(1)) < 1e-12L);
    CHECK(std::abs(r.B.det() - CLD(1)) < 1e-12L);
    LD a = (3 - std::sqrt(5.0L)) / 2;
    CHECK(riley_matrices(2, a, a).relation_residual < 1e-10L);
    CHECK(riley_matrices(1, 3, 1).relation_residual < 1e-10L);
    CHECK(std::abs((r.A * r.B).trace() - CLD(1)) < 1e-12L);
    CHECK(riley_matrices(2, 0.5L, 0.5L).relation_residual > 1e-3L);
  }

  TEST_CASE("Dehn filling and order three") {
    auto d = dehn_and_order_checks(-1, 1);
    CHECK(std::abs(d.trace_c - CLD(-1)) < 1e-12L);
    CHECK(d.order3_residual < 1e-8L);
    CHECK(d.residual_a3lambda < 1e-8L);
    auto d2 = dehn_and_order_checks(2, (3 - std::sqrt(5.0L)) / 2);
    CHECK(d2.residual_a3lambda < 1e-8L);
    auto odd = dehn_and_order_checks(2, 1 - 2 * std::cos(M_PIl / 5));
    CHECK(std::abs(odd.trace_c - CLD(1)) < 1e-10L);
    CHECK(odd.order3_residual >= 0.1L);
    CHECK(thrown_kind([] { dehn_and_order_checks(2, 0.5L); }) == ErrorKind::NotALocusPoint);
    for (int n = -6; n <= 6; ++n)
      for (auto& r : complex_char_roots(n)) {
        auto c = dehn_and_order_checks(n, r.x);
        INFO("n = " << n << " x = " << static_cast<double>(r.x));
        CHECK(c.residual_a3lambda < 1e-8L);
        if (r.kind == RootKind::Nonacyclic) {
          CHECK(c.order3_residual < 1e-8L);
          CHECK(c.c_minus_identity > 0.1L);
          CHECK(std::abs(c.trace_c - CLD(-1)) < 1e-8L);
        } else {
          CHECK(std::abs(c.trace_c - CLD(1)) < 1e-8L);
        }
        CHECK(std::abs(c.L - std::pow(riley_matrices(n, r.x, r.x).M, 3)) < 1e-8L);
      }
  }

  TEST_CASE("free group words") {
    CHECK(reduce({1, 2, -2, -1, 1}) == Word{1});
    CHECK(power({1, -2, -1, 2}, -1) == Word{-2, 1, 2, -1});
    CHECK(relator(0).empty() == false);
    CHECK(relator(0) == Word{1, -2});
    CHECK(inverse(relator(1)) != relator(1));
  }

  TEST_CASE("Fox torsion examples") {
    CLD phi((1 + std::sqrt(5.0L)) / 2);
    CHECK(std::fabs(std::abs(fox_torsion(-1, 0, phi)) - 2) < 1e-10L);
    CHECK(std::fabs(std::abs(fox_torsion(1, 3, 1)) - 2) < 1e-10L);
    for (auto& r : nonacyclic_roots(2)) CHECK(std::abs(fox_torsion(2, r.x, r.x)) < 1e-8L);
    CHECK(thrown_kind([] { fox_torsion(2, 2, 1); }) == ErrorKind::SingularDenominator);
  }

  TEST_CASE("Fox torsion agrees with tau at random variety points") {
    for (int n = -3; n <= 3; ++n) {
      auto pts = variety_points(n, 20, 1000 + n);
      if (n == 0) {
        CHECK(pts.empty());
        continue;
      }
      REQUIRE(pts.size() == 20);
      auto T = oracle::tau(n), F = oracle::f(n);
      for (auto& p : pts) {
        CHECK(std::abs(oracle_eval(F, p.x, p.y)) < 1e-8L);
        CLD fox = fox_torsion(n, p.x, p.y), tau = oracle_eval(T, p.x, p.y);
        LD scale = std::max<LD>(1, std::abs(tau));
        CHECK(std::min(std::abs(fox - tau), std::abs(fox + tau)) < 1e-8L * scale);
        CHECK(std::abs(fox - fox_oracle(n, p.x, p.y)) < 1e-9L * scale);
      }
    }
  }

  TEST_CASE("SVG plots") {
    PlotSummary s;
    std::string svg = plot_svg(2, Window{}, 800, &s);
    CHECK(s.markers == 2);
    CHECK(s.f_segments > 0);
    CHECK(s.tau_segments > 0);
    CHECK(svg.find("<g class=\"curve-f\"") != std::string::npos);
    CHECK(svg.find("<g class=\"curve-tau\"") != std::string::npos);
    auto count = [](const std::string& text, const std::string& pat) {
      std::regex re(pat);
      return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
    };
    CHECK(count(svg, "<circle class=\"nonacyclic\"") == 2);
    CHECK(count(svg, "<path ") == 2);
    PlotSummary m;
    std::string s1 = plot_svg(-1, Window{}, 64, &m);
    CHECK(m.markers == 1);
    // (1,1) maps to (4/7 * 640, 640 - 4/7 * 640)
    CHECK(s1.find("cx=\"365.71\" cy=\"274.29\"") != std::string::npos);
    PlotSummary z;
    std::string s0 = plot_svg(0, Window{}, 64, &z);
    CHECK(z.f_segments == 0);
    CHECK(z.markers == 0);
    CHECK(s0.find("<g class=\"curve-f\" stroke=\"#1f77b4\" stroke-width=\"1.5\" fill=\"none\"></g>") != std::string::npos);
    CHECK(thrown_kind([] { plot_svg(2, Window{}, 10); }) == ErrorKind::InvalidArgument);
    CHECK(thrown_kind([] { plot_curves(2, Window{}, 64, "/nonexistent-dir/x.svg"); }) == ErrorKind::IoError);
  }
}
