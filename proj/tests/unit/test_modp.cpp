#include <doctest.h>

#include <map>
#include <set>

#include "support/helpers.hpp"
#include "support/oracle.hpp"
#include "twistor/modp.hpp"

using namespace twistor;
using namespace twistor::modp;

namespace {

long long mod(oracle::i128 v, long long p) {
  long long r = static_cast<long long>(v % p);
  return r < 0 ? r + p : r;
}

// Multiplicity as the order of the first nonvanishing Hasse derivative.
int oracle_multiplicity(int n, long long p, long long a) {
  auto k = oracle::k(n);
  int deg = 0;
  for (auto& [e, c] : k.t) deg = std::max(deg, e.first);
  for (int j = 0; j <= deg; ++j) {
    long long s = 0;
    for (auto& [e, c] : k.t) {
      int i = e.first;
      if (i < j) continue;
      long long binom = 1;
      for (int t = 0; t < j; ++t) binom = binom * (i - t) / (t + 1);
      long long term = mod(c, p) * (binom % p) % p;
      for (int t = 0; t < i - j; ++t) term = term * a % p;
      s = (s + term) % p;
    }
    if (s != 0) return j;
  }
  return deg;
}

std::map<long long, int> signed_roots(const std::vector<ModpRoot>& rs) {
  std::map<long long, int> m;
  for (auto& r : rs) m[r.signed_alpha] = r.multiplicity;
  return m;
}

}  // namespace

TEST_SUITE("modp") {
  TEST_CASE("roots of k_n mod p: examples") {
    CHECK(signed_roots(kn_roots_modp(-3, 11)) == std::map<long long, int>{{-3, 1}, {-2, 1}, {4, 1}, {5, 1}});
    CHECK(signed_roots(kn_roots_modp(-3, 5)) == std::map<long long, int>{{-2, 2}, {-1, 2}});
    for (u64 p : {3ull, 5ull, 7ull, 13ull, 97ull}) CHECK(signed_roots(kn_roots_modp(-1, p)) == std::map<long long, int>{{1, 1}});
    CHECK(kn_roots_modp(0, 7).empty());
    CHECK(thrown_kind([] { kn_roots_modp(2, 9); }) == ErrorKind::CompositeModulus);
    CHECK(thrown_kind([] { kn_roots_modp(2, 2); }) == ErrorKind::EvenCharacteristic);
  }

  TEST_CASE("classification examples") {
    auto a = classify_point(2, 11, 5);
    CHECK(a.is_regular);
    CHECK(a.is_nonacyclic);
    CHECK_FALSE(a.is_abelian_locus);
    auto b = classify_point(-3, 5, -1);
    CHECK(b.is_abelian_locus);
    CHECK_FALSE(b.is_nonacyclic);
    auto c = classify_point(-3, 11, -2);
    CHECK_FALSE(c.dfdx_nonzero);
    CHECK(c.dfdy_nonzero);
    CHECK(c.is_regular);
    // n = -1 at 1: f_x = 2, f_y = 0
    auto d = classify_point(-1, 13, 1);
    CHECK(d.dfdx_nonzero);
    CHECK_FALSE(d.dfdy_nonzero);
    CHECK(thrown_kind([] { classify_point(2, 11, 4); }) == ErrorKind::NotAKnRoot);
  }

  TEST_CASE("root properties for n in [-6, 6], p <= 100") {
    for (int n = -6; n <= 6; ++n)
      for (u64 p : odd_primes_up_to(100)) {
        auto roots = kn_roots_modp(n, p);
        auto k = oracle::k(n);
        std::set<u64> expected;
        for (u64 a = 0; a < p; ++a) {
          oracle::i128 s = 0;
          for (auto& [e, c] : k.t) {
            oracle::i128 t = c;
            for (int i = 0; i < e.first; ++i) t = t * static_cast<long long>(a) % static_cast<long long>(p);
            s += t;
          }
          if (mod(s, p) == 0) expected.insert(a);
        }
        std::set<u64> got;
        int total = 0;
        for (auto& r : roots) {
          got.insert(r.alpha);
          total += r.multiplicity;
          CHECK(r.multiplicity == oracle_multiplicity(n, p, r.alpha));
          if ((3 * n - 1) % static_cast<long long>(p) != 0) CHECK(r.multiplicity == 1);
          if (!r.is_abelian_locus) CHECK(r.is_regular);
          CHECK(r.is_regular == (r.dfdx_nonzero || r.dfdy_nonzero));
          if (r.closed_form_checked) CHECK(r.closed_form_agrees);
          CHECK(r.alpha != 2);
        }
        CHECK(got == expected);
        CHECK(total <= (std::abs(3 * n - 1) - 1) / 2);
      }
  }

  TEST_CASE("representation matrices: examples") {
    auto r = rep_matrices_modp(2, 11, 5, 5, Variant::Riley);
    CHECK(r.field_used == "F_p^2");  // 10 is a nonresidue mod 11
    CHECK(r.relation_ok);
    CHECK(r.det_ok);
    CHECK(rep_matrices_modp(-1, 13, 1, 1, Variant::Riley).relation_ok);
    auto t = rep_matrices_modp(1, 7, 0, 1, Variant::Riley);
    CHECK(t.relation_ok);
    CHECK(t.field_used == "F_p^2");  // -4 is a nonresidue mod 7
    CHECK(thrown_kind([] { rep_matrices_modp(2, 11, 3, 3, Variant::Riley); }) == ErrorKind::NotOnVariety);
    // (4,4) is an odd-l point: g_2(4) = -11.
    CHECK(rep_matrices_modp(2, 11, 4, 4, Variant::Riley).relation_ok);
    CHECK(thrown_kind([] { rep_matrices_modp(-1, 5, 2, 1, Variant::RepU); }) == ErrorKind::NotOnVariety);
    // f_1 = y - 1 vanishes at (x, 1); x = 2 leaves no repU square root.
    CHECK(thrown_kind([] { rep_matrices_modp(1, 7, 2, 1, Variant::RepU); }) == ErrorKind::MissingSquareRoot);
    CHECK(thrown_kind([] { rep_matrices_modp(1, 7, 3, 1, Variant::RepU); }).has_value() == false);
  }

  TEST_CASE("relation holds at every root, both variants") {
    for (int n = -6; n <= 6; ++n)
      for (u64 p : odd_primes_up_to(60))
        for (auto& r : kn_roots_modp(n, p)) {
          long long a = r.signed_alpha;
          auto R = rep_matrices_modp(n, p, a, a, Variant::Riley);
          CHECK(R.det_ok);
          CHECK(R.relation_ok);
          CHECK(R.in_base_field == (rings::legendre(rings::reduce_signed(a * a - 4, p), p) >= 0));
          if (r.is_abelian_locus || rings::reduce_signed(a * a - 4, p) == 0) continue;
          auto U = rep_matrices_modp(n, p, a, a, Variant::RepU);
          CHECK(U.det_ok);
          CHECK(U.relation_ok);
          REQUIRE(U.sqrt_x_minus_2_in_fp.has_value());
        }
  }

  TEST_CASE("survey examples") {
    auto rows = survey({2}, 41);
    std::map<u64, std::set<long long>> listed;
    for (auto& row : rows)
      if (has_small_root(row))
        for (auto& r : row.roots) listed[row.p].insert(r.signed_alpha);
    std::map<u64, std::set<long long>> expected{{5, {-1}}, {11, {-2, 5}}, {19, {-3, 6}}, {29, {-4, 7}}, {41, {-5, 8}}};
    CHECK(listed == expected);
    auto r3 = survey({3}, 7);
    CHECK(signed_roots(r3.back().roots) == std::map<long long, int>{{-3, 1}, {-2, 1}, {1, 1}});  // 4 = -3 mod 7
    CHECK(survey({-2}, 3).front().roots.empty());
  }

  TEST_CASE("survey is thread-count independent") {
    auto a = survey({-3, -2, -1, 2, 3}, 41, 1), b = survey({-3, -2, -1, 2, 3}, 41, 4);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].n == b[i].n);
      CHECK(a[i].p == b[i].p);
      CHECK(signed_roots(a[i].roots) == signed_roots(b[i].roots));
    }
  }
}
