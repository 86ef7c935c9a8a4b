#include "twistor/modp.hpp"

#include <algorithm>

#include "twistor/families.hpp"
#include "twistor/parallel.hpp"

namespace twistor::modp {

using rings::Fp2Ctx;
using rings::Mat2;

namespace {

Fp reduce(const mpz_class& c, u64 p) { return Fp(mpz_fdiv_ui(c.get_mpz_t(), p), p); }

Fp eval_mod(const rings::BivarPoly& f, const Fp& x, const Fp& y) {
  u64 p = x.p();
  return f.eval<Fp>(x, y, Fp(0, p), [p](const mpz_class& c) { return reduce(c, p); });
}

Fp2 lift(const Fp& a, const Fp2Ctx& c) { return Fp2::embed(a, c); }

bool all_in_base(const Mat2<Fp2>& m) {
  return m.a.in_base_field() && m.b.in_base_field() && m.c.in_base_field() && m.d.in_base_field();
}

}  // namespace

const char* variant_name(Variant v) { return v == Variant::Riley ? "riley" : "repU"; }

UniPoly<Fp> kn_mod(int n, u64 p) {
  rings::require_odd_prime(p);
  return rings::reduce_mod(families::k_poly(n), p);
}

int multiplicity_at(const UniPoly<Fp>& f, const Fp& a) {
  std::vector<Fp> c = f.coeffs();
  int m = 0;
  while (c.size() > 1) {
    // synthetic division by (x - a)
    std::vector<Fp> q(c.size() - 1, Fp(0, a.p()));
    Fp carry(0, a.p());
    for (size_t i = c.size(); i-- > 1;) {
      carry = carry * a + c[i];
      q[i - 1] = carry;
    }
    Fp rem = carry * a + c[0];
    if (!rem.is_zero()) break;
    ++m;
    c = q;
  }
  return m;
}

ModpRoot classify_point(int n, u64 p, long long alpha_signed) {
  UniPoly<Fp> k = kn_mod(n, p);
  Fp a = Fp::from_signed(alpha_signed, p);
  if (!k.eval(a).is_zero())
    fail(ErrorKind::NotAKnRoot, std::to_string(alpha_signed) + " is not a root of k_" + std::to_string(n) + " mod " +
                                    std::to_string(p));
  ModpRoot r;
  r.n = n;
  r.p = p;
  r.alpha = a.value();
  r.signed_alpha = rings::signed_residue(a.value(), p);
  r.multiplicity = multiplicity_at(k, a);
  r.is_abelian_locus = (a * a - a - Fp(2, p)).is_zero();
  r.is_nonacyclic = !r.is_abelian_locus;

  const auto F = families::f_poly(n);
  Fp fx = eval_mod(F.dx(), a, a), fy = eval_mod(F.dy(), a, a);
  r.dfdx = fx.value();
  r.dfdy = fy.value();
  r.dfdx_nonzero = !fx.is_zero();
  r.dfdy_nonzero = !fy.is_zero();
  r.is_regular = r.dfdx_nonzero || r.dfdy_nonzero;

  Fp one(1, p), two(2, p), three(3, p);
  Fp nn = Fp::from_signed(n, p);
  Fp den = (a + one) * a * (a - two) * (a - three);
  Fp num_x = two * ((two * nn - one) * a * a - (Fp(4, p) * nn - two) * a + one);
  Fp num_y = two * (nn * a * a - two * nn * a - one);
  if (!den.is_zero()) {
    r.closed_form_checked = true;
    r.closed_form_agrees = num_x * den.inverse() == fx && num_y * den.inverse() == fy;
  } else if (Fp::from_signed(3 * n - 1, p).is_zero() && !(three * a * (a - two)).is_zero()) {
    Fp s = two * (three * a * (a - two)).inverse();
    r.closed_form_checked = true;
    r.closed_form_agrees = fx == -s && fy == s;
  }
  return r;
}

std::vector<ModpRoot> kn_roots_modp(int n, u64 p) {
  UniPoly<Fp> k = kn_mod(n, p);
  std::vector<ModpRoot> out;
  if (k.degree() < 1) return out;
  for (u64 a = 0; a < p; ++a)
    if (k.eval(Fp(a, p)).is_zero()) out.push_back(classify_point(n, p, static_cast<long long>(a)));
  return out;
}

ModpRepData rep_matrices_modp(int n, u64 p, long long xs, long long ys, Variant v) {
  rings::require_odd_prime(p);
  Fp x = Fp::from_signed(xs, p), y = Fp::from_signed(ys, p);
  if (!eval_mod(families::f_poly(n), x, y).is_zero())
    fail(ErrorKind::NotOnVariety, "f_" + std::to_string(n) + "(" + std::to_string(xs) + ", " + std::to_string(ys) +
                                      ") != 0 mod " + std::to_string(p));
  ModpRepData d;
  d.n = n;
  d.p = p;
  d.x = x.value();
  d.y = y.value();
  d.variant = v;
  d.ctx = Fp2::context_for(p);
  const Fp2Ctx& c = d.ctx;
  Fp one(1, p), two(2, p), four(4, p);
  Fp u = x * x - y - two;
  Fp2 X = lift(x, c), U = lift(u, c), half = lift(two.inverse(), c);
  if (v == Variant::Riley) {
    Fp2 s = rings::sqrt_in_fp2(x * x - four, c);
    Fp2 M = (X + s) * half, Mi = (X - s) * half;
    d.A = {M, Fp2(1, 0, c), Fp2(0, 0, c), Mi};
    d.B = {M, Fp2(0, 0, c), -U, Mi};
  } else {
    Fp disc = x * x - four;
    if (disc.is_zero()) fail(ErrorKind::MissingSquareRoot, "repU needs x != +-2");
    if (u.is_zero()) fail(ErrorKind::MissingSquareRoot, "repU needs u = x^2 - y - 2 != 0");
    Fp2 V = rings::sqrt_in_fp2(one - disc * u.inverse(), c);
    Fp2 D = lift(disc, c), One(1, 0, c);
    Fp2 xh = X * half;
    d.A = {xh, One, D * lift(four.inverse(), c), xh};
    d.B = {xh, -((One - V) * (One - V) * U * D.inverse()), -((One + V) * (One + V) * U * lift(four.inverse(), c)), xh};
    if (x == y) {
      Fp xm2 = x - two;
      d.sqrt_x_minus_2_in_fp = rings::legendre(xm2.value(), p) >= 0;
    }
  }
  Fp2 One(1, 0, c);
  d.det_ok = d.A.det() == One && d.B.det() == One;
  auto W = d.A * d.B.inverse() * d.A.inverse() * d.B;
  auto Wn = W.pow(n);
  d.relation_ok = d.A * Wn == Wn * d.B;
  d.in_base_field = all_in_base(d.A) && all_in_base(d.B);
  d.field_used = d.in_base_field ? "F_p" : "F_p^2";
  if (d.sqrt_x_minus_2_in_fp) d.containment_matches = *d.sqrt_x_minus_2_in_fp == d.in_base_field;
  return d;
}

std::vector<u64> odd_primes_up_to(u64 p_max) {
  std::vector<u64> out;
  for (u64 p = 3; p <= p_max; p += 2)
    if (rings::is_prime(p)) out.push_back(p);
  return out;
}

std::vector<SurveyRow> survey(const std::vector<int>& n_list, u64 p_max, int threads) {
  std::vector<std::pair<int, u64>> jobs;
  for (int n : n_list)
    for (u64 p : odd_primes_up_to(p_max)) jobs.emplace_back(n, p);
  return parallel_map<SurveyRow>(jobs.size(), threads, [&](size_t i) {
    return SurveyRow{jobs[i].first, jobs[i].second, kn_roots_modp(jobs[i].first, jobs[i].second)};
  });
}

bool has_small_root(const SurveyRow& row, long long bound) {
  return std::any_of(row.roots.begin(), row.roots.end(),
                     [&](const ModpRoot& r) { return std::llabs(r.signed_alpha) <= bound; });
}

}  // namespace twistor::modp
