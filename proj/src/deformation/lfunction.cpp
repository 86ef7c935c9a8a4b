#include <algorithm>

#include "twistor/deformation.hpp"
#include "twistor/families.hpp"

namespace twistor::defo {

using rings::BivarPoly;
using rings::Fp;
using rings::PowerSeries;
using rings::RingTraits;
using rings::UniPoly;
using rings::ZPoly;

namespace {

template <class T>
struct Columns {
  std::vector<PowerSeries<T>> c;  // F = sum_j c_j(T) W^j
};

// Columns of F in the unknown coordinate W, each evaluated at center + T.
template <class T, class Embed>
Columns<T> columns(const BivarPoly& F, Direction d, const T& center, typename RingTraits<T>::Context ctx, int N,
                   Embed embed) {
  Columns<T> out;
  int top = d == Direction::YofX ? F.degree_y() : F.degree_x();
  for (int j = 0; j <= top; ++j) {
    ZPoly z = d == Direction::YofX ? F.coeff_of_y(j) : F.coeff_of_x(j);
    UniPoly<T> u = z.template map<T>(ctx, embed);
    out.c.push_back(PowerSeries<T>::from_poly(u.taylor_shift(center), N));
  }
  return out;
}

template <class T>
PowerSeries<T> apply(const Columns<T>& cols, const PowerSeries<T>& W) {
  PowerSeries<T> acc(W.ctx(), W.order());
  for (size_t j = cols.c.size(); j-- > 0;) acc = acc * W + cols.c[j];
  return acc;
}

template <class T>
PowerSeries<T> apply_derivative(const Columns<T>& cols, const PowerSeries<T>& W) {
  using Tr = RingTraits<T>;
  PowerSeries<T> acc(W.ctx(), W.order());
  for (size_t j = cols.c.size(); j-- > 1;)
    acc = acc * W + cols.c[j].scale(Tr::from_integer(W.ctx(), mpz_class(static_cast<unsigned long>(j))));
  return acc;
}

template <class T, class Embed>
PowerSeries<T> solve(const BivarPoly& F, Direction d, const T& center, const T& companion,
                     typename RingTraits<T>::Context ctx, int N, Embed embed) {
  using Tr = RingTraits<T>;
  auto cols = columns<T>(F, d, center, ctx, N, embed);
  PowerSeries<T> W = PowerSeries<T>::constant(ctx, N, companion);
  if (!Tr::is_zero(apply(cols, W)[0])) fail(ErrorKind::NotOnVariety, "base point is not on f_n = 0");
  PowerSeries<T> dF = apply_derivative(cols, W);
  if (!Tr::is_unit(dF[0]))
    fail(ErrorKind::NonUnitDerivative,
         std::string("partial derivative in the ") + (d == Direction::YofX ? "y" : "x") + " direction is not a unit");
  for (int it = 0; it < 256; ++it) {
    PowerSeries<T> next = W - apply(cols, W) * apply_derivative(cols, W).inverse();
    if (next == W) break;
    W = next;
  }
  PowerSeries<T> defect = apply(cols, W);
  if (defect.order_of_vanishing() != -1) fail(ErrorKind::PrecisionExhausted, "implicit series did not converge");
  return W;
}

auto padic_embed(const PadicCtx& R) {
  return [R](const mpz_class& c) { return Padic(R, c); };
}

auto fp_embed(u64 p) {
  return [p](const mpz_class& c) { return RingTraits<Fp>::from_integer({p}, c); };
}

// tau along the curve, with the solved coordinate W.
template <class T, class Embed>
PowerSeries<T> tau_along(int n, Direction d, const T& center, const PowerSeries<T>& W,
                         typename RingTraits<T>::Context ctx, Embed embed) {
  auto cols = columns<T>(families::tau_poly(n), d, center, ctx, W.order(), embed);
  return apply(cols, W);
}

Padic eval_at(const BivarPoly& F, const Padic& x, const Padic& y) {
  return F.eval<Padic>(x, y, Padic(x.ring()), padic_embed(x.ring()));
}

// a / b when b divides a in the valuation ring; precision of the quotient in *prec.
std::optional<Padic> divide(const Padic& a, const Padic& b, int* prec) {
  int vb = b.valuation();
  if (vb == Padic::kInfinity || a.valuation() < vb) return std::nullopt;
  *prec = a.ring()->precision() - vb;
  return a.shift_down(vb) * b.shift_down(vb).inverse();
}

Series series_sqrt(const Series& a) {
  const auto& R = a.ctx();
  Series r = Series::constant(R, a.order(), rings::padic_sqrt(a[0]));
  Padic half = Padic(R, mpz_class(2)).inverse();
  for (int it = 0; it < 256; ++it) {
    Series next = (r + a * r.inverse()).scale(half);
    if (next == r) break;
    r = next;
  }
  return r;
}

}  // namespace

ImplicitSeries implicit_series(int n, const Padic& center, const Padic& companion, Direction d, int N) {
  const auto& R = center.ring();
  ImplicitSeries s;
  s.n = n;
  s.direction = d;
  s.center = center;
  s.companion = companion;
  s.series = solve<Padic>(families::f_poly(n), d, center, companion, R, N, padic_embed(R));
  return s;
}

ImplicitSeries implicit_series(int n, const LiftedRoot& root, Direction d, int N) {
  if (N == 0) N = default_series_order(n, root.ring->precision());
  return implicit_series(n, root.alpha, root.alpha, d, N);
}

LFunctionResult l_function(int n, const LiftedRoot& root, std::optional<Direction> dir, int N) {
  const auto& R = root.ring;
  const Padic& a = root.alpha;
  LFunctionResult res;
  res.n = n;
  res.p = R->p();
  res.e = R->e();
  res.M = R->precision();
  res.N = N == 0 ? default_series_order(n, res.M) : N;
  res.root = root;

  const BivarPoly F = families::f_poly(n);
  const Padic fx = eval_at(F.dx(), a, a), fy = eval_at(F.dy(), a, a);
  res.direction = dir ? *dir : (fy.is_unit() ? Direction::YofX : Direction::XofY);

  auto curve = implicit_series(n, a, a, res.direction, res.N);
  res.tau_series = tau_along<Padic>(n, res.direction, a, curve.series, R, padic_embed(R));
  res.prep = weierstrass_prepare(res.tau_series);
  res.kn_squared_weierstrass = kn_squared_weierstrass(n, a, res.N);
  res.compare_precision = res.M - res.prep.v - res.prep.s - 2;
  res.first_mismatch = first_difference(res.prep.g, res.kn_squared_weierstrass, res.compare_precision);
  res.verdict = res.first_mismatch ? "mismatch" : "match";
  res.unit_part_check = res.prep.reconstruction_ok && res.prep.u[0].is_unit();

  // Degree-two Taylor coefficient against the closed form.
  res.second_taylor_coeff = res.tau_series[2];
  Padic one(R, mpz_class(1)), two(R, mpz_class(2)), nn(R, mpz_class(n));
  Padic D = res.direction == Direction::YofX ? nn * a * a - two * nn * a - one
                                             : (two * nn - one) * a * a - (Padic(R, mpz_class(4)) * nn - two) * a + one;
  Padic num(R, mpz_class((3 * n - 1) * (3 * n - 1)));
  int prec = 0;
  res.taylor_closed = divide(num, (a - two) * D * D, &prec);
  if (res.taylor_closed) {
    res.taylor_precision = prec;
    res.taylor_matches = res.second_taylor_coeff.congruent(*res.taylor_closed, prec);
    res.taylor_matches_negated = res.second_taylor_coeff.congruent(-*res.taylor_closed, prec);
  }

  // Each lift in the residue disc should be a double root of the prepared polynomial.
  {
    auto siblings = lift_root(n, res.p, static_cast<long long>(root.residue), res.e, res.M);
    PPoly prod = PPoly::constant(R, one);
    for (auto& s : siblings) {
      Padic t = s.alpha - a;
      PPoly lin = PPoly::linear_root(R, t);
      prod = prod * lin * lin;
    }
    res.order_two_ok = !first_difference(prod, res.prep.g, res.compare_precision / 2).has_value() &&
                       prod.degree() == res.prep.g.degree();
  }

  // Reduction mod pi against the same computation over F_p.
  {
    u64 p = res.p;
    Fp ab(root.residue, p);
    auto Wp = solve<Fp>(F, res.direction, ab, ab, rings::PrimeCtx{p}, res.N, fp_embed(p));
    auto tp = tau_along<Fp>(n, res.direction, ab, Wp, rings::PrimeCtx{p}, fp_embed(p));
    bool ok = true;
    for (int i = 0; i <= res.N; ++i)
      if (!(Fp(res.tau_series[i].residue(), p) == tp[i])) ok = false;
    res.reduction_ok = ok;
  }

  if (fx.is_unit() && fy.is_unit()) {
    Direction other = res.direction == Direction::YofX ? Direction::XofY : Direction::YofX;
    auto c2 = implicit_series(n, a, a, other, res.N);
    auto t2 = tau_along<Padic>(n, other, a, c2.series, R, padic_embed(R));
    auto w2 = weierstrass_prepare(t2);
    res.cross_direction_ok = w2.v == res.prep.v && w2.s == res.prep.s &&
                             !first_difference(w2.g, res.kn_squared_weierstrass, res.compare_precision);
  }
  return res;
}

ParabolicResult l_function_parabolic(int n, const PadicCtx& R, Direction d, std::optional<mpz_class> beta_in, int N) {
  rings::require_odd_prime(R->p());
  const u64 p = R->p();
  if (N == 0) N = default_series_order(n, R->precision());
  const BivarPoly F = families::f_poly(n);
  const ZPoly f2 = F.at_x(mpz_class(2));
  const auto f2p = rings::reduce_mod(f2, p);

  ParabolicResult res;
  res.n = n;
  res.p = p;
  res.direction = d;

  Padic beta;
  if (beta_in) {
    beta = Padic(R, *beta_in);
    if (!f2p.eval(Fp(beta.residue(), p)).is_zero())
      fail(ErrorKind::NotOnVariety, "f_" + std::to_string(n) + "(2, " + beta_in->get_str() + ") is not 0 mod " +
                                        std::to_string(p));
  } else {
    std::optional<u64> yb;
    if (f2p.degree() >= 1)
      for (u64 y = 0; y < p && !yb; ++y)
        if (f2p.eval(Fp(y, p)).is_zero()) yb = y;
    if (!yb)
      fail(ErrorKind::NotParabolicResidue,
           "f_" + std::to_string(n) + "(2, y) has no root mod " + std::to_string(p));
    beta = Padic(R, mpz_class(static_cast<unsigned long>(*yb)));
  }
  res.beta_residue = beta.residue();

  // Hensel lift of beta on f_n(2, y).
  PPoly g = rings::lift_to(f2, R), dg = g.derivative();
  if (!dg.eval(beta).is_unit())
    fail(ErrorKind::NonUnitDerivative, "f_" + std::to_string(n) + "(2, y) has a repeated root at y = " +
                                           std::to_string(res.beta_residue) + " mod " + std::to_string(p));
  for (int it = 0; it < 128; ++it) {
    Padic next = beta - g.eval(beta) * dg.eval(beta).inverse();
    if (next == beta) break;
    beta = next;
  }
  if (!g.eval(beta).is_zero()) fail(ErrorKind::PrecisionExhausted, "lift of beta did not settle");
  res.beta = beta;

  const Padic two(R, mpz_class(2));
  if (d == Direction::YofX) {
    implicit_series(n, two, beta, d, N);  // validates the parametrization
    res.L = Series::variable(R, N);
  } else {
    Series h = implicit_series(n, beta, two, d, N).series.add_constant(-two);
    int s = h.order_of_vanishing();
    res.L = h;
    if (s > 0 && s % 2 == 0) {
      Series rest = h.shift_down(s);
      if (rest[0].is_unit() && rings::legendre(rest[0].residue(), p) == 1) {
        Series root = series_sqrt(rest);
        Series L(R, N);
        for (int i = 0; i + s / 2 <= N && i <= root.order(); ++i) L[i + s / 2] = root[i];
        res.L = L;
        res.square_root_taken = true;
      }
    }
  }
  res.prep = weierstrass_prepare(res.L);
  return res;
}

}  // namespace twistor::defo
