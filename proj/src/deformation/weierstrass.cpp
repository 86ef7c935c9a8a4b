#include <algorithm>
#include <numeric>

#include "twistor/deformation.hpp"
#include "twistor/families.hpp"

namespace twistor::defo {

std::string Weierstrass::r_string() const {
  int g = std::gcd(v, e);
  if (g == 0) return "0";
  int a = v / g, b = e / g;
  return b == 1 ? std::to_string(a) : std::to_string(a) + "/" + std::to_string(b);
}

Weierstrass weierstrass_prepare(const Series& f) {
  const int N = f.order();
  int v = Padic::kInfinity;
  for (int i = 0; i <= N; ++i) v = std::min(v, f[i].valuation());
  if (v == Padic::kInfinity) fail(ErrorKind::ZeroSeries, "series vanishes to the working precision");
  const auto& R = f.ctx();

  Series f1(R, N);
  for (int i = 0; i <= N; ++i) f1[i] = f[i].shift_down(v);
  int s = 0;
  while (!f1[s].is_unit()) ++s;

  Weierstrass w;
  w.v = v;
  w.e = R->e();
  w.s = s;

  // f1 = P + T^s Q with P in the maximal ideal.  Solve q f1 = T^s + (deg < s)
  // by q = Q^-1 (1 - hi(q P)); the map is a pi-adic contraction.
  Series P(R, N);
  for (int i = 0; i < s; ++i) P[i] = f1[i];
  const Series Q = f1.shift_down(s);
  const Series Qinv = Q.inverse();
  const Series one = Series::constant(R, N - s, Padic(R, mpz_class(1)));
  auto widen = [&](const Series& a) { return Series(R, N, a.coeffs()); };

  Series q = Qinv;
  for (int it = 0; it < R->precision() + 2; ++it) {
    Series next = Qinv * (one - (widen(q) * P).shift_down(s));
    if (next == q) break;
    q = next;
  }
  const Series qP = widen(q) * P;
  std::vector<Padic> gc(s + 1, Padic(R));
  for (int i = 0; i < s; ++i) gc[i] = qP[i];
  gc[s] = Padic(R, mpz_class(1));
  w.g = PPoly(R, gc);
  w.u = q.inverse();

  const Series gs = Series::from_poly(w.g, N - s);
  w.reconstruction_ok = gs * w.u == f1.truncate(N - s);
  return w;
}

std::optional<int> first_difference(const PPoly& a, const PPoly& b, int prec) {
  int top = std::max(a.degree(), b.degree());
  for (int i = 0; i <= top; ++i)
    if (!a.coeff(i).congruent(b.coeff(i), prec)) return i;
  return std::nullopt;
}

PPoly squared_weierstrass(const rings::ZPoly& q, const Padic& alpha, int N) {
  PPoly shifted = rings::lift_to(q, alpha.ring()).taylor_shift(alpha);
  return weierstrass_prepare(Series::from_poly(shifted * shifted, N)).g;
}

PPoly kn_squared_weierstrass(int n, const Padic& alpha, int N) {
  return squared_weierstrass(families::k_poly(n), alpha, N);
}

}  // namespace twistor::defo
