#include "twistor/rings/unipoly.hpp"

namespace twistor::rings {

QPoly to_q(const ZPoly& p) {
  return p.map<mpq_class>(NoCtx{}, [](const mpz_class& a) { return mpq_class(a); });
}

namespace {

mpq_class qpow(const mpq_class& a, int k) {
  mpq_class r = 1;
  for (int i = 0; i < k; ++i) r *= a;
  return r;
}

}  // namespace

mpq_class resultant(const QPoly& a, const QPoly& b) {
  int da = std::max(a.degree(), 0), db = std::max(b.degree(), 0);
  if (db == 0) return qpow(b.coeff(0), da);
  if (da == 0) return qpow(a.coeff(0), db);
  int sign = (da * db) % 2 ? -1 : 1;
  if (da < db) return sign * resultant(b, a);
  QPoly r = a.divmod(b).second;
  if (r.is_zero()) return 0;
  int dr = r.degree();
  return sign * qpow(b.lc(), da - dr) * resultant(b, r);
}

UniPoly<Fp> reduce_mod(const ZPoly& a, u64 p) {
  PrimeCtx c{p};
  return a.map<Fp>(c, [&](const mpz_class& v) { return RingTraits<Fp>::from_integer(c, v); });
}

UniPoly<Padic> lift_to(const ZPoly& a, const PadicCtx& R) {
  return a.map<Padic>(R, [&](const mpz_class& v) { return Padic(R, v); });
}

long double eval_ld(const ZPoly& a, long double x) {
  long double acc = 0;
  for (int i = a.degree(); i >= 0; --i) acc = acc * x + static_cast<long double>(a.coeffs()[i].get_d());
  return acc;
}

}  // namespace twistor::rings
