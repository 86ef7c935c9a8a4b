#include <algorithm>

#include "twistor/deformation.hpp"
#include "twistor/families.hpp"

namespace twistor::defo {

using rings::PadicRing;
using rings::ZPoly;

namespace {

int vp(const mpz_class& a, u64 p) {
  if (a == 0) return Padic::kInfinity;
  mpz_class t = a, pp = static_cast<unsigned long>(p);
  return static_cast<int>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t()));
}

// Newton iteration for a simple root of h starting from a residue-level guess.
Padic newton_root(const PPoly& h, Padic x) {
  PPoly dh = h.derivative();
  if (!dh.eval(x).is_unit()) fail(ErrorKind::NonUnitDerivative, "derivative is not a unit at the residual root");
  for (int it = 0; it < 64; ++it) {
    Padic next = x - h.eval(x) * dh.eval(x).inverse();
    if (next == x) break;
    x = next;
  }
  if (!h.eval(x).is_zero()) fail(ErrorKind::PrecisionExhausted, "Newton iteration did not settle");
  return x;
}

}  // namespace

const char* direction_name(Direction d) { return d == Direction::YofX ? "y-of-x" : "x-of-y"; }

std::optional<Direction> parse_direction(const std::string& s) {
  if (s == "y-of-x") return Direction::YofX;
  if (s == "x-of-y") return Direction::XofY;
  return std::nullopt;
}

int default_series_order(int n, int M) { return std::max(2 * families::k_poly(n).degree() + 4, M + 8); }

std::vector<LiftedRoot> lift_root(int n, u64 p, long long residue, int ext_e, int M) {
  rings::require_odd_prime(p);
  const ZPoly k = families::k_poly(n);
  const u64 r = rings::reduce_signed(residue, p);
  auto kbar = rings::reduce_mod(k, p);
  if (k.degree() < 1 || !kbar.eval(rings::Fp(r, p)).is_zero())
    fail(ErrorKind::NotAResidueRoot, std::to_string(residue) + " is not a root of k_" + std::to_string(n) + " mod " +
                                         std::to_string(p));

  // g(t) = k(r + t) over Z; the multiplicity is the number of leading
  // coefficients divisible by p.
  const ZPoly g = k.taylor_shift(mpz_class(static_cast<unsigned long>(r)));
  int m = 0;
  while (m <= g.degree() && vp(g.coeff(m), p) >= 1) ++m;

  std::vector<LiftedRoot> out;
  if (m == 1) {
    int e = ext_e == 0 ? 1 : ext_e;
    auto R = PadicRing::make(p, e, M);
    LiftedRoot lr{n, p, R, newton_root(rings::lift_to(k, R), Padic(R, mpz_class(static_cast<unsigned long>(r)))), r, 1,
                  "hensel-simple"};
    out.push_back(lr);
    return out;
  }

  if (ext_e != 0 && ext_e != m)
    fail(ErrorKind::MixedSlopeUnsupported,
         "requested e = " + std::to_string(ext_e) + " but the root has multiplicity " + std::to_string(m));
  if (m > 3) fail(ErrorKind::UnsupportedExtension, "multiplicity " + std::to_string(m) + " needs e > 3");
  // Pure slope 1/m: v(g_0) = 1 exactly, g_m a unit.
  if (vp(g.coeff(0), p) != 1 || vp(g.coeff(m), p) != 0)
    fail(ErrorKind::MixedSlopeUnsupported, "shifted polynomial is not pure of slope 1/" + std::to_string(m));

  auto R = PadicRing::make(p, m, M);
  const mpz_class pz = static_cast<unsigned long>(p);
  // h(u) = g(pi u) / p
  std::vector<Padic> hc;
  for (int j = 0; j <= g.degree(); ++j) {
    if (j < m)
      hc.push_back(Padic(R, mpz_class(g.coeff(j) / pz)).mul_pi_power(j));
    else
      hc.push_back(Padic(R, g.coeff(j)).mul_pi_power(j - m));
  }
  PPoly h(R, hc);
  std::vector<u64> residual;
  for (u64 u = 0; u < p; ++u) {
    Padic val = h.eval(Padic(R, mpz_class(static_cast<unsigned long>(u))));
    if (!val.is_unit()) residual.push_back(u);
  }
  if (static_cast<int>(residual.size()) != m)
    fail(ErrorKind::UnsupportedExtension, "residual roots of the shifted polynomial are not all in F_" +
                                              std::to_string(p) + " (found " + std::to_string(residual.size()) + " of " +
                                              std::to_string(m) + ")");
  const Padic pi = Padic::pi(R), rr(R, mpz_class(static_cast<unsigned long>(r)));
  for (u64 u0 : residual) {
    Padic u = newton_root(h, Padic(R, mpz_class(static_cast<unsigned long>(u0))));
    out.push_back({n, p, R, rr + pi * u, r, m, "eisenstein-shift"});
  }
  std::sort(out.begin(), out.end(), [](const LiftedRoot& a, const LiftedRoot& b) { return canonical_less(a.alpha, b.alpha); });
  return out;
}

}  // namespace twistor::defo
