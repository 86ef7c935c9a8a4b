#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "twistor/errors.hpp"
#include "twistor/rings/padic.hpp"
#include "twistor/rings/prime_field.hpp"

namespace twistor::rings {

// Uniform access to a coefficient ring.  Each ring has a Context value that
// elements carry (or that is empty for Z, Q, C); generic containers store one
// so that zero and one can be produced and mixed rings detected.
template <class T>
struct RingTraits;

struct NoCtx {
  bool operator==(const NoCtx&) const = default;
};

template <>
struct RingTraits<mpz_class> {
  using Context = NoCtx;
  static Context context(const mpz_class&) { return {}; }
  static bool same(Context, Context) { return true; }
  static mpz_class zero(Context) { return 0; }
  static mpz_class one(Context) { return 1; }
  static mpz_class from_integer(Context, const mpz_class& n) { return n; }
  static bool is_zero(const mpz_class& a) { return a == 0; }
  static bool is_unit(const mpz_class& a) { return a == 1 || a == -1; }
  static mpz_class divide_exact(const mpz_class& a, const mpz_class& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
      fail(ErrorKind::InexactDivision, a.get_str() + " / " + b.get_str());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static std::string str(const mpz_class& a) { return a.get_str(); }
  static std::string describe(Context) { return "Z"; }
};

template <>
struct RingTraits<mpq_class> {
  using Context = NoCtx;
  static Context context(const mpq_class&) { return {}; }
  static bool same(Context, Context) { return true; }
  static mpq_class zero(Context) { return 0; }
  static mpq_class one(Context) { return 1; }
  static mpq_class from_integer(Context, const mpz_class& n) { return mpq_class(n); }
  static bool is_zero(const mpq_class& a) { return a == 0; }
  static bool is_unit(const mpq_class& a) { return a != 0; }
  static mpq_class divide_exact(const mpq_class& a, const mpq_class& b) {
    if (b == 0) fail(ErrorKind::InexactDivision, "division by zero");
    return a / b;
  }
  static std::string str(const mpq_class& a) { return a.get_str(); }
  static std::string describe(Context) { return "Q"; }
};

template <>
struct RingTraits<Fp> {
  using Context = PrimeCtx;
  static Context context(const Fp& a) { return {a.p()}; }
  static bool same(Context a, Context b) { return a == b; }
  static Fp zero(Context c) { return Fp(0, c.p); }
  static Fp one(Context c) { return Fp(1, c.p); }
  static Fp from_integer(Context c, const mpz_class& n) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(c.p));
    return Fp(r.get_ui(), c.p);
  }
  static bool is_zero(const Fp& a) { return a.is_zero(); }
  static bool is_unit(const Fp& a) { return !a.is_zero(); }
  static Fp divide_exact(const Fp& a, const Fp& b) {
    if (b.is_zero()) fail(ErrorKind::InexactDivision, "division by zero in F_p");
    return a * b.inverse();
  }
  static std::string str(const Fp& a) { return std::to_string(a.value()); }
  static std::string describe(Context c) { return "F_" + std::to_string(c.p); }
};

template <>
struct RingTraits<Fp2> {
  using Context = Fp2Ctx;
  static Context context(const Fp2& a) { return a.ctx(); }
  static bool same(Context a, Context b) { return a == b; }
  static Fp2 zero(Context c) { return Fp2(0, 0, c); }
  static Fp2 one(Context c) { return Fp2(1, 0, c); }
  static Fp2 from_integer(Context c, const mpz_class& n) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(c.p));
    return Fp2(r.get_ui(), 0, c);
  }
  static bool is_zero(const Fp2& a) { return a.is_zero(); }
  static bool is_unit(const Fp2& a) { return !a.is_zero(); }
  static Fp2 divide_exact(const Fp2& a, const Fp2& b) {
    if (b.is_zero()) fail(ErrorKind::InexactDivision, "division by zero in F_{p^2}");
    return a * b.inverse();
  }
  static std::string str(const Fp2& a) { return a.str(); }
  static std::string describe(Context c) {
    return "F_" + std::to_string(c.p) + "[t]/(t^2-" + std::to_string(c.d) + ")";
  }
};

template <>
struct RingTraits<Padic> {
  using Context = PadicCtx;
  static Context context(const Padic& a) { return a.ring(); }
  static bool same(const Context& a, const Context& b) { return a == b || (a && b && a->same_as(*b)); }
  static Padic zero(const Context& c) { return Padic(c); }
  static Padic one(const Context& c) { return Padic(c, mpz_class(1)); }
  static Padic from_integer(const Context& c, const mpz_class& n) { return Padic(c, n); }
  static bool is_zero(const Padic& a) { return a.is_zero(); }
  static bool is_unit(const Padic& a) { return a.is_unit(); }
  static Padic divide_exact(const Padic& a, const Padic& b) {
    if (!b.is_unit()) fail(ErrorKind::InexactDivision, "division by non-unit " + b.str());
    return a * b.inverse();
  }
  static std::string str(const Padic& a) { return a.str(); }
  static std::string describe(const Context& c) { return c->describe(); }
};

template <class R>
struct RingTraits<std::complex<R>> {
  using T = std::complex<R>;
  using Context = NoCtx;
  static Context context(const T&) { return {}; }
  static bool same(Context, Context) { return true; }
  static T zero(Context) { return T(0); }
  static T one(Context) { return T(1); }
  static T from_integer(Context, const mpz_class& n) { return T(static_cast<R>(n.get_d())); }
  static bool is_zero(const T& a) { return a == T(0); }
  static bool is_unit(const T& a) { return a != T(0); }
  static T divide_exact(const T& a, const T& b) { return a / b; }
  static std::string str(const T& a) { return std::to_string(static_cast<double>(a.real())) + "+" + std::to_string(static_cast<double>(a.imag())) + "i"; }
  static std::string describe(Context) { return "C"; }
};

}  // namespace twistor::rings
