#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twistor/rings/traits.hpp"

namespace twistor::rings {

// Dense univariate polynomial, coefficients lowest degree first, no trailing zeros.
template <class T>
class UniPoly {
 public:
  using Traits = RingTraits<T>;
  using Context = typename Traits::Context;

  UniPoly() = default;
  explicit UniPoly(Context ctx, std::vector<T> c = {}) : ctx_(std::move(ctx)), c_(std::move(c)) { trim(); }
  static UniPoly constant(Context ctx, const T& a) { return UniPoly(ctx, {a}); }
  static UniPoly monomial(Context ctx, const T& a, int k) {
    std::vector<T> c(k + 1, Traits::zero(ctx));
    c[k] = a;
    return UniPoly(ctx, std::move(c));
  }
  // x - a
  static UniPoly linear_root(Context ctx, const T& a) { return UniPoly(ctx, {T(-a), Traits::one(ctx)}); }

  const Context& ctx() const { return ctx_; }
  const std::vector<T>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 stands for -infinity
  bool is_zero() const { return c_.empty(); }
  T coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Traits::zero(ctx_); }
  T lc() const { return is_zero() ? Traits::zero(ctx_) : c_.back(); }

  UniPoly operator+(const UniPoly& o) const {
    check(o);
    std::vector<T> r(std::max(c_.size(), o.c_.size()), Traits::zero(ctx_));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UniPoly(ctx_, std::move(r));
  }
  UniPoly operator-() const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(-a);
    return UniPoly(ctx_, std::move(r));
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return UniPoly(ctx_);
    std::vector<T> r(c_.size() + o.c_.size() - 1, Traits::zero(ctx_));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (Traits::is_zero(c_[i])) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return UniPoly(ctx_, std::move(r));
  }
  UniPoly scale(const T& a) const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const auto& b : c_) r.push_back(a * b);
    return UniPoly(ctx_, std::move(r));
  }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  bool operator==(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }

  UniPoly pow(unsigned k) const {
    UniPoly r = constant(ctx_, Traits::one(ctx_)), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(ctx_);
    std::vector<T> r;
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(Traits::from_integer(ctx_, mpz_class(static_cast<unsigned long>(i))) * c_[i]);
    return UniPoly(ctx_, std::move(r));
  }

  template <class U>
  U eval_as(const U& x, const U& zero) const {
    U acc = zero;
    for (int i = degree(); i >= 0; --i) acc = acc * x + U(c_[i]);
    return acc;
  }
  T eval(const T& x) const {
    T acc = Traits::zero(ctx_);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  // Quotient and remainder; the leading coefficient of d must divide exactly at each step.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    check(d);
    if (d.is_zero()) fail(ErrorKind::InexactDivision, "division by the zero polynomial");
    std::vector<T> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {UniPoly(ctx_), *this};
    std::vector<T> q(degree() - dd + 1, Traits::zero(ctx_));
    for (int i = degree(); i >= dd; --i) {
      if (Traits::is_zero(r[i])) continue;
      T t = Traits::divide_exact(r[i], d.lc());
      q[i - dd] = t;
      for (int j = 0; j <= dd; ++j) r[i - dd + j] = r[i - dd + j] - t * d.c_[j];
    }
    r.resize(dd);
    return {UniPoly(ctx_, std::move(q)), UniPoly(ctx_, std::move(r))};
  }

  UniPoly exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) fail(ErrorKind::InexactDivision, "nonzero remainder");
    return q;
  }

  // p(a + T) as a polynomial in T.
  UniPoly taylor_shift(const T& a) const {
    UniPoly lin(ctx_, {a, Traits::one(ctx_)});
    UniPoly acc(ctx_);
    for (int i = degree(); i >= 0; --i) acc = acc * lin + constant(ctx_, c_[i]);
    return acc;
  }

  // p(q(x))
  UniPoly compose(const UniPoly& q) const {
    UniPoly acc(ctx_);
    for (int i = degree(); i >= 0; --i) acc = acc * q + constant(ctx_, c_[i]);
    return acc;
  }

  template <class U, class F>
  UniPoly<U> map(typename RingTraits<U>::Context uctx, F f) const {
    std::vector<U> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(f(a));
    return UniPoly<U>(uctx, std::move(r));
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (Traits::is_zero(c_[i])) continue;
      std::string cs = Traits::str(c_[i]);
      if (!s.empty()) s += " + ";
      if (i == 0)
        s += cs;
      else
        s += (cs == "1" ? std::string() : "(" + cs + ")*") + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }
  void check(const UniPoly& o) const {
    if (!Traits::same(ctx_, o.ctx_))
      fail(ErrorKind::RingMismatch, Traits::describe(ctx_) + " vs " + Traits::describe(o.ctx_));
  }
  Context ctx_{};
  std::vector<T> c_;
};

using ZPoly = UniPoly<mpz_class>;
using QPoly = UniPoly<mpq_class>;

inline ZPoly zpoly(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long a : c) v.emplace_back(a);
  return ZPoly(NoCtx{}, std::move(v));
}

QPoly to_q(const ZPoly& p);
// Resultant over Q via the Euclidean recursion.  A nonzero constant c against a
// polynomial of degree d gives c^d; the zero polynomial counts as degree 0 there.
mpq_class resultant(const QPoly& a, const QPoly& b);
UniPoly<Fp> reduce_mod(const ZPoly& a, u64 p);
UniPoly<Padic> lift_to(const ZPoly& a, const PadicCtx& R);
long double eval_ld(const ZPoly& a, long double x);

}  // namespace twistor::rings
