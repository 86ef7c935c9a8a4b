#pragma once

#include <string>
#include <vector>

#include "twistor/rings/unipoly.hpp"

namespace twistor::rings {

// Power series in T truncated after T^N.  Operations keep N and never extend it.
template <class T>
class PowerSeries {
 public:
  using Traits = RingTraits<T>;
  using Context = typename Traits::Context;

  PowerSeries() = default;
  PowerSeries(Context ctx, int N) : ctx_(std::move(ctx)), N_(N), c_(N + 1, Traits::zero(ctx_)) {
    if (N < 0) fail(ErrorKind::InvalidArgument, "negative truncation order");
  }
  PowerSeries(Context ctx, int N, const std::vector<T>& c) : PowerSeries(std::move(ctx), N) {
    for (int i = 0; i <= N && i < static_cast<int>(c.size()); ++i) c_[i] = c[i];
  }
  static PowerSeries from_poly(const UniPoly<T>& p, int N) { return PowerSeries(p.ctx(), N, p.coeffs()); }
  static PowerSeries constant(Context ctx, int N, const T& a) { return PowerSeries(ctx, N, std::vector<T>{a}); }
  static PowerSeries variable(Context ctx, int N) {
    PowerSeries s(ctx, N);
    if (N >= 1) s.c_[1] = Traits::one(ctx);
    return s;
  }

  const Context& ctx() const { return ctx_; }
  int order() const { return N_; }
  const T& operator[](int i) const { return c_[i]; }
  T& operator[](int i) { return c_[i]; }
  const std::vector<T>& coeffs() const { return c_; }

  PowerSeries operator+(const PowerSeries& o) const {
    check(o);
    PowerSeries r(ctx_, N_);
    for (int i = 0; i <= N_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  PowerSeries operator-(const PowerSeries& o) const {
    check(o);
    PowerSeries r(ctx_, N_);
    for (int i = 0; i <= N_; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  PowerSeries operator-() const {
    PowerSeries r(ctx_, N_);
    for (int i = 0; i <= N_; ++i) r.c_[i] = -c_[i];
    return r;
  }
  PowerSeries operator*(const PowerSeries& o) const {
    check(o);
    PowerSeries r(ctx_, N_);
    for (int i = 0; i <= N_; ++i) {
      if (Traits::is_zero(c_[i])) continue;
      for (int j = 0; i + j <= N_; ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    return r;
  }
  PowerSeries scale(const T& a) const {
    PowerSeries r(ctx_, N_);
    for (int i = 0; i <= N_; ++i) r.c_[i] = a * c_[i];
    return r;
  }
  PowerSeries add_constant(const T& a) const {
    PowerSeries r = *this;
    r.c_[0] = r.c_[0] + a;
    return r;
  }
  bool operator==(const PowerSeries& o) const {
    if (N_ != o.N_) return false;
    for (int i = 0; i <= N_; ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }

  // Multiplicative inverse; the constant term must be a unit.
  PowerSeries inverse() const {
    if (!Traits::is_unit(c_[0])) fail(ErrorKind::NonUnitConstantTerm, "constant term " + Traits::str(c_[0]));
    T inv0 = Traits::divide_exact(Traits::one(ctx_), c_[0]);
    PowerSeries r(ctx_, N_);
    r.c_[0] = inv0;
    for (int k = 1; k <= N_; ++k) {
      T acc = Traits::zero(ctx_);
      for (int i = 1; i <= k; ++i) acc = acc + c_[i] * r.c_[k - i];
      r.c_[k] = -(inv0 * acc);
    }
    return r;
  }

  // Drops the first s coefficients (division by T^s of the tail); order shrinks to N - s.
  PowerSeries shift_down(int s) const {
    PowerSeries r(ctx_, N_ - s);
    for (int i = 0; i <= N_ - s; ++i) r.c_[i] = c_[i + s];
    return r;
  }
  PowerSeries truncate(int M) const { return PowerSeries(ctx_, M, c_); }

  // Value at a point; the caller guarantees convergence (e.g. positive valuation).
  T eval(const T& t) const {
    T acc = Traits::zero(ctx_);
    for (int i = N_; i >= 0; --i) acc = acc * t + c_[i];
    return acc;
  }

  PowerSeries derivative() const {
    PowerSeries r(ctx_, N_);
    for (int i = 1; i <= N_; ++i) r.c_[i - 1] = Traits::from_integer(ctx_, mpz_class(i)) * c_[i];
    return r;
  }

  // Lowest index with a nonzero coefficient, or -1.
  int order_of_vanishing() const {
    for (int i = 0; i <= N_; ++i)
      if (!Traits::is_zero(c_[i])) return i;
    return -1;
  }

  UniPoly<T> to_poly() const { return UniPoly<T>(ctx_, c_); }

 private:
  void check(const PowerSeries& o) const {
    if (!Traits::same(ctx_, o.ctx_))
      fail(ErrorKind::RingMismatch, Traits::describe(ctx_) + " vs " + Traits::describe(o.ctx_));
    if (N_ != o.N_)
      fail(ErrorKind::RingMismatch, "truncation orders " + std::to_string(N_) + " vs " + std::to_string(o.N_));
  }
  Context ctx_{};
  int N_ = 0;
  std::vector<T> c_;
};

// Horner evaluation of an integer polynomial at a series.
template <class T, class Embed>
PowerSeries<T> eval_at_series(const ZPoly& p, const PowerSeries<T>& s, Embed embed) {
  PowerSeries<T> acc(s.ctx(), s.order());
  for (int i = p.degree(); i >= 0; --i) acc = (acc * s).add_constant(embed(p.coeffs()[i]));
  return acc;
}

}  // namespace twistor::rings
