#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "twistor/rings/traits.hpp"

namespace twistor::rings {

template <class T>
struct Mat2 {
  using Traits = RingTraits<T>;
  T a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity(typename Traits::Context ctx) {
    return {Traits::one(ctx), Traits::zero(ctx), Traits::zero(ctx), Traits::one(ctx)};
  }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  Mat2 inverse() const {
    T di = Traits::divide_exact(Traits::one(Traits::context(a)), det());
    return {d * di, -(b * di), -(c * di), a * di};
  }
  Mat2 pow(long k) const {
    Mat2 base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Mat2 r = identity(Traits::context(a));
    for (unsigned long i = 0; i < e; ++i) r = r * base;
    return r;
  }
};

template <class R>
R max_abs(const Mat2<std::complex<R>>& m) {
  using std::abs;
  return std::max({abs(m.a), abs(m.b), abs(m.c), abs(m.d)});
}

}  // namespace twistor::rings
