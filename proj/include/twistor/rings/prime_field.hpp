#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "twistor/errors.hpp"

namespace twistor::rings {

using u64 = std::uint64_t;

bool is_prime(u64 n);
// Throws CompositeModulus / EvenCharacteristic unless p is an odd prime below 2^31.
void require_odd_prime(u64 p);

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);  // p prime, a != 0
int legendre(u64 a, u64 p);
// Tonelli-Shanks. Returns the smaller of the two roots.
std::optional<u64> sqrt_mod(u64 a, u64 p);
u64 least_nonresidue(u64 p);
// Least nonnegative residue of a (possibly negative) integer.
u64 reduce_signed(long long a, u64 p);
// Representative in (-p/2, p/2].
long long signed_residue(u64 a, u64 p);

struct PrimeCtx {
  u64 p = 0;
  bool operator==(const PrimeCtx&) const = default;
};

// Element of F_p. Carries its modulus so that mixed-field arithmetic is caught.
class Fp {
 public:
  Fp() = default;
  Fp(u64 v, u64 p) : v_(v % p), p_(p) {}
  static Fp from_signed(long long a, u64 p) { return Fp(reduce_signed(a, p), p); }

  u64 value() const { return v_; }
  u64 p() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const { check(o); u64 s = v_ + o.v_; return raw(s >= p_ ? s - p_ : s); }
  Fp operator-(const Fp& o) const { check(o); return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
  Fp operator*(const Fp& o) const { check(o); return raw(mulmod(v_, o.v_, p_)); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp inverse() const;
  Fp pow(u64 e) const { return raw(powmod(v_, e, p_)); }
  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }

 private:
  Fp raw(u64 v) const { Fp r; r.v_ = v; r.p_ = p_; return r; }
  void check(const Fp& o) const {
    if (p_ != o.p_) fail(ErrorKind::RingMismatch, "F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
  }
  u64 v_ = 0;
  u64 p_ = 0;
};

struct Fp2Ctx {
  u64 p = 0;
  u64 d = 0;  // t^2 = d, d the least nonresidue
  bool operator==(const Fp2Ctx&) const = default;
};

// F_p[t]/(t^2 - d).
class Fp2 {
 public:
  Fp2() = default;
  Fp2(u64 a, u64 b, Fp2Ctx c) : a_(a % c.p), b_(b % c.p), c_(c) {}
  static Fp2Ctx context_for(u64 p) { return Fp2Ctx{p, least_nonresidue(p)}; }
  static Fp2 embed(const Fp& x, Fp2Ctx c) { return Fp2(x.value(), 0, c); }

  u64 a() const { return a_; }
  u64 b() const { return b_; }
  const Fp2Ctx& ctx() const { return c_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool in_base_field() const { return b_ == 0; }

  Fp2 operator+(const Fp2& o) const;
  Fp2 operator-(const Fp2& o) const;
  Fp2 operator-() const;
  Fp2 operator*(const Fp2& o) const;
  Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
  Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
  Fp2& operator*=(const Fp2& o) { return *this = *this * o; }
  Fp2 inverse() const;
  bool operator==(const Fp2& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }
  std::string str() const;

 private:
  void check(const Fp2& o) const;
  u64 a_ = 0, b_ = 0;
  Fp2Ctx c_;
};

// Square root of a base-field element inside F_{p^2}; always exists.
Fp2 sqrt_in_fp2(const Fp& a, Fp2Ctx c);

}  // namespace twistor::rings
