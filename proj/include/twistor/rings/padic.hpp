#pragma once

#include <gmpxx.h>

#include <array>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "twistor/errors.hpp"
#include "twistor/rings/prime_field.hpp"

namespace twistor::rings {

// O / pi^M with O = Z_p[pi], pi^e = p.  An element sum a_i pi^i (i < e) is stored with
// a_i reduced mod p^ceil((M - i) / e), which is exactly the kernel of pi^M.
class PadicRing {
 public:
  static std::shared_ptr<const PadicRing> make(u64 p, int e, int M);

  u64 p() const { return p_; }
  int e() const { return e_; }
  int precision() const { return M_; }
  const mpz_class& modulus(int i) const { return mod_[i]; }
  bool same_as(const PadicRing& o) const { return p_ == o.p_ && e_ == o.e_ && M_ == o.M_; }
  std::string describe() const;

  PadicRing(u64 p, int e, int M);

 private:
  u64 p_;
  int e_;
  int M_;
  std::vector<mpz_class> mod_;
};

using PadicCtx = std::shared_ptr<const PadicRing>;

class Padic {
 public:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  Padic() = default;
  explicit Padic(PadicCtx R);
  Padic(PadicCtx R, const mpz_class& n);
  static Padic from_rational(PadicCtx R, const mpz_class& num, const mpz_class& den);
  static Padic pi(PadicCtx R);
  static Padic pi_power(PadicCtx R, int k);
  static Padic from_components(PadicCtx R, const std::vector<mpz_class>& comps);
  static Padic from_digits(PadicCtx R, const std::vector<u64>& digits);

  const PadicCtx& ring() const { return R_; }
  const mpz_class& component(int i) const { return a_[i]; }

  bool is_zero() const;
  int valuation() const;  // in pi-units, kInfinity for zero
  bool is_unit() const;
  u64 residue() const;  // image in F_p
  std::vector<u64> digits() const;  // pi-adic digits, lowest first, length M

  Padic operator+(const Padic& o) const;
  Padic operator-(const Padic& o) const;
  Padic operator-() const;
  Padic operator*(const Padic& o) const;
  Padic& operator+=(const Padic& o) { return *this = *this + o; }
  Padic& operator-=(const Padic& o) { return *this = *this - o; }
  Padic& operator*=(const Padic& o) { return *this = *this * o; }
  Padic inverse() const;  // NonUnitConstantTerm-style error for non-units
  Padic pow(unsigned k) const;
  // Exact division by pi^k; requires valuation >= k.  The top k digits of the
  // result are not determined by the input and come back as zero.
  Padic shift_down(int k) const;
  Padic mul_pi_power(int k) const;
  // Agreement modulo pi^k.
  bool congruent(const Padic& o, int k) const;
  bool operator==(const Padic& o) const;

  // Components as balanced integers joined as a polynomial in pi, e.g. "5", "-2*pi".
  std::string str() const;
  std::string digits_str() const;

 private:
  void check(const Padic& o) const;
  void normalize();
  PadicCtx R_;
  std::array<mpz_class, 3> a_;
};

// Lexicographic order on pi-digits; used for canonical choices.
bool canonical_less(const Padic& a, const Padic& b);

// Square root of a unit with square residue, or of pi^(2k) * (such a unit).
// Returns the root with the smaller first nonzero digit.
Padic padic_sqrt(const Padic& a);

}  // namespace twistor::rings
