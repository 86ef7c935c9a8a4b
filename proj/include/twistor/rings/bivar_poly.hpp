#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "twistor/rings/unipoly.hpp"

namespace twistor::rings {

// Dense bivariate polynomial over Z; c[i][j] is the coefficient of x^i y^j.
// Stored as a rectangle with trailing zero rows and columns trimmed.
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<std::vector<mpz_class>> c);
  static BivarPoly constant(const mpz_class& a);
  static BivarPoly x();
  static BivarPoly y();
  static BivarPoly from_x(const ZPoly& p);  // p(x)
  static BivarPoly from_y(const ZPoly& p);  // p(y)

  int degree_x() const { return static_cast<int>(c_.size()) - 1; }
  int degree_y() const { return c_.empty() ? -1 : static_cast<int>(c_[0].size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpz_class coeff(int i, int j) const;
  const std::vector<std::vector<mpz_class>>& rows() const { return c_; }

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator-() const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly scale(const mpz_class& a) const;
  BivarPoly pow(unsigned k) const;
  bool operator==(const BivarPoly& o) const { return c_ == o.c_; }

  BivarPoly dx() const;
  BivarPoly dy() const;
  ZPoly diagonal() const;            // y := x
  ZPoly coeff_of_y(int j) const;     // polynomial in x multiplying y^j
  ZPoly coeff_of_x(int i) const;     // polynomial in y multiplying x^i
  ZPoly at_x(const mpz_class& x0) const;  // polynomial in y

  long double eval_ld(long double x, long double y) const;
  std::complex<long double> eval_c(std::complex<long double> x, std::complex<long double> y) const;

  // Generic evaluation with a coefficient embedding.
  template <class T, class Embed>
  T eval(const T& x, const T& y, const T& zero, Embed embed) const {
    T acc = zero;
    for (int i = degree_x(); i >= 0; --i) {
      T row = zero;
      for (int j = degree_y(); j >= 0; --j) row = row * y + embed(c_[i][j]);
      acc = acc * x + row;
    }
    return acc;
  }

  std::string str() const;

 private:
  void trim();
  std::vector<std::vector<mpz_class>> c_;
};

}  // namespace twistor::rings
