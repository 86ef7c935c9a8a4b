#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistor/rings/bivar_poly.hpp"
#include "twistor/rings/unipoly.hpp"

namespace twistor::families {

using rings::BivarPoly;
using rings::ZPoly;

// Chebyshev polynomials of the second kind in z: S_0 = 0, S_1 = 1,
// S_{n+1} = z S_n - S_{n-1}, extended to negative n by S_{-n} = -S_n.
ZPoly cheb_s(int n);
ZPoly cheb_s_derivative(int n);

// z = 2x^2 - x^2 y + y^2 - 2 and its factors z - 2 = -(y - 2)(x^2 - y - 2).
BivarPoly z_poly();
BivarPoly z_minus_two_factored();
ZPoly z_diagonal();  // -x^3 + 3x^2 - 2

// p(z(x,y)) for p a polynomial in z.
BivarPoly compose_with_z(const ZPoly& p);
// p(q(x)) for univariate p, q.
ZPoly compose(const ZPoly& p, const ZPoly& q);

BivarPoly f_poly(int n);
BivarPoly tau_poly(int n);
// Closed form of tau times (z - 2):  2((z - x) S_n(z) + (x - 2)(S_{n-1}(z) + 1)).
BivarPoly tau_closed_times_z_minus_two(int n);

struct GHK {
  ZPoly g, h, k;
};
GHK ghk_polys(int n);
ZPoly k_poly(int n);
ZPoly g_poly(int n);
ZPoly h_poly(int n);
// k_{2m} = S_{3m}(1-x) + S_{3m-1}(1-x), k_{2m+1} = S_{3m+1}(1-x).
ZPoly k_closed_form(int n);

struct SpecialValue {
  long x;
  mpz_class computed;
  mpz_class expected;
  bool ok() const { return computed == expected; }
};
std::vector<SpecialValue> k_special_values(int n);

ZPoly c_poly(int n);
ZPoly d_diag_poly(int n);

// The diagonal Jacobian (f_x tau_y - f_y tau_x)(x, x).
ZPoly diagonal_jacobian(int n);

struct IndexVerdict {
  int n;
  bool pass;
  bool applicable = true;
  std::string note;
};

struct FamilyReport {
  std::string id;
  std::string description;
  int lo, hi;
  std::vector<IndexVerdict> verdicts;
  std::optional<std::string> first_counterexample;
  bool pass() const;
};

struct IdentityReport {
  int lo, hi;
  std::vector<FamilyReport> families;
  std::map<int, int> c_identity_sign;  // eps_n with c_n + 1 = eps_n (x+1) k_n k_{1-n}
  bool pass() const;
};

IdentityReport verify_identities(int lo, int hi, int threads = 1);

// Family lookup by name: S, f, tau, g, h, k, c, d_diag, plus f_diag and tau_diag.
struct FamilyValue {
  bool bivariate = false;
  ZPoly uni;
  BivarPoly bi;
  std::string var = "x";
};
FamilyValue family_value(const std::string& name, int n);
bool is_family_name(const std::string& name);

// Factored forms as printed in the reference tables, for n in [-5,5]
// (f, tau bivariate only for n in [-3,3]).  Text output uses them when they
// expand to the computed polynomial.
std::optional<std::string> table_form(const std::string& family, int n);

}  // namespace twistor::families
