#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistor/rings/bivar_poly.hpp"
#include "twistor/rings/padic.hpp"
#include "twistor/rings/power_series.hpp"
#include "twistor/rings/unipoly.hpp"

namespace twistor::defo {

using rings::Padic;
using rings::PadicCtx;
using rings::u64;
using Series = rings::PowerSeries<Padic>;
using PPoly = rings::UniPoly<Padic>;

constexpr int kDefaultPrecision = 48;

enum class Direction { YofX, XofY };
const char* direction_name(Direction d);
std::optional<Direction> parse_direction(const std::string& s);  // "y-of-x", "x-of-y"

struct LiftedRoot {
  int n = 0;
  u64 p = 0;
  PadicCtx ring;
  Padic alpha;
  u64 residue = 0;
  int multiplicity = 1;
  std::string method;  // "hensel-simple" or "eisenstein-shift"
};

// ext_e = 0 picks e automatically (1 for a simple root, the multiplicity otherwise).
std::vector<LiftedRoot> lift_root(int n, u64 p, long long residue, int ext_e = 0, int M = kDefaultPrecision);

// Default truncation order: max(2 deg k_n + 4, M + 8).
int default_series_order(int n, int M);

struct ImplicitSeries {
  int n = 0;
  Direction direction = Direction::YofX;
  Padic center;     // alpha: x = alpha + T (y-of-x) or y = alpha + T (x-of-y)
  Padic companion;  // value of the other coordinate at T = 0
  Series series;
};

// Solves f_n = 0 for the other coordinate as a series in T around (center, companion).
ImplicitSeries implicit_series(int n, const Padic& center, const Padic& companion, Direction d, int N);
ImplicitSeries implicit_series(int n, const LiftedRoot& root, Direction d, int N = 0);

struct Weierstrass {
  int v = 0;  // pi-adic valuation factored out; r = v / e in p-units
  int e = 1;
  int s = 0;  // Weierstrass degree
  PPoly g;    // monic, lower coefficients in the maximal ideal
  Series u;   // unit
  bool reconstruction_ok = false;
  std::string r_string() const;
};

Weierstrass weierstrass_prepare(const Series& f);

// Index of the first coefficient where two monic polynomials differ mod pi^prec.
std::optional<int> first_difference(const PPoly& a, const PPoly& b, int prec);

struct LFunctionResult {
  int n = 0;
  u64 p = 0;
  int e = 1, M = 0, N = 0;
  Direction direction = Direction::YofX;
  LiftedRoot root;
  Series tau_series;
  Weierstrass prep;
  PPoly kn_squared_weierstrass;
  int compare_precision = 0;
  std::string verdict;  // "match" or "mismatch"
  std::optional<int> first_mismatch;
  bool unit_part_check = false;
  // Degree-two Taylor coefficient of the tau series against the closed form
  // (3n-1)^2 / ((alpha-2) D^2), D = n a^2 - 2n a - 1 (D' in the x-of-y direction).
  Padic second_taylor_coeff;
  std::optional<Padic> taylor_closed;
  int taylor_precision = 0;
  bool taylor_matches = false;
  bool taylor_matches_negated = false;
  bool order_two_ok = false;
  bool reduction_ok = false;
  std::optional<bool> cross_direction_ok;
};

// Direction defaults to y-of-x when df/dy is a unit at the residual point, else x-of-y.
LFunctionResult l_function(int n, const LiftedRoot& root, std::optional<Direction> d = std::nullopt, int N = 0);

// Monic Weierstrass polynomial of k_n(alpha + T)^2, or of q(alpha + T)^2 for another q.
PPoly kn_squared_weierstrass(int n, const Padic& alpha, int N);
PPoly squared_weierstrass(const rings::ZPoly& q, const Padic& alpha, int N);

struct ParabolicResult {
  int n = 0;
  u64 p = 0;
  Direction direction = Direction::YofX;
  Padic beta;  // y at x = 2
  u64 beta_residue = 0;
  Series L;
  bool square_root_taken = false;
  Weierstrass prep;
};

// Parabolic residual point x = 2.  beta (an integer representative) may be
// given explicitly; otherwise the least residual root of f_n(2, y) is used.
ParabolicResult l_function_parabolic(int n, const PadicCtx& R, Direction d, std::optional<mpz_class> beta = std::nullopt,
                                     int N = 0);

}  // namespace twistor::defo
