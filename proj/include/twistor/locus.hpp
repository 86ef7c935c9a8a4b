#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "twistor/rings/mat2.hpp"

namespace twistor::locus {

using LD = long double;
using CLD = std::complex<long double>;
using CMat = rings::Mat2<CLD>;

enum class RootKind { CharVariety, Nonacyclic };
const char* kind_name(RootKind k);

// A root x = 1 - 2cos(L pi / (3n-1)) of f_n(x,x), 0 < L < |3n-1|.  Even L are
// the non-acyclic roots; for those `l` is L/2, the index in
// x = 1 - 2cos(2 pi l / (3n-1)).  Otherwise `l` is L itself.
struct RootDatum {
  int n = 0;
  int l = 0;
  int cos_index = 0;  // L
  LD x = 0;
  RootKind kind = RootKind::CharVariety;
  LD t_angle = 0;     // 1 - x = t + 1/t with t = exp(i t_angle)
  LD f_residual = 0;  // |f_n(x,x)|
  LD tau_value = 0;   // tau_n(x,x)
  bool valid = false; // residual bounds hold for the kind
};

std::vector<RootDatum> complex_char_roots(int n);
std::vector<RootDatum> nonacyclic_roots(int n);

// f_n and tau_n evaluated through the z-recurrence rather than the expanded
// polynomials; much better conditioned near the curves.
LD eval_f(int n, LD x, LD y);
LD eval_tau(int n, LD x, LD y);
CLD eval_f(int n, CLD x, CLD y);
CLD eval_tau(int n, CLD x, CLD y);

// Returns the exact cosine root within 1e-8 of alpha, or raises NotALocusPoint.
RootDatum snap_root(int n, LD alpha, bool nonacyclic_only);

struct Partials {
  LD fx = 0, fy = 0, tx = 0, ty = 0;
};

struct TangentReport {
  int n = 0;
  LD alpha = 0;
  // "y-of-x" normally; "x-of-y" at (n, alpha) = (-1, 1), where dy/dx is
  // infinite and every slope and second derivative below is taken in y.
  std::string direction = "y-of-x";
  bool infinite_slope = false;
  LD slope_f = 0, slope_tau = 0;        // closed form
  LD slope_f_fd = 0, slope_tau_fd = 0;  // traced finite differences
  LD d2_diff_closed = 0, d2_diff_fd = 0;
  LD d2tau_closed = 0, d2tau_fd = 0;
  LD d2tau_printed = 0;  // the positive printed constant, for comparison
  Partials closed, symbolic;
  LD partials_rel_err = 0;
  bool ok() const;
};

TangentReport tangent_report(int n, LD alpha);

struct RileyData {
  int n = 0;
  CLD x, y, u, M;
  CMat A, B;
  LD relation_residual = 0;
};

RileyData riley_matrices(int n, CLD x, CLD y);
CMat word_power(const CMat& w, const CMat& w_inv, int n);

struct DehnReport {
  int n = 0;
  LD alpha = 0;
  bool nonacyclic = false;
  CLD L;
  LD residual_a3lambda = 0;
  LD order3_residual = 0;
  LD c_minus_identity = 0;
  CLD trace_c;
};

DehnReport dehn_and_order_checks(int n, LD alpha);

// Free group on a, b: letters +1 = a, -1 = a^-1, +2 = b, -2 = b^-1.
using Word = std::vector<int>;
Word reduce(Word w);
Word inverse(const Word& w);
Word power(const Word& w, int n);
Word relator(int n);  // a w^n b^-1 w^-n, freely reduced
// Fox derivative d/db as a list of (coefficient, prefix word).
std::vector<std::pair<long, Word>> fox_derivative_b(const Word& r);

CLD fox_torsion(int n, CLD x, CLD y);

struct VarietyPoint {
  CLD x, y;
};
// Seeded random points on f_n(x, y) = 0: x real in [-2.5, 3.5] away from 2,
// y a root of f_n(x, .) polished by Newton.
std::vector<VarietyPoint> variety_points(int n, int count, std::uint64_t seed);

struct Window {
  double xmin = -3, xmax = 4, ymin = -3, ymax = 4;
};
struct PlotSummary {
  int f_segments = 0;
  int tau_segments = 0;
  int markers = 0;
};
PlotSummary plot_curves(int n, const Window& w, int resolution, const std::string& path);
std::string plot_svg(int n, const Window& w, int resolution, PlotSummary* summary = nullptr);

}  // namespace twistor::locus
