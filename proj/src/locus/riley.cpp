#include <cmath>

#include "twistor/errors.hpp"
#include "twistor/locus.hpp"

namespace twistor::locus {

namespace {

CMat identity() { return CMat::identity(rings::NoCtx{}); }

// Inverse of a determinant-one matrix.
CMat sl2_inverse(const CMat& m) { return m.adjugate(); }

LD dist_to_identity(const CMat& m) { return rings::max_abs(m - identity()); }

}  // namespace

CMat word_power(const CMat& w, const CMat& w_inv, int n) {
  const CMat& base = n < 0 ? w_inv : w;
  CMat r = identity();
  for (int i = 0; i < std::abs(n); ++i) r = r * base;
  return r;
}

RileyData riley_matrices(int n, CLD x, CLD y) {
  RileyData r;
  r.n = n;
  r.x = x;
  r.y = y;
  r.u = x * x - y - CLD(2);
  r.M = (x + std::sqrt(x * x - CLD(4))) / CLD(2);
  CLD Mi = CLD(1) / r.M;
  r.A = {r.M, CLD(1), CLD(0), Mi};
  r.B = {r.M, CLD(0), -r.u, Mi};
  CMat Ai = sl2_inverse(r.A), Bi = sl2_inverse(r.B);
  CMat W = r.A * Bi * Ai * r.B;
  CMat Winv = Bi * r.A * r.B * Ai;
  CMat Wn = word_power(W, Winv, n);
  r.relation_residual = rings::max_abs(r.A * Wn - Wn * r.B);
  return r;
}

DehnReport dehn_and_order_checks(int n, LD alpha) {
  RootDatum root = snap_root(n, alpha, false);
  DehnReport d;
  d.n = n;
  d.alpha = root.x;
  d.nonacyclic = root.kind == RootKind::Nonacyclic;
  RileyData r = riley_matrices(n, CLD(root.x), CLD(root.x));
  CMat Ai = sl2_inverse(r.A), Bi = sl2_inverse(r.B);
  CMat W = r.A * Bi * Ai * r.B, Winv = Bi * r.A * r.B * Ai;
  CMat Wb = r.B * Ai * Bi * r.A, Wbinv = Ai * r.B * r.A * Bi;
  CMat Wn = word_power(W, Winv, n);
  // Matrix product W^n Wbar^n; see README for the word order.
  CMat lambda = Wn * word_power(Wb, Wbinv, n);
  d.L = lambda.a;
  d.residual_a3lambda = dist_to_identity(Ai * Ai * Ai * lambda);
  CMat C = Ai * Wn;
  d.order3_residual = dist_to_identity(C * C * C);
  d.c_minus_identity = dist_to_identity(C);
  d.trace_c = C.trace();
  return d;
}

}  // namespace twistor::locus
