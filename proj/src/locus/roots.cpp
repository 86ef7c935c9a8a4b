#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "twistor/errors.hpp"
#include "twistor/families.hpp"
#include "twistor/locus.hpp"

namespace twistor::locus {

const char* kind_name(RootKind k) { return k == RootKind::Nonacyclic ? "nonacyclic-root" : "charvariety-root"; }

namespace {

template <class T>
T z_value(T x, T y) {
  return T(2) * x * x - x * x * y + y * y - T(2);
}

// s_i = z s_{i-1} - s_{i-2} - shift, walked in either direction.
template <class T>
T walk(int n, T s0, T s1, T z, T shift) {
  if (n == 0) return s0;
  if (n > 0) {
    T prev = s0, cur = s1;
    for (int i = 2; i <= n; ++i) {
      T next = z * cur - prev - shift;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  T upper = s1, lower = s0;
  for (int i = 1; i - 2 >= n; --i) {
    T next = z * lower - upper - shift;
    upper = lower;
    lower = next;
  }
  return lower;
}

template <class T>
T f_rec(int n, T x, T y) {
  return walk<T>(n, T(1), y - T(1), z_value(x, y), T(0));
}

template <class T>
T tau_rec(int n, T x, T y) {
  return walk<T>(n, T(0), T(2), z_value(x, y), T(2) * (x - T(2)));
}

LD rel_err(LD a, LD b) { return std::fabs(a - b) / std::max<LD>(1, std::fabs(b)); }

// Richardson-extrapolated central differences around t0.
LD first_derivative(const std::function<LD(LD)>& g, LD t0, LD h) {
  auto d = [&](LD s) { return (g(t0 + s) - g(t0 - s)) / (2 * s); };
  return (4 * d(h / 2) - d(h)) / 3;
}
LD second_derivative(const std::function<LD(LD)>& g, LD t0, LD h) {
  LD g0 = g(t0);
  auto d = [&](LD s) { return (g(t0 + s) - 2 * g0 + g(t0 - s)) / (s * s); };
  return (4 * d(h / 2) - d(h)) / 3;
}

// Newton in one coordinate with the other held fixed.
LD newton(const std::function<LD(LD)>& g, const std::function<LD(LD)>& dg, LD t) {
  for (int it = 0; it < 80; ++it) {
    LD step = g(t) / dg(t);
    t -= step;
    if (std::fabs(step) < 1e-19L * std::max<LD>(1, std::fabs(t))) break;
  }
  return t;
}

}  // namespace

LD eval_f(int n, LD x, LD y) { return f_rec<LD>(n, x, y); }
LD eval_tau(int n, LD x, LD y) { return tau_rec<LD>(n, x, y); }
CLD eval_f(int n, CLD x, CLD y) { return f_rec<CLD>(n, x, y); }
CLD eval_tau(int n, CLD x, CLD y) { return tau_rec<CLD>(n, x, y); }

std::vector<RootDatum> complex_char_roots(int n) {
  int N = 3 * n - 1;
  std::vector<RootDatum> out;
  for (int L = 1; L < std::abs(N); ++L) {
    RootDatum r;
    r.n = n;
    r.cos_index = L;
    r.t_angle = M_PIl * L / N;
    r.x = 1 - 2 * std::cos(r.t_angle);
    r.kind = L % 2 == 0 ? RootKind::Nonacyclic : RootKind::CharVariety;
    r.l = L % 2 == 0 ? L / 2 : L;
    r.f_residual = std::fabs(eval_f(n, r.x, r.x));
    r.tau_value = eval_tau(n, r.x, r.x);
    r.valid = r.f_residual < 1e-9L &&
              (r.kind == RootKind::Nonacyclic ? std::fabs(r.tau_value) < 1e-9L : std::fabs(r.tau_value) > 1e-3L);
    out.push_back(r);
  }
  return out;
}

std::vector<RootDatum> nonacyclic_roots(int n) {
  std::vector<RootDatum> out;
  for (auto& r : complex_char_roots(n))
    if (r.kind == RootKind::Nonacyclic) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const RootDatum& a, const RootDatum& b) { return a.x < b.x; });
  return out;
}

RootDatum snap_root(int n, LD alpha, bool nonacyclic_only) {
  for (auto& r : complex_char_roots(n)) {
    if (nonacyclic_only && r.kind != RootKind::Nonacyclic) continue;
    if (std::fabs(r.x - alpha) < 1e-8L) return r;
  }
  fail(ErrorKind::NotALocusPoint, "x = " + std::to_string(static_cast<double>(alpha)) + " is not a " +
                                      (nonacyclic_only ? "non-acyclic" : "diagonal") + " root for n = " + std::to_string(n));
}

bool TangentReport::ok() const {
  auto close = [](LD a, LD b, LD tol) { return std::fabs(a - b) <= tol * std::max<LD>(1, std::fabs(b)); };
  return close(slope_f, slope_tau, 1e-10L) && std::fabs(slope_f_fd - slope_f) < 1e-8L &&
         std::fabs(slope_tau_fd - slope_tau) < 1e-8L && d2_diff_closed != 0 &&
         std::fabs(d2_diff_fd - d2_diff_closed) <= 1e-6L * std::fabs(d2_diff_closed) && partials_rel_err < 1e-8L;
}

TangentReport tangent_report(int n, LD alpha_in) {
  RootDatum root = snap_root(n, alpha_in, true);
  const LD a = root.x;
  TangentReport r;
  r.n = n;
  r.alpha = a;

  const LD N2 = static_cast<LD>(3 * n - 1) * (3 * n - 1);
  const LD D = n * a * a - 2 * n * a - 1;
  const LD Dp = (2 * n - 1) * a * a - (4 * n - 2) * a + 1;
  const LD Q = (a + 1) * a * (a - 2) * (a - 3);
  r.closed = {2 * Dp / Q, 2 * D / Q, 2 * Dp / (Q * (a - 2)), 2 * D / (Q * (a - 2))};

  const auto F = families::f_poly(n), T = families::tau_poly(n);
  const auto Fx = F.dx(), Fy = F.dy(), Tx = T.dx(), Ty = T.dy();
  r.symbolic = {Fx.eval_ld(a, a), Fy.eval_ld(a, a), Tx.eval_ld(a, a), Ty.eval_ld(a, a)};
  r.partials_rel_err = std::max({rel_err(r.symbolic.fx, r.closed.fx), rel_err(r.symbolic.fy, r.closed.fy),
                                 rel_err(r.symbolic.tx, r.closed.tx), rel_err(r.symbolic.ty, r.closed.ty)});

  const LD h1 = 1e-5L, h2 = 1e-4L;
  // (n, alpha) = (-1, 1) is the only point with D = 0.
  r.infinite_slope = std::fabs(D) < 1e-12L;
  if (!r.infinite_slope) {
    r.slope_f = -r.closed.fx / r.closed.fy;
    r.slope_tau = -r.closed.tx / r.closed.ty;
    auto yf = [&](LD x) {
      return newton([&](LD y) { return eval_f(n, x, y); }, [&](LD y) { return Fy.eval_ld(x, y); },
                    a + r.slope_f * (x - a));
    };
    auto yt = [&](LD x) {
      return newton([&](LD y) { return eval_tau(n, x, y); }, [&](LD y) { return Ty.eval_ld(x, y); },
                    a + r.slope_tau * (x - a));
    };
    r.slope_f_fd = first_derivative(yf, a, h1);
    r.slope_tau_fd = first_derivative(yt, a, h1);
    r.d2_diff_closed = -N2 * Q / (D * D * D);
    r.d2_diff_fd = second_derivative([&](LD x) { return yf(x) - yt(x); }, a, h2);
    r.d2tau_closed = -2 * N2 / ((a - 2) * D * D);
    r.d2tau_printed = 2 * N2 / ((a - 2) * D * D);
    r.d2tau_fd = second_derivative([&](LD x) { return eval_tau(n, x, yf(x)); }, a, h2);
  } else {
    r.direction = "x-of-y";
    r.slope_f = -r.closed.fy / r.closed.fx;
    r.slope_tau = -r.closed.ty / r.closed.tx;
    auto xf = [&](LD y) {
      return newton([&](LD x) { return eval_f(n, x, y); }, [&](LD x) { return Fx.eval_ld(x, y); },
                    a + r.slope_f * (y - a));
    };
    auto xt = [&](LD y) {
      return newton([&](LD x) { return eval_tau(n, x, y); }, [&](LD x) { return Tx.eval_ld(x, y); },
                    a + r.slope_tau * (y - a));
    };
    r.slope_f_fd = first_derivative(xf, a, h1);
    r.slope_tau_fd = first_derivative(xt, a, h1);
    r.d2_diff_closed = -N2 * Q / (Dp * Dp * Dp);
    r.d2_diff_fd = second_derivative([&](LD y) { return xf(y) - xt(y); }, a, h2);
    r.d2tau_closed = -2 * N2 / ((a - 2) * Dp * Dp);
    r.d2tau_printed = 2 * N2 / ((a - 2) * Dp * Dp);
    r.d2tau_fd = second_derivative([&](LD y) { return eval_tau(n, xf(y), y); }, a, h2);
  }
  return r;
}

}  // namespace twistor::locus
