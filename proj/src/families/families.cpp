#include "twistor/families.hpp"

#include <functional>

#include "twistor/parallel.hpp"

namespace twistor::families {

using rings::NoCtx;
using rings::QPoly;
using rings::zpoly;

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

// s_i = step(i, s_{i-1}) - s_{i-2} forward from s_0, s_1; for negative n the
// same relation is solved for s_{i-2}.
template <class P>
P run_recurrence(int n, const P& s0, const P& s1, const std::function<P(int, const P&)>& step) {
  if (n == 0) return s0;
  if (n == 1) return s1;
  if (n > 1) {
    P prev = s0, cur = s1;
    for (int i = 2; i <= n; ++i) {
      P next = step(i, cur) - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  P upper = s1, lower = s0;  // s_{i}, s_{i-1} with i = 1
  for (int i = 1; i - 2 >= n; --i) {
    P next = step(i, lower) - upper;  // s_{i-2}
    upper = lower;
    lower = next;
  }
  return lower;
}

ZPoly x_poly() { return zpoly({0, 1}); }

}  // namespace

ZPoly cheb_s(int n) {
  ZPoly z = zpoly({0, 1});
  return run_recurrence<ZPoly>(n, zpoly({}), zpoly({1}), [&](int, const ZPoly& s) { return z * s; });
}

ZPoly cheb_s_derivative(int n) { return cheb_s(n).derivative(); }

BivarPoly z_poly() { return BivarPoly({{-2, 0, 1}, {}, {2, -1}}); }

BivarPoly z_minus_two_factored() {
  BivarPoly y = BivarPoly::y(), x = BivarPoly::x();
  return -((y - BivarPoly::constant(2)) * (x * x - y - BivarPoly::constant(2)));
}

ZPoly z_diagonal() { return z_poly().diagonal(); }

BivarPoly compose_with_z(const ZPoly& p) {
  BivarPoly z = z_poly(), acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + BivarPoly::constant(p.coeffs()[i]);
  return acc;
}

ZPoly compose(const ZPoly& p, const ZPoly& q) { return p.compose(q); }

BivarPoly f_poly(int n) {
  BivarPoly z = z_poly();
  return run_recurrence<BivarPoly>(n, BivarPoly::constant(1), BivarPoly::y() - BivarPoly::constant(1),
                                   [&](int, const BivarPoly& f) { return z * f; });
}

BivarPoly tau_poly(int n) {
  // tau_{i} = z tau_{i-1} - tau_{i-2} - 2(x - 2), and backward
  // tau_{i-2} = z tau_{i-1} - tau_i - 2(x - 2).
  BivarPoly z = z_poly();
  BivarPoly shift = (BivarPoly::x() - BivarPoly::constant(2)).scale(2);
  return run_recurrence<BivarPoly>(n, BivarPoly(), BivarPoly::constant(2),
                                   [&](int, const BivarPoly& t) { return z * t - shift; });
}

BivarPoly tau_closed_times_z_minus_two(int n) {
  BivarPoly z = z_poly(), x = BivarPoly::x(), two = BivarPoly::constant(2);
  BivarPoly sn = compose_with_z(cheb_s(n)), sn1 = compose_with_z(cheb_s(n - 1));
  return ((z - x) * sn + (x - two) * (sn1 + BivarPoly::constant(1))).scale(2);
}

GHK ghk_polys(int n) {
  ZPoly x = x_poly(), q = zpoly({0, -3, 1});
  // k: even index uses x^2 - 3x, odd index uses -x.  g, h: the other way round.
  auto k_step = [&](int i, const ZPoly& s) { return floor_mod(i, 2) == 0 ? q * s : -(x * s); };
  auto gh_step = [&](int i, const ZPoly& s) { return floor_mod(i, 2) == 0 ? -(x * s) : q * s; };
  GHK r;
  r.k = run_recurrence<ZPoly>(n, zpoly({-1}), zpoly({1}), k_step);
  r.g = run_recurrence<ZPoly>(n, zpoly({-1}), zpoly({-1, 1}), gh_step);
  r.h = run_recurrence<ZPoly>(n, zpoly({}), zpoly({1}), gh_step);
  return r;
}

ZPoly k_poly(int n) { return ghk_polys(n).k; }
ZPoly g_poly(int n) { return ghk_polys(n).g; }
ZPoly h_poly(int n) { return ghk_polys(n).h; }

ZPoly k_closed_form(int n) {
  ZPoly one_minus_x = zpoly({1, -1});
  if (floor_mod(n, 2) == 0) {
    int m = floor_div(n, 2);
    return (cheb_s(3 * m) + cheb_s(3 * m - 1)).compose(one_minus_x);
  }
  int m = floor_div(n - 1, 2);
  return cheb_s(3 * m + 1).compose(one_minus_x);
}

std::vector<SpecialValue> k_special_values(int n) {
  ZPoly k = k_poly(n);
  std::vector<SpecialValue> out;
  bool even = floor_mod(n, 2) == 0;
  int m = even ? floor_div(n, 2) : floor_div(n - 1, 2);
  auto sgn = [](int e) { return floor_mod(e, 2) == 0 ? 1L : -1L; };
  out.push_back({-1, k.eval(-1), even ? mpz_class(6 * m - 1) : mpz_class(3 * m + 1)});
  int r4 = floor_mod(n, 4);
  out.push_back({0, k.eval(0), mpz_class((r4 == 0 || r4 == 3) ? -1 : 1)});
  out.push_back({2, k.eval(2), mpz_class(sgn(n - 1))});
  out.push_back({3, k.eval(3), even ? mpz_class(sgn(m - 1)) : mpz_class(sgn(m) * (3L * m + 1))});
  return out;
}

ZPoly c_poly(int n) {
  ZPoly zd = z_diagonal();
  return x_poly() * (cheb_s(n) - cheb_s(n - 1)).compose(zd);
}

ZPoly d_diag_poly(int n) {
  ZPoly x = x_poly(), zd = z_diagonal();
  ZPoly xm2 = zpoly({-2, 1}), xp1 = zpoly({1, 1}), xm1 = zpoly({-1, 1}), two = zpoly({2});
  ZPoly d00 = xm2 * xp1 * xp1 + two;
  ZPoly d10 = x * xm1 * zpoly({-1, -1, 1});
  ZPoly d11 = xm2 * xp1 * xp1 * xm1 * xm1 + two;
  std::function<ZPoly(int, const ZPoly&)> step = [&](int, const ZPoly& s) { return zd * s; };
  // d_{0,n} and d_{1,n} along the second index, then along the first index to m = n.
  ZPoly d0n = run_recurrence<ZPoly>(n, d00, d10, step);
  ZPoly d1n = run_recurrence<ZPoly>(n, d10, d11, step);
  return run_recurrence<ZPoly>(n, d0n, d1n, step);
}

ZPoly diagonal_jacobian(int n) {
  BivarPoly f = f_poly(n), t = tau_poly(n);
  return f.dx().diagonal() * t.dy().diagonal() - f.dy().diagonal() * t.dx().diagonal();
}

bool FamilyReport::pass() const {
  for (const auto& v : verdicts)
    if (v.applicable && !v.pass) return false;
  return true;
}

bool IdentityReport::pass() const {
  for (const auto& f : families)
    if (!f.pass()) return false;
  return true;
}

namespace {

constexpr int kFamilies = 10;

struct PerIndex {
  std::array<IndexVerdict, kFamilies> v;
  std::array<std::string, kFamilies> delta;
  int eps = 0;
};

void record(PerIndex& r, int fam, int n, bool ok, const std::string& delta, const std::string& note = "") {
  r.v[fam] = IndexVerdict{n, ok, true, note};
  if (!ok) r.delta[fam] = delta;
}

PerIndex check_index(int n) {
  PerIndex r;
  ZPoly z = zpoly({0, 1}), one = zpoly({1});
  ZPoly s_prev = cheb_s(n - 1), s = cheb_s(n), s_next = cheb_s(n + 1);

  {
    ZPoly lhs = s_next * s_next + s * s - z * s_next * s;
    bool ok = lhs == one && cheb_s(-n) == -s && s_next - z * s + s_prev == zpoly({});
    record(r, 0, n, ok, "S_{n+1}^2 + S_n^2 - z S_{n+1} S_n - 1 = " + (lhs - one).str("z"));
  }
  {
    ZPoly lhs = (z * z - zpoly({4})) * s.derivative();
    ZPoly rhs = s_next.scale(n - 1) - s_prev.scale(n + 1);
    record(r, 1, n, lhs == rhs, (lhs - rhs).str("z"));
  }
  GHK ghk = ghk_polys(n);
  BivarPoly f = f_poly(n), t = tau_poly(n);
  ZPoly fd = f.diagonal(), td = t.diagonal();
  {
    ZPoly d1 = fd - ghk.g * ghk.k, d2 = td - (ghk.h * ghk.k).scale(2);
    mpq_class res = rings::resultant(rings::to_q(ghk.g), rings::to_q(ghk.h));
    bool ok = d1.is_zero() && d2.is_zero() && res != 0;
    record(r, 2, n, ok, "f-gk: " + d1.str() + "; tau-2hk: " + d2.str() + "; res(g,h) = " + res.get_str(),
           "res(g,h) = " + res.get_str());
  }
  {
    ZPoly cf = k_closed_form(n), d = ghk.k - cf;
    int expected_deg = n == 0 ? 0 : (std::abs(3 * n - 1) - 1) / 2;
    bool ok = d.is_zero() && ghk.k.degree() == expected_deg;
    record(r, 3, n, ok, "k - closed form = " + d.str() + ", deg " + std::to_string(ghk.k.degree()));
  }
  {
    ZPoly rhs = -cheb_s(3 * n - 1).compose(zpoly({1, -1}));
    record(r, 4, n, fd == rhs, (fd - rhs).str());
  }
  {
    ZPoly lhs = d_diag_poly(n) - zpoly({2});
    ZPoly rhs = zpoly({-2, 1}) * zpoly({1, 1}) * zpoly({1, 1}) * fd * fd;
    record(r, 5, n, lhs == rhs, (lhs - rhs).str());
  }
  {
    ZPoly c = c_poly(n), lhs = c + one;
    ZPoly prod = zpoly({1, 1}) * ghk.k * k_poly(1 - n);
    ZPoly zd = z_diagonal();
    bool rec = c_poly(n + 1) - zd * c + c_poly(n - 1) == zpoly({});
    if (lhs == prod)
      r.eps = 1;
    else if (lhs == -prod)
      r.eps = -1;
    bool ok = r.eps != 0 && rec;
    record(r, 6, n, ok, "c_n + 1 -/+ (x+1) k_n k_{1-n}: " + (lhs - prod).str() + " | " + (lhs + prod).str(),
           "eps = " + std::to_string(r.eps));
  }
  {
    BivarPoly zb = z_poly(), x = BivarPoly::x(), two = BivarPoly::constant(2);
    BivarPoly trec = tau_poly(n + 1) - zb * t + tau_poly(n - 1) + (x - two).scale(2);
    BivarPoly frec = f_poly(n + 1) - zb * f + f_poly(n - 1);
    BivarPoly closed = (zb - two) * t - tau_closed_times_z_minus_two(n);
    BivarPoly fclosed = f - ((BivarPoly::y() - BivarPoly::constant(1)) * compose_with_z(s) - compose_with_z(s_prev));
    bool ok = trec.is_zero() && frec.is_zero() && closed.is_zero() && fclosed.is_zero();
    record(r, 7, n, ok, "tau rec: " + trec.str() + "; f rec: " + frec.str() + "; closed: " + closed.str());
  }
  {
    bool ok = true;
    std::string delta;
    for (const auto& sv : k_special_values(n)) {
      if (!sv.ok()) {
        ok = false;
        delta += "k(" + std::to_string(sv.x) + ") = " + sv.computed.get_str() + " expected " + sv.expected.get_str() + "; ";
      }
    }
    record(r, 8, n, ok, delta);
  }
  {
    ZPoly j = diagonal_jacobian(n);
    auto [q, rem] = rings::to_q(j).divmod(rings::to_q(ghk.k));
    record(r, 9, n, rem.is_zero(), "remainder " + rem.str());
  }
  return r;
}

const std::array<std::pair<const char*, const char*>, kFamilies> kFamilyNames = {{
    {"chebyshev", "S_{n+1}^2 + S_n^2 - z S_{n+1} S_n = 1, S_{-n} = -S_n, three-term recurrence"},
    {"chebyshev_derivative", "(z^2 - 4) S_n' = (n-1) S_{n+1} - (n+1) S_{n-1}"},
    {"diagonal_factorization", "f_n(x,x) = g_n k_n, tau_n(x,x) = 2 h_n k_n, res(g_n, h_n) != 0"},
    {"k_closed_form", "k_2m = S_3m(1-x) + S_{3m-1}(1-x), k_{2m+1} = S_{3m+1}(1-x), deg k_n"},
    {"f_diagonal_chebyshev", "f_n(x,x) = -S_{3n-1}(1-x)"},
    {"d_diagonal", "d_{n,n}(x,x) - 2 = (x-2)(x+1)^2 f_n(x,x)^2"},
    {"c_identity", "c_n + 1 = eps_n (x+1) k_n k_{1-n}, Chebyshev recurrence of c_n"},
    {"tau_recurrence", "f and tau recurrences, closed forms of f_n and (z-2) tau_n"},
    {"k_special_values", "k_n at x = -1, 0, 2, 3"},
    {"diagonal_jacobian", "(f_x tau_y - f_y tau_x)(x,x) divisible by k_n"},
}};

}  // namespace

IdentityReport verify_identities(int lo, int hi, int threads) {
  if (lo > hi) fail(ErrorKind::InvalidArgument, "empty index range");
  size_t count = static_cast<size_t>(hi - lo + 1);
  std::function<PerIndex(size_t)> job = [&](size_t i) { return check_index(lo + static_cast<int>(i)); };
  auto results = parallel_map<PerIndex>(count, threads, job);
  IdentityReport rep{lo, hi, {}, {}};
  for (int f = 0; f < kFamilies; ++f) {
    FamilyReport fr{kFamilyNames[f].first, kFamilyNames[f].second, lo, hi, {}, std::nullopt};
    for (const auto& r : results) {
      fr.verdicts.push_back(r.v[f]);
      if (!r.v[f].pass && !fr.first_counterexample)
        fr.first_counterexample = "n = " + std::to_string(r.v[f].n) + ": " + r.delta[f];
    }
    rep.families.push_back(std::move(fr));
  }
  for (const auto& r : results) rep.c_identity_sign[r.v[6].n] = r.eps;
  return rep;
}

bool is_family_name(const std::string& name) {
  static const char* names[] = {"S", "f", "tau", "g", "h", "k", "c", "d_diag", "f_diag", "tau_diag"};
  for (const char* s : names)
    if (name == s) return true;
  return false;
}

FamilyValue family_value(const std::string& name, int n) {
  FamilyValue v;
  if (name == "S") {
    v.uni = cheb_s(n);
    v.var = "z";
  } else if (name == "f") {
    v.bivariate = true;
    v.bi = f_poly(n);
  } else if (name == "tau") {
    v.bivariate = true;
    v.bi = tau_poly(n);
  } else if (name == "g") {
    v.uni = g_poly(n);
  } else if (name == "h") {
    v.uni = h_poly(n);
  } else if (name == "k") {
    v.uni = k_poly(n);
  } else if (name == "c") {
    v.uni = c_poly(n);
  } else if (name == "d_diag") {
    v.uni = d_diag_poly(n);
  } else if (name == "f_diag") {
    v.uni = f_poly(n).diagonal();
  } else if (name == "tau_diag") {
    v.uni = tau_poly(n).diagonal();
  } else {
    fail(ErrorKind::InvalidArgument, "unknown family " + name);
  }
  return v;
}

}  // namespace twistor::families
