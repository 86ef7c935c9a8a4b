#include <cmath>
#include <map>
#include <random>

#include "twistor/errors.hpp"
#include "twistor/families.hpp"
#include "twistor/locus.hpp"

namespace twistor::locus {

namespace {

using GroupRing = std::map<Word, long>;

void add_to(GroupRing& acc, const GroupRing& t, long sign = 1) {
  for (auto& [w, c] : t) {
    long& v = acc[w];
    v += sign * c;
    if (v == 0) acc.erase(w);
  }
}

GroupRing left_mul(const Word& u, const GroupRing& t) {
  GroupRing r;
  for (auto& [w, c] : t) {
    Word uw = u;
    uw.insert(uw.end(), w.begin(), w.end());
    add_to(r, GroupRing{{reduce(uw), c}});
  }
  return r;
}

// d/db of w[lo, hi) by the product rule, splitting in halves.
GroupRing fox_b(const Word& w, size_t lo, size_t hi) {
  if (hi - lo == 1) {
    int g = w[lo];
    if (g == 2) return {{Word{}, 1}};
    if (g == -2) return {{Word{-2}, -1}};  // d(b^-1) = -b^-1 db
    return {};
  }
  size_t mid = (lo + hi) / 2;
  GroupRing r = fox_b(w, lo, mid);
  Word u(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(mid));
  add_to(r, left_mul(u, fox_b(w, mid, hi)));
  return r;
}

CMat letter(const RileyData& r, int g) {
  switch (g) {
    case 1: return r.A;
    case -1: return r.A.adjugate();
    case 2: return r.B;
    default: return r.B.adjugate();
  }
}

CMat eval_word(const RileyData& r, const Word& w) {
  CMat m = CMat::identity(rings::NoCtx{});
  for (int g : w) m = m * letter(r, g);
  return m;
}

}  // namespace

Word reduce(Word w) {
  Word out;
  for (int g : w) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& g : r) g = -g;
  return r;
}

Word power(const Word& w, int n) {
  Word base = n < 0 ? inverse(w) : w, r;
  for (int i = 0; i < std::abs(n); ++i) r.insert(r.end(), base.begin(), base.end());
  return reduce(r);
}

Word relator(int n) {
  Word w{1, -2, -1, 2};
  Word r{1};
  Word wn = power(w, n);
  r.insert(r.end(), wn.begin(), wn.end());
  r.push_back(-2);
  Word wmn = power(w, -n);
  r.insert(r.end(), wmn.begin(), wmn.end());
  return reduce(r);
}

std::vector<std::pair<long, Word>> fox_derivative_b(const Word& r) {
  std::vector<std::pair<long, Word>> out;
  if (r.empty()) return out;
  for (auto& [w, c] : fox_b(r, 0, r.size())) out.emplace_back(c, w);
  return out;
}

CLD fox_torsion(int n, CLD x, CLD y) {
  CLD denom = CLD(2) - x;  // det(rho(a) - 1)
  if (std::abs(denom) < 1e-8L) fail(ErrorKind::SingularDenominator, "det rho(a - 1) = 2 - x vanishes");
  RileyData r = riley_matrices(n, x, y);
  CMat sum{CLD(0), CLD(0), CLD(0), CLD(0)};
  for (auto& [c, w] : fox_derivative_b(relator(n))) {
    CMat m = eval_word(r, w);
    CLD s(static_cast<LD>(c));
    sum = sum + CMat{s * m.a, s * m.b, s * m.c, s * m.d};
  }
  return sum.det() / denom;
}

std::vector<VarietyPoint> variety_points(int n, int count, std::uint64_t seed) {
  std::vector<VarietyPoint> out;
  const auto F = families::f_poly(n);
  const int deg = F.degree_y();
  if (deg < 1) return out;
  const auto Fy = F.dy();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-2.5, 3.5);
  while (static_cast<int>(out.size()) < count) {
    LD x = ux(rng);
    if (std::fabs(x - 2) < 0.1L) continue;
    std::vector<CLD> c(deg + 1);
    for (int j = 0; j <= deg; ++j) c[j] = rings::eval_ld(F.coeff_of_y(j), x);
    if (std::abs(c[deg]) < 1e-12L) continue;
    for (auto& v : c) v /= c[deg];
    // Durand-Kerner
    std::vector<CLD> z(deg);
    for (int k = 0; k < deg; ++k) z[k] = std::pow(CLD(0.4L, 0.9L), k);
    for (int it = 0; it < 1000; ++it) {
      LD moved = 0;
      for (int k = 0; k < deg; ++k) {
        CLD p = c[deg];
        for (int j = deg - 1; j >= 0; --j) p = p * z[k] + c[j];
        CLD q = 1;
        for (int j = 0; j < deg; ++j)
          if (j != k) q *= z[k] - z[j];
        CLD step = p / q;
        z[k] -= step;
        moved = std::max(moved, std::abs(step));
      }
      if (moved < 1e-18L) break;
    }
    CLD y = z[rng() % deg];
    for (int it = 0; it < 20; ++it) {
      CLD d = Fy.eval_c(CLD(x), y);
      if (std::abs(d) < 1e-30L) break;
      y -= eval_f(n, CLD(x), y) / d;
    }
    if (std::abs(eval_f(n, CLD(x), y)) > 1e-12L) continue;
    out.push_back({CLD(x), y});
  }
  return out;
}

}  // namespace twistor::locus
