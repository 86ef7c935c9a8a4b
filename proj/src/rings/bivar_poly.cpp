#include "twistor/rings/bivar_poly.hpp"

#include <algorithm>

namespace twistor::rings {

BivarPoly::BivarPoly(std::vector<std::vector<mpz_class>> c) : c_(std::move(c)) { trim(); }

void BivarPoly::trim() {
  size_t ny = 0;
  for (const auto& row : c_) ny = std::max(ny, row.size());
  for (auto& row : c_) row.resize(ny, 0);
  // trailing columns
  while (ny > 0) {
    bool zero = true;
    for (const auto& row : c_)
      if (row[ny - 1] != 0) zero = false;
    if (!zero) break;
    --ny;
    for (auto& row : c_) row.pop_back();
  }
  while (!c_.empty() && std::all_of(c_.back().begin(), c_.back().end(), [](const mpz_class& a) { return a == 0; }))
    c_.pop_back();
  if (ny == 0) c_.clear();
}

BivarPoly BivarPoly::constant(const mpz_class& a) { return BivarPoly({{a}}); }
BivarPoly BivarPoly::x() { return BivarPoly({{0}, {1}}); }
BivarPoly BivarPoly::y() { return BivarPoly({{0, 1}}); }

BivarPoly BivarPoly::from_x(const ZPoly& p) {
  std::vector<std::vector<mpz_class>> c;
  for (const auto& a : p.coeffs()) c.push_back({a});
  return BivarPoly(std::move(c));
}

BivarPoly BivarPoly::from_y(const ZPoly& p) { return BivarPoly({p.coeffs()}); }

mpz_class BivarPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > degree_x() || j > degree_y()) return 0;
  return c_[i][j];
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  size_t nx = std::max(c_.size(), o.c_.size());
  size_t ny = std::max(degree_y() + 1, o.degree_y() + 1);
  std::vector<std::vector<mpz_class>> r(nx, std::vector<mpz_class>(ny, 0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j) r[i][j] += c_[i][j];
  for (size_t i = 0; i < o.c_.size(); ++i)
    for (size_t j = 0; j < o.c_[i].size(); ++j) r[i][j] += o.c_[i][j];
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::operator-() const { return scale(-1); }
BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  if (is_zero() || o.is_zero()) return BivarPoly();
  size_t nx = c_.size() + o.c_.size() - 1;
  size_t ny = degree_y() + o.degree_y() + 1;
  std::vector<std::vector<mpz_class>> r(nx, std::vector<mpz_class>(ny, 0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j) {
      if (c_[i][j] == 0) continue;
      for (size_t k = 0; k < o.c_.size(); ++k)
        for (size_t l = 0; l < o.c_[k].size(); ++l)
          if (o.c_[k][l] != 0) r[i + k][j + l] += c_[i][j] * o.c_[k][l];
    }
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::scale(const mpz_class& a) const {
  auto r = c_;
  for (auto& row : r)
    for (auto& v : row) v *= a;
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::pow(unsigned k) const {
  BivarPoly r = constant(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

BivarPoly BivarPoly::dx() const {
  if (c_.size() <= 1) return BivarPoly();
  std::vector<std::vector<mpz_class>> r(c_.begin() + 1, c_.end());
  for (size_t i = 0; i < r.size(); ++i)
    for (auto& v : r[i]) v *= static_cast<unsigned long>(i + 1);
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::dy() const {
  auto r = c_;
  for (auto& row : r) {
    if (row.empty()) continue;
    for (size_t j = 1; j < row.size(); ++j) row[j - 1] = row[j] * static_cast<unsigned long>(j);
    row.pop_back();
  }
  return BivarPoly(std::move(r));
}

ZPoly BivarPoly::diagonal() const {
  std::vector<mpz_class> r(std::max(0, degree_x() + degree_y() + 1), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j) r[i + j] += c_[i][j];
  return ZPoly(NoCtx{}, std::move(r));
}

ZPoly BivarPoly::coeff_of_y(int j) const {
  std::vector<mpz_class> r;
  for (int i = 0; i <= degree_x(); ++i) r.push_back(coeff(i, j));
  return ZPoly(NoCtx{}, std::move(r));
}

ZPoly BivarPoly::coeff_of_x(int i) const {
  std::vector<mpz_class> r;
  for (int j = 0; j <= degree_y(); ++j) r.push_back(coeff(i, j));
  return ZPoly(NoCtx{}, std::move(r));
}

ZPoly BivarPoly::at_x(const mpz_class& x0) const {
  std::vector<mpz_class> r;
  for (int j = 0; j <= degree_y(); ++j) r.push_back(coeff_of_y(j).eval(x0));
  return ZPoly(NoCtx{}, std::move(r));
}

long double BivarPoly::eval_ld(long double x, long double y) const {
  return eval<long double>(x, y, 0.0L, [](const mpz_class& a) { return static_cast<long double>(a.get_d()); });
}

std::complex<long double> BivarPoly::eval_c(std::complex<long double> x, std::complex<long double> y) const {
  using C = std::complex<long double>;
  return eval<C>(x, y, C(0), [](const mpz_class& a) { return C(static_cast<long double>(a.get_d())); });
}

std::string BivarPoly::str() const {
  std::string s;
  for (int i = degree_x(); i >= 0; --i)
    for (int j = degree_y(); j >= 0; --j) {
      const mpz_class& a = c_[i][j];
      if (a == 0) continue;
      std::string mono;
      if (i > 0) mono += "x" + (i > 1 ? "^" + std::to_string(i) : std::string());
      if (j > 0) mono += (mono.empty() ? "" : "*") + std::string("y") + (j > 1 ? "^" + std::to_string(j) : std::string());
      mpz_class mag = abs(a);
      std::string term = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
      if (s.empty())
        s = (a < 0 ? "-" : "") + term;
      else
        s += (a < 0 ? " - " : " + ") + term;
    }
  return s.empty() ? "0" : s;
}

}  // namespace twistor::rings
