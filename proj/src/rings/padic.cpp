#include "twistor/rings/padic.hpp"

#include <sstream>

namespace twistor::rings {

namespace {

int vp(const mpz_class& a, u64 p) {
  if (a == 0) return Padic::kInfinity;
  mpz_class t = a, pp = static_cast<unsigned long>(p);
  return static_cast<int>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t()));
}

mpz_class pow_p(u64 p, int k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

PadicRing::PadicRing(u64 p, int e, int M) : p_(p), e_(e), M_(M) {
  for (int i = 0; i < e; ++i) mod_.push_back(pow_p(p, (M - i + e - 1) / e));
}

std::shared_ptr<const PadicRing> PadicRing::make(u64 p, int e, int M) {
  require_odd_prime(p);
  if (e < 1 || e > 3) fail(ErrorKind::InvalidArgument, "ramification index must be 1, 2 or 3");
  if (M < 4) fail(ErrorKind::InvalidArgument, "precision must be at least 4 pi-digits");
  return std::make_shared<const PadicRing>(p, e, M);
}

std::string PadicRing::describe() const {
  std::ostringstream os;
  os << "Z_" << p_;
  if (e_ > 1) os << "[pi], pi^" << e_ << "=" << p_;
  os << " mod pi^" << M_;
  return os.str();
}

Padic::Padic(PadicCtx R) : R_(std::move(R)) {}

Padic::Padic(PadicCtx R, const mpz_class& n) : R_(std::move(R)) {
  a_[0] = n;
  normalize();
}

Padic Padic::from_rational(PadicCtx R, const mpz_class& num, const mpz_class& den) {
  Padic d(R, den);
  if (!d.is_unit()) fail(ErrorKind::InexactDivision, "denominator divisible by p");
  return Padic(R, num) * d.inverse();
}

Padic Padic::pi(PadicCtx R) {
  if (R->e() == 1) return Padic(R, mpz_class(static_cast<unsigned long>(R->p())));
  Padic r(R);
  r.a_[1] = 1;
  return r;
}

Padic Padic::pi_power(PadicCtx R, int k) {
  Padic r(R);
  if (k >= R->precision()) return r;
  r.a_[k % R->e()] = pow_p(R->p(), k / R->e());
  r.normalize();
  return r;
}

Padic Padic::from_components(PadicCtx R, const std::vector<mpz_class>& comps) {
  Padic r(R);
  for (int i = 0; i < R->e() && i < static_cast<int>(comps.size()); ++i) r.a_[i] = comps[i];
  r.normalize();
  return r;
}

Padic Padic::from_digits(PadicCtx R, const std::vector<u64>& digits) {
  Padic r(R);
  int e = R->e();
  for (int k = static_cast<int>(digits.size()) - 1; k >= 0; --k) {
    if (k >= R->precision()) continue;
    r.a_[k % e] += pow_p(R->p(), k / e) * static_cast<unsigned long>(digits[k]);
  }
  r.normalize();
  return r;
}

void Padic::normalize() {
  for (int i = 0; i < R_->e(); ++i) {
    mpz_fdiv_r(a_[i].get_mpz_t(), a_[i].get_mpz_t(), R_->modulus(i).get_mpz_t());
  }
}

void Padic::check(const Padic& o) const {
  if (!R_ || !o.R_) fail(ErrorKind::RingMismatch, "uninitialised p-adic element");
  if (R_ != o.R_ && !R_->same_as(*o.R_))
    fail(ErrorKind::RingMismatch, R_->describe() + " vs " + o.R_->describe());
}

bool Padic::is_zero() const {
  for (int i = 0; i < R_->e(); ++i)
    if (a_[i] != 0) return false;
  return true;
}

int Padic::valuation() const {
  int v = kInfinity;
  for (int i = 0; i < R_->e(); ++i) {
    int w = vp(a_[i], R_->p());
    if (w != kInfinity) v = std::min(v, R_->e() * w + i);
  }
  return v;
}

bool Padic::is_unit() const { return residue() != 0; }

u64 Padic::residue() const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a_[0].get_mpz_t(), static_cast<unsigned long>(R_->p()));
  return r.get_ui();
}

std::vector<u64> Padic::digits() const {
  int e = R_->e(), M = R_->precision();
  std::vector<u64> d(M, 0);
  for (int i = 0; i < e; ++i) {
    mpz_class c = a_[i];
    for (int j = 0; j * e + i < M; ++j) {
      mpz_class r;
      mpz_fdiv_qr_ui(c.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(R_->p()));
      d[j * e + i] = r.get_ui();
    }
  }
  return d;
}

Padic Padic::operator+(const Padic& o) const {
  check(o);
  Padic r(R_);
  for (int i = 0; i < R_->e(); ++i) r.a_[i] = a_[i] + o.a_[i];
  r.normalize();
  return r;
}

Padic Padic::operator-(const Padic& o) const {
  check(o);
  Padic r(R_);
  for (int i = 0; i < R_->e(); ++i) r.a_[i] = a_[i] - o.a_[i];
  r.normalize();
  return r;
}

Padic Padic::operator-() const {
  Padic r(R_);
  for (int i = 0; i < R_->e(); ++i) r.a_[i] = -a_[i];
  r.normalize();
  return r;
}

Padic Padic::operator*(const Padic& o) const {
  check(o);
  int e = R_->e();
  Padic r(R_);
  mpz_class p = static_cast<unsigned long>(R_->p());
  for (int i = 0; i < e; ++i) {
    if (a_[i] == 0) continue;
    for (int j = 0; j < e; ++j) {
      if (o.a_[j] == 0) continue;
      int k = i + j;
      if (k < e)
        r.a_[k] += a_[i] * o.a_[j];
      else
        r.a_[k - e] += p * a_[i] * o.a_[j];
    }
  }
  r.normalize();
  return r;
}

Padic Padic::inverse() const {
  if (!is_unit()) fail(ErrorKind::NonUnitConstantTerm, "inverse of a non-unit " + str());
  u64 p = R_->p();
  Padic x(R_, mpz_class(static_cast<unsigned long>(invmod(residue(), p))));
  Padic two(R_, mpz_class(2));
  for (int prec = 1; prec < R_->precision(); prec *= 2) x = x * (two - *this * x);
  return x;
}

Padic Padic::pow(unsigned k) const {
  Padic r(R_, mpz_class(1)), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Padic Padic::shift_down(int k) const {
  if (k == 0) return *this;
  if (valuation() < k) fail(ErrorKind::InexactDivision, "division by pi^" + std::to_string(k));
  Padic r = *this;
  int e = R_->e();
  for (int s = 0; s < k; ++s) {
    mpz_class low = r.a_[0];
    for (int i = 0; i + 1 < e; ++i) r.a_[i] = r.a_[i + 1];
    mpz_divexact_ui(low.get_mpz_t(), low.get_mpz_t(), static_cast<unsigned long>(R_->p()));
    r.a_[e - 1] = low;
  }
  r.normalize();
  return r;
}

Padic Padic::mul_pi_power(int k) const { return *this * pi_power(R_, k); }

bool Padic::congruent(const Padic& o, int k) const { return (*this - o).valuation() >= k; }

bool Padic::operator==(const Padic& o) const {
  check(o);
  for (int i = 0; i < R_->e(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

std::string Padic::str() const {
  std::string out;
  for (int i = 0; i < R_->e(); ++i) {
    mpz_class c = a_[i];
    if (c == 0) continue;
    if (2 * c > R_->modulus(i)) c -= R_->modulus(i);
    std::string term;
    bool neg = c < 0;
    mpz_class mag = neg ? mpz_class(-c) : c;
    if (i == 0)
      term = mag.get_str();
    else
      term = (mag == 1 ? std::string() : mag.get_str() + "*") + (i == 1 ? "pi" : "pi^" + std::to_string(i));
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string Padic::digits_str() const {
  std::string s = "digits:[";
  auto d = digits();
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

bool canonical_less(const Padic& a, const Padic& b) { return a.digits() < b.digits(); }

Padic padic_sqrt(const Padic& a) {
  const auto& R = a.ring();
  if (a.is_zero()) return a;
  int v = a.valuation();
  if (v % 2 != 0) fail(ErrorKind::NotASquare, "odd valuation " + std::to_string(v));
  Padic u = a.shift_down(v);
  auto r0 = sqrt_mod(u.residue(), R->p());
  if (!r0) fail(ErrorKind::NotASquare, "residue is a nonresidue mod " + std::to_string(R->p()));
  Padic x(R, mpz_class(static_cast<unsigned long>(*r0)));
  Padic half = Padic(R, mpz_class(2)).inverse();
  for (int prec = 1; prec < R->precision(); prec *= 2) x = half * (x + u * x.inverse());
  Padic root = x.mul_pi_power(v / 2);
  Padic other = -root;
  return canonical_less(other, root) ? other : root;
}

}  // namespace twistor::rings
