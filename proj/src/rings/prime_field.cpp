#include "twistor/rings/prime_field.hpp"

namespace twistor::rings {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(u64 p) {
  if (p == 2) fail(ErrorKind::EvenCharacteristic, "p = 2 is excluded");
  if (!is_prime(p)) fail(ErrorKind::CompositeModulus, std::to_string(p) + " is not prime");
  if (p >= (u64(1) << 31)) fail(ErrorKind::InvalidArgument, "p must be below 2^31");
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  a %= p;
  if (a == 0) fail(ErrorKind::InexactDivision, "inverse of 0 mod " + std::to_string(p));
  return powmod(a, p - 2, p);
}

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (legendre(a, p) != 1) return std::nullopt;
  u64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = least_nonresidue(p);
  u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r < p - r ? r : p - r;
}

u64 least_nonresidue(u64 p) {
  for (u64 d = 2; d < p; ++d)
    if (legendre(d, p) == -1) return d;
  fail(ErrorKind::InvalidArgument, "no nonresidue mod " + std::to_string(p));
}

u64 reduce_signed(long long a, u64 p) {
  long long m = a % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return static_cast<u64>(m);
}

long long signed_residue(u64 a, u64 p) {
  a %= p;
  return a > p / 2 ? static_cast<long long>(a) - static_cast<long long>(p) : static_cast<long long>(a);
}

Fp Fp::inverse() const { return raw(invmod(v_, p_)); }

void Fp2::check(const Fp2& o) const {
  if (!(c_ == o.c_)) fail(ErrorKind::RingMismatch, "F_{p^2} contexts differ");
}

Fp2 Fp2::operator+(const Fp2& o) const {
  check(o);
  return Fp2((a_ + o.a_) % c_.p, (b_ + o.b_) % c_.p, c_);
}

Fp2 Fp2::operator-(const Fp2& o) const {
  check(o);
  return Fp2((a_ + c_.p - o.a_) % c_.p, (b_ + c_.p - o.b_) % c_.p, c_);
}

Fp2 Fp2::operator-() const { return Fp2((c_.p - a_) % c_.p, (c_.p - b_) % c_.p, c_); }

Fp2 Fp2::operator*(const Fp2& o) const {
  check(o);
  u64 p = c_.p;
  u64 re = (mulmod(a_, o.a_, p) + mulmod(mulmod(b_, o.b_, p), c_.d, p)) % p;
  u64 im = (mulmod(a_, o.b_, p) + mulmod(b_, o.a_, p)) % p;
  return Fp2(re, im, c_);
}

Fp2 Fp2::inverse() const {
  u64 p = c_.p;
  // (a + bt)(a - bt) = a^2 - d b^2
  u64 norm = (mulmod(a_, a_, p) + p - mulmod(mulmod(b_, b_, p), c_.d, p)) % p;
  u64 ni = invmod(norm, p);
  return Fp2(mulmod(a_, ni, p), mulmod((p - b_) % p, ni, p), c_);
}

std::string Fp2::str() const {
  if (b_ == 0) return std::to_string(a_);
  return std::to_string(a_) + "+" + std::to_string(b_) + "*t";
}

Fp2 sqrt_in_fp2(const Fp& a, Fp2Ctx c) {
  if (auto r = sqrt_mod(a.value(), c.p)) return Fp2(*r, 0, c);
  // a = d * s^2 with s in F_p, so sqrt(a) = s*t.
  Fp s2 = a * Fp(c.d, c.p).inverse();
  auto s = sqrt_mod(s2.value(), c.p);
  if (!s) fail(ErrorKind::NotASquare, "no square root in F_{p^2}");
  return Fp2(0, *s, c);
}

}  // namespace twistor::rings
