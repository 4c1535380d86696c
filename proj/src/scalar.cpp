#include "rtt/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <cstdlib>

namespace rtt {

namespace {

constexpr std::int64_t kModulusLimit = std::int64_t(1) << 31;

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_reduce(const Integer& v, std::int64_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

// extended Euclid; p prime, 0 < a < p
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return mod_reduce(old_s, p);
}

}  // namespace

std::string RingSpec::str() const {
  switch (kind) {
    case RingKind::RationalField: return "qq";
    case RingKind::IntegerRing: return "zz";
    case RingKind::PrimeField: return "fp:" + std::to_string(p);
  }
  return "?";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

RingSpec ring_parse(std::string_view text) {
  if (text == "qq") return RingSpec{RingKind::RationalField, 0};
  if (text == "zz") return RingSpec{RingKind::IntegerRing, 0};
  if (text.substr(0, 3) == "fp:") {
    std::string_view digits = text.substr(3);
    if (digits.empty()) fail(errc::unknown_ring, "missing fp modulus in '" + std::string(text) + "'");
    std::uint64_t m = 0;
    bool too_large = false;
    for (char c : digits) {
      if (c < '0' || c > '9')
        fail(errc::unknown_ring, "bad fp modulus in '" + std::string(text) + "'");
      m = m * 10 + std::uint64_t(c - '0');
      if (m >= std::uint64_t(kModulusLimit)) too_large = true;  // keep scanning for syntax
    }
    if (too_large) fail(errc::modulus_too_large, "fp modulus must be < 2^31");
    if (!is_prime(m)) fail(errc::not_prime, "fp modulus " + std::to_string(m) + " is not prime");
    return RingSpec{RingKind::PrimeField, std::int64_t(m)};
  }
  fail(errc::unknown_ring, "unknown ring '" + std::string(text) + "' (expected qq, zz or fp:<p>)");
}

Scalar Scalar::of(const RingSpec& ring, long long n) { return of(ring, Integer(n)); }

Scalar Scalar::of(const RingSpec& ring, const Integer& n) {
  switch (ring.kind) {
    case RingKind::RationalField: return Scalar(ring, Rational(n));
    case RingKind::IntegerRing: return Scalar(ring, n);
    case RingKind::PrimeField: return Scalar(ring, mod_reduce(n, ring.p));
  }
  fail(errc::bad_argument, "bad ring kind");
}

Scalar Scalar::fraction(const RingSpec& ring, const Integer& num, const Integer& den) {
  if (den == 0) fail(errc::division_by_zero, "zero denominator");
  switch (ring.kind) {
    case RingKind::RationalField: {
      // cpp_rational reduces by the gcd but insists on a positive denominator
      if (den < 0) return Scalar(ring, Rational(Integer(-num), Integer(-den)));
      return Scalar(ring, Rational(num, den));
    }
    case RingKind::IntegerRing: {
      if (num % den != 0)
        fail(errc::not_invertible, num.str() + "/" + den.str() + " is not an integer");
      return Scalar(ring, Integer(num / den));
    }
    case RingKind::PrimeField: {
      std::int64_t d = mod_reduce(den, ring.p);
      if (d == 0)
        fail(errc::not_invertible, "denominator " + den.str() + " vanishes mod " + std::to_string(ring.p));
      std::int64_t n = mod_reduce(num, ring.p);
      return Scalar(ring, mod_reduce(n * mod_inverse(d, ring.p), ring.p));
    }
  }
  fail(errc::bad_argument, "bad ring kind");
}

bool Scalar::is_zero() const {
  switch (ring_.kind) {
    case RingKind::RationalField: return std::get<Rational>(v_) == 0;
    case RingKind::IntegerRing: return std::get<Integer>(v_) == 0;
    case RingKind::PrimeField: return std::get<std::int64_t>(v_) == 0;
  }
  return false;
}

bool Scalar::is_negative() const {
  switch (ring_.kind) {
    case RingKind::RationalField: return std::get<Rational>(v_) < 0;
    case RingKind::IntegerRing: return std::get<Integer>(v_) < 0;
    case RingKind::PrimeField: return false;
  }
  return false;
}

void Scalar::check_same_ring(const Scalar& rhs) const {
  if (ring_ != rhs.ring_)
    fail(errc::ring_mismatch, "scalar rings differ: " + ring_.str() + " vs " + rhs.ring_.str());
}

Scalar Scalar::operator-() const {
  switch (ring_.kind) {
    case RingKind::RationalField: return Scalar(ring_, Rational(-std::get<Rational>(v_)));
    case RingKind::IntegerRing: return Scalar(ring_, Integer(-std::get<Integer>(v_)));
    case RingKind::PrimeField: {
      std::int64_t r = std::get<std::int64_t>(v_);
      return Scalar(ring_, r == 0 ? 0 : ring_.p - r);
    }
  }
  fail(errc::bad_argument, "bad ring kind");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_ring(rhs);
  switch (ring_.kind) {
    case RingKind::RationalField: std::get<Rational>(v_) += std::get<Rational>(rhs.v_); break;
    case RingKind::IntegerRing: std::get<Integer>(v_) += std::get<Integer>(rhs.v_); break;
    case RingKind::PrimeField: {
      std::int64_t r = std::get<std::int64_t>(v_) + std::get<std::int64_t>(rhs.v_);
      std::get<std::int64_t>(v_) = r >= ring_.p ? r - ring_.p : r;
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_ring(rhs);
  switch (ring_.kind) {
    case RingKind::RationalField: std::get<Rational>(v_) -= std::get<Rational>(rhs.v_); break;
    case RingKind::IntegerRing: std::get<Integer>(v_) -= std::get<Integer>(rhs.v_); break;
    case RingKind::PrimeField: {
      std::int64_t r = std::get<std::int64_t>(v_) - std::get<std::int64_t>(rhs.v_);
      std::get<std::int64_t>(v_) = r < 0 ? r + ring_.p : r;
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_ring(rhs);
  switch (ring_.kind) {
    case RingKind::RationalField: std::get<Rational>(v_) *= std::get<Rational>(rhs.v_); break;
    case RingKind::IntegerRing: std::get<Integer>(v_) *= std::get<Integer>(rhs.v_); break;
    case RingKind::PrimeField:
      // p < 2^31, so the product of two residues fits in int64
      std::get<std::int64_t>(v_) = (std::get<std::int64_t>(v_) * std::get<std::int64_t>(rhs.v_)) % ring_.p;
      break;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
  switch (ring_.kind) {
    case RingKind::RationalField: {
      const Rational& q = std::get<Rational>(v_);
      if (numerator(q) < 0) return Scalar(ring_, Rational(Integer(-denominator(q)), Integer(-numerator(q))));
      return Scalar(ring_, Rational(denominator(q), numerator(q)));
    }
    case RingKind::IntegerRing: {
      const Integer& z = std::get<Integer>(v_);
      if (z != 1 && z != -1)
        fail(errc::not_invertible, z.str() + " is not a unit of zz");
      return *this;
    }
    case RingKind::PrimeField:
      return Scalar(ring_, mod_inverse(std::get<std::int64_t>(v_), ring_.p));
  }
  fail(errc::bad_argument, "bad ring kind");
}

Scalar Scalar::div_exact(const Scalar& rhs) const {
  check_same_ring(rhs);
  if (rhs.is_zero()) fail(errc::division_by_zero, "division by zero");
  if (ring_.kind == RingKind::IntegerRing) {
    const Integer& a = std::get<Integer>(v_);
    const Integer& b = std::get<Integer>(rhs.v_);
    if (a % b != 0) fail(errc::not_invertible, "inexact integer division");
    return Scalar(ring_, Integer(a / b));
  }
  return *this * rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (ring_ != rhs.ring_) return false;
  return v_ == rhs.v_;
}

std::string Scalar::str() const {
  switch (ring_.kind) {
    case RingKind::RationalField: {
      const Rational& q = std::get<Rational>(v_);
      if (denominator(q) == 1) return numerator(q).str();
      return numerator(q).str() + "/" + denominator(q).str();
    }
    case RingKind::IntegerRing: return std::get<Integer>(v_).str();
    case RingKind::PrimeField: return std::to_string(std::get<std::int64_t>(v_));
  }
  return "?";
}

Rational Scalar::as_rational() const {
  switch (ring_.kind) {
    case RingKind::RationalField: return std::get<Rational>(v_);
    case RingKind::IntegerRing: return Rational(std::get<Integer>(v_));
    case RingKind::PrimeField: return Rational(std::get<std::int64_t>(v_));
  }
  fail(errc::bad_argument, "bad ring kind");
}

Integer Scalar::as_integer() const {
  switch (ring_.kind) {
    case RingKind::RationalField: {
      const Rational& q = std::get<Rational>(v_);
      if (denominator(q) != 1) fail(errc::bad_argument, "non-integral rational " + str());
      return numerator(q);
    }
    case RingKind::IntegerRing: return std::get<Integer>(v_);
    case RingKind::PrimeField: return Integer(std::get<std::int64_t>(v_));
  }
  fail(errc::bad_argument, "bad ring kind");
}

}  // namespace rtt
