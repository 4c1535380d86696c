#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "rtt/error.hpp"

namespace rtt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class RingKind { RationalField, IntegerRing, PrimeField };

/// Runtime description of the coefficient ring. One binary handles all
/// three rings, so this is a value, not a template parameter.
struct RingSpec {
  RingKind kind{RingKind::RationalField};
  std::int64_t p{0};  // modulus, PrimeField only

  bool is_field() const { return kind != RingKind::IntegerRing; }
  std::string str() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Parses "qq" | "zz" | "fp:<m>". The fp modulus is primality-tested and
/// must fit below 2^31.
RingSpec ring_parse(std::string_view text);

bool is_prime(std::uint64_t n);

/// Exact element of a RingSpec ring. Rationals are kept in lowest terms
/// with positive denominator, prime-field residues in [0, p).
class Scalar {
 public:
  Scalar() : ring_{RingKind::IntegerRing, 0}, v_(Integer(0)) {}

  static Scalar zero(const RingSpec& ring) { return of(ring, 0); }
  static Scalar one(const RingSpec& ring) { return of(ring, 1); }
  static Scalar of(const RingSpec& ring, long long n);
  static Scalar of(const RingSpec& ring, const Integer& n);
  /// num/den in the given ring; in zz the quotient must be exact, in fp
  /// the denominator must be invertible.
  static Scalar fraction(const RingSpec& ring, const Integer& num, const Integer& den);

  const RingSpec& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const { return *this == one(ring_); }
  /// Sign in the ordered representation; always false for prime fields,
  /// whose residues print as 0..p-1.
  bool is_negative() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  Scalar inverse() const;
  /// Exact division; over zz requires the quotient to stay integral.
  Scalar div_exact(const Scalar& rhs) const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  /// Exact literal: "7", "-2", "3/4". Parseable back by the tensor grammar.
  std::string str() const;

  /// Value as a rational number (residues are returned as their
  /// representative in [0, p)); used for cross-ring base change.
  Rational as_rational() const;
  /// Integer value; throws bad_argument for non-integral rationals.
  Integer as_integer() const;

 private:
  Scalar(const RingSpec& ring, std::variant<Rational, Integer, std::int64_t> v)
      : ring_(ring), v_(std::move(v)) {}
  void check_same_ring(const Scalar& rhs) const;

  RingSpec ring_;
  std::variant<Rational, Integer, std::int64_t> v_;
};

inline Scalar scalar_inverse(const Scalar& a) { return a.inverse(); }

}  // namespace rtt
