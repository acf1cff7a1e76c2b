#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopf {

// Raised when user-supplied data (files, CLI arguments, scalar strings) is
// malformed.  Distinct from logic_error so the CLI can map it to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldKind { rational, prime };

// Ground field descriptor: the rationals, or Z/p for a prime p < 2^31.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return {FieldKind::rational, 0}; }
  static FieldSpec prime(std::uint64_t p);

  bool operator==(const FieldSpec&) const = default;
  std::string name() const;  // "Q" or "F<p>"
};

// Immutable exact scalar over a FieldSpec.  Rational values are kept
// canonicalized (reduced, positive denominator); prime-field values are kept
// in [0, p).
class Scalar {
 public:
  Scalar() = default;  // 0 over Q
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(long v, const FieldSpec& f);
  // Accepts "a" or "a/b" with optional leading '-'; digits only otherwise.
  // Over F_p, "a/b" means a * b^-1.  Throws input_error on malformed text,
  // zero denominator, or b not invertible.
  static Scalar parse(const std::string& text, const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::string str() const;  // canonical text; parse(str()) == *this

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on 0
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  FieldSpec field_ = FieldSpec::rationals();
  mpq_class q_ = 0;       // used when kind == rational
  std::uint64_t r_ = 0;   // used when kind == prime

  void check_same_field(const Scalar& o) const;
};

// Deterministic primality for the FieldSpec range (trial division).
bool is_prime_u64(std::uint64_t n);

// base^e for e >= 0.
Scalar scalar_pow(const Scalar& base, long e);

}  // namespace hopf
