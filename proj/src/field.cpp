#include "hopf/field.hpp"

#include <cctype>
#include <utility>

namespace hopf {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31) || !is_prime_u64(p))
    throw input_error("field characteristic must be a prime below 2^31, got " +
                      std::to_string(p));
  return {FieldKind::prime, p};
}

std::string FieldSpec::name() const {
  return kind == FieldKind::rational ? "Q" : "F" + std::to_string(p);
}

namespace {

// Extended Euclid inverse of a mod p; a in [0,p), p prime.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t mod_from_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

// Strict integer-literal check: optional '-', then one or more digits.
bool is_int_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(1, f); }

Scalar Scalar::from_int(long v, const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::rational) {
    s.q_ = v;
  } else {
    std::int64_t m = v % static_cast<std::int64_t>(f.p);
    if (m < 0) m += static_cast<std::int64_t>(f.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.find('/') != std::string::npos || !is_int_literal(den))
      throw input_error("malformed scalar '" + text + "'");
  }
  if (!is_int_literal(num))
    throw input_error("malformed scalar '" + text + "'");

  mpz_class n(num), d(den);
  if (d == 0) throw input_error("zero denominator in scalar '" + text + "'");

  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::rational) {
    s.q_ = mpq_class(n) / mpq_class(d);
    s.q_.canonicalize();
  } else {
    std::uint64_t nn = mod_from_mpz(n, f.p), dd = mod_from_mpz(d, f.p);
    if (dd == 0)
      throw input_error("denominator of '" + text + "' is 0 in " + f.name());
    s.r_ = (nn * mod_inverse(dd, f.p)) % f.p;
  }
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::rational ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::rational ? q_ == 1 : r_ == 1;
}

std::string Scalar::str() const {
  if (field_.kind == FieldKind::rational) return q_.get_str();
  return std::to_string(r_);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw std::logic_error("scalar arithmetic across different fields (" +
                           field_.name() + " vs " + o.field_.name() + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::rational) {
    s.q_ = q_ + o.q_;
  } else {
    s.r_ = (r_ + o.r_) % field_.p;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::rational) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = (r_ * o.r_) % field_.p;  // p < 2^31, so the product fits in 64 bits
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::rational) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::rational) {
    if (q_ == 0) throw std::domain_error("division by zero in Q");
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inverse(r_, field_.p);
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.kind == FieldKind::rational ? q_ == o.q_ : r_ == o.r_;
}

Scalar scalar_pow(const Scalar& base, long e) {
  if (e < 0) throw std::logic_error("scalar_pow: negative exponent");
  Scalar acc = Scalar::one(base.field());
  for (long k = 0; k < e; ++k) acc = acc * base;
  return acc;
}

}  // namespace hopf
