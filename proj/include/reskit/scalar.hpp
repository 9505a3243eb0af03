#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "reskit/field.hpp"

namespace reskit {

// Exact field element.  Rational values live in an mpq_class; prime-field
// values are residues in [0, p) held in an int64 (p < 2^31, so products fit).
// All arithmetic checks field agreement — mixing fields is a precondition
// violation, never a silent coercion.
class Scalar {
public:
  Scalar() : field_(Field::rationals()), rat_(0), res_(0) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long v);
  static Scalar from_mpz(const Field& f, const mpz_class& v);
  // Rational value; field is Q.
  static Scalar from_mpq(const mpq_class& q);
  // Parses "n" or "n/d".  Over F_p only integer literals are accepted.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Rational payload (field must be Q).
  const mpq_class& rat() const;
  // Residue in [0, p) (field must be prime).
  int64_t res() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  explicit Scalar(const Field& f) : field_(f), rat_(0), res_(0) {}
  void check_same(const Scalar& o) const;

  Field field_;
  mpq_class rat_;
  int64_t res_;
};

// Reduction Q -> F_p.  Fails if the denominator is divisible by p.
Scalar reduce_mod(const Scalar& q, const Field& fp);

// Multiplicative inverse of a mod m for gcd(a, m) = 1 (m need not be prime;
// used by the p-adic lifting code with m = p^k).
int64_t inv_mod_i64(int64_t a, int64_t m);

// "n" or "n/d" -> canonical mpq_class; rejects junk and zero denominators.
mpq_class parse_mpq(const std::string& text);

}  // namespace reskit
