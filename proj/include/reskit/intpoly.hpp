#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace reskit {

// Univariate polynomial in Z[t], used for Hilbert numerators and Betti-table
// alternating sums.  Coefficients are exact big integers.
class IntPoly {
public:
  IntPoly() = default;
  static IntPoly one();
  static IntPoly monomial(uint32_t deg, const mpz_class& coeff = 1);
  static IntPoly from_terms(const std::vector<std::pair<uint32_t, mpz_class>>& terms);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  // Coefficients 0..upto of this / (1-t)^nvars as a power series; the Hilbert
  // function values when `this` is a Hilbert numerator over nvars variables.
  std::vector<mpz_class> series_prefix(uint32_t nvars, uint32_t upto) const;

  // Ascending exponents, juxtaposed coefficients: "1 - 5t^2 + 5t^3 - t^5".
  std::string to_string() const;

private:
  void trim();
  std::vector<mpz_class> c_;  // c_[k] multiplies t^k
};

}  // namespace reskit
