#pragma once

#include <cstdint>
#include <string>

#include "reskit/error.hpp"

namespace reskit {

// Ground field of a computation: the rationals Q (exact, models the
// characteristic-zero theory) or a prime field F_p with 2 < p < 2^31.
// Characteristic 2 is rejected once and for all here: Gram matrices halve
// off-diagonal coefficients and the skew/Pfaffian sign conventions assume
// -1 != 1.  Values of different fields never mix.
class Field {
public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  static Field prime(uint32_t p);

  // Accepts the wire tags "Q" and "Fp:<p>".
  static Field parse(const std::string& tag);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rationals; }
  bool is_prime() const { return kind_ == Kind::prime; }

  // Prime fields only.
  uint32_t p() const;

  // 0 for Q, p for F_p.
  uint32_t characteristic() const { return p_; }

  std::string tag() const;

  bool operator==(const Field&) const = default;

private:
  Field(Kind k, uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  uint32_t p_;
};

// Deterministic trial-division primality check, adequate for p < 2^31.
bool is_odd_prime(uint32_t p);

}  // namespace reskit
