#include "reskit/field.hpp"

namespace reskit {

bool is_odd_prime(uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(uint32_t p) {
  if (p == 2) fail_pre("field F_2 is not supported (characteristic 2)");
  if (!is_odd_prime(p))
    fail_pre("field modulus " + std::to_string(p) + " is not an odd prime");
  return Field(Kind::prime, p);
}

Field Field::parse(const std::string& tag) {
  if (tag == "Q") return rationals();
  if (tag.rfind("Fp:", 0) == 0) {
    const std::string body = tag.substr(3);
    if (body.empty() || body.size() > 10 ||
        body.find_first_not_of("0123456789") != std::string::npos)
      fail_input("bad field tag '" + tag + "'");
    unsigned long long v = std::stoull(body);
    if (v < 3 || v >= (1ull << 31)) fail_input("field modulus out of range in '" + tag + "'");
    if (!is_odd_prime(static_cast<uint32_t>(v)))
      fail_input("field modulus " + body + " is not an odd prime");
    return Field(Kind::prime, static_cast<uint32_t>(v));
  }
  fail_input("unknown field tag '" + tag + "' (expected \"Q\" or \"Fp:<p>\")");
}

uint32_t Field::p() const {
  if (!is_prime()) fail_pre("rational field has no modulus");
  return p_;
}

std::string Field::tag() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

}  // namespace reskit
