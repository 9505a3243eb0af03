#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "reskit/scalar.hpp"

namespace reskit {

// A named polynomial ring k[x_0, ..., x_{n-1}].  Rings are immutable and
// shared; two rings are interchangeable iff field and variable lists agree.
struct Ring {
  Field field;
  std::vector<std::string> vars;

  size_t nvars() const { return vars.size(); }
  bool operator==(const Ring& o) const { return field == o.field && vars == o.vars; }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(const Field& f, std::vector<std::string> vars);

// Convenience: x0..x{n-1} (or a custom stem).
RingPtr make_ring(const Field& f, size_t n, const std::string& stem = "x");

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Exponent vector with cached total degree.  All monomials of a given ring
// have the same length; comparators assume that.
class Monomial {
public:
  Monomial() : deg_(0) {}
  explicit Monomial(size_t nvars) : e_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<uint32_t> e);
  static Monomial var(size_t nvars, size_t i, uint32_t k = 1);

  size_t nvars() const { return e_.size(); }
  uint32_t deg() const { return deg_; }
  uint32_t exp(size_t i) const { return e_[i]; }
  const std::vector<uint32_t>& exps() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial div(const Monomial& o) const;  // *this / o, requires o | *this

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
  std::vector<uint32_t> e_;
  uint32_t deg_;
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
// Index of the unique variable when the monomial is a pure power, else -1.
int pure_power_var(const Monomial& m);

// Monomial orders.  Internal storage is always grevlex; lex exists for the
// term-order parameter of Groebner routines and for printing (descending lex).
struct TermOrder {
  enum class Kind { grevlex, lex };
  Kind kind = Kind::grevlex;

  static TermOrder grevlex() { return TermOrder{Kind::grevlex}; }
  static TermOrder lex() { return TermOrder{Kind::lex}; }
};

// negative / 0 / positive as a < b / a == b / a > b under the order.
int mono_cmp(const Monomial& a, const Monomial& b, const TermOrder& ord);

bool grevlex_less(const Monomial& a, const Monomial& b);
bool lex_less(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_less(a, b);
  }
};

std::string mono_to_string(const Monomial& m, const Ring& ring);

}  // namespace reskit
