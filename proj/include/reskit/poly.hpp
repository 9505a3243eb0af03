#pragma once

#include <map>
#include <optional>

#include "reskit/matrix.hpp"
#include "reskit/ring.hpp"

namespace reskit {

// Sparse multivariate polynomial: monomial -> nonzero coefficient, keyed in
// grevlex order.  Value semantics; all binary operations require identical
// rings.
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  static MultiPoly constant(RingPtr ring, const Scalar& c);
  static MultiPoly variable(RingPtr ring, size_t i);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Scalar, GrevlexLess>& terms() const { return terms_; }

  // Adds c * m, erasing the entry if the sum cancels.
  void add_term(const Monomial& m, const Scalar& c);
  Scalar coeff(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Scalar& c) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous polynomial (precondition otherwise).
  uint32_t homogeneous_degree() const;

  Scalar evaluate(const VecS& point) const;

  // Leading term under the given order.
  std::pair<Monomial, Scalar> leading(const TermOrder& ord) const;

private:
  void check_ring(const MultiPoly& o) const;
  RingPtr ring_;
  std::map<Monomial, Scalar, GrevlexLess> terms_;
};

// Substitution x_i -> images[i]; images live in (and determine) the target
// ring.  Exact, no degree restriction.
MultiPoly poly_substitute(const MultiPoly& p, const RingPtr& target,
                          const std::vector<MultiPoly>& images);

MultiPoly poly_reduce_mod(const MultiPoly& p, const RingPtr& target_fp);

// Homogeneous linear form sum c_i x_i, stored as its coefficient vector.
class LinearForm {
public:
  LinearForm() = default;
  LinearForm(RingPtr ring, VecS coeffs);
  static LinearForm zero(RingPtr ring);
  static LinearForm variable(RingPtr ring, size_t i);
  static LinearForm from_poly(const MultiPoly& p);

  const RingPtr& ring() const { return ring_; }
  const VecS& coeffs() const { return c_; }
  const Scalar& coeff(size_t i) const { return c_[i]; }
  bool is_zero() const { return vec_is_zero(c_); }

  LinearForm operator-() const;
  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator*(const Scalar& c) const;
  bool operator==(const LinearForm& o) const;

  MultiPoly to_poly() const;
  Scalar evaluate(const VecS& point) const;

private:
  RingPtr ring_;
  VecS c_;
};

// Homogeneous quadratic form (or zero).  The Gram matrix follows the
// convention q(x) = x^T G x with G symmetric: G[i][i] = coeff(x_i^2),
// G[i][j] = coeff(x_i x_j) / 2 for i != j (hence the char != 2 requirement).
class QuadraticForm {
public:
  explicit QuadraticForm(RingPtr ring) : p_(std::move(ring)) {}
  static QuadraticForm from_poly(const MultiPoly& p);
  static QuadraticForm from_gram(const RingPtr& ring, const DenseMatrix& g);

  const RingPtr& ring() const { return p_.ring(); }
  const MultiPoly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  DenseMatrix gram() const;
  size_t rank() const;  // rank of the Gram matrix

  bool operator==(const QuadraticForm& o) const { return p_ == o.p_; }

private:
  MultiPoly p_;
};

// Text round-trip.  Printing uses descending lexicographic term order
// ("x0*x4 - x1*x3 + x2^2"); parsing accepts sums/differences of
// '*'-separated factors `var`, `var^k`, or numeric literals (n or n/d).
std::string poly_to_string(const MultiPoly& p);
MultiPoly poly_parse(const RingPtr& ring, const std::string& text);

}  // namespace reskit
