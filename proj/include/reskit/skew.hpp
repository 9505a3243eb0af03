#pragma once

#include "reskit/poly.hpp"
#include "reskit/wedge.hpp"

namespace reskit {

// Skew-symmetric n x n matrix of homogeneous linear forms over k[x_0..x_{m-1}].
// Only the strict upper triangle is stored (lex pair order); the diagonal is
// identically zero and entry(j,i) = -entry(i,j) by construction, so
// skew-symmetry cannot be violated by any input.
class SkewLinearMatrix {
public:
  SkewLinearMatrix(RingPtr ring, size_t n);

  size_t n() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  const WedgeBasis& wedge_basis() const { return wb_; }

  void set_upper(size_t i, size_t j, LinearForm f);  // requires i < j
  const LinearForm& upper(size_t i, size_t j) const;  // requires i < j
  LinearForm entry(size_t i, size_t j) const;         // signed, any i, j

  bool operator==(const SkewLinearMatrix& o) const;

private:
  RingPtr ring_;
  size_t n_;
  WedgeBasis wb_;
  std::vector<LinearForm> upper_;
};

// Pfaffian of an even-sized matrix, by expansion along the first active row:
//   Pf = sum_t (-1)^{t-1} M[i0][i_t] Pf(M with i0, i_t removed),
// memoized on index subsets.  For n = 4 this is the normal form
// a01 a23 - a02 a13 + a03 a12 (0-based), and Pf^2 = det throughout.
MultiPoly pfaffian(const SkewLinearMatrix& a);

// Odd n: the n principal Pfaffians Pf_k = (-1)^k Pf(A with row/col k removed)
// for 0-based k (equivalently (-1)^{k+1} in 1-based labeling), the signed
// sequence that satisfies A * (Pf_0, ..., Pf_{n-1})^T = 0.
std::vector<MultiPoly> principal_pfaffians(const SkewLinearMatrix& a);

// The n = 5 principal Pfaffians as quadratic forms.
std::vector<QuadraticForm> principal_pfaffian_quadrics(const SkewLinearMatrix& a);

// U A U^T for a square scalar matrix U over the same field.  Satisfies
// Pf(U A U^T) = det(U) Pf(A) for even n.
SkewLinearMatrix base_change(const SkewLinearMatrix& a, const DenseMatrix& u);

// Evaluate all entries at a point of the coefficient space.
DenseMatrix evaluate_at(const SkewLinearMatrix& a, const VecS& point);

// Pfaffian of a scalar skew-symmetric matrix (validated), same convention.
Scalar pfaffian_scalar(const DenseMatrix& m);

// Entrywise reduction to a prime field (coefficient ring maps x_i -> x_i).
SkewLinearMatrix reduce_mod(const SkewLinearMatrix& a, const Field& fp);

}  // namespace reskit
