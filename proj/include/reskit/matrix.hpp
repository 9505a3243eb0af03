#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "reskit/scalar.hpp"

namespace reskit {

using VecS = std::vector<Scalar>;

// Dense row-major matrix over a single exact field.  Sizes in this library
// are tiny (at most ~10 x 45), so plain exact Gauss-Jordan over the field is
// both the simplest and a perfectly fast elimination strategy.
class DenseMatrix {
public:
  DenseMatrix(const Field& f, size_t rows, size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  static DenseMatrix identity(const Field& f, size_t n);
  static DenseMatrix from_rows(const Field& f, const std::vector<VecS>& rows);

  const Field& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  VecS row(size_t i) const;
  DenseMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const DenseMatrix& o) const;

  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;

private:
  Field field_;
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  DenseMatrix rref;
  size_t rank;
  std::vector<size_t> pivot_cols;
  // Kernel basis, one vector per free column in ascending column order,
  // each normalized so its first nonzero entry is 1.
  std::vector<VecS> kernel;
};

RrefResult rref(const DenseMatrix& m);

size_t rank_of(const DenseMatrix& m);

struct DetInverse {
  Scalar det;
  std::optional<DenseMatrix> inverse;  // present iff det != 0
};

// Square matrices only.
DetInverse det_and_inverse(const DenseMatrix& m);

DenseMatrix reduce_mod(const DenseMatrix& m, const Field& fp);

// Congruence diagonalization of a symmetric matrix (char != 2): returns
// (D, T) with T invertible and T^T G T = D diagonal; rank(D) = rank(G).
std::pair<DenseMatrix, DenseMatrix> symmetric_diagonalize(const DenseMatrix& g);

// Row-vector helpers shared across modules.
bool vec_is_zero(const VecS& v);
VecS vec_scale(const VecS& v, const Scalar& c);
VecS vec_add(const VecS& a, const VecS& b);
VecS vec_sub(const VecS& a, const VecS& b);
Scalar vec_dot(const VecS& a, const VecS& b);
// Scales so the first nonzero entry equals 1; zero vectors pass through.
VecS vec_monic(const VecS& v);

}  // namespace reskit
