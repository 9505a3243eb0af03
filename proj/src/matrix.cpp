#include "reskit/matrix.hpp"

namespace reskit {

DenseMatrix DenseMatrix::identity(const Field& f, size_t n) {
  DenseMatrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

DenseMatrix DenseMatrix::from_rows(const Field& f, const std::vector<VecS>& rows) {
  const size_t r = rows.size();
  const size_t c = r == 0 ? 0 : rows[0].size();
  DenseMatrix m(f, r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail_pre("ragged rows in matrix construction");
    for (size_t j = 0; j < c; ++j) {
      if (rows[i][j].field() != f) fail_pre("mixed-field matrix entry");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

VecS DenseMatrix::row(size_t i) const {
  VecS v;
  v.reserve(cols_);
  for (size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool DenseMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (field_ != o.field_) fail_pre("mixed-field matrix product");
  if (cols_ != o.rows_) fail_pre("matrix product shape mismatch");
  DenseMatrix r(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    fail_pre("matrix sum shape/field mismatch");
  DenseMatrix r = *this;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
  return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    fail_pre("matrix difference shape/field mismatch");
  DenseMatrix r = *this;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) -= o.at(i, j);
  return r;
}

RrefResult rref(const DenseMatrix& m) {
  DenseMatrix r = m;
  const Field f = m.field();
  const size_t nr = m.rows(), nc = m.cols();
  std::vector<size_t> pivots;
  size_t prow = 0;
  for (size_t col = 0; col < nc && prow < nr; ++col) {
    // First-nonzero pivoting: deterministic, and RREF is unique anyway.
    size_t sel = prow;
    while (sel < nr && r.at(sel, col).is_zero()) ++sel;
    if (sel == nr) continue;
    for (size_t j = 0; j < nc; ++j) std::swap(r.at(prow, j), r.at(sel, j));
    const Scalar inv = r.at(prow, col).inverse();
    for (size_t j = col; j < nc; ++j) r.at(prow, j) *= inv;
    for (size_t i = 0; i < nr; ++i) {
      if (i == prow || r.at(i, col).is_zero()) continue;
      const Scalar c = r.at(i, col);
      for (size_t j = col; j < nc; ++j) r.at(i, j) -= c * r.at(prow, j);
    }
    pivots.push_back(col);
    ++prow;
  }

  std::vector<VecS> kernel;
  std::vector<bool> is_pivot(nc, false);
  for (size_t c : pivots) is_pivot[c] = true;
  for (size_t fc = 0; fc < nc; ++fc) {
    if (is_pivot[fc]) continue;
    VecS v(nc, Scalar::zero(f));
    v[fc] = Scalar::one(f);
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, fc);
    kernel.push_back(vec_monic(v));
  }
  return RrefResult{std::move(r), pivots.size(), std::move(pivots), std::move(kernel)};
}

size_t rank_of(const DenseMatrix& m) { return rref(m).rank; }

DetInverse det_and_inverse(const DenseMatrix& m) {
  if (m.rows() != m.cols()) fail_pre("determinant of a non-square matrix");
  const Field f = m.field();
  const size_t n = m.rows();
  DenseMatrix a = m;
  DenseMatrix inv = DenseMatrix::identity(f, n);
  Scalar det = Scalar::one(f);
  for (size_t col = 0; col < n; ++col) {
    size_t sel = col;
    while (sel < n && a.at(sel, col).is_zero()) ++sel;
    if (sel == n) return DetInverse{Scalar::zero(f), std::nullopt};
    if (sel != col) {
      for (size_t j = 0; j < n; ++j) {
        std::swap(a.at(col, j), a.at(sel, j));
        std::swap(inv.at(col, j), inv.at(sel, j));
      }
      det = -det;
    }
    det *= a.at(col, col);
    const Scalar s = a.at(col, col).inverse();
    for (size_t j = 0; j < n; ++j) {
      a.at(col, j) *= s;
      inv.at(col, j) *= s;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      const Scalar c = a.at(i, col);
      for (size_t j = 0; j < n; ++j) {
        a.at(i, j) -= c * a.at(col, j);
        inv.at(i, j) -= c * inv.at(col, j);
      }
    }
  }
  return DetInverse{det, std::move(inv)};
}

DenseMatrix reduce_mod(const DenseMatrix& m, const Field& fp) {
  DenseMatrix r(fp, m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = reduce_mod(m.at(i, j), fp);
  return r;
}

std::pair<DenseMatrix, DenseMatrix> symmetric_diagonalize(const DenseMatrix& g) {
  const size_t n = g.rows();
  if (g.cols() != n) fail_pre("diagonalization of a non-square matrix");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (g.at(i, j) != g.at(j, i)) fail_pre("diagonalization of a non-symmetric matrix");
  DenseMatrix d = g;
  DenseMatrix t = DenseMatrix::identity(g.field(), n);

  // col_j += f * col_i as a congruence move: mirrored on rows of d, recorded
  // in t.
  auto add_col = [&](size_t j, size_t i, const Scalar& f) {
    for (size_t r = 0; r < n; ++r) d.at(r, j) += f * d.at(r, i);
    for (size_t r = 0; r < n; ++r) d.at(j, r) += f * d.at(i, r);
    for (size_t r = 0; r < n; ++r) t.at(r, j) += f * t.at(r, i);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (size_t r = 0; r < n; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (size_t r = 0; r < n; ++r) std::swap(d.at(i, r), d.at(j, r));
    for (size_t r = 0; r < n; ++r) std::swap(t.at(r, i), t.at(r, j));
  };

  for (size_t c = 0; c < n; ++c) {
    if (d.at(c, c).is_zero()) {
      size_t r = c + 1;
      while (r < n && d.at(r, r).is_zero()) ++r;
      if (r < n) {
        swap_cols(c, r);
      } else {
        // All remaining diagonal entries vanish; pull in an off-diagonal one
        // (col_c += col_r doubles it onto the diagonal, char != 2).
        r = c + 1;
        while (r < n && d.at(c, r).is_zero()) ++r;
        if (r == n) continue;  // the whole row is zero
        add_col(c, r, Scalar::one(d.field()));
      }
    }
    const Scalar inv = d.at(c, c).inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (d.at(c, r).is_zero()) continue;
      add_col(r, c, -(d.at(c, r) * inv));
    }
  }
  return {std::move(d), std::move(t)};
}

bool vec_is_zero(const VecS& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

VecS vec_scale(const VecS& v, const Scalar& c) {
  VecS r = v;
  for (auto& x : r) x *= c;
  return r;
}

VecS vec_add(const VecS& a, const VecS& b) {
  if (a.size() != b.size()) fail_pre("vector sum length mismatch");
  VecS r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

VecS vec_sub(const VecS& a, const VecS& b) {
  if (a.size() != b.size()) fail_pre("vector difference length mismatch");
  VecS r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Scalar vec_dot(const VecS& a, const VecS& b) {
  if (a.size() != b.size() || a.empty()) fail_pre("dot product length mismatch");
  Scalar s = Scalar::zero(a[0].field());
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

VecS vec_monic(const VecS& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return vec_scale(v, x.inverse());
  return v;
}

}  // namespace reskit
