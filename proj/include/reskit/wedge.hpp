#pragma once

#include "reskit/matrix.hpp"

namespace reskit {

// Coordinates on wedge^2 of an n-dimensional space: basis e_i ^ e_j for
// i < j in lexicographic pair order (0,1), (0,2), ..., (n-2,n-1).  The same
// indexing serves the strict upper triangle of skew matrices.
struct WedgeBasis {
  size_t n;

  explicit WedgeBasis(size_t n_) : n(n_) {}
  size_t size() const { return n * (n - 1) / 2; }

  size_t index(size_t i, size_t j) const {
    if (i >= j || j >= n) fail_pre("wedge index out of range");
    // Pairs with first coordinate i start at offset i*n - i(i+3)/2 - ... ;
    // computed incrementally to stay readable.
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  std::pair<size_t, size_t> pair_at(size_t k) const;
};

// (a ^ b)_{ij} = a_i b_j - a_j b_i.
VecS wedge(const WedgeBasis& wb, const VecS& a, const VecS& b);

// The components of w ^ w over all 4-subsets p<q<r<s of {0..n-1}:
//   w_pq w_rs - w_pr w_qs + w_ps w_qr.
// All vanish iff w is decomposable (equivalently, the associated skew matrix
// has rank <= 2).
VecS wedge_square_components(const WedgeBasis& wb, const VecS& w);

bool is_decomposable(const WedgeBasis& wb, const VecS& w);

// Skew matrix M with M[i][j] = w_{ij} for i < j.
DenseMatrix skew_from_wedge(const WedgeBasis& wb, const VecS& w);

// Exact factorization of a nonzero decomposable w as a ^ b, with a scaled so
// its first nonzero coordinate is 1 and b reduced against a.
std::pair<VecS, VecS> factor_decomposable(const WedgeBasis& wb, const VecS& w);

}  // namespace reskit
