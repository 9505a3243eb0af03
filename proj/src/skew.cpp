#include "reskit/skew.hpp"

#include <map>

namespace reskit {

std::pair<size_t, size_t> WedgeBasis::pair_at(size_t k) const {
  if (k >= size()) fail_pre("wedge position out of range");
  size_t i = 0, count = n - 1;
  while (k >= count) {
    k -= count;
    ++i;
    --count;
  }
  return {i, i + 1 + k};
}

VecS wedge(const WedgeBasis& wb, const VecS& a, const VecS& b) {
  if (a.size() != wb.n || b.size() != wb.n) fail_pre("wedge factor arity mismatch");
  VecS w;
  w.reserve(wb.size());
  for (size_t i = 0; i < wb.n; ++i)
    for (size_t j = i + 1; j < wb.n; ++j) w.push_back(a[i] * b[j] - a[j] * b[i]);
  return w;
}

VecS wedge_square_components(const WedgeBasis& wb, const VecS& w) {
  if (w.size() != wb.size()) fail_pre("wedge coordinate arity mismatch");
  VecS out;
  const size_t n = wb.n;
  for (size_t p = 0; p < n; ++p)
    for (size_t q = p + 1; q < n; ++q)
      for (size_t r = q + 1; r < n; ++r)
        for (size_t s = r + 1; s < n; ++s)
          out.push_back(w[wb.index(p, q)] * w[wb.index(r, s)] -
                        w[wb.index(p, r)] * w[wb.index(q, s)] +
                        w[wb.index(p, s)] * w[wb.index(q, r)]);
  return out;
}

bool is_decomposable(const WedgeBasis& wb, const VecS& w) {
  return vec_is_zero(wedge_square_components(wb, w));
}

DenseMatrix skew_from_wedge(const WedgeBasis& wb, const VecS& w) {
  if (w.size() != wb.size() || w.empty()) fail_pre("wedge coordinate arity mismatch");
  DenseMatrix m(w[0].field(), wb.n, wb.n);
  for (size_t i = 0; i < wb.n; ++i)
    for (size_t j = i + 1; j < wb.n; ++j) {
      m.at(i, j) = w[wb.index(i, j)];
      m.at(j, i) = -w[wb.index(i, j)];
    }
  return m;
}

std::pair<VecS, VecS> factor_decomposable(const WedgeBasis& wb, const VecS& w) {
  if (!is_decomposable(wb, w)) fail_pre("factoring a non-decomposable wedge");
  if (vec_is_zero(w)) fail_pre("factoring the zero wedge");
  const DenseMatrix m = skew_from_wedge(wb, w);
  // First nonzero coordinate (i, j): columns i and j of the rank-2 matrix
  // span the plane, and col_i ^ (col_j / w_ij) recovers w exactly.
  size_t pi = 0, pj = 0;
  [&] {
    for (size_t i = 0; i < wb.n; ++i)
      for (size_t j = i + 1; j < wb.n; ++j)
        if (!w[wb.index(i, j)].is_zero()) {
          pi = i;
          pj = j;
          return;
        }
  }();
  VecS u = m.transpose().row(pi);  // column pi
  VecS v = m.transpose().row(pj);
  v = vec_scale(v, w[wb.index(pi, pj)].inverse());

  // Canonical presentation: first nonzero of a is 1, b reduced against a.
  size_t pivot = 0;
  while (u[pivot].is_zero()) ++pivot;
  const Scalar lead = u[pivot];
  VecS a = vec_scale(u, lead.inverse());
  VecS b = vec_scale(v, lead);
  b = vec_sub(b, vec_scale(a, b[pivot]));
  return {std::move(a), std::move(b)};
}

SkewLinearMatrix::SkewLinearMatrix(RingPtr ring, size_t n)
    : ring_(std::move(ring)), n_(n), wb_(n), upper_(wb_.size(), LinearForm::zero(ring_)) {
  if (n < 2) fail_pre("skew matrix size must be at least 2");
}

void SkewLinearMatrix::set_upper(size_t i, size_t j, LinearForm f) {
  if (!same_ring(f.ring(), ring_)) fail_pre("skew entry in the wrong ring");
  upper_[wb_.index(i, j)] = std::move(f);
}

const LinearForm& SkewLinearMatrix::upper(size_t i, size_t j) const {
  return upper_[wb_.index(i, j)];
}

LinearForm SkewLinearMatrix::entry(size_t i, size_t j) const {
  if (i >= n_ || j >= n_) fail_pre("skew entry out of range");
  if (i == j) return LinearForm::zero(ring_);
  return i < j ? upper_[wb_.index(i, j)] : -upper_[wb_.index(j, i)];
}

bool SkewLinearMatrix::operator==(const SkewLinearMatrix& o) const {
  if (n_ != o.n_ || !same_ring(ring_, o.ring_)) return false;
  for (size_t k = 0; k < upper_.size(); ++k)
    if (!(upper_[k] == o.upper_[k])) return false;
  return true;
}

namespace {

// Expansion along the first active index, memoized on the index-subset mask.
MultiPoly pf_rec(const SkewLinearMatrix& a, uint64_t mask,
                 std::map<uint64_t, MultiPoly>& memo) {
  if (mask == 0) return MultiPoly::constant(a.ring(), Scalar::one(a.ring()->field));
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;

  std::vector<size_t> idx;
  for (size_t i = 0; i < a.n(); ++i)
    if (mask & (1ull << i)) idx.push_back(i);

  MultiPoly acc(a.ring());
  const size_t i0 = idx[0];
  Scalar sign = Scalar::one(a.ring()->field);
  for (size_t t = 1; t < idx.size(); ++t) {
    const size_t j = idx[t];
    const uint64_t sub = mask & ~(1ull << i0) & ~(1ull << j);
    acc = acc + a.upper(i0, j).to_poly() * pf_rec(a, sub, memo) * sign;
    sign = -sign;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

MultiPoly pfaffian(const SkewLinearMatrix& a) {
  if (a.n() % 2 != 0) fail_pre("Pfaffian requires even size");
  if (a.n() > 62) fail_pre("Pfaffian size limit exceeded");
  std::map<uint64_t, MultiPoly> memo;
  const uint64_t full = (1ull << a.n()) - 1;
  return pf_rec(a, full, memo);
}

std::vector<MultiPoly> principal_pfaffians(const SkewLinearMatrix& a) {
  if (a.n() % 2 == 0) fail_pre("principal Pfaffians require odd size");
  if (a.n() > 62) fail_pre("Pfaffian size limit exceeded");
  std::vector<MultiPoly> out;
  std::map<uint64_t, MultiPoly> memo;
  const uint64_t full = (1ull << a.n()) - 1;
  for (size_t k = 0; k < a.n(); ++k) {
    MultiPoly pf = pf_rec(a, full & ~(1ull << k), memo);
    out.push_back(k % 2 == 0 ? pf : -pf);
  }
  return out;
}

std::vector<QuadraticForm> principal_pfaffian_quadrics(const SkewLinearMatrix& a) {
  if (a.n() != 5) fail_pre("principal Pfaffian quadrics are a 5 x 5 notion");
  std::vector<QuadraticForm> out;
  for (auto& p : principal_pfaffians(a)) out.push_back(QuadraticForm::from_poly(p));
  return out;
}

SkewLinearMatrix base_change(const SkewLinearMatrix& a, const DenseMatrix& u) {
  const size_t n = a.n();
  if (u.rows() != n || u.cols() != n) fail_pre("base change matrix shape mismatch");
  if (u.field() != a.ring()->field) fail_pre("base change matrix over the wrong field");
  SkewLinearMatrix b(a.ring(), n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      LinearForm f = LinearForm::zero(a.ring());
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
          if (k == l || u.at(i, k).is_zero() || u.at(j, l).is_zero()) continue;
          f = f + a.entry(k, l) * (u.at(i, k) * u.at(j, l));
        }
      b.set_upper(i, j, std::move(f));
    }
  return b;
}

DenseMatrix evaluate_at(const SkewLinearMatrix& a, const VecS& point) {
  DenseMatrix m(a.ring()->field, a.n(), a.n());
  for (size_t i = 0; i < a.n(); ++i)
    for (size_t j = i + 1; j < a.n(); ++j) {
      const Scalar v = a.upper(i, j).evaluate(point);
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return m;
}

Scalar pfaffian_scalar(const DenseMatrix& m) {
  const size_t n = m.rows();
  if (m.cols() != n || n % 2 != 0) fail_pre("scalar Pfaffian requires an even square matrix");
  for (size_t i = 0; i < n; ++i) {
    if (!m.at(i, i).is_zero()) fail_pre("scalar Pfaffian input has a nonzero diagonal");
    for (size_t j = i + 1; j < n; ++j)
      if (m.at(i, j) != -m.at(j, i)) fail_pre("scalar Pfaffian input is not skew");
  }
  // Same wiring as the symbolic recursion, over a trivial one-variable ring.
  RingPtr r = make_ring(m.field(), 1, "t");
  SkewLinearMatrix a(r, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      a.set_upper(i, j, LinearForm(r, VecS{m.at(i, j)}));
  const MultiPoly pf = pfaffian(a);
  // Each entry was degree 1 in t, so Pf is t^{n/2} times the answer.
  return pf.coeff(Monomial::var(1, 0, static_cast<uint32_t>(n / 2)));
}

SkewLinearMatrix reduce_mod(const SkewLinearMatrix& a, const Field& fp) {
  RingPtr target = make_ring(fp, a.ring()->vars);
  SkewLinearMatrix b(target, a.n());
  for (size_t i = 0; i < a.n(); ++i)
    for (size_t j = i + 1; j < a.n(); ++j) {
      VecS c;
      for (const auto& x : a.upper(i, j).coeffs()) c.push_back(reduce_mod(x, fp));
      b.set_upper(i, j, LinearForm(target, std::move(c)));
    }
  return b;
}

}  // namespace reskit
