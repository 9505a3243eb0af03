#include "reskit/resonance.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <thread>

#include "reskit/lift.hpp"

namespace reskit {

unsigned thread_cap() {
  const char* env = std::getenv("RESONANCE_KIT_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 1;
  return static_cast<unsigned>(std::min<long>(v, 64));
}

KernelSubspace::KernelSubspace(const Field& f, size_t n,
                               const std::vector<VecS>& spanning_rows)
    : field_(f), wb_(n) {
  const size_t cols = wb_.size();
  for (const auto& r : spanning_rows)
    if (r.size() != cols) fail_pre("subspace row arity mismatch");
  if (spanning_rows.empty()) return;
  RrefResult rr = rref(DenseMatrix::from_rows(f, spanning_rows));
  pivots_ = rr.pivot_cols;
  for (size_t i = 0; i < rr.rank; ++i) rows_.push_back(rr.rref.row(i));
}

VecS KernelSubspace::combine(const VecS& lambda) const {
  if (lambda.size() != rows_.size()) fail_pre("coordinate arity mismatch");
  VecS acc(wb_.size(), Scalar::zero(field_));
  for (size_t t = 0; t < rows_.size(); ++t)
    if (!lambda[t].is_zero()) acc = vec_add(acc, vec_scale(rows_[t], lambda[t]));
  return acc;
}

std::optional<VecS> KernelSubspace::coordinates(const VecS& w) const {
  if (w.size() != wb_.size()) fail_pre("coordinate arity mismatch");
  VecS rem = w;
  VecS lambda;
  lambda.reserve(rows_.size());
  for (size_t t = 0; t < rows_.size(); ++t) {
    const Scalar c = rem[pivots_[t]];
    lambda.push_back(c);
    if (!c.is_zero()) rem = vec_sub(rem, vec_scale(rows_[t], c));
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return lambda;
}

KernelSubspace kernel_of_partial(const SkewLinearMatrix& a) {
  const RingPtr& ring = a.ring();
  const size_t m = ring->nvars();
  const WedgeBasis& wb = a.wedge_basis();
  // Row v, column (i,j): coefficient of x_v in A[i][j].  The kernel of this
  // matrix is exactly the space of wedge coordinates contracting to zero.
  DenseMatrix d(ring->field, m, wb.size());
  for (size_t i = 0; i < wb.n; ++i)
    for (size_t j = i + 1; j < wb.n; ++j) {
      const LinearForm& f = a.upper(i, j);
      for (size_t v = 0; v < m; ++v) d.at(v, wb.index(i, j)) = f.coeff(v);
    }
  return KernelSubspace(ring->field, wb.n, rref(d).kernel);
}

RingPtr lambda_ring_for(const KernelSubspace& k) {
  return make_ring(k.field(), std::max<size_t>(k.dim(), 1), "l");
}

Ideal decomposability_ideal(const KernelSubspace& k, const RingPtr& lambda_ring) {
  if (lambda_ring->field != k.field()) fail_pre("lambda ring over the wrong field");
  if (lambda_ring->nvars() != k.dim()) fail_pre("lambda ring arity mismatch");
  const WedgeBasis& wb = k.wedge_basis();
  // The generic element sum lambda_t row_t, one linear form per wedge
  // coordinate.
  std::vector<MultiPoly> coord(wb.size());
  for (size_t c = 0; c < wb.size(); ++c) {
    VecS lf(k.dim(), Scalar::zero(k.field()));
    for (size_t t = 0; t < k.dim(); ++t) lf[t] = k.rows()[t][c];
    coord[c] = LinearForm(lambda_ring, std::move(lf)).to_poly();
  }
  std::vector<MultiPoly> gens;
  const size_t n = wb.n;
  for (size_t p = 0; p < n; ++p)
    for (size_t q = p + 1; q < n; ++q)
      for (size_t r = q + 1; r < n; ++r)
        for (size_t s = r + 1; s < n; ++s) {
          MultiPoly g = coord[wb.index(p, q)] * coord[wb.index(r, s)] -
                        coord[wb.index(p, r)] * coord[wb.index(q, s)] +
                        coord[wb.index(p, s)] * coord[wb.index(q, r)];
          if (!g.is_zero()) gens.push_back(std::move(g));
        }
  return Ideal(lambda_ring, std::move(gens));
}

// ---------------------------------------------------------------------------
// Raw mod-p machinery.  Enumeration loops run on uint32 residues: no GMP
// allocation per point.
// ---------------------------------------------------------------------------

namespace {

using FpVec = std::vector<uint32_t>;

struct FpSubspace {
  uint32_t p = 0;
  size_t n = 0;
  size_t dim = 0;
  std::vector<size_t> pivots;
  std::vector<FpVec> rows;         // dim x N, reduced row echelon
  std::vector<std::array<size_t, 6>> quads;  // wedge-square index patterns
};

std::vector<std::array<size_t, 6>> quad_patterns(size_t n) {
  const WedgeBasis wb(n);
  std::vector<std::array<size_t, 6>> out;
  for (size_t p = 0; p < n; ++p)
    for (size_t q = p + 1; q < n; ++q)
      for (size_t r = q + 1; r < n; ++r)
        for (size_t s = r + 1; s < n; ++s)
          out.push_back({wb.index(p, q), wb.index(r, s), wb.index(p, r),
                         wb.index(q, s), wb.index(p, s), wb.index(q, r)});
  return out;
}

uint32_t scalar_residue(const Scalar& s, uint32_t p) {
  if (s.field().is_prime()) return static_cast<uint32_t>(s.res());
  return static_cast<uint32_t>(reduce_mod(s, Field::prime(p)).res());
}

// Reduction of the subspace basis mod p.  Over Q this requires every
// denominator to be coprime to p; returns nullopt otherwise.  The reduced
// rows keep their echelon pivots (pivot entries are 1), so the dimension is
// preserved.
std::optional<FpSubspace> reduce_subspace(const KernelSubspace& k, uint32_t p) {
  FpSubspace s;
  s.p = p;
  s.n = k.n();
  s.dim = k.dim();
  s.quads = quad_patterns(k.n());
  if (k.field().is_rational()) {
    for (const auto& row : k.rows())
      for (const auto& x : row)
        if (mpz_divisible_ui_p(x.rat().get_den().get_mpz_t(), p)) return std::nullopt;
  } else if (k.field().p() != p) {
    fail_pre("subspace reduction across distinct prime fields");
  }
  for (const auto& row : k.rows()) {
    FpVec r(row.size());
    for (size_t c = 0; c < row.size(); ++c) r[c] = scalar_residue(row[c], p);
    s.rows.push_back(std::move(r));
  }
  // Recover the pivot columns from the echelon structure.
  for (const auto& r : s.rows) {
    size_t c = 0;
    while (c < r.size() && r[c] == 0) ++c;
    s.pivots.push_back(c);
  }
  return s;
}

bool fp_decomposable(const FpSubspace& s, const FpVec& w) {
  const uint64_t p = s.p;
  const uint64_t p2 = p * p;
  for (const auto& q : s.quads) {
    uint64_t acc = (uint64_t)w[q[0]] * w[q[1]] + p2 - (uint64_t)w[q[2]] * w[q[3]];
    acc %= p;
    acc = (acc + (uint64_t)w[q[4]] * w[q[5]]) % p;
    if (acc != 0) return false;
  }
  return true;
}

bool fp_is_zero(const FpVec& w) {
  for (uint32_t x : w)
    if (x != 0) return false;
  return true;
}

// Enumerates lambda in P^{dim-1}(F_p) in canonical order (unit pivot t
// ascending; the free coordinates behind it counting up with the last one
// fastest) and feeds omega = sum lambda_t row_t to the visitor.  The visitor
// returns true to stop.
void scan_lambda_space(const FpSubspace& s,
                       const std::function<bool(const FpVec& lambda, const FpVec& omega)>& visit) {
  const size_t k = s.dim;
  const size_t cols = s.rows.empty() ? 0 : s.rows[0].size();
  FpVec lambda(k, 0);
  FpVec omega(cols, 0);
  bool stop = false;

  // rec(pos, partial omega): free coordinates pos..k-1.
  std::function<void(size_t, FpVec&)> rec = [&](size_t pos, FpVec& part) {
    if (stop) return;
    if (pos == k) {
      stop = visit(lambda, part);
      return;
    }
    // digit 0 first, then incrementally add row[pos].
    FpVec cur = part;
    for (uint32_t d = 0; d < s.p && !stop; ++d) {
      lambda[pos] = d;
      rec(pos + 1, cur);
      if (d + 1 < s.p)
        for (size_t c = 0; c < cols; ++c)
          cur[c] = static_cast<uint32_t>((cur[c] + (uint64_t)s.rows[pos][c]) % s.p);
    }
    lambda[pos] = 0;
  };

  for (size_t t = 0; t < k && !stop; ++t) {
    lambda.assign(k, 0);
    lambda[t] = 1;
    omega = s.rows[t];
    rec(t + 1, omega);
  }
}

std::optional<std::pair<FpVec, FpVec>> first_decomposable_lambda(const FpSubspace& s) {
  std::optional<std::pair<FpVec, FpVec>> hit;
  scan_lambda_space(s, [&](const FpVec& lambda, const FpVec& omega) {
    if (fp_is_zero(omega) || !fp_decomposable(s, omega)) return false;
    hit = std::make_pair(lambda, omega);
    return true;
  });
  return hit;
}

VecS fp_to_scalars(const FpVec& v, const Field& f) {
  VecS out;
  out.reserve(v.size());
  for (uint32_t x : v) out.push_back(Scalar::from_int(f, x));
  return out;
}

// --------------------------- Gr(2,n)(F_p) scan ----------------------------
//
// Canonical cell decomposition by reduced row-echelon forms with pivot pair
// c1 < c2: row0 has 1 at c1, 0 at c2, free entries at the other columns
// right of c1; row1 has 1 at c2 and free entries right of c2.  Cells are
// visited in lex pivot order, free entries count up with the rightmost
// (row1-side) digit fastest.

struct Gr2Cell {
  size_t c1, c2;
  std::vector<size_t> free0, free1;  // free columns of each row
  uint64_t points;                   // p^(free0+free1)
};

std::vector<Gr2Cell> gr2_cells(size_t n, uint32_t p) {
  std::vector<Gr2Cell> cells;
  for (size_t c1 = 0; c1 < n; ++c1)
    for (size_t c2 = c1 + 1; c2 < n; ++c2) {
      Gr2Cell cell{c1, c2, {}, {}, 1};
      for (size_t j = c1 + 1; j < n; ++j)
        if (j != c2) cell.free0.push_back(j);
      for (size_t j = c2 + 1; j < n; ++j) cell.free1.push_back(j);
      for (size_t t = 0; t < cell.free0.size() + cell.free1.size(); ++t) {
        if (cell.points > UINT64_MAX / p) fail_pre("Grassmannian scan too large");
        cell.points *= p;
      }
      cells.push_back(std::move(cell));
    }
  return cells;
}

// Decodes one cell point from its counter (digits big-endian over
// free0 then free1) and emits the wedge coordinates of row0 ^ row1.
void gr2_point_omega(const Gr2Cell& cell, uint64_t counter, size_t n, uint32_t p,
                     FpVec& row0, FpVec& row1, FpVec& omega) {
  row0.assign(n, 0);
  row1.assign(n, 0);
  row0[cell.c1] = 1;
  row1[cell.c2] = 1;
  const size_t f0 = cell.free0.size(), f1 = cell.free1.size();
  for (size_t t = f1; t-- > 0;) {
    row1[cell.free1[t]] = static_cast<uint32_t>(counter % p);
    counter /= p;
  }
  for (size_t t = f0; t-- > 0;) {
    row0[cell.free0[t]] = static_cast<uint32_t>(counter % p);
    counter /= p;
  }
  size_t idx = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const uint64_t a = (uint64_t)row0[i] * row1[j] % p;
      const uint64_t b = (uint64_t)row0[j] * row1[i] % p;
      omega[idx++] = static_cast<uint32_t>((a + p - b) % p);
    }
}

bool fp_in_subspace(const FpSubspace& s, const FpVec& w) {
  FpVec rem = w;
  const uint64_t p = s.p;
  for (size_t t = 0; t < s.dim; ++t) {
    const uint32_t c = rem[s.pivots[t]];
    if (c == 0) continue;
    const uint64_t mc = p - c;
    for (size_t j = 0; j < rem.size(); ++j)
      rem[j] = static_cast<uint32_t>((rem[j] + mc * s.rows[t][j]) % p);
  }
  return fp_is_zero(rem);
}

struct Gr2Hit {
  uint64_t index;
  FpVec omega;
};

// Scans global indices [from, to) across the concatenated cells; returns the
// first omega lying in the subspace, if any.
std::optional<Gr2Hit> gr2_scan_range(const std::vector<Gr2Cell>& cells,
                                     const FpSubspace& s, uint64_t from, uint64_t to) {
  const size_t n = s.n;
  const WedgeBasis wb(n);
  FpVec row0, row1, omega(wb.size());
  uint64_t base = 0;
  for (const auto& cell : cells) {
    if (to <= base) break;
    const uint64_t lo = from > base ? from - base : 0;
    const uint64_t hi = std::min<uint64_t>(cell.points, to - base);
    for (uint64_t c = lo; c < hi; ++c) {
      gr2_point_omega(cell, c, n, s.p, row0, row1, omega);
      if (fp_in_subspace(s, omega)) return Gr2Hit{base + c, omega};
    }
    base += cell.points;
  }
  return std::nullopt;
}

uint64_t gr2_total(const std::vector<Gr2Cell>& cells) {
  uint64_t total = 0;
  for (const auto& c : cells) total += c.points;
  return total;
}

std::optional<FpVec> gr2_first_in_subspace(const FpSubspace& s) {
  const auto cells = gr2_cells(s.n, s.p);
  const uint64_t total = gr2_total(cells);
  const unsigned want = thread_cap();
  if (want <= 1 || total < 16384) {
    auto hit = gr2_scan_range(cells, s, 0, total);
    if (!hit) return std::nullopt;
    return hit->omega;
  }
  // Partition by global index; the reported witness is the minimum-index hit,
  // so the outcome is independent of the thread count.
  const unsigned nt = static_cast<unsigned>(std::min<uint64_t>(want, total));
  std::vector<std::optional<Gr2Hit>> hits(nt);
  std::vector<std::thread> pool;
  const uint64_t chunk = (total + nt - 1) / nt;
  for (unsigned t = 0; t < nt; ++t) {
    const uint64_t lo = chunk * t, hi = std::min(total, lo + chunk);
    pool.emplace_back([&, t, lo, hi] { hits[t] = gr2_scan_range(cells, s, lo, hi); });
  }
  for (auto& th : pool) th.join();
  std::optional<Gr2Hit> best;
  for (auto& h : hits)
    if (h && (!best || h->index < best->index)) best = h;
  if (!best) return std::nullopt;
  return best->omega;
}

}  // namespace

uint64_t gr2_point_count(size_t n, uint32_t p) {
  Field::prime(p);  // validates
  if (n < 2) fail_pre("Grassmannian of planes needs n >= 2");
  return gr2_total(gr2_cells(n, p));
}

std::optional<VecS> first_gr2_point_in_subspace(const KernelSubspace& k) {
  if (!k.field().is_prime())
    fail_pre("Grassmannian point scan requires a prime-field subspace");
  if (k.dim() == 0) return std::nullopt;
  auto s = reduce_subspace(k, k.field().p());
  auto w = gr2_first_in_subspace(*s);
  if (!w) return std::nullopt;
  return fp_to_scalars(*w, k.field());
}

// ---------------------------------------------------------------------------
// Witness search over Q.
// ---------------------------------------------------------------------------

namespace {

std::optional<Scalar> rational_sqrt(const Scalar& x) {
  if (x.rat() < 0) return std::nullopt;
  const mpz_class num = x.rat().get_num(), den = x.rat().get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class q(rn, rd);
  q.canonicalize();
  return Scalar::from_mpq(q);
}

// n = 4: a single quadric cuts the decomposable locus of P(K): look for a
// rational isotropic vector through congruence diagonalization.
std::optional<VecS> rank_shortcut_lambda(const KernelSubspace& k, const Ideal& ideal) {
  if (k.n() != 4 || ideal.gens().size() != 1) return std::nullopt;
  const QuadraticForm q = QuadraticForm::from_poly(ideal.gens()[0]);
  auto [d, t] = symmetric_diagonalize(q.gram());
  const size_t kdim = k.dim();
  size_t rank = 0;
  std::vector<size_t> nz;
  for (size_t i = 0; i < kdim; ++i)
    if (!d.at(i, i).is_zero()) {
      ++rank;
      nz.push_back(i);
    }
  auto col = [&](size_t j) {
    VecS v;
    for (size_t i = 0; i < kdim; ++i) v.push_back(t.at(i, j));
    return v;
  };
  // Null direction of the form.
  for (size_t j = 0; j < kdim; ++j)
    if (d.at(j, j).is_zero()) return col(j);
  // Pair of diagonal entries with -d_j/d_i a rational square.
  for (size_t a = 0; a < rank; ++a)
    for (size_t b = a + 1; b < rank; ++b) {
      const Scalar ratio = -(d.at(nz[b], nz[b]) / d.at(nz[a], nz[a]));
      if (auto s = rational_sqrt(ratio))
        return vec_add(vec_scale(col(nz[a]), *s), col(nz[b]));
    }
  return std::nullopt;
}

std::vector<ZQuadric> integer_quadrics(const Ideal& ideal) {
  std::vector<ZQuadric> out;
  const size_t k = ideal.ring()->nvars();
  for (const auto& g : ideal.gens()) {
    // Clear denominators: scale by the lcm of coefficient denominators.
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : g.terms())
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rat().get_den().get_mpz_t());
    ZQuadric zq{k, {}};
    for (const auto& [m, c] : g.terms()) {
      size_t idx[2] = {0, 0};
      size_t cnt = 0;
      for (size_t v = 0; v < k; ++v)
        for (uint32_t e = 0; e < m.exp(v); ++e) idx[cnt++] = v;
      mpq_class scaled = c.rat() * den_lcm;
      zq.terms.emplace_back(idx[0], idx[1], mpz_class(scaled.get_num()));
    }
    out.push_back(std::move(zq));
  }
  return out;
}

constexpr uint32_t kLadderPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29,
                                      31, 37, 41, 43, 47, 53, 59, 61, 67,
                                      71, 73, 79, 83, 89, 97, 101};

struct LadderOutcome {
  std::optional<VecS> rational_lambda;     // exact coordinates over Q
  std::optional<uint32_t> fallback_prime;  // first prime with a mod-p point
  std::optional<FpVec> fallback_omega;
};

// For each prime: enumerate the decomposable points of the reduced subspace;
// try to lift a bounded number of them to Q through the integer quadric
// system; remember the first mod-p hit as a fallback witness.
LadderOutcome run_prime_ladder(const KernelSubspace& k, const Ideal& ideal) {
  LadderOutcome out;
  const auto zsys = integer_quadrics(ideal);
  for (uint32_t p : kLadderPrimes) {
    auto sub = reduce_subspace(k, p);
    if (!sub) continue;  // a denominator meets p
    std::vector<std::pair<FpVec, FpVec>> candidates;
    constexpr size_t kMaxLiftAttempts = 25;
    scan_lambda_space(*sub, [&](const FpVec& lambda, const FpVec& omega) {
      if (fp_is_zero(omega) || !fp_decomposable(*sub, omega)) return false;
      candidates.emplace_back(lambda, omega);
      return candidates.size() >= kMaxLiftAttempts;
    });
    if (candidates.empty()) continue;
    if (!out.fallback_prime) {
      out.fallback_prime = p;
      out.fallback_omega = candidates.front().second;
    }
    for (const auto& cand : candidates) {
      const FpVec& lambda = cand.first;
      size_t pivot = 0;
      while (lambda[pivot] == 0) ++pivot;
      // The scan normalizes the pivot coordinate to 1 already.
      for (unsigned doublings : {6u, 9u}) {
        auto lifted = lift_projective_point(zsys, p, lambda, pivot, doublings);
        if (!lifted) continue;
        VecS lq;
        for (const auto& x : *lifted) lq.push_back(Scalar::from_mpq(x));
        out.rational_lambda = std::move(lq);
        return out;
      }
    }
  }
  return out;
}

}  // namespace

DecompResult decomposable_in_subspace(const KernelSubspace& k, Strategy strategy) {
  DecompResult res;
  if (k.dim() == 0) return res;
  const Field f = k.field();

  if (strategy == Strategy::bruteforce) {
    if (!f.is_prime()) fail_pre("bruteforce strategy requires a prime-field context");
    auto w = first_gr2_point_in_subspace(k);
    if (!w) return res;
    res.nonempty = true;
    res.witness = DecompWitness{f, *w};
    return res;
  }

  // Dimension 1: a single line is decomposable or not, no basis needed.
  if (k.dim() == 1) {
    if (!is_decomposable(k.wedge_basis(), k.rows()[0])) return res;
    res.nonempty = true;
    res.witness = DecompWitness{f, k.rows()[0]};
    return res;
  }

  const RingPtr lring = lambda_ring_for(k);
  const Ideal ideal = decomposability_ideal(k, lring);
  if (is_projectively_empty(ideal)) return res;
  res.nonempty = true;

  if (f.is_prime()) {
    // The emptiness check was for F_p-rational points, so the scan must hit.
    auto sub = reduce_subspace(k, f.p());
    auto hit = first_decomposable_lambda(*sub);
    if (!hit) fail_pre("internal inconsistency: nonempty locus but no rational point");
    res.witness = DecompWitness{f, fp_to_scalars(hit->second, f)};
    return res;
  }

  // Over Q the verdict concerns the algebraic closure; hunt for an exact
  // rational witness, falling back to a verified mod-p one.
  for (const auto& row : k.rows()) {
    if (is_decomposable(k.wedge_basis(), row)) {
      res.witness = DecompWitness{f, row};
      return res;
    }
  }
  if (auto lambda = rank_shortcut_lambda(k, ideal)) {
    res.witness = DecompWitness{f, k.combine(*lambda)};
    return res;
  }
  LadderOutcome ladder = run_prime_ladder(k, ideal);
  if (ladder.rational_lambda) {
    res.witness = DecompWitness{f, k.combine(*ladder.rational_lambda)};
    return res;
  }
  if (ladder.fallback_prime) {
    const Field fp = Field::prime(*ladder.fallback_prime);
    res.witness = DecompWitness{fp, fp_to_scalars(*ladder.fallback_omega, fp)};
    res.witness_prime = *ladder.fallback_prime;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Certificates.
// ---------------------------------------------------------------------------

DenseMatrix generalized_zero(const SkewLinearMatrix& a, const VecS& u, const VecS& v) {
  const size_t n = a.n();
  const Field f = a.ring()->field;
  if (u.size() != n || v.size() != n) fail_pre("witness vector arity mismatch");
  for (const auto& x : u)
    if (x.field() != f) fail_pre("witness vector over the wrong field");
  for (const auto& x : v)
    if (x.field() != f) fail_pre("witness vector over the wrong field");

  // The contraction of u ^ v against A must vanish identically.
  LinearForm contraction = LinearForm::zero(a.ring());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      contraction = contraction + a.upper(i, j) * (u[i] * v[j] - u[j] * v[i]);
  if (!contraction.is_zero())
    fail_pre("witness pair does not contract to zero against the matrix");

  // Complete (u, v) to an invertible matrix greedily with standard basis
  // vectors.
  std::vector<VecS> rows{u, v};
  if (rank_of(DenseMatrix::from_rows(f, rows)) != 2)
    fail_pre("witness vectors are linearly dependent");
  for (size_t i = 0; i < n && rows.size() < n; ++i) {
    VecS e(n, Scalar::zero(f));
    e[i] = Scalar::one(f);
    rows.push_back(e);
    if (rank_of(DenseMatrix::from_rows(f, rows)) != rows.size()) rows.pop_back();
  }
  return DenseMatrix::from_rows(f, rows);
}

QuadraticForm low_rank_generalized_pfaffian(const SkewLinearMatrix& a,
                                            const DenseMatrix& u) {
  if (a.n() < 4) fail_pre("generalized Pfaffian needs size at least 4");
  const SkewLinearMatrix b = base_change(a, u);
  if (!b.upper(0, 1).is_zero())
    fail_pre("(0,1) entry of the transformed matrix does not vanish");
  // Pfaffian of the top-left 4x4 block with B01 = 0:
  // B01 B23 - B02 B13 + B03 B12 = B03 B12 - B02 B13.
  const MultiPoly pf = b.upper(0, 3).to_poly() * b.upper(1, 2).to_poly() -
                       b.upper(0, 2).to_poly() * b.upper(1, 3).to_poly();
  return QuadraticForm::from_poly(pf);
}

ResonanceCertificate resonance_decide(const SkewLinearMatrix& a, Strategy strategy) {
  ResonanceCertificate cert;
  cert.decision_field = a.ring()->field;
  const KernelSubspace k = kernel_of_partial(a);
  DecompResult dr = decomposable_in_subspace(k, strategy);
  cert.nontrivial = dr.nonempty;
  if (!dr.nonempty || !dr.witness) return cert;

  const Field wf = dr.witness->field;
  cert.witness_field = wf;
  // The certificate's linear algebra happens over the witness field; over Q
  // with a mod-p fallback this means the reduced matrix.
  const SkewLinearMatrix aw = wf == cert.decision_field ? a : reduce_mod(a, wf);
  auto [wa, wb] = factor_decomposable(k.wedge_basis(), dr.witness->omega);
  cert.witness_a = wa;
  cert.witness_b = wb;
  cert.u = generalized_zero(aw, wa, wb);
  if (a.n() >= 4) {
    cert.pfaffian = low_rank_generalized_pfaffian(aw, *cert.u);
    cert.pfaffian_rank = cert.pfaffian->rank();
  }
  return cert;
}

CertificateCheck verify_certificate(const SkewLinearMatrix& a,
                                    const ResonanceCertificate& cert) {
  CertificateCheck chk;
  auto flunk = [&](const std::string& why) {
    chk.ok = false;
    chk.failures.push_back(why);
  };

  if (cert.decision_field != a.ring()->field) {
    flunk("certificate field does not match the instance");
    return chk;
  }

  if (!cert.nontrivial || !cert.witness_field) {
    // No witness to check: re-derive the verdict from scratch.
    const ResonanceCertificate fresh = resonance_decide(a, Strategy::groebner);
    if (fresh.nontrivial != cert.nontrivial)
      flunk("verdict does not match a fresh decision");
    return chk;
  }

  const Field wf = *cert.witness_field;
  if (wf != cert.decision_field && !cert.decision_field.is_rational()) {
    flunk("witness field departs from a prime decision field");
    return chk;
  }
  const SkewLinearMatrix aw = wf == cert.decision_field ? a : reduce_mod(a, wf);
  const size_t n = a.n();
  const WedgeBasis& wbasis = aw.wedge_basis();

  if (cert.witness_a.size() != n || cert.witness_b.size() != n) {
    flunk("witness vector arity mismatch");
    return chk;
  }
  const VecS omega = wedge(wbasis, cert.witness_a, cert.witness_b);
  if (vec_is_zero(omega)) flunk("witness wedge vanishes (vectors dependent)");
  if (!is_decomposable(wbasis, omega)) flunk("witness wedge is not decomposable");

  // omega must lie in the kernel of the contraction against aw.
  LinearForm contraction = LinearForm::zero(aw.ring());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      contraction = contraction + aw.upper(i, j) * omega[wbasis.index(i, j)];
  if (!contraction.is_zero()) flunk("witness wedge is not in the kernel");

  if (!cert.u) {
    flunk("missing base-change matrix");
    return chk;
  }
  const DenseMatrix& u = *cert.u;
  if (u.rows() != n || u.cols() != n) {
    flunk("base-change matrix shape mismatch");
    return chk;
  }
  if (u.row(0) != cert.witness_a || u.row(1) != cert.witness_b)
    flunk("base-change matrix does not start with the witness pair");
  if (det_and_inverse(u).det.is_zero()) flunk("base-change matrix is singular");

  const SkewLinearMatrix b = base_change(aw, u);
  const bool corner_zero = b.upper(0, 1).is_zero();
  if (!corner_zero) flunk("(0,1) entry of U A U^T does not vanish");

  if (n >= 4) {
    if (!cert.pfaffian) {
      flunk("missing generalized Pfaffian");
      return chk;
    }
    // the reference Pfaffian only exists when the corner vanishes; without
    // it the corner failure above already sinks the certificate
    if (corner_zero) {
      const QuadraticForm expected = low_rank_generalized_pfaffian(aw, u);
      if (!(expected == *cert.pfaffian)) flunk("generalized Pfaffian mismatch");
      if (cert.pfaffian_rank != expected.rank()) flunk("Pfaffian rank mismatch");
    }
    if (cert.pfaffian_rank > 4) flunk("Pfaffian rank exceeds 4");
  }

  // A mod-p witness certifies the mod-p statement; the rational verdict
  // itself still rests on the emptiness check, so re-run it.
  if (wf != cert.decision_field) {
    const KernelSubspace k = kernel_of_partial(a);
    if (k.dim() == 0) {
      flunk("rational kernel is zero despite a nontrivial verdict");
    } else if (k.dim() == 1) {
      if (!is_decomposable(k.wedge_basis(), k.rows()[0]))
        flunk("rational verdict not confirmed on a line kernel");
    } else if (is_projectively_empty(decomposability_ideal(k, lambda_ring_for(k)))) {
      flunk("rational verdict contradicted by the emptiness certificate");
    }
  }
  return chk;
}

CrosscheckReport crosscheck_equivalences(const SkewLinearMatrix& a) {
  CrosscheckReport rep;
  auto note = [&](const std::string& s) { rep.notes.push_back(s); };
  auto verify_into = [&](const SkewLinearMatrix& m, const ResonanceCertificate& c,
                         const std::string& tag) {
    const CertificateCheck chk = verify_certificate(m, c);
    if (!chk.ok) {
      rep.consistent = false;
      for (const auto& f : chk.failures) note(tag + ": " + f);
    } else {
      note(tag + ": certificate verified");
    }
  };

  const ResonanceCertificate cg = resonance_decide(a, Strategy::groebner);
  rep.nontrivial = cg.nontrivial;
  note(std::string("groebner verdict: ") + (cg.nontrivial ? "nontrivial" : "trivial"));
  verify_into(a, cg, "groebner certificate");

  if (a.ring()->field.is_prime()) {
    const ResonanceCertificate cb = resonance_decide(a, Strategy::bruteforce);
    if (cb.nontrivial != cg.nontrivial) {
      rep.consistent = false;
      note("strategy disagreement over " + a.ring()->field.tag());
    } else {
      note("bruteforce agrees over " + a.ring()->field.tag());
    }
    verify_into(a, cb, "bruteforce certificate");
    return rep;
  }

  // Over Q, cross-check the two strategies on the mod-p reductions.
  for (uint32_t p : {3u, 5u}) {
    const Field fp = Field::prime(p);
    bool reducible = true;
    for (size_t i = 0; i < a.n() && reducible; ++i)
      for (size_t j = i + 1; j < a.n() && reducible; ++j)
        for (const auto& c : a.upper(i, j).coeffs())
          if (mpz_divisible_ui_p(c.rat().get_den().get_mpz_t(), p)) {
            reducible = false;
            break;
          }
    if (!reducible) {
      note("mod " + std::to_string(p) + ": skipped (denominator obstruction)");
      continue;
    }
    const SkewLinearMatrix ap = reduce_mod(a, fp);
    const ResonanceCertificate rg = resonance_decide(ap, Strategy::groebner);
    const ResonanceCertificate rb = resonance_decide(ap, Strategy::bruteforce);
    if (rg.nontrivial != rb.nontrivial) {
      rep.consistent = false;
      note("strategy disagreement mod " + std::to_string(p));
    } else {
      note("mod " + std::to_string(p) + ": strategies agree (" +
           (rg.nontrivial ? "nontrivial" : "trivial") + ")");
    }
    verify_into(ap, rg, "mod " + std::to_string(p) + " groebner certificate");
    verify_into(ap, rb, "mod " + std::to_string(p) + " bruteforce certificate");
  }
  return rep;
}

}  // namespace reskit
