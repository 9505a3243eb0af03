#include "reskit/lift.hpp"

#include "reskit/error.hpp"

namespace reskit {

mpz_class ZQuadric::eval(const std::vector<mpz_class>& x) const {
  mpz_class acc = 0;
  for (const auto& [i, j, c] : terms) acc += c * x[i] * x[j];
  return acc;
}

mpz_class ZQuadric::partial(size_t s, const std::vector<mpz_class>& x) const {
  mpz_class acc = 0;
  for (const auto& [i, j, c] : terms) {
    if (i == j) {
      if (i == s) acc += 2 * c * x[i];
    } else {
      if (i == s) acc += c * x[j];
      if (j == s) acc += c * x[i];
    }
  }
  return acc;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = (m - 1) / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  mpz_class den = t1 < 0 ? mpz_class(-t1) : t1;
  mpz_class num = t1 < 0 ? mpz_class(-r1) : r1;
  if (den > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && !(num == 0 && den == 1)) {
    num /= g;
    den /= g;
  }
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

namespace {

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

// Solve J * delta = rhs (mod m) where J is invertible mod p and m is a power
// of p: Gaussian elimination with unit pivots (entries not divisible by p).
std::optional<std::vector<mpz_class>> solve_unit_mod(
    std::vector<std::vector<mpz_class>> j, std::vector<mpz_class> rhs,
    const mpz_class& m, uint32_t p) {
  const size_t n = rhs.size();
  std::vector<size_t> perm(n);
  for (size_t c = 0; c < n; ++c) {
    size_t sel = n;
    for (size_t r = c; r < n; ++r) {
      if (mpz_divisible_ui_p(j[r][c].get_mpz_t(), p)) continue;
      sel = r;
      break;
    }
    if (sel == n) return std::nullopt;
    std::swap(j[c], j[sel]);
    std::swap(rhs[c], rhs[sel]);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), j[c][c].get_mpz_t(), m.get_mpz_t()) == 0)
      return std::nullopt;
    for (size_t cc = c; cc < n; ++cc) j[c][cc] = mod_pos(j[c][cc] * inv, m);
    rhs[c] = mod_pos(rhs[c] * inv, m);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || j[r][c] == 0) continue;
      const mpz_class f = j[r][c];
      for (size_t cc = c; cc < n; ++cc) j[r][cc] = mod_pos(j[r][cc] - f * j[c][cc], m);
      rhs[r] = mod_pos(rhs[r] - f * rhs[c], m);
    }
  }
  return rhs;
}

}  // namespace

std::optional<std::vector<mpq_class>> lift_projective_point(
    const std::vector<ZQuadric>& system, uint32_t p,
    const std::vector<uint32_t>& point, size_t pivot, unsigned doublings) {
  if (system.empty()) return std::nullopt;
  const size_t k = system[0].nvars;
  if (point.size() != k || pivot >= k || point[pivot] != 1)
    fail_pre("lift point must be pivot-normalized");

  // Unknowns: all coordinates except the pivot.
  std::vector<size_t> unk;
  for (size_t i = 0; i < k; ++i)
    if (i != pivot) unk.push_back(i);
  const size_t d = unk.size();
  if (d == 0) return std::nullopt;

  std::vector<mpz_class> x(k);
  for (size_t i = 0; i < k; ++i) x[i] = point[i];

  // Select d rows with Jacobian (w.r.t. the unknowns) invertible mod p, by
  // greedy elimination over F_p.
  std::vector<size_t> rows;
  {
    std::vector<std::vector<mpz_class>> elim;
    for (size_t t = 0; t < system.size() && rows.size() < d; ++t) {
      // Reduce the row against already-selected ones to test independence mod p.
      std::vector<mpz_class> r(d);
      for (size_t s = 0; s < d; ++s) r[s] = mod_pos(system[t].partial(unk[s], x), p);
      for (size_t e = 0; e < elim.size(); ++e) {
        size_t lead = 0;
        while (lead < d && elim[e][lead] == 0) ++lead;
        if (lead == d || r[lead] == 0) continue;
        const mpz_class f = r[lead];
        for (size_t s = lead; s < d; ++s) r[s] = mod_pos(r[s] - f * elim[e][s], p);
      }
      bool nonzero = false;
      for (const auto& v : r) nonzero = nonzero || v != 0;
      if (!nonzero) continue;
      // Normalize the new eliminator to a unit leading entry.
      size_t lead = 0;
      while (r[lead] == 0) ++lead;
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), r[lead].get_mpz_t(), mpz_class(p).get_mpz_t());
      for (size_t s = lead; s < d; ++s) r[s] = mod_pos(r[s] * inv, p);
      elim.push_back(r);
      rows.push_back(t);
    }
  }
  if (rows.size() < d) return std::nullopt;  // singular point mod p

  // Quadratic Newton: x <- x - J(x)^{-1} F(x), modulus squaring each step.
  mpz_class m = p;
  for (unsigned it = 0; it < doublings; ++it) {
    m = m * m;
    std::vector<mpz_class> f(d);
    for (size_t t = 0; t < d; ++t) f[t] = mod_pos(system[rows[t]].eval(x), m);
    std::vector<std::vector<mpz_class>> jm(d, std::vector<mpz_class>(d));
    for (size_t t = 0; t < d; ++t)
      for (size_t s = 0; s < d; ++s)
        jm[t][s] = mod_pos(system[rows[t]].partial(unk[s], x), m);
    auto delta = solve_unit_mod(std::move(jm), std::move(f), m, p);
    if (!delta) return std::nullopt;
    for (size_t s = 0; s < d; ++s) x[unk[s]] = mod_pos(x[unk[s]] - (*delta)[s], m);
  }

  // Rational reconstruction per coordinate, then exact verification of the
  // full system (selected and unselected rows alike).
  std::vector<mpq_class> out(k);
  out[pivot] = 1;
  for (size_t s = 0; s < d; ++s) {
    auto q = rational_reconstruct(x[unk[s]], m);
    if (!q) return std::nullopt;
    out[unk[s]] = *q;
  }
  for (const auto& quad : system) {
    mpq_class acc = 0;
    for (const auto& [i, j, c] : quad.terms) acc += mpq_class(c) * out[i] * out[j];
    if (acc != 0) return std::nullopt;
  }
  return out;
}

}  // namespace reskit
