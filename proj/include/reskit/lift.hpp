#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

namespace reskit {

// Quadratic form with integer coefficients: sum of c * x_i * x_j, i <= j.
struct ZQuadric {
  size_t nvars;
  std::vector<std::tuple<size_t, size_t, mpz_class>> terms;

  mpz_class eval(const std::vector<mpz_class>& x) const;
  // Gradient entry d/dx_s.
  mpz_class partial(size_t s, const std::vector<mpz_class>& x) const;
};

// Quadratic Newton lifting of a simple solution mod p to a rational solution.
// `point` is a projective solution of all quadrics mod p with point[pivot]=1.
// Dehomogenizes at `pivot`, selects an invertible square Jacobian subsystem
// mod p, doubles the modulus to p^(2^iters), then applies rational
// reconstruction (bound sqrt(M/2)) coordinate-wise.  Returns the candidate
// only if every quadric vanishes on it exactly over Q.  Failure (singular
// Jacobian, reconstruction miss, non-solution) is a clean nullopt — the
// caller moves on to another point or prime.
std::optional<std::vector<mpq_class>> lift_projective_point(
    const std::vector<ZQuadric>& system, uint32_t p,
    const std::vector<uint32_t>& point, size_t pivot, unsigned doublings = 6);

// Rational reconstruction: the unique n/d with |n|, d <= sqrt(M/2),
// n = a*d mod M, if it exists.
std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m);

}  // namespace reskit
