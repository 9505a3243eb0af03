#pragma once

#include "reskit/intpoly.hpp"
#include "reskit/poly.hpp"

namespace reskit {

// Homogeneous ideal presented by homogeneous, nonzero generators (the list
// may be empty: the zero ideal).
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<MultiPoly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& gens() const { return gens_; }

private:
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
};

// Unique reduced Groebner basis: monic, self-reduced, sorted by ascending
// leading monomial.  Buchberger with normal (smallest-lcm) selection, the
// coprime-leading-term criterion and the chain criterion; over Q every
// intermediate remainder is content-normalized to primitive integer
// coefficients to keep growth in check.
std::vector<MultiPoly> groebner_basis(const Ideal& ideal,
                                      const TermOrder& ord = TermOrder::grevlex());

// Full normal form: no term of the result is divisible by any basis leading
// monomial.  The result is the canonical representative modulo the ideal
// when `basis` is a Groebner basis under `ord`.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const TermOrder& ord = TermOrder::grevlex());

// x_i^p x_j - x_i x_j^p for i < j (prime fields only).  Cutting these into an
// ideal restricts its projective zero locus to the F_p-rational points.
std::vector<MultiPoly> projective_field_equations(const RingPtr& ring);

struct EmptinessCertificate {
  bool empty;
  std::vector<MultiPoly> basis;      // the Groebner basis actually inspected
  std::vector<int> pure_power_degs;  // per variable: witnessed degree, 0 if none
};

// Over Q: emptiness of V(I) in P^{n-1} over the algebraic closure (the basis
// exposes a pure power of every variable).  Over F_p: emptiness of the set of
// F_p-rational projective points — the same certificate after adjoining the
// projective field equations, so the verdict provably agrees with exhaustive
// point enumeration.
EmptinessCertificate projective_emptiness(const Ideal& ideal);
bool is_projectively_empty(const Ideal& ideal);

// Numerator of the Hilbert series of ring/ideal over (1-t)^nvars, computed
// from the grevlex leading-term ideal by the standard colon/sum recursion.
IntPoly hilbert_series_numerator(const Ideal& ideal);

// Same recursion, exposed for monomial input (exponent vectors).
IntPoly hilbert_numerator_of_monomial_ideal(std::vector<Monomial> gens);

}  // namespace reskit
