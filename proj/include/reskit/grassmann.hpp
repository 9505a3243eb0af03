#pragma once

#include <optional>
#include <vector>

#include "reskit/groebner.hpp"
#include "reskit/resonance.hpp"
#include "reskit/skew.hpp"

namespace reskit {

// Plücker coordinates z_{ij} on P(wedge^2 k^n): one ring variable per wedge
// basis element in lex pair order, printed 1-based ("z12" pairs with e_0^e_1).
struct PluckerContext {
  size_t n;
  WedgeBasis wb;
  RingPtr ring;
};

// 2 <= n <= 9 (single-digit labels); most callers want n = 4 or 5.
PluckerContext make_plucker_context(const Field& f, size_t n);

// Generic symbolic skew matrix over the Plücker ring: entry (i, j) = z_{ij}.
SkewLinearMatrix generic_skew(const PluckerContext& ctx);

// The coordinates of w ^ w for symbolic w: the quadrics cutting Gr(2,n) in
// P(wedge^2 V).  For n = 4 exactly {z12 z34 - z13 z24 + z14 z23}; requires
// n >= 4 (below that the ideal is zero and the Grassmannian is everything).
Ideal pluecker_ideal(const PluckerContext& ctx);

// Mutual normal-form containment of the generator sets, each reduced against
// the other side's Groebner basis.
bool same_ideal(const Ideal& a, const Ideal& b);

// n = 5 only: do the principal Pfaffians of the generic symbolic matrix
// generate the Plücker ideal?  (They do; the check is the honest mutual
// reduction, not the identity.)
bool pfaffians_match_pluecker(const PluckerContext& ctx);

// Annihilator of the row span under the coordinatewise dot pairing, as a
// canonical reduced-echelon basis.  Applying it twice recovers the canonical
// basis of the original span; dimensions add up to ambient_dim.
std::vector<VecS> annihilator_basis(const Field& f, size_t ambient_dim,
                                    const std::vector<VecS>& rows);

// Codimension-3 linear section of Gr(2,5) in P^9 = P(wedge^2 V), presented
// by a basis of the annihilator L^perp of its ambient span L.  The basis of
// L is recomputed on construction and the dimension split 3 + 7 verified.
class LinearSection {
public:
  LinearSection(PluckerContext ctx, const std::vector<VecS>& lperp_rows);

  const PluckerContext& context() const { return ctx_; }
  const KernelSubspace& lperp() const { return lperp_; }
  // Canonical echelon bases.
  const std::vector<VecS>& lperp_rows() const { return lperp_.rows(); }
  const std::vector<VecS>& l_rows() const { return l_; }

private:
  PluckerContext ctx_;
  KernelSubspace lperp_;
  std::vector<VecS> l_;
};

enum class SectionVerdict { smooth_transverse, singular_or_degenerate };

struct SectionReport {
  SectionVerdict verdict = SectionVerdict::smooth_transverse;
  // Decomposable 2-form in the annihilator span (a point of the dual
  // intersection Y) when the verdict is singular_or_degenerate.
  std::optional<DecompWitness> witness;
  std::optional<uint32_t> witness_prime;  // set when a Q-section only yields a mod-p witness
};

// Dual emptiness criterion: the section is smooth and dimensionally
// transverse iff span(L^perp) contains no nonzero decomposable 2-form.
SectionReport section_smoothness(const LinearSection& s,
                                 Strategy strategy = Strategy::groebner);

}  // namespace reskit
