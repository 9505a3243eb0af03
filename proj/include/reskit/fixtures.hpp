#pragma once

#include "reskit/betti.hpp"
#include "reskit/skew.hpp"

namespace reskit {
namespace fixtures {

// 5x5 skew matrix of linear forms over Q[x0..x5] whose five principal
// Pfaffians cut a quintic surface: quadric ranks {5,5,5,6,6}, Hilbert
// numerator 1 - 5t^2 + 5t^3 - t^5, and nontrivial resonance whose
// decomposable locus has no rational point (witnesses live mod p).
SkewLinearMatrix quintic_surface_matrix();

// Same matrix with one upper entry replaced; the fault-injection handle for
// the verification suite's negative tests.
SkewLinearMatrix quintic_surface_matrix_with(size_t i, size_t j,
                                             const LinearForm& f);

// Betti tables over 7 ambient variables (curves and threefolds in P^6).

// Minimal free resolution of the coordinate ring of an arithmetically
// Cohen-Macaulay degree-13 genus-9 curve:
// {1@(0,0), 5@(1,2), 13@(1,3), 5@(2,3), 45@(2,4), 56@(3,5), 25@(4,6), 2@(5,8)}.
BettiTable acm_curve_table();

// The same numerics after the single consecutive cancellation of
// multiplicity 5 at internal degree 3 — the shape expected of a generic such
// curve: {1, 5@(1,2), 8@(1,3), 45@(2,4), 56@(3,5), 25@(4,6), 2@(5,8)}.
BettiTable generic_curve_table();

// Resolution of the ideal of the quintic threefold section of Gr(2,5) in
// P^6: {5@(0,2), 5@(1,3), 1@(2,5)} (the length-3 skew-Pfaffian complex).
BettiTable threefold_ideal_table();

// Linear resolution {15@(0,0), 45@(1,1), 45@(2,2), 15@(3,3)} of a rank-3
// bundle pushed forward from the threefold; target of the mapping cone.
BettiTable bundle_table();

// Resolution {2@(0,0), 10@(1,2), 10@(2,3), 2@(3,5)} of a free rank-2 module
// over the threefold's coordinate ring; source of the mapping cone.
BettiTable twisted_pair_table();

// 1 - 5t^2 - 8t^3 + 45t^4 - 56t^5 + 25t^6 - 2t^8.
IntPoly curve_numerator();

// 1 - 5t^2 + 5t^3 - t^5.
IntPoly quintic_numerator();

}  // namespace fixtures
}  // namespace reskit
