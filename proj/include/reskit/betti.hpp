#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reskit/error.hpp"
#include "reskit/intpoly.hpp"

namespace reskit {

// Graded Betti table: finitely many positive multiplicities b_{i,j} indexed
// by homological degree i >= 0 and internal degree j (negative j occurs in
// dual tables).  `vars` is the ambient variable count (N+1 for P^N), the
// exponent of (1-t) under the Hilbert numerator.
class BettiTable {
public:
  explicit BettiTable(size_t vars);

  size_t vars() const { return vars_; }
  bool is_zero() const { return e_.empty(); }
  const std::map<std::pair<int, int>, long long>& entries() const { return e_; }

  // Accumulates mult at (i, j); entries must stay nonnegative and vanish
  // from the map at zero.
  void add(int i, int j, long long mult);
  long long at(int i, int j) const;
  int max_homological_degree() const;  // -1 for the zero table

  bool operator==(const BettiTable& o) const;
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

private:
  size_t vars_;
  std::map<std::pair<int, int>, long long> e_;
};

// Alternating sum N(t) = sum_{i,j} (-1)^i b_{i,j} t^j, the numerator of the
// Hilbert series over (1-t)^vars.  Requires all internal degrees >= 0.
IntPoly hilbert_numerator(const BettiTable& b);

// One cancellation step inside a mapping cone: removes `mult` from the
// entries at (i, j) and (i-1, j), a pair of equal-twist summands in adjacent
// homological degrees (alternating-sum neutral by construction).
struct Cancellation {
  int i;
  int j;
  long long mult;
};

// Cone of an injection with resolved source A and target B:
// C_i = B_i (+) A_{i-1}, then the listed cancellations applied.  A
// cancellation that would drive an entry negative is rejected with the
// offending position.
BettiTable mapping_cone(const BettiTable& a, const BettiTable& b,
                        const std::vector<Cancellation>& cancellations);

// Degreewise direct sum B_i = A_i (+) C_i, resolving the middle term of a
// short exact sequence from resolutions of the outer terms.
BettiTable horseshoe_sum(const BettiTable& a, const BettiTable& c);

// Dual resolution of a module of codimension `codim` against the dualizing
// twist: b'_{i,k} = b_{codim - i, -omega_degree - k}.  An involution for
// fixed (codim, omega_degree).
BettiTable dual_betti(const BettiTable& b, int codim, int omega_degree);

// Twist by O(-delta): every internal degree shifted by delta.
BettiTable shift_internal(const BettiTable& b, int delta);

// Resolution of R/I from a resolution of the ideal I: entries move one
// homological step up and a single free rank-1 generator appears at (0,0).
BettiTable ring_table_from_ideal_table(const BettiTable& ideal_table);

// Consistency gate: the table's alternating sum equals `expected` and no
// homological degree exceeds the variable count.
bool validate_acm_table(const BettiTable& b, const IntPoly& expected);

// Diagram with rows indexed by j - i and columns by i, dots for vacancies:
//        0   1   2
//   0:   1   .   .
//   1:   .   5   5
std::string render_betti(const BettiTable& b);

}  // namespace reskit
