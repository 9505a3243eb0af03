#pragma once

#include <optional>

#include "reskit/groebner.hpp"
#include "reskit/skew.hpp"

namespace reskit {

// A linear subspace K of wedge^2 k^n, stored as its canonical reduced
// row-echelon basis (rows independent, first nonzero entry 1, pivot columns
// cleared).  Any spanning set canonicalizes to the same object.
class KernelSubspace {
public:
  KernelSubspace(const Field& f, size_t n, const std::vector<VecS>& spanning_rows);

  const Field& field() const { return field_; }
  size_t n() const { return wb_.n; }
  size_t dim() const { return rows_.size(); }
  const WedgeBasis& wedge_basis() const { return wb_; }
  const std::vector<VecS>& rows() const { return rows_; }

  // sum_t lambda_t * row_t.
  VecS combine(const VecS& lambda) const;
  // Coordinates of w in the basis, if w lies in the subspace.
  std::optional<VecS> coordinates(const VecS& w) const;

private:
  Field field_;
  WedgeBasis wb_;
  std::vector<size_t> pivots_;
  std::vector<VecS> rows_;
};

// Kernel of the contraction map sending e_i ^ e_j to the linear form A[i][j]:
// all wedge coordinates c with sum c_ij A[i][j] = 0 identically.
KernelSubspace kernel_of_partial(const SkewLinearMatrix& a);

// The quadrics in lambda_0..lambda_{k-1} cutting out the decomposable locus
// of P(K): the wedge-square components of sum lambda_t row_t.  Zero
// components are dropped; the ideal may be the zero ideal.
Ideal decomposability_ideal(const KernelSubspace& k, const RingPtr& lambda_ring);
RingPtr lambda_ring_for(const KernelSubspace& k);

enum class Strategy { groebner, bruteforce };

struct DecompWitness {
  Field field;  // field the witness coordinates live in
  VecS omega;   // nonzero decomposable element of K (over `field`)
};

struct DecompResult {
  // Over Q: is the decomposable locus of P(K) nonempty over the algebraic
  // closure.  Over F_p: does it contain an F_p-rational point.  The two
  // strategies agree on this bit by construction.
  bool nonempty = false;
  // Exact witness when one was found; over Q the search may legitimately
  // come back with a witness over F_p only (witness_prime records p).
  std::optional<DecompWitness> witness;
  std::optional<uint32_t> witness_prime;
};

// strategy groebner: emptiness certificate on the decomposability ideal
// (plus projective field equations over F_p), exact witness extraction.
// strategy bruteforce: exhaustive scan of Gr(2,n)(F_p) in canonical
// row-echelon cell order, testing membership in K; prime fields only.
DecompResult decomposable_in_subspace(const KernelSubspace& k, Strategy strategy);

// Number of points of Gr(2,n)(F_p), by the same enumeration the bruteforce
// strategy uses.
uint64_t gr2_point_count(size_t n, uint32_t p);

// First Gr(2,n)(F_p) point lying in K, in canonical enumeration order.
std::optional<VecS> first_gr2_point_in_subspace(const KernelSubspace& k);

// Invertible U whose first two rows are u, v; requires the contraction of
// u ^ v against A to vanish, so that (U A U^T)_{01} = 0.
DenseMatrix generalized_zero(const SkewLinearMatrix& a, const VecS& u, const VecS& v);

// The Pfaffian of the top-left 4x4 block of U A U^T when its (0,1) entry
// vanishes: B_{03} B_{12} - B_{02} B_{13}, a quadratic form of rank <= 4.
QuadraticForm low_rank_generalized_pfaffian(const SkewLinearMatrix& a,
                                            const DenseMatrix& u);

struct ResonanceCertificate {
  bool nontrivial = false;
  Field decision_field = Field::rationals();

  // Populated for nontrivial verdicts when a witness was extracted.
  std::optional<Field> witness_field;  // decision field, or F_p fallback over Q
  VecS witness_a, witness_b;
  std::optional<DenseMatrix> u;
  std::optional<QuadraticForm> pfaffian;  // n >= 4 only
  size_t pfaffian_rank = 0;
};

// Decides triviality of the resonance locus of A (trivial iff the kernel
// subspace meets the decomposable cone only in 0) and assembles the
// certificate.  Deterministic for a fixed strategy.
ResonanceCertificate resonance_decide(const SkewLinearMatrix& a,
                                      Strategy strategy = Strategy::groebner);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Re-verifies every claim in the certificate against A by independent exact
// arithmetic (witness in the kernel, decomposability, U invertible, the
// (0,1) entry of U A U^T zero, Pfaffian quadric and its rank).
CertificateCheck verify_certificate(const SkewLinearMatrix& a,
                                    const ResonanceCertificate& cert);

struct CrosscheckReport {
  bool consistent = true;
  bool nontrivial = false;  // verdict on the input instance
  std::vector<std::string> notes;
};

// Cross-checks the equivalent characterizations on one instance: the kernel
// criterion, the generalized-zero witness, and the rank <= 4 generalized
// Pfaffian, plus agreement of the groebner strategy with the brute-force
// enumeration oracle (directly over F_p; over Q on the mod-3 and mod-5
// reductions whenever the instance reduces).  Any disagreement is reported
// as inconsistent.
CrosscheckReport crosscheck_equivalences(const SkewLinearMatrix& a);

// Thread budget for brute-force scans: RESONANCE_KIT_THREADS, default 1.
unsigned thread_cap();

}  // namespace reskit
