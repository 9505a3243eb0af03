#include "reskit/grassmann.hpp"

namespace reskit {

PluckerContext make_plucker_context(const Field& f, size_t n) {
  require_pre(n >= 2 && n <= 9, "Plücker context supports 2 <= n <= 9");
  WedgeBasis wb(n);
  std::vector<std::string> names;
  names.reserve(wb.size());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      names.push_back("z" + std::to_string(i + 1) + std::to_string(j + 1));
  return PluckerContext{n, wb, make_ring(f, std::move(names))};
}

SkewLinearMatrix generic_skew(const PluckerContext& ctx) {
  SkewLinearMatrix a(ctx.ring, ctx.n);
  for (size_t i = 0; i < ctx.n; ++i)
    for (size_t j = i + 1; j < ctx.n; ++j)
      a.set_upper(i, j, LinearForm::variable(ctx.ring, ctx.wb.index(i, j)));
  return a;
}

Ideal pluecker_ideal(const PluckerContext& ctx) {
  require_pre(ctx.n >= 4, "Plücker ideal is zero for n < 4");
  auto z = [&](size_t i, size_t j) {
    return MultiPoly::variable(ctx.ring, ctx.wb.index(i, j));
  };
  std::vector<MultiPoly> gens;
  for (size_t p = 0; p < ctx.n; ++p)
    for (size_t q = p + 1; q < ctx.n; ++q)
      for (size_t r = q + 1; r < ctx.n; ++r)
        for (size_t s = r + 1; s < ctx.n; ++s)
          gens.push_back(z(p, q) * z(r, s) - z(p, r) * z(q, s) + z(p, s) * z(q, r));
  return Ideal(ctx.ring, std::move(gens));
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  require_pre(same_ring(a.ring(), b.ring()), "ideal comparison across rings");
  const auto gb_a = groebner_basis(a);
  for (const auto& g : b.gens())
    if (!normal_form(g, gb_a).is_zero()) return false;
  const auto gb_b = groebner_basis(b);
  for (const auto& g : a.gens())
    if (!normal_form(g, gb_b).is_zero()) return false;
  return true;
}

bool pfaffians_match_pluecker(const PluckerContext& ctx) {
  require_pre(ctx.n == 5, "Pfaffian/Plücker dictionary is stated for n = 5");
  const Ideal pl = pluecker_ideal(ctx);
  Ideal pf(ctx.ring, principal_pfaffians(generic_skew(ctx)));
  return same_ideal(pl, pf);
}

std::vector<VecS> annihilator_basis(const Field& f, size_t ambient_dim,
                                    const std::vector<VecS>& rows) {
  for (const auto& r : rows)
    require_pre(r.size() == ambient_dim, "annihilator row arity mismatch");
  if (rows.empty()) {
    // Annihilator of the zero span: the full space, canonically the identity.
    std::vector<VecS> all;
    for (size_t i = 0; i < ambient_dim; ++i) {
      VecS e(ambient_dim, Scalar::zero(f));
      e[i] = Scalar::one(f);
      all.push_back(std::move(e));
    }
    return all;
  }
  RrefResult rr = rref(DenseMatrix::from_rows(f, rows));
  // rref kernel vectors are already canonical; re-echelonize to fix the
  // basis ordering/orientation independent of the input presentation.
  if (rr.kernel.empty()) return {};
  RrefResult canon = rref(DenseMatrix::from_rows(f, rr.kernel));
  std::vector<VecS> out;
  for (size_t i = 0; i < canon.rank; ++i) out.push_back(canon.rref.row(i));
  return out;
}

LinearSection::LinearSection(PluckerContext ctx, const std::vector<VecS>& lperp_rows)
    : ctx_(std::move(ctx)), lperp_(ctx_.ring->field, ctx_.n, lperp_rows) {
  require_pre(ctx_.n == 5, "linear sections are supported for Gr(2,5)");
  require_pre(lperp_.dim() == 3,
              "annihilator must have dimension 3 (codimension-3 section)");
  l_ = annihilator_basis(ctx_.ring->field, ctx_.wb.size(), lperp_.rows());
  require_pre(l_.size() + lperp_.dim() == ctx_.wb.size(),
              "annihilator dimension split failed");
}

SectionReport section_smoothness(const LinearSection& s, Strategy strategy) {
  SectionReport rep;
  DecompResult dr = decomposable_in_subspace(s.lperp(), strategy);
  if (!dr.nonempty) return rep;
  rep.verdict = SectionVerdict::singular_or_degenerate;
  rep.witness = dr.witness;
  rep.witness_prime = dr.witness_prime;
  return rep;
}

}  // namespace reskit
