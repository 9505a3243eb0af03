#include "reskit/verify.hpp"

#include <algorithm>
#include <functional>

#include "reskit/betti.hpp"
#include "reskit/fixtures.hpp"
#include "reskit/grassmann.hpp"
#include "reskit/resonance.hpp"

namespace reskit {

bool FixtureReport::all_pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

namespace {

using Body = std::function<bool(std::string& detail)>;

struct Item {
  const char* id;
  const char* description;
  Body body;
};

bool expect_eq_str(const std::string& got, const std::string& want,
                   std::string& detail) {
  if (got == want) return true;
  detail = "got \"" + got + "\", wanted \"" + want + "\"";
  return false;
}

std::vector<Item> build_items(const SkewLinearMatrix& quintic) {
  using namespace fixtures;
  std::vector<Item> items;

  items.push_back(
      {"pfaffian-4x4-sign",
       "4x4 Pfaffian with a vanishing (0,1) entry equals l03*l12 - l02*l13, a "
       "quadric of rank 4",
       [](std::string& detail) {
         const RingPtr r =
             make_ring(Field::rationals(), {"l02", "l03", "l12", "l13", "l23"});
         auto v = [&](size_t i) { return LinearForm::variable(r, i); };
         SkewLinearMatrix a(r, 4);
         a.set_upper(0, 2, v(0));
         a.set_upper(0, 3, v(1));
         a.set_upper(1, 2, v(2));
         a.set_upper(1, 3, v(3));
         a.set_upper(2, 3, v(4));
         const MultiPoly pf = pfaffian(a);
         const MultiPoly want = v(1).to_poly() * v(2).to_poly() -
                                v(0).to_poly() * v(3).to_poly();
         if (pf != want) {
           detail = "Pfaffian printed as " + poly_to_string(pf);
           return false;
         }
         const size_t rank = QuadraticForm::from_poly(pf).rank();
         if (rank != 4) {
           detail = "quadric rank " + std::to_string(rank);
           return false;
         }
         return true;
       }});

  items.push_back(
      {"plucker-quadric-n4",
       "the Plücker ideal of Gr(2,4) is the single quadric z12*z34 - z13*z24 "
       "+ z14*z23",
       [](std::string& detail) {
         const auto ctx = make_plucker_context(Field::rationals(), 4);
         const Ideal ideal = pluecker_ideal(ctx);
         if (ideal.gens().size() != 1) {
           detail = std::to_string(ideal.gens().size()) + " generators";
           return false;
         }
         return expect_eq_str(poly_to_string(ideal.gens()[0]),
                              "z12*z34 - z13*z24 + z14*z23", detail);
       }});

  items.push_back(
      {"plucker-pfaffian-ideal-match-n5",
       "for n = 5 the principal Pfaffians of the generic skew matrix generate "
       "the Plücker ideal (mutual normal-form reduction)",
       [](std::string& detail) {
         if (pfaffians_match_pluecker(make_plucker_context(Field::rationals(), 5)))
           return true;
         detail = "mutual reduction left a nonzero remainder";
         return false;
       }});

  items.push_back(
      {"quintic-surface-pfaffian-ranks",
       "the five principal Pfaffians of the quintic-surface matrix have "
       "quadric ranks {5,5,5,6,6}",
       [quintic](std::string& detail) {
         std::vector<size_t> ranks;
         for (const auto& q : principal_pfaffian_quadrics(quintic))
           ranks.push_back(q.rank());
         std::vector<size_t> sorted = ranks;
         std::sort(sorted.begin(), sorted.end());
         if (sorted == std::vector<size_t>{5, 5, 5, 6, 6}) return true;
         detail = "ranks";
         for (size_t r : ranks) detail += " " + std::to_string(r);
         return false;
       }});

  items.push_back(
      {"quintic-surface-last-pfaffian",
       "the index-4 principal Pfaffian of the quintic-surface matrix is "
       "x0*x4 - x1*x3 + x2^2",
       [quintic](std::string& detail) {
         const auto pfs = principal_pfaffians(quintic);
         return expect_eq_str(poly_to_string(pfs[4]), "x0*x4 - x1*x3 + x2^2",
                              detail);
       }});

  items.push_back(
      {"mapping-cone-rank3-bundle",
       "the mapping cone of the rank-2 pair resolution into the rank-3 bundle "
       "resolution, after the legal rank-2 cancellation, is "
       "{13, 45(-1), 55(-2), 25(-3), 2(-5)}",
       [](std::string& detail) {
         const BettiTable cone = mapping_cone(twisted_pair_table(), bundle_table(),
                                              {Cancellation{1, 0, 2}});
         BettiTable want(7);
         want.add(0, 0, 13);
         want.add(1, 1, 45);
         want.add(2, 2, 55);
         want.add(3, 3, 25);
         want.add(4, 5, 2);
         if (cone == want) return true;
         detail = "cone table:\n" + render_betti(cone);
         return false;
       }});

  items.push_back(
      {"horseshoe-acm-curve-table",
       "the horseshoe sum of the threefold ideal resolution with the twisted "
       "cone output rebuilds the ACM curve's Betti table",
       [](std::string& detail) {
         const BettiTable cone = mapping_cone(twisted_pair_table(), bundle_table(),
                                              {Cancellation{1, 0, 2}});
         const BettiTable ideal =
             horseshoe_sum(fixtures::threefold_ideal_table(), shift_internal(cone, 3));
         const BettiTable ring = ring_table_from_ideal_table(ideal);
         if (ring == acm_curve_table()) return true;
         detail = "horseshoe table:\n" + render_betti(ring);
         return false;
       }});

  items.push_back(
      {"hilbert-numerator-acm-curve",
       "the ACM curve table has Hilbert numerator "
       "1 - 5t^2 - 8t^3 + 45t^4 - 56t^5 + 25t^6 - 2t^8",
       [](std::string& detail) {
         return expect_eq_str(hilbert_numerator(acm_curve_table()).to_string(),
                              curve_numerator().to_string(), detail);
       }});

  items.push_back(
      {"hilbert-numerator-generic-table",
       "the generic curve table has the same Hilbert numerator as the ACM "
       "curve table",
       [](std::string& detail) {
         return expect_eq_str(hilbert_numerator(generic_curve_table()).to_string(),
                              curve_numerator().to_string(), detail);
       }});

  items.push_back(
      {"table-difference-single-cancellation",
       "removing the single consecutive pair of multiplicity 5 at internal "
       "degree 3 turns the ACM curve table into the generic table",
       [](std::string& detail) {
         BettiTable t = acm_curve_table();
         t.add(2, 3, -5);
         t.add(1, 3, -5);
         if (t == generic_curve_table()) return true;
         detail = "cancelled table:\n" + render_betti(t);
         return false;
       }});

  items.push_back(
      {"dual-table-two-sections",
       "the dual of the ACM curve table (codimension 5, dualizing degree -7) "
       "has multiplicity 2 at (0,-1) and dualizing twice is the identity",
       [](std::string& detail) {
         const BettiTable d = dual_betti(acm_curve_table(), 5, -7);
         if (d.at(0, -1) != 2) {
           detail = "entry (0,-1) = " + std::to_string(d.at(0, -1));
           return false;
         }
         if (!(dual_betti(d, 5, -7) == acm_curve_table())) {
           detail = "dualizing twice changed the table";
           return false;
         }
         return true;
       }});

  items.push_back(
      {"quintic-surface-hilbert-series",
       "the Pfaffian ideal of the quintic-surface matrix has Hilbert "
       "numerator 1 - 5t^2 + 5t^3 - t^5 over its 6 variables",
       [quintic](std::string& detail) {
         const Ideal ideal(quintic.ring(), principal_pfaffians(quintic));
         return expect_eq_str(hilbert_series_numerator(ideal).to_string(),
                              quintic_numerator().to_string(), detail);
       }});

  items.push_back(
      {"grassmann-hilbert-series",
       "the Plücker ideal of Gr(2,5) has Hilbert numerator "
       "1 - 5t^2 + 5t^3 - t^5 over its 10 variables",
       [](std::string& detail) {
         const auto ctx = make_plucker_context(Field::rationals(), 5);
         return expect_eq_str(hilbert_series_numerator(pluecker_ideal(ctx)).to_string(),
                              quintic_numerator().to_string(), detail);
       }});

  items.push_back(
      {"quintic-surface-resonance",
       "the quintic-surface matrix has nontrivial resonance with a fully "
       "re-verified certificate, and its rank <= 4 generalized Pfaffian "
       "reduces to 0 against the transformed Pfaffian ideal",
       [quintic](std::string& detail) {
         const ResonanceCertificate cert = resonance_decide(quintic);
         if (!cert.nontrivial) {
           detail = "verdict trivial";
           return false;
         }
         const CertificateCheck chk = verify_certificate(quintic, cert);
         if (!chk.ok) {
           detail = "certificate re-verification failed: " + chk.failures.front();
           return false;
         }
         if (!cert.witness_field || !cert.u) {
           detail = "no witness extracted";
           return false;
         }
         if (!cert.pfaffian || cert.pfaffian_rank > 4) {
           detail = "generalized Pfaffian missing or of rank > 4";
           return false;
         }
         const Field wf = *cert.witness_field;
         const SkewLinearMatrix aw =
             wf == cert.decision_field ? quintic : reduce_mod(quintic, wf);
         const SkewLinearMatrix b = base_change(aw, *cert.u);
         const Ideal transformed(b.ring(), principal_pfaffians(b));
         const auto gb = groebner_basis(transformed);
         if (!normal_form(cert.pfaffian->poly(), gb).is_zero()) {
           detail = "generalized Pfaffian is not in the transformed ideal";
           return false;
         }
         return true;
       }});

  return items;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> fixture_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& it : build_items(fixtures::quintic_surface_matrix()))
    out.emplace_back(it.id, it.description);
  return out;
}

FixtureReport run_fixture_suite(const SkewLinearMatrix& quintic) {
  FixtureReport report;
  for (const auto& item : build_items(quintic)) {
    FixtureResult res;
    res.id = item.id;
    res.description = item.description;
    try {
      res.pass = item.body(res.detail);
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    report.items.push_back(std::move(res));
  }
  return report;
}

FixtureReport run_fixture_suite() {
  return run_fixture_suite(fixtures::quintic_surface_matrix());
}

}  // namespace reskit
