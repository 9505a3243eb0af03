#include "reskit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "reskit/fixtures.hpp"
#include "reskit/instance_io.hpp"
#include "reskit/random_gen.hpp"
#include "reskit/verify.hpp"

namespace reskit {

namespace {

struct CliResult {
  Json doc;              // structured output (always valid JSON)
  std::string pretty;    // human rendering, used by --pretty
  std::string expected;  // canonical value --expect compares against
  int code = 0;          // exit code before --expect rewiring
};

Strategy strategy_of(const std::string& s) {
  return s == "bruteforce" ? Strategy::bruteforce : Strategy::groebner;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

long long int_of(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) fail_input(what + ": trailing junk in '" + s + "'");
    return v;
  } catch (const std::invalid_argument&) {
    fail_input(what + ": '" + s + "' is not an integer");
  } catch (const std::out_of_range&) {
    fail_input(what + ": '" + s + "' is out of range");
  }
}

CliResult handle_pfaffian(const std::string& file, bool principal) {
  const SkewLinearMatrix a = skew_from_json(load_instance(file, "skew"));
  CliResult r;
  if (principal) {
    require_pre(a.n() % 2 == 1, "principal Pfaffians need odd matrix size");
    const auto pfs = principal_pfaffians(a);
    Json arr = Json::array();
    std::string joined;
    for (size_t k = 0; k < pfs.size(); ++k) {
      const std::string s = poly_to_string(pfs[k]);
      arr.push_back(s);
      r.pretty += "Pf_" + std::to_string(k) + " = " + s + "\n";
      joined += (k ? "; " : "") + s;
    }
    r.doc["kind"] = "principal_pfaffians";
    r.doc["field"] = a.ring()->field.tag();
    r.doc["vars"] = a.ring()->vars;
    r.doc["pfaffians"] = arr;
    r.expected = joined;
  } else {
    require_pre(a.n() % 2 == 0,
                "the Pfaffian needs even matrix size (use --principal for odd)");
    const std::string s = poly_to_string(pfaffian(a));
    r.doc["kind"] = "pfaffian";
    r.doc["field"] = a.ring()->field.tag();
    r.doc["vars"] = a.ring()->vars;
    r.doc["pfaffian"] = s;
    r.pretty = "Pf = " + s + "\n";
    r.expected = s;
  }
  return r;
}

size_t rank_of_expr(const RingPtr& ring, const std::string& expr) {
  return QuadraticForm::from_poly(poly_parse(ring, expr)).rank();
}

CliResult handle_quadric_rank(const std::string& file, const std::string& expr,
                              const std::string& vars_csv, const std::string& field_tag) {
  CliResult r;
  if (!expr.empty()) {
    require_input(!vars_csv.empty(), "--expr needs --vars");
    const Field f = Field::parse(field_tag);
    const auto names = split_csv(vars_csv);
    for (const auto& nm : names)
      require_input(!nm.empty(), "--vars has an empty name");
    require_input(std::set<std::string>(names.begin(), names.end()).size() == names.size(),
                  "--vars has duplicates");
    const size_t rank = rank_of_expr(make_ring(f, names), expr);
    r.doc["kind"] = "quadric_rank";
    r.doc["rank"] = rank;
    r.pretty = "rank " + std::to_string(rank) + "\n";
    r.expected = std::to_string(rank);
    return r;
  }
  require_input(!file.empty(), "quadric-rank needs a file or --expr");
  const Json j = load_instance(file, "");
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail_input("document lacks a \"kind\" discriminator");
  const std::string kind = j["kind"].get<std::string>();
  const Field f = Field::parse(j.value("field", "Q"));
  if (!j.contains("vars")) fail_input("missing \"vars\" array");
  std::vector<std::string> names;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) fail_input("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  const RingPtr ring = make_ring(f, names);
  if (kind == "quadric") {
    if (!j.contains("expr") || !j["expr"].is_string())
      fail_input("\"quadric\" documents need an \"expr\" string");
    const size_t rank = rank_of_expr(ring, j["expr"].get<std::string>());
    r.doc["kind"] = "quadric_rank";
    r.doc["rank"] = rank;
    r.pretty = "rank " + std::to_string(rank) + "\n";
    r.expected = std::to_string(rank);
    return r;
  }
  if (kind == "principal_pfaffians") {
    if (!j.contains("pfaffians") || !j["pfaffians"].is_array())
      fail_input("missing \"pfaffians\" array");
    Json ranks = Json::array();
    std::string joined;
    for (const auto& s : j["pfaffians"]) {
      if (!s.is_string()) fail_input("Pfaffians must be polynomial strings");
      const size_t rank = rank_of_expr(ring, s.get<std::string>());
      ranks.push_back(rank);
      joined += (joined.empty() ? "" : ",") + std::to_string(rank);
    }
    r.doc["kind"] = "quadric_ranks";
    r.doc["ranks"] = ranks;
    r.pretty = "ranks " + joined + "\n";
    r.expected = joined;
    return r;
  }
  fail_input("quadric-rank reads \"quadric\" or \"principal_pfaffians\" documents");
}

CliResult certificate_result(const ResonanceCertificate& cert) {
  CliResult r;
  r.doc = certificate_to_json(cert);
  r.expected = cert.nontrivial ? "nontrivial" : "trivial";
  r.pretty = "verdict: " + r.expected + "\n";
  if (cert.witness_field) {
    r.pretty += "witness field: " + cert.witness_field->tag() + "\n";
    if (cert.pfaffian)
      r.pretty += "generalized Pfaffian (rank " + std::to_string(cert.pfaffian_rank) +
                  "): " + poly_to_string(cert.pfaffian->poly()) + "\n";
  }
  return r;
}

CliResult handle_resonance(const std::string& file, const std::string& strategy) {
  const SkewLinearMatrix a = skew_from_json(load_instance(file, "skew"));
  return certificate_result(resonance_decide(a, strategy_of(strategy)));
}

CliResult handle_generalized_zero(const std::string& file, const std::string& strategy) {
  const SkewLinearMatrix a = skew_from_json(load_instance(file, "skew"));
  const ResonanceCertificate cert = resonance_decide(a, strategy_of(strategy));
  CliResult r;
  r.doc["kind"] = "generalized_zero";
  const bool found = cert.nontrivial && cert.u.has_value();
  r.doc["found"] = found;
  r.doc["field"] = cert.decision_field.tag();
  if (found) {
    r.doc["witness_field"] = cert.witness_field->tag();
    r.doc["U"] = matrix_to_json(*cert.u);
  }
  r.expected = found ? "found" : "none";
  r.pretty = found ? "generalized zero found over " + cert.witness_field->tag() + "\n"
                   : "no generalized zero\n";
  return r;
}

CliResult betti_result(const BettiTable& b) {
  CliResult r;
  r.doc = betti_to_json(b);
  r.pretty = render_betti(b);
  r.expected = r.doc.dump();
  return r;
}

CliResult handle_betti_cone(const std::string& file_sub, const std::string& file_ambient,
                            const std::vector<std::string>& cancel_specs) {
  const BettiTable a = betti_from_json(load_instance(file_sub, "betti"));
  const BettiTable b = betti_from_json(load_instance(file_ambient, "betti"));
  std::vector<Cancellation> cancels;
  for (const auto& spec : cancel_specs) {
    const auto parts = split_csv(spec);
    require_input(parts.size() == 3, "--cancel wants \"i,j,mult\"");
    cancels.push_back(Cancellation{static_cast<int>(int_of(parts[0], "cancellation i")),
                                   static_cast<int>(int_of(parts[1], "cancellation j")),
                                   int_of(parts[2], "cancellation multiplicity")});
  }
  return betti_result(mapping_cone(a, b, cancels));
}

CliResult handle_betti_horseshoe(const std::string& file_a, const std::string& file_c) {
  const BettiTable a = betti_from_json(load_instance(file_a, "betti"));
  const BettiTable c = betti_from_json(load_instance(file_c, "betti"));
  return betti_result(horseshoe_sum(a, c));
}

CliResult handle_betti_dual(const std::string& file, int codim, int omega) {
  const BettiTable b = betti_from_json(load_instance(file, "betti"));
  return betti_result(dual_betti(b, codim, omega));
}

CliResult handle_betti_hilbert(const std::string& file) {
  const BettiTable b = betti_from_json(load_instance(file, "betti"));
  const std::string s = hilbert_numerator(b).to_string();
  CliResult r;
  r.doc = Json(s);
  r.pretty = s + "\n";
  r.expected = s;
  return r;
}

CliResult handle_grassmann_pluecker(size_t n, const std::string& field_tag) {
  const Ideal ideal = pluecker_ideal(make_plucker_context(Field::parse(field_tag), n));
  CliResult r;
  r.doc = ideal_to_json(ideal);
  std::string joined;
  for (const auto& g : ideal.gens()) {
    const std::string s = poly_to_string(g);
    r.pretty += s + "\n";
    joined += (joined.empty() ? "" : "; ") + s;
  }
  r.expected = joined;
  return r;
}

CliResult handle_section_check(const std::string& file, const std::string& strategy) {
  const LinearSection s = section_from_json(load_instance(file, "section"));
  const SectionReport rep = section_smoothness(s, strategy_of(strategy));
  CliResult r;
  const bool smooth = rep.verdict == SectionVerdict::smooth_transverse;
  r.doc["kind"] = "section_report";
  r.doc["verdict"] = smooth ? "smooth_transverse" : "singular_or_degenerate";
  if (rep.witness) {
    r.doc["witness_field"] = rep.witness->field.tag();
    r.doc["witness"] = vec_to_json(rep.witness->omega);
  }
  if (rep.witness_prime) r.doc["witness_prime"] = *rep.witness_prime;
  r.expected = r.doc["verdict"].get<std::string>();
  r.pretty = "verdict: " + r.expected + "\n";
  return r;
}

CliResult handle_random(const std::string& kind, size_t n, size_t m, uint64_t seed,
                        const std::string& field_tag) {
  CliResult r;
  r.doc = random_instance(kind, n, m, seed, Field::parse(field_tag));
  r.pretty = r.doc.dump(2) + "\n";
  return r;
}

CliResult handle_verify(bool list_only) {
  CliResult r;
  if (list_only) {
    Json items = Json::array();
    for (const auto& [id, description] : fixture_catalog()) {
      Json it;
      it["id"] = id;
      it["description"] = description;
      items.push_back(it);
      r.pretty += id + " — " + description + "\n";
    }
    r.doc["kind"] = "fixture_list";
    r.doc["items"] = items;
    return r;
  }
  const FixtureReport report = run_fixture_suite();
  Json items = Json::array();
  for (const auto& it : report.items) {
    Json ij;
    ij["id"] = it.id;
    ij["pass"] = it.pass;
    if (!it.pass) ij["detail"] = it.detail;
    items.push_back(ij);
    r.pretty += std::string(it.pass ? "PASS" : "FAIL") + "  " + it.id +
                (it.pass ? "" : "  (" + it.detail + ")") + "\n";
  }
  r.doc["kind"] = "verify_report";
  r.doc["all_pass"] = report.all_pass();
  r.doc["items"] = items;
  r.expected = report.all_pass() ? "pass" : "fail";
  r.code = report.all_pass() ? 0 : 1;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact toolkit for skew matrices of linear forms: Pfaffians, "
               "resonance certificates, Betti arithmetic, Grassmannian sections",
               "reskit"};
  app.require_subcommand(1);

  bool pretty = false;
  std::string expect;
  app.add_flag("--pretty", pretty, "human-readable rendering instead of JSON");
  app.add_option("--expect", expect,
                 "exit 0 iff the primary result equals this value (for CI)");

  CliResult result;

  // pfaffian
  std::string pf_file;
  bool pf_principal = false;
  auto* c_pf = app.add_subcommand("pfaffian",
                                  "Pfaffian (even size) or, with --principal, "
                                  "the principal Pfaffians (odd size)");
  c_pf->add_option("file", pf_file, "skew instance (JSON)")->required();
  c_pf->add_flag("--principal", pf_principal, "emit the principal Pfaffians");
  c_pf->callback([&] { result = handle_pfaffian(pf_file, pf_principal); });

  // quadric-rank
  std::string qr_file, qr_expr, qr_vars, qr_field = "Q";
  auto* c_qr = app.add_subcommand(
      "quadric-rank", "rank of the Gram matrix of a quadratic form");
  c_qr->add_option("file", qr_file, "quadric or principal_pfaffians document");
  c_qr->add_option("--expr", qr_expr, "quadric as polynomial text");
  c_qr->add_option("--vars", qr_vars, "comma-separated variable names for --expr");
  c_qr->add_option("--field", qr_field, "field tag for --expr (Q | Fp:<p>)");
  c_qr->callback([&] { result = handle_quadric_rank(qr_file, qr_expr, qr_vars, qr_field); });

  // resonance
  std::string rs_file, rs_strategy = "groebner";
  auto* c_rs = app.add_subcommand(
      "resonance", "decide resonance triviality and emit a certificate");
  c_rs->add_option("file", rs_file, "skew instance (JSON)")->required();
  c_rs->add_option("--strategy", rs_strategy, "groebner | bruteforce")
      ->check(CLI::IsMember({"groebner", "bruteforce"}));
  c_rs->callback([&] { result = handle_resonance(rs_file, rs_strategy); });

  // generalized-zero
  std::string gz_file, gz_strategy = "groebner";
  auto* c_gz = app.add_subcommand(
      "generalized-zero", "invertible U with (U A U^T)_{01} = 0, when one exists");
  c_gz->add_option("file", gz_file, "skew instance (JSON)")->required();
  c_gz->add_option("--strategy", gz_strategy, "groebner | bruteforce")
      ->check(CLI::IsMember({"groebner", "bruteforce"}));
  c_gz->callback([&] { result = handle_generalized_zero(gz_file, gz_strategy); });

  // betti
  auto* c_bt = app.add_subcommand("betti", "graded Betti-table arithmetic");
  c_bt->require_subcommand(1);

  std::string bc_sub, bc_ambient;
  std::vector<std::string> bc_cancels;
  auto* c_cone = c_bt->add_subcommand(
      "cone", "mapping cone C_i = B_i + A_{i-1} with explicit cancellations");
  c_cone->add_option("sub", bc_sub, "resolution of the source A (JSON)")->required();
  c_cone->add_option("ambient", bc_ambient, "resolution of the target B (JSON)")->required();
  c_cone->add_option("--cancel", bc_cancels,
                     "cancellation \"i,j,mult\" removing mult at (i,j) and (i-1,j)");
  c_cone->callback([&] { result = handle_betti_cone(bc_sub, bc_ambient, bc_cancels); });

  std::string bh_a, bh_c;
  auto* c_horse = c_bt->add_subcommand("horseshoe", "degreewise direct sum of two tables");
  c_horse->add_option("first", bh_a, "resolution of the sub term (JSON)")->required();
  c_horse->add_option("second", bh_c, "resolution of the quotient term (JSON)")->required();
  c_horse->callback([&] { result = handle_betti_horseshoe(bh_a, bh_c); });

  std::string bd_file;
  int bd_codim = 0, bd_omega = 0;
  auto* c_dual = c_bt->add_subcommand("dual", "dual table b'_{i,k} = b_{codim-i, -omega-k}");
  c_dual->add_option("file", bd_file, "Betti table (JSON)")->required();
  c_dual->add_option("--codim", bd_codim, "codimension of the resolved module")->required();
  c_dual->add_option("--omega", bd_omega, "degree of the dualizing twist (-7 for P^6)")
      ->required();
  c_dual->callback([&] { result = handle_betti_dual(bd_file, bd_codim, bd_omega); });

  std::string bn_file;
  auto* c_hilb = c_bt->add_subcommand("hilbert", "Hilbert numerator of a table");
  c_hilb->add_option("file", bn_file, "Betti table (JSON)")->required();
  c_hilb->callback([&] { result = handle_betti_hilbert(bn_file); });

  // grassmann
  auto* c_gr = app.add_subcommand("grassmann", "Plücker ideals and section smoothness");
  c_gr->require_subcommand(1);

  size_t gp_n = 5;
  std::string gp_field = "Q";
  auto* c_pl = c_gr->add_subcommand("pluecker", "Plücker ideal of Gr(2,n)");
  c_pl->add_option("--n", gp_n, "ambient dimension n >= 4 (default 5)");
  c_pl->add_option("--field", gp_field, "field tag (Q | Fp:<p>)");
  c_pl->callback([&] { result = handle_grassmann_pluecker(gp_n, gp_field); });

  std::string sc_file, sc_strategy = "groebner";
  auto* c_sc = c_gr->add_subcommand(
      "section-check", "smoothness of a codimension-3 section of Gr(2,5)");
  c_sc->add_option("file", sc_file, "section instance (JSON)")->required();
  c_sc->add_option("--strategy", sc_strategy, "groebner | bruteforce")
      ->check(CLI::IsMember({"groebner", "bruteforce"}));
  c_sc->callback([&] { result = handle_section_check(sc_file, sc_strategy); });

  // random
  std::string rn_kind, rn_field = "Q";
  size_t rn_n = 5, rn_m = 6;
  uint64_t rn_seed = 1;
  auto* c_rn = app.add_subcommand("random", "deterministic seeded instance");
  c_rn->add_option("--kind", rn_kind, "skew | section | betti")->required();
  c_rn->add_option("--n", rn_n, "matrix size for skew (default 5)");
  c_rn->add_option("--m", rn_m, "variable count for skew (default 6)");
  c_rn->add_option("--seed", rn_seed, "64-bit seed (default 1)");
  c_rn->add_option("--field", rn_field, "field tag (Q | Fp:<p>)");
  c_rn->callback([&] { result = handle_random(rn_kind, rn_n, rn_m, rn_seed, rn_field); });

  // verify-paper
  bool vp_list = false;
  auto* c_vp = app.add_subcommand("verify-paper",
                                  "run the pinned reproduction fixtures");
  c_vp->add_flag("--list", vp_list, "list fixture ids without running them");
  c_vp->callback([&] { result = handle_verify(vp_list); });

  for (CLI::App* s : {c_pf, c_qr, c_rs, c_gz, c_bt, c_cone, c_horse, c_dual, c_hilb,
                      c_gr, c_pl, c_sc, c_rn, c_vp})
    s->fallthrough();  // lets --pretty / --expect appear after the subcommand

  auto emit_error = [&](const std::string& kind, const std::string& message) {
    Json ej;
    ej["error"] = Json{{"kind", kind}, {"message", message}};
    out << ej.dump(2) << "\n";
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);  // --help and friends
  } catch (const CLI::ParseError& e) {
    emit_error("malformed_input", e.what());
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    const bool malformed = e.kind() == ErrorKind::malformed_input;
    emit_error(malformed ? "malformed_input" : "precondition", e.what());
    err << "error: " << e.what() << "\n";
    return malformed ? 2 : 3;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  if (pretty)
    out << result.pretty;
  else
    out << result.doc.dump(2) << "\n";
  if (!expect.empty()) return expect == result.expected ? 0 : 1;
  return result.code;
}

}  // namespace reskit
