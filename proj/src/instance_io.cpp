#include "reskit/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace reskit {

namespace {

// Integers in this range survive a trip through any JSON reader that parses
// numbers as doubles.
const long kJsonSafe = 9007199254740992L;  // 2^53

[[noreturn]] void rethrow_as_input(const nlohmann::json::exception& e) {
  fail_input(std::string("malformed document: ") + e.what());
}

Field field_from(const Json& j) {
  if (!j.contains("field")) fail_input("missing \"field\" tag");
  if (!j["field"].is_string()) fail_input("\"field\" must be a string tag");
  return Field::parse(j["field"].get<std::string>());
}

long long int_from(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail_input(what + " must be an integer");
  return j.get<long long>();
}

std::vector<std::string> vars_from(const Json& j) {
  if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
    fail_input("missing or empty \"vars\" array");
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (const auto& v : j["vars"]) {
    if (!v.is_string() || v.get<std::string>().empty())
      fail_input("variable names must be nonempty strings");
    if (!seen.insert(v.get<std::string>()).second)
      fail_input("duplicate variable name '" + v.get<std::string>() + "'");
    vars.push_back(v.get<std::string>());
  }
  return vars;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.field().is_prime()) return Json(s.res());
  const mpq_class& q = s.rat();
  if (q.get_den() == 1 && q.get_num() >= -kJsonSafe && q.get_num() <= kJsonSafe)
    return Json(static_cast<long long>(q.get_num().get_si()));
  return Json(s.to_string());
}

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  fail_input("scalars must be integers or \"n/d\" strings");
}

Json vec_to_json(const VecS& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(scalar_to_json(x));
  return arr;
}

VecS vec_from_json(const Field& f, const Json& j, size_t arity) {
  if (!j.is_array() || j.size() != arity)
    fail_input("expected an array of " + std::to_string(arity) + " scalars");
  VecS v;
  v.reserve(arity);
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

Json matrix_to_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

Json skew_to_json(const SkewLinearMatrix& a) {
  Json j;
  j["kind"] = "skew";
  j["field"] = a.ring()->field.tag();
  j["n"] = a.n();
  j["vars"] = a.ring()->vars;
  Json upper = Json::array();
  for (size_t i = 0; i < a.n(); ++i)
    for (size_t k = i + 1; k < a.n(); ++k) {
      const LinearForm& f = a.upper(i, k);
      if (f.is_zero()) continue;
      upper.push_back(Json::array({i, k, vec_to_json(f.coeffs())}));
    }
  j["upper"] = upper;
  return j;
}

SkewLinearMatrix skew_from_json(const Json& j) {
  try {
    const Field f = field_from(j);
    if (!j.contains("n")) fail_input("missing matrix size \"n\"");
    const long long n = int_from(j["n"], "\"n\"");
    if (n < 2 || n > 16) fail_input("matrix size out of range (2..16)");
    const auto vars = vars_from(j);
    const RingPtr ring = make_ring(f, vars);
    SkewLinearMatrix a(ring, static_cast<size_t>(n));
    if (!j.contains("upper") || !j["upper"].is_array())
      fail_input("missing \"upper\" entry list");
    std::set<std::pair<long long, long long>> seen;
    for (const auto& e : j["upper"]) {
      if (!e.is_array() || e.size() != 3)
        fail_input("upper entries must be [i, j, coefficients] triples");
      const long long i = int_from(e[0], "row index");
      const long long k = int_from(e[1], "column index");
      if (i < 0 || k <= i || k >= n) fail_input("upper entry indices need 0 <= i < j < n");
      if (!seen.insert({i, k}).second)
        fail_input("duplicate upper entry (" + std::to_string(i) + ", " +
                   std::to_string(k) + ")");
      a.set_upper(static_cast<size_t>(i), static_cast<size_t>(k),
                  LinearForm(ring, vec_from_json(f, e[2], vars.size())));
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    rethrow_as_input(e);
  }
}

Json betti_to_json(const BettiTable& b) {
  Json j;
  j["kind"] = "betti";
  j["vars"] = b.vars();
  Json entries = Json::array();
  for (const auto& [ij, m] : b.entries())
    entries.push_back(Json::array({ij.first, ij.second, m}));
  j["entries"] = entries;
  return j;
}

BettiTable betti_from_json(const Json& j) {
  try {
    if (!j.contains("vars")) fail_input("missing \"vars\" count");
    const long long vars = int_from(j["vars"], "\"vars\"");
    if (vars < 1 || vars > 64) fail_input("variable count out of range (1..64)");
    BettiTable b(static_cast<size_t>(vars));
    if (!j.contains("entries") || !j["entries"].is_array())
      fail_input("missing \"entries\" array");
    std::set<std::pair<long long, long long>> seen;
    for (const auto& e : j["entries"]) {
      if (!e.is_array() || e.size() != 3)
        fail_input("entries must be [i, j, multiplicity] triples");
      const long long i = int_from(e[0], "homological degree");
      const long long k = int_from(e[1], "internal degree");
      const long long m = int_from(e[2], "multiplicity");
      if (i < 0) fail_input("homological degrees must be >= 0");
      if (m < 1) fail_input("multiplicities must be >= 1");
      if (!seen.insert({i, k}).second)
        fail_input("duplicate table entry (" + std::to_string(i) + ", " +
                   std::to_string(k) + ")");
      b.add(static_cast<int>(i), static_cast<int>(k), m);
    }
    return b;
  } catch (const nlohmann::json::exception& e) {
    rethrow_as_input(e);
  }
}

Json section_to_json(const LinearSection& s) {
  Json j;
  j["kind"] = "section";
  j["field"] = s.context().ring->field.tag();
  j["n"] = s.context().n;
  Json rows = Json::array();
  for (const auto& r : s.lperp_rows()) rows.push_back(vec_to_json(r));
  j["Lperp"] = rows;
  return j;
}

LinearSection section_from_json(const Json& j) {
  try {
    const Field f = field_from(j);
    if (!j.contains("n")) fail_input("missing \"n\"");
    if (int_from(j["n"], "\"n\"") != 5)
      fail_input("sections are supported for n = 5 only");
    if (!j.contains("Lperp") || !j["Lperp"].is_array() || j["Lperp"].size() != 3)
      fail_input("\"Lperp\" must list exactly 3 rows");
    std::vector<VecS> rows;
    for (const auto& r : j["Lperp"]) rows.push_back(vec_from_json(f, r, 10));
    return LinearSection(make_plucker_context(f, 5), rows);
  } catch (const nlohmann::json::exception& e) {
    rethrow_as_input(e);
  }
}

Json ideal_to_json(const Ideal& ideal) {
  Json j;
  j["kind"] = "ideal";
  j["field"] = ideal.ring()->field.tag();
  j["vars"] = ideal.ring()->vars;
  Json gens = Json::array();
  for (const auto& g : ideal.gens()) gens.push_back(poly_to_string(g));
  j["gens"] = gens;
  return j;
}

Ideal ideal_from_json(const Json& j) {
  try {
    const Field f = field_from(j);
    const RingPtr ring = make_ring(f, vars_from(j));
    if (!j.contains("gens") || !j["gens"].is_array())
      fail_input("missing \"gens\" array");
    std::vector<MultiPoly> gens;
    for (const auto& g : j["gens"]) {
      if (!g.is_string()) fail_input("generators must be polynomial strings");
      gens.push_back(poly_parse(ring, g.get<std::string>()));
    }
    return Ideal(ring, std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    rethrow_as_input(e);
  }
}

Json certificate_to_json(const ResonanceCertificate& cert) {
  Json j;
  j["kind"] = "certificate";
  j["verdict"] = cert.nontrivial ? "nontrivial" : "trivial";
  j["field"] = cert.decision_field.tag();
  if (cert.witness_field) {
    j["witness_field"] = cert.witness_field->tag();
    j["witness_a"] = vec_to_json(cert.witness_a);
    j["witness_b"] = vec_to_json(cert.witness_b);
    if (cert.u) j["U"] = matrix_to_json(*cert.u);
    if (cert.pfaffian) {
      j["pfaffian"] = poly_to_string(cert.pfaffian->poly());
      j["pfaffian_rank"] = cert.pfaffian_rank;
    }
  }
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_input(std::string("invalid JSON: ") + e.what());
  }
}

Json load_instance(const std::string& path, const std::string& expected_kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_input("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Json j = parse_json_text(buf.str());
  if (!expected_kind.empty()) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
      fail_input("document lacks a \"kind\" discriminator");
    const std::string kind = j["kind"].get<std::string>();
    if (kind != expected_kind)
      fail_input("expected a \"" + expected_kind + "\" document, found \"" + kind + "\"");
  }
  return j;
}

}  // namespace reskit
