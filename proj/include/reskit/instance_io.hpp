#pragma once

#include <json.hpp>

#include <string>

#include "reskit/betti.hpp"
#include "reskit/grassmann.hpp"
#include "reskit/groebner.hpp"
#include "reskit/resonance.hpp"
#include "reskit/skew.hpp"

namespace reskit {

// Wire format: JSON documents with a "kind" discriminator.  All indices are
// 0-based.  Scalars ride as JSON numbers when they are integers fitting the
// double-safe range, otherwise as exact "n" or "n/d" strings; readers accept
// both spellings everywhere.
using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j);

Json vec_to_json(const VecS& v);
VecS vec_from_json(const Field& f, const Json& j, size_t arity);

Json matrix_to_json(const DenseMatrix& m);

// {"kind":"skew","field":"Q","n":5,"vars":["x0",...],
//  "upper":[[i,j,[m coefficients]],...]}  (entries absent from the list are 0)
Json skew_to_json(const SkewLinearMatrix& a);
SkewLinearMatrix skew_from_json(const Json& j);

// {"kind":"betti","vars":7,"entries":[[i,j,mult],...]}
Json betti_to_json(const BettiTable& b);
BettiTable betti_from_json(const Json& j);

// {"kind":"section","field":"Q","n":5,"Lperp":[[10 scalars] x 3]}
Json section_to_json(const LinearSection& s);
LinearSection section_from_json(const Json& j);

// {"kind":"ideal","field":"Q","vars":["x0",...],"gens":["x0*x1 - x2^2",...]}
Json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const Json& j);

// Output-only: the resonance verdict with its re-checkable witness data.
Json certificate_to_json(const ResonanceCertificate& cert);

// Parse errors surface as malformed-input failures (CLI exit 2).
Json parse_json_text(const std::string& text);

// Reads a file, parses it, and when expected_kind is nonempty insists the
// document's "kind" matches.
Json load_instance(const std::string& path, const std::string& expected_kind);

}  // namespace reskit
