#pragma once

#include <cstdint>

#include "reskit/instance_io.hpp"

namespace reskit {

// Seeded instance generators.  Every draw comes from one splitmix64 stream
// consumed in a documented order, so a (kind, parameters, seed) tuple yields
// the same instance on every platform, forever.

// n x n skew matrix of linear forms in m variables; entries drawn in lex
// (i, j) order, coefficients by ascending variable (Q: integers in [-9, 9],
// F_p: residues below p).
SkewLinearMatrix random_skew(const Field& f, size_t n, size_t m, uint64_t seed);

// Codimension-3 section of Gr(2,5): three 10-coordinate rows drawn
// coordinatewise, each row redrawn until it grows the rank.
LinearSection random_section(const Field& f, uint64_t seed);

// Like random_section, but the first row is a wedge a ^ b of two random
// independent vectors — the annihilator contains a decomposable by
// construction, so the section is never smooth_transverse.
LinearSection random_tangent_section(const Field& f, uint64_t seed);

// Small table over 7 variables: up to 6 accumulated entries with i in 0..3,
// j - i in 0..3 and multiplicities in 1..9.
BettiTable random_betti(uint64_t seed);

// CLI dispatcher over kind in {"skew", "section", "betti"}.
Json random_instance(const std::string& kind, size_t n, size_t m, uint64_t seed,
                     const Field& f);

}  // namespace reskit
