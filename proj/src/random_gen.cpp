#include "reskit/random_gen.hpp"

#include "reskit/rng.hpp"

namespace reskit {

namespace {

Scalar draw(const Field& f, SplitMix64& rng) {
  if (f.is_rational()) return Scalar::from_int(f, rng.small_int());
  return Scalar::from_int(f, static_cast<long long>(rng.below(f.p())));
}

VecS draw_vec(const Field& f, size_t len, SplitMix64& rng) {
  VecS v;
  v.reserve(len);
  for (size_t i = 0; i < len; ++i) v.push_back(draw(f, rng));
  return v;
}

// Appends rows until `rows` reaches `want` independent ones; each candidate
// that fails to grow the rank is discarded (the stream advances, so the
// outcome is still a pure function of the seed).
void grow_to_rank(const Field& f, size_t len, size_t want, std::vector<VecS>& rows,
                  SplitMix64& rng) {
  size_t guard = 0;
  while (rows.size() < want) {
    if (++guard > 1000) fail_pre("random subspace generation failed to reach rank");
    rows.push_back(draw_vec(f, len, rng));
    if (rank_of(DenseMatrix::from_rows(f, rows)) != rows.size()) rows.pop_back();
  }
}

}  // namespace

SkewLinearMatrix random_skew(const Field& f, size_t n, size_t m, uint64_t seed) {
  require_input(n >= 2 && n <= 10, "skew size n out of range (2..10)");
  require_input(m >= 1 && m <= 26, "variable count m out of range (1..26)");
  SplitMix64 rng(seed);
  const RingPtr ring = make_ring(f, m);
  SkewLinearMatrix a(ring, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      a.set_upper(i, j, LinearForm(ring, draw_vec(f, m, rng)));
  return a;
}

LinearSection random_section(const Field& f, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<VecS> rows;
  grow_to_rank(f, 10, 3, rows, rng);
  return LinearSection(make_plucker_context(f, 5), rows);
}

LinearSection random_tangent_section(const Field& f, uint64_t seed) {
  SplitMix64 rng(seed);
  const WedgeBasis wb(5);
  VecS w;
  size_t guard = 0;
  do {
    if (++guard > 1000) fail_pre("random decomposable generation failed");
    const VecS a = draw_vec(f, 5, rng);
    const VecS b = draw_vec(f, 5, rng);
    w = wedge(wb, a, b);
  } while (vec_is_zero(w));
  std::vector<VecS> rows{w};
  grow_to_rank(f, 10, 3, rows, rng);
  return LinearSection(make_plucker_context(f, 5), rows);
}

BettiTable random_betti(uint64_t seed) {
  SplitMix64 rng(seed);
  BettiTable b(7);
  const size_t entries = 2 + rng.below(5);
  for (size_t t = 0; t < entries; ++t) {
    const int i = static_cast<int>(rng.below(4));
    const int j = i + static_cast<int>(rng.below(4));
    b.add(i, j, 1 + static_cast<long long>(rng.below(9)));
  }
  return b;
}

Json random_instance(const std::string& kind, size_t n, size_t m, uint64_t seed,
                     const Field& f) {
  if (kind == "skew") return skew_to_json(random_skew(f, n, m, seed));
  if (kind == "section") return section_to_json(random_section(f, seed));
  if (kind == "betti") return betti_to_json(random_betti(seed));
  fail_input("unsupported random kind '" + kind + "' (skew | section | betti)");
}

}  // namespace reskit
