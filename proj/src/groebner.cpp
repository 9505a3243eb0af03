#include "reskit/groebner.hpp"

#include <algorithm>
#include <set>

namespace reskit {

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (!same_ring(g.ring(), ring_)) fail_pre("ideal generator in the wrong ring");
    if (g.is_zero()) fail_pre("ideal generators must be nonzero");
    if (!g.is_homogeneous())
      fail_pre("ideal generators must be homogeneous: " + poly_to_string(g));
  }
}

namespace {

// f * c * m, exploiting that multiplication by a fixed monomial preserves the
// grevlex key order of the term map.
MultiPoly shift_mul(const MultiPoly& f, const Monomial& m, const Scalar& c) {
  MultiPoly r(f.ring());
  for (const auto& [mm, cc] : f.terms()) r.add_term(mm * m, cc * c);
  return r;
}

// Over Q: scale to primitive integer coefficients with positive leading
// coefficient under `ord`.  Over F_p: scale monic.
MultiPoly content_normalize(const MultiPoly& f, const TermOrder& ord) {
  if (f.is_zero()) return f;
  const Field field = f.ring()->field;
  if (field.is_prime()) {
    const Scalar lc = f.leading(ord).second;
    return f * lc.inverse();
  }
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.rat().get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rat().get_den().get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  MultiPoly r = f * Scalar::from_mpq(scale);
  if (r.leading(ord).second.rat() < 0) r = -r;
  return r;
}

struct Reducer {
  const std::vector<MultiPoly>& basis;
  const TermOrder& ord;
  std::vector<std::pair<Monomial, Scalar>> lead;

  explicit Reducer(const std::vector<MultiPoly>& b, const TermOrder& o)
      : basis(b), ord(o) {
    lead.reserve(b.size());
    for (const auto& g : b) lead.push_back(g.leading(o));
  }

  void push(const MultiPoly& g) { lead.push_back(g.leading(ord)); }

  // Full normal form, first-divisor search in basis order.
  MultiPoly reduce(MultiPoly p) const {
    MultiPoly rem(p.ring());
    while (!p.is_zero()) {
      const auto [m, c] = p.leading(ord);
      bool hit = false;
      for (size_t k = 0; k < basis.size(); ++k) {
        if (!lead[k].first.divides(m)) continue;
        p = p - shift_mul(basis[k], m.div(lead[k].first), c / lead[k].second);
        hit = true;
        break;
      }
      if (!hit) {
        rem.add_term(m, c);
        p.add_term(m, -c);
      }
    }
    return rem;
  }
};

struct PairKey {
  Monomial lcm;
  size_t i, j;
};

struct PairKeyLess {
  TermOrder ord;
  bool operator()(const PairKey& a, const PairKey& b) const {
    const int c = mono_cmp(a.lcm, b.lcm, ord);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

std::vector<MultiPoly> groebner_basis(const Ideal& ideal, const TermOrder& ord) {
  std::vector<MultiPoly> g;
  for (const auto& f : ideal.gens()) g.push_back(content_normalize(f, ord));
  if (g.empty()) return g;

  std::vector<std::pair<Monomial, Scalar>> lead;
  for (const auto& f : g) lead.push_back(f.leading(ord));

  std::set<PairKey, PairKeyLess> queue{PairKeyLess{ord}};
  std::set<std::pair<size_t, size_t>> retired;  // popped or criterion-skipped
  auto enqueue = [&](size_t i, size_t j) {
    queue.insert(PairKey{mono_lcm(lead[i].first, lead[j].first), i, j});
  };
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) enqueue(i, j);

  while (!queue.empty()) {
    const PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    const size_t i = pk.i, j = pk.j;
    retired.insert({i, j});

    // Product criterion: coprime leading terms reduce to zero.
    if (mono_coprime(lead[i].first, lead[j].first)) continue;
    // Chain criterion: some LT(g_k) divides the lcm and both flanking pairs
    // are already retired.
    bool chained = false;
    for (size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == i || k == j || !lead[k].first.divides(pk.lcm)) continue;
      const auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
      chained = retired.count({p1.first, p1.second}) > 0 &&
                retired.count({p2.first, p2.second}) > 0;
    }
    if (chained) continue;

    const MultiPoly spoly =
        shift_mul(g[i], pk.lcm.div(lead[i].first), lead[i].second.inverse()) -
        shift_mul(g[j], pk.lcm.div(lead[j].first), lead[j].second.inverse());
    Reducer red(g, ord);
    MultiPoly rem = red.reduce(spoly);
    if (rem.is_zero()) continue;
    rem = content_normalize(rem, ord);
    const size_t n = g.size();
    g.push_back(std::move(rem));
    lead.push_back(g.back().leading(ord));
    for (size_t k = 0; k < n; ++k) enqueue(k, n);
  }

  // Minimalize: drop elements whose leading term another survivor divides.
  std::vector<bool> keep(g.size(), true);
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = 0; j < g.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (lead[j].first.divides(lead[i].first) && lead[j].first != lead[i].first)
        keep[i] = false;
      else if (lead[j].first == lead[i].first && j < i)
        keep[i] = false;
    }
  }
  std::vector<MultiPoly> min_basis;
  for (size_t i = 0; i < g.size(); ++i)
    if (keep[i]) min_basis.push_back(g[i]);

  // Tail-reduce each element against the others, then make monic.
  std::vector<MultiPoly> reduced;
  for (size_t i = 0; i < min_basis.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < min_basis.size(); ++j)
      if (j != i) others.push_back(min_basis[j]);
    Reducer red(others, ord);
    MultiPoly r = red.reduce(min_basis[i]);
    reduced.push_back(r * r.leading(ord).second.inverse());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return mono_cmp(a.leading(ord).first, b.leading(ord).first, ord) < 0;
  });
  return reduced;
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const TermOrder& ord) {
  for (const auto& g : basis) {
    if (!same_ring(g.ring(), f.ring())) fail_pre("normal form across rings");
    if (g.is_zero()) fail_pre("zero element in a reduction basis");
  }
  Reducer red(basis, ord);
  return red.reduce(f);
}

std::vector<MultiPoly> projective_field_equations(const RingPtr& ring) {
  if (!ring->field.is_prime())
    fail_pre("projective field equations need a prime field");
  const uint32_t p = ring->field.p();
  const size_t n = ring->nvars();
  const Scalar one = Scalar::one(ring->field);
  std::vector<MultiPoly> out;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      MultiPoly f(ring);
      f.add_term(Monomial::var(n, i, p) * Monomial::var(n, j), one);
      f.add_term(Monomial::var(n, i) * Monomial::var(n, j, p), -one);
      out.push_back(std::move(f));
    }
  return out;
}

EmptinessCertificate projective_emptiness(const Ideal& ideal) {
  std::vector<MultiPoly> gens = ideal.gens();
  if (ideal.ring()->field.is_prime()) {
    auto fe = projective_field_equations(ideal.ring());
    gens.insert(gens.end(), fe.begin(), fe.end());
  }
  const TermOrder ord = TermOrder::grevlex();
  auto gb = groebner_basis(Ideal(ideal.ring(), std::move(gens)), ord);

  const size_t n = ideal.ring()->nvars();
  EmptinessCertificate cert{false, gb, std::vector<int>(n, 0)};
  for (const auto& g : gb) {
    const Monomial lt = g.leading(ord).first;
    if (lt.is_one()) {
      // Unit ideal: empty, witnessed in every variable at degree 0 is
      // meaningless, so record degree -1 markers.
      cert.empty = true;
      std::fill(cert.pure_power_degs.begin(), cert.pure_power_degs.end(), -1);
      return cert;
    }
    const int v = pure_power_var(lt);
    if (v >= 0 && cert.pure_power_degs[v] == 0)
      cert.pure_power_degs[v] = static_cast<int>(lt.deg());
  }
  cert.empty = std::all_of(cert.pure_power_degs.begin(), cert.pure_power_degs.end(),
                           [](int d) { return d != 0; });
  return cert;
}

bool is_projectively_empty(const Ideal& ideal) {
  return projective_emptiness(ideal).empty;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && gens[j] != gens[i]) redundant = true;
      else if (gens[j] == gens[i] && j < i) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

IntPoly hilb_rec(const std::vector<Monomial>& gens) {
  if (gens.empty()) return IntPoly::one();
  bool all_pure = true;
  for (const auto& m : gens) {
    if (m.deg() == 0) return IntPoly();  // unit ideal
    if (pure_power_var(m) < 0) all_pure = false;
  }
  if (all_pure) {
    // Minimal pure powers involve pairwise distinct variables: a complete
    // intersection with numerator prod (1 - t^deg).
    IntPoly acc = IntPoly::one();
    for (const auto& m : gens)
      acc = acc * (IntPoly::one() - IntPoly::monomial(m.deg()));
    return acc;
  }
  // Pivot on the variable occurring most often among mixed generators.
  const size_t n = gens[0].nvars();
  std::vector<size_t> freq(n, 0);
  for (const auto& m : gens) {
    if (pure_power_var(m) >= 0) continue;
    for (size_t i = 0; i < n; ++i)
      if (m.exp(i) > 0) ++freq[i];
  }
  const size_t x = static_cast<size_t>(
      std::max_element(freq.begin(), freq.end()) - freq.begin());

  // N(J) = N(J + (x)) + t * N(J : x).
  std::vector<Monomial> plus{Monomial::var(n, x)};
  for (const auto& m : gens)
    if (m.exp(x) == 0) plus.push_back(m);
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    if (m.exp(x) == 0) {
      colon.push_back(m);
    } else {
      auto e = m.exps();
      e[x] -= 1;
      colon.push_back(Monomial(std::move(e)));
    }
  }
  return hilb_rec(minimalize(std::move(plus))) +
         IntPoly::monomial(1) * hilb_rec(minimalize(std::move(colon)));
}

}  // namespace

IntPoly hilbert_numerator_of_monomial_ideal(std::vector<Monomial> gens) {
  return hilb_rec(minimalize(std::move(gens)));
}

IntPoly hilbert_series_numerator(const Ideal& ideal) {
  const TermOrder ord = TermOrder::grevlex();
  auto gb = groebner_basis(ideal, ord);
  std::vector<Monomial> lts;
  lts.reserve(gb.size());
  for (const auto& g : gb) lts.push_back(g.leading(ord).first);
  return hilbert_numerator_of_monomial_ideal(std::move(lts));
}

}  // namespace reskit
