#include "reskit/betti.hpp"

#include <algorithm>
#include <sstream>

namespace reskit {

BettiTable::BettiTable(size_t vars) : vars_(vars) {
  require_pre(vars >= 1, "a Betti table needs at least one ambient variable");
}

void BettiTable::add(int i, int j, long long mult) {
  require_pre(i >= 0, "negative homological degree");
  if (mult == 0) return;
  const auto key = std::make_pair(i, j);
  auto it = e_.find(key);
  const long long cur = it == e_.end() ? 0 : it->second;
  const long long next = cur + mult;
  if (next < 0)
    fail_pre("multiplicity at (" + std::to_string(i) + ", " + std::to_string(j) +
             ") would become negative");
  if (next == 0) {
    if (it != e_.end()) e_.erase(it);
  } else if (it == e_.end()) {
    e_.emplace(key, next);
  } else {
    it->second = next;
  }
}

long long BettiTable::at(int i, int j) const {
  auto it = e_.find(std::make_pair(i, j));
  return it == e_.end() ? 0 : it->second;
}

int BettiTable::max_homological_degree() const {
  int top = -1;
  for (const auto& [ij, m] : e_) top = std::max(top, ij.first);
  return top;
}

bool BettiTable::operator==(const BettiTable& o) const {
  return vars_ == o.vars_ && e_ == o.e_;
}

IntPoly hilbert_numerator(const BettiTable& b) {
  IntPoly acc;
  for (const auto& [ij, m] : b.entries()) {
    const auto [i, j] = ij;
    require_pre(j >= 0, "Hilbert numerator needs nonnegative internal degrees");
    const IntPoly term = IntPoly::monomial(static_cast<uint32_t>(j), static_cast<long>(m));
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

BettiTable mapping_cone(const BettiTable& a, const BettiTable& b,
                        const std::vector<Cancellation>& cancellations) {
  require_pre(a.vars() == b.vars(), "mapping cone across different ambient rings");
  BettiTable c = b;
  for (const auto& [ij, m] : a.entries()) c.add(ij.first + 1, ij.second, m);
  for (const auto& x : cancellations) {
    require_pre(x.i >= 1, "cancellation needs adjacent homological degrees i >= 1");
    require_pre(x.mult >= 1, "cancellation multiplicity must be positive");
    c.add(x.i, x.j, -x.mult);
    c.add(x.i - 1, x.j, -x.mult);
  }
  return c;
}

BettiTable horseshoe_sum(const BettiTable& a, const BettiTable& c) {
  require_pre(a.vars() == c.vars(), "horseshoe sum across different ambient rings");
  BettiTable b = a;
  for (const auto& [ij, m] : c.entries()) b.add(ij.first, ij.second, m);
  return b;
}

BettiTable dual_betti(const BettiTable& b, int codim, int omega_degree) {
  BettiTable d(b.vars());
  for (const auto& [ij, m] : b.entries()) {
    const int i = codim - ij.first;
    const int k = -omega_degree - ij.second;
    require_pre(i >= 0, "dual table leaves homological degree range; wrong codimension");
    d.add(i, k, m);
  }
  return d;
}

BettiTable shift_internal(const BettiTable& b, int delta) {
  BettiTable s(b.vars());
  for (const auto& [ij, m] : b.entries()) s.add(ij.first, ij.second + delta, m);
  return s;
}

BettiTable ring_table_from_ideal_table(const BettiTable& ideal_table) {
  BettiTable r(ideal_table.vars());
  r.add(0, 0, 1);
  for (const auto& [ij, m] : ideal_table.entries()) r.add(ij.first + 1, ij.second, m);
  return r;
}

bool validate_acm_table(const BettiTable& b, const IntPoly& expected) {
  if (b.max_homological_degree() > static_cast<int>(b.vars())) return false;
  for (const auto& [ij, m] : b.entries())
    if (ij.second < 0) return false;
  return hilbert_numerator(b) == expected;
}

std::string render_betti(const BettiTable& b) {
  if (b.is_zero()) return "(zero table)\n";
  int imax = 0, rmin = 0, rmax = 0;
  bool first = true;
  for (const auto& [ij, m] : b.entries()) {
    const int r = ij.second - ij.first;
    imax = std::max(imax, ij.first);
    rmin = first ? r : std::min(rmin, r);
    rmax = first ? r : std::max(rmax, r);
    first = false;
  }
  const size_t width = 5;
  auto cell = [&](const std::string& s) {
    std::string pad(width > s.size() ? width - s.size() : 1, ' ');
    return pad + s;
  };
  std::ostringstream out;
  out << cell("");
  for (int i = 0; i <= imax; ++i) out << cell(std::to_string(i));
  out << '\n';
  for (int r = rmin; r <= rmax; ++r) {
    out << cell(std::to_string(r) + ":");
    for (int i = 0; i <= imax; ++i) {
      const long long m = b.at(i, i + r);
      out << cell(m == 0 ? "." : std::to_string(m));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace reskit
