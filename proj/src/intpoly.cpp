#include "reskit/intpoly.hpp"

#include "reskit/error.hpp"

namespace reskit {

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::one() { return monomial(0, 1); }

IntPoly IntPoly::monomial(uint32_t deg, const mpz_class& coeff) {
  IntPoly p;
  if (coeff == 0) return p;
  p.c_.assign(deg + 1, mpz_class(0));
  p.c_[deg] = coeff;
  return p;
}

IntPoly IntPoly::from_terms(const std::vector<std::pair<uint32_t, mpz_class>>& terms) {
  IntPoly p;
  for (const auto& [d, c] : terms) {
    if (p.c_.size() <= d) p.c_.resize(d + 1, mpz_class(0));
    p.c_[d] += c;
  }
  p.trim();
  return p;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  if (r.c_.size() < o.c_.size()) r.c_.resize(o.c_.size(), mpz_class(0));
  for (size_t k = 0; k < o.c_.size(); ++k) r.c_[k] += o.c_[k];
  r.trim();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

std::vector<mpz_class> IntPoly::series_prefix(uint32_t nvars, uint32_t upto) const {
  if (nvars == 0) fail_pre("series expansion needs at least one variable");
  // 1/(1-t)^n has coefficients C(n-1+k, n-1).
  std::vector<mpz_class> inv(upto + 1);
  for (uint32_t k = 0; k <= upto; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), nvars - 1 + k, nvars - 1);
    inv[k] = b;
  }
  std::vector<mpz_class> out(upto + 1, mpz_class(0));
  for (size_t i = 0; i < c_.size() && i <= upto; ++i) {
    if (c_[i] == 0) continue;
    for (uint32_t k = 0; i + k <= upto; ++k) out[i + k] += c_[i] * inv[k];
  }
  return out;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const bool neg = c_[k] < 0;
    mpz_class a = neg ? mpz_class(-c_[k]) : c_[k];
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str();
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace reskit
