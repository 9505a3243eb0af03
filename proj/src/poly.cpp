#include "reskit/poly.hpp"

#include <algorithm>
#include <set>

namespace reskit {

RingPtr make_ring(const Field& f, std::vector<std::string> vars) {
  if (vars.empty()) fail_pre("polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) fail_pre("empty variable name");
    if (!seen.insert(v).second) fail_pre("duplicate variable name '" + v + "'");
  }
  return std::make_shared<const Ring>(Ring{f, std::move(vars)});
}

RingPtr make_ring(const Field& f, size_t n, const std::string& stem) {
  std::vector<std::string> vars;
  vars.reserve(n);
  for (size_t i = 0; i < n; ++i) vars.push_back(stem + std::to_string(i));
  return make_ring(f, std::move(vars));
}

Monomial::Monomial(std::vector<uint32_t> e) : e_(std::move(e)), deg_(0) {
  for (uint32_t k : e_) deg_ += k;
}

Monomial Monomial::var(size_t nvars, size_t i, uint32_t k) {
  Monomial m(nvars);
  m.e_[i] = k;
  m.deg_ = k;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  r.deg_ += o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::div(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) fail_pre("monomial division with remainder");
    r.e_[i] -= o.e_[i];
  }
  r.deg_ -= o.deg_;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  std::vector<uint32_t> e(a.nvars());
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
  return Monomial(std::move(e));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.nvars(); ++i)
    if (a.exp(i) > 0 && b.exp(i) > 0) return false;
  return true;
}

int pure_power_var(const Monomial& m) {
  int var = -1;
  for (size_t i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (var >= 0) return -1;
    var = static_cast<int>(i);
  }
  return var;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  // Ties break on the reversed exponent vector: the monomial with the larger
  // exponent at the last differing position is the smaller one.
  for (size_t j = a.nvars(); j-- > 0;) {
    if (a.exp(j) != b.exp(j)) return a.exp(j) > b.exp(j);
  }
  return false;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (size_t j = 0; j < a.nvars(); ++j)
    if (a.exp(j) != b.exp(j)) return a.exp(j) < b.exp(j);
  return false;
}

int mono_cmp(const Monomial& a, const Monomial& b, const TermOrder& ord) {
  const bool less = ord.kind == TermOrder::Kind::grevlex ? grevlex_less(a, b)
                                                         : lex_less(a, b);
  if (less) return -1;
  const bool gtr = ord.kind == TermOrder::Kind::grevlex ? grevlex_less(b, a)
                                                        : lex_less(b, a);
  return gtr ? 1 : 0;
}

std::string mono_to_string(const Monomial& m, const Ring& ring) {
  if (m.is_one()) return "1";
  std::string s;
  for (size_t i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.vars[i];
    if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
  }
  return s;
}

MultiPoly MultiPoly::constant(RingPtr ring, const Scalar& c) {
  MultiPoly p(std::move(ring));
  if (c.field() != p.ring_->field) fail_pre("constant from the wrong field");
  p.add_term(Monomial(p.ring_->nvars()), c);
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, size_t i) {
  MultiPoly p(ring);
  if (i >= ring->nvars()) fail_pre("variable index out of range");
  p.add_term(Monomial::var(ring->nvars(), i), Scalar::one(ring->field));
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (!ring_) fail_pre("polynomial without a ring");
  if (m.nvars() != ring_->nvars()) fail_pre("monomial arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(ring_->field) : it->second;
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) fail_pre("polynomial arithmetic across rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_ring(o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_ring(o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_ring(o);
  MultiPoly r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  return terms_ == o.terms_;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  // grevlex keys ascend by total degree, so the last key is maximal.
  return static_cast<int>(terms_.rbegin()->first.deg());
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const uint32_t d = terms_.begin()->first.deg();
  for (const auto& [m, c] : terms_)
    if (m.deg() != d) return false;
  return true;
}

uint32_t MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) fail_pre("homogeneous degree of the zero polynomial");
  if (!is_homogeneous()) fail_pre("polynomial is not homogeneous");
  return terms_.begin()->first.deg();
}

Scalar MultiPoly::evaluate(const VecS& point) const {
  if (point.size() != ring_->nvars()) fail_pre("evaluation point arity mismatch");
  Scalar acc = Scalar::zero(ring_->field);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (size_t i = 0; i < point.size(); ++i)
      for (uint32_t k = 0; k < m.exp(i); ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

std::pair<Monomial, Scalar> MultiPoly::leading(const TermOrder& ord) const {
  if (terms_.empty()) fail_pre("leading term of the zero polynomial");
  if (ord.kind == TermOrder::Kind::grevlex) {
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (lex_less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

MultiPoly poly_substitute(const MultiPoly& p, const RingPtr& target,
                          const std::vector<MultiPoly>& images) {
  if (images.size() != p.ring()->nvars()) fail_pre("substitution arity mismatch");
  for (const auto& im : images)
    if (!same_ring(im.ring(), target)) fail_pre("substitution image in the wrong ring");
  MultiPoly acc(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (size_t i = 0; i < images.size(); ++i)
      for (uint32_t k = 0; k < m.exp(i); ++k) t = t * images[i];
    acc = acc + t;
  }
  return acc;
}

MultiPoly poly_reduce_mod(const MultiPoly& p, const RingPtr& target_fp) {
  if (target_fp->nvars() != p.ring()->nvars()) fail_pre("reduction arity mismatch");
  MultiPoly r(target_fp);
  for (const auto& [m, c] : p.terms()) r.add_term(m, reduce_mod(c, target_fp->field));
  return r;
}

LinearForm::LinearForm(RingPtr ring, VecS coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
  if (c_.size() != ring_->nvars()) fail_pre("linear form arity mismatch");
  for (const auto& x : c_)
    if (x.field() != ring_->field) fail_pre("linear form coefficient from the wrong field");
}

LinearForm LinearForm::zero(RingPtr ring) {
  VecS c(ring->nvars(), Scalar::zero(ring->field));
  return LinearForm(std::move(ring), std::move(c));
}

LinearForm LinearForm::variable(RingPtr ring, size_t i) {
  LinearForm f = zero(ring);
  f.c_[i] = Scalar::one(f.ring_->field);
  return f;
}

LinearForm LinearForm::from_poly(const MultiPoly& p) {
  LinearForm f = zero(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (m.deg() != 1) fail_pre("not a homogeneous linear form: " + poly_to_string(p));
    for (size_t i = 0; i < m.nvars(); ++i)
      if (m.exp(i) == 1) f.c_[i] = c;
  }
  return f;
}

LinearForm LinearForm::operator-() const { return LinearForm(ring_, vec_scale(c_, -Scalar::one(ring_->field))); }

LinearForm LinearForm::operator+(const LinearForm& o) const {
  if (!same_ring(ring_, o.ring_)) fail_pre("linear form arithmetic across rings");
  return LinearForm(ring_, vec_add(c_, o.c_));
}

LinearForm LinearForm::operator-(const LinearForm& o) const {
  if (!same_ring(ring_, o.ring_)) fail_pre("linear form arithmetic across rings");
  return LinearForm(ring_, vec_sub(c_, o.c_));
}

LinearForm LinearForm::operator*(const Scalar& c) const {
  return LinearForm(ring_, vec_scale(c_, c));
}

bool LinearForm::operator==(const LinearForm& o) const {
  return same_ring(ring_, o.ring_) && c_ == o.c_;
}

MultiPoly LinearForm::to_poly() const {
  MultiPoly p(ring_);
  for (size_t i = 0; i < c_.size(); ++i)
    p.add_term(Monomial::var(c_.size(), i), c_[i]);
  return p;
}

Scalar LinearForm::evaluate(const VecS& point) const { return vec_dot(c_, point); }

QuadraticForm QuadraticForm::from_poly(const MultiPoly& p) {
  if (!p.is_zero() && (!p.is_homogeneous() || p.homogeneous_degree() != 2))
    fail_pre("not a homogeneous quadratic form: " + poly_to_string(p));
  QuadraticForm q(p.ring());
  q.p_ = p;
  return q;
}

QuadraticForm QuadraticForm::from_gram(const RingPtr& ring, const DenseMatrix& g) {
  const size_t n = ring->nvars();
  if (g.rows() != n || g.cols() != n) fail_pre("Gram matrix shape mismatch");
  if (g.field() != ring->field) fail_pre("Gram matrix over the wrong field");
  MultiPoly p(ring);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      if (g.at(i, j) != g.at(j, i)) fail_pre("Gram matrix is not symmetric");
      const Scalar c = i == j ? g.at(i, i) : g.at(i, j) + g.at(j, i);
      p.add_term(Monomial::var(n, i) * Monomial::var(n, j), c);
    }
  return from_poly(p);
}

DenseMatrix QuadraticForm::gram() const {
  const RingPtr& r = p_.ring();
  const size_t n = r->nvars();
  const Field f = r->field;
  const Scalar half = Scalar::from_int(f, 2).inverse();
  DenseMatrix g(f, n, n);
  for (const auto& [m, c] : p_.terms()) {
    const int pv = pure_power_var(m);
    if (pv >= 0) {
      g.at(pv, pv) = c;
    } else {
      size_t idx[2] = {0, 0};
      size_t cnt = 0;
      for (size_t k = 0; k < n; ++k)
        if (m.exp(k) == 1) idx[cnt++] = k;
      g.at(idx[0], idx[1]) = g.at(idx[1], idx[0]) = c * half;
    }
  }
  return g;
}

size_t QuadraticForm::rank() const { return rank_of(gram()); }

}  // namespace reskit
