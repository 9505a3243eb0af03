#include "reskit/scalar.hpp"

namespace reskit {

namespace {

int64_t norm_residue(long long v, uint32_t p) {
  int64_t r = v % static_cast<int64_t>(p);
  if (r < 0) r += p;
  return r;
}

}  // namespace

Scalar Scalar::from_int(const Field& f, long long v) {
  Scalar s(f);
  if (f.is_rational())
    s.rat_ = mpq_class(static_cast<long>(v));
  else
    s.res_ = norm_residue(v, f.p());
  return s;
}

Scalar Scalar::from_mpz(const Field& f, const mpz_class& v) {
  Scalar s(f);
  if (f.is_rational()) {
    s.rat_ = mpq_class(v);
  } else {
    mpz_class r = v % static_cast<long>(f.p());
    s.res_ = norm_residue(r.get_si(), f.p());
  }
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  require_pre(q.get_den() != 0, "rational with zero denominator");
  Scalar s(Field::rationals());
  s.rat_ = q;
  s.rat_.canonicalize();  // GMP comparisons assume canonical form
  return s;
}

mpq_class parse_mpq(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(text);
      return mpq_class(n);
    }
    mpz_class n(text.substr(0, slash));
    mpz_class d(text.substr(slash + 1));
    if (d == 0) fail_input("zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail_input("bad rational literal '" + text + "'");
  }
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (f.is_rational()) return from_mpq(parse_mpq(text));
  if (text.find('/') != std::string::npos)
    fail_input("fractional literal '" + text + "' over a prime field");
  try {
    mpz_class n(text);
    return from_mpz(f, n);
  } catch (const std::invalid_argument&) {
    fail_input("bad integer literal '" + text + "'");
  }
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

const mpq_class& Scalar::rat() const {
  if (!field_.is_rational()) fail_pre("rat() on a prime-field scalar");
  return rat_;
}

int64_t Scalar::res() const {
  if (!field_.is_prime()) fail_pre("res() on a rational scalar");
  return res_;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    fail_pre("mixed-field arithmetic: " + field_.tag() + " vs " + o.field_.tag());
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational())
    s.rat_ = -rat_;
  else
    s.res_ = res_ == 0 ? 0 : static_cast<int64_t>(field_.p()) - res_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.is_rational()) {
    s.rat_ = rat_ + o.rat_;
  } else {
    int64_t r = res_ + o.res_;
    const int64_t p = field_.p();
    s.res_ = r >= p ? r - p : r;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.is_rational())
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = (res_ * o.res_) % static_cast<int64_t>(field_.p());
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail_pre("inverse of zero");
  Scalar s(field_);
  if (field_.is_rational())
    s.rat_ = 1 / rat_;
  else
    s.res_ = inv_mod_i64(res_, field_.p());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? rat_.get_str() : std::to_string(res_);
}

Scalar reduce_mod(const Scalar& q, const Field& fp) {
  if (!fp.is_prime()) fail_pre("reduce_mod target must be a prime field");
  if (q.field().is_prime()) {
    if (q.field() != fp) fail_pre("reduce_mod across distinct prime fields");
    return q;
  }
  const mpz_class num = q.rat().get_num();
  const mpz_class den = q.rat().get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), fp.p()))
    fail_pre("denominator divisible by " + std::to_string(fp.p()) +
             " in reduction of " + q.to_string());
  Scalar n = Scalar::from_mpz(fp, num);
  Scalar d = Scalar::from_mpz(fp, den);
  return n / d;
}

int64_t inv_mod_i64(int64_t a, int64_t m) {
  int64_t r0 = m, r1 = a % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 != 0) {
    const int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) fail_pre("element not invertible modulo " + std::to_string(m));
  return t0 < 0 ? t0 + m : t0;
}

}  // namespace reskit
