#include <algorithm>
#include <cctype>

#include "reskit/poly.hpp"

namespace reskit {

namespace {

bool scalar_is_negative(const Scalar& c) {
  return c.field().is_rational() && c.rat() < 0;
}

std::string scalar_abs_string(const Scalar& c) {
  if (!c.field().is_rational()) return c.to_string();
  mpq_class a = c.rat();
  if (a < 0) a = -a;
  return a.get_str();
}

}  // namespace

std::string poly_to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Scalar>> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return lex_less(b.first, a.first); });
  std::string out;
  for (size_t i = 0; i < ts.size(); ++i) {
    const auto& [m, c] = ts[i];
    const bool neg = scalar_is_negative(c);
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string cs = scalar_abs_string(c);
    if (m.is_one()) {
      out += cs;
    } else if (cs == "1") {
      out += mono_to_string(m, *p.ring());
    } else {
      out += cs + "*" + mono_to_string(m, *p.ring());
    }
  }
  return out;
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  std::string number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      size_t save = pos++;
      size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == dstart) pos = save;  // a lone '/' is not ours
    }
    return s.substr(start, pos - start);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    auto ok_first = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto ok_rest = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos < s.size() && ok_first(s[pos])) {
      ++pos;
      while (pos < s.size() && ok_rest(s[pos])) ++pos;
    }
    return s.substr(start, pos - start);
  }
};

}  // namespace

MultiPoly poly_parse(const RingPtr& ring, const std::string& text) {
  Lexer lx{text};
  const Field f = ring->field;
  const size_t n = ring->nvars();
  MultiPoly out(ring);

  auto var_index = [&](const std::string& name) -> size_t {
    for (size_t i = 0; i < n; ++i)
      if (ring->vars[i] == name) return i;
    fail_input("unknown variable '" + name + "' in '" + text + "'");
  };

  bool first = true;
  while (!lx.eof()) {
    Scalar sign = Scalar::one(f);
    if (lx.eat('-')) {
      sign = -sign;
    } else if (!lx.eat('+') && !first) {
      fail_input("expected '+' or '-' at position " + std::to_string(lx.pos) +
                 " in '" + text + "'");
    }
    first = false;

    Scalar coeff = sign;
    Monomial mono(n);
    bool saw_factor = false;
    do {
      const char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= Scalar::parse(f, lx.number());
      } else {
        const std::string name = lx.ident();
        if (name.empty())
          fail_input("expected a factor at position " + std::to_string(lx.pos) +
                     " in '" + text + "'");
        uint32_t e = 1;
        if (lx.eat('^')) {
          const std::string es = lx.number();
          if (es.empty() || es.find('/') != std::string::npos)
            fail_input("bad exponent in '" + text + "'");
          e = static_cast<uint32_t>(std::stoul(es));
        }
        mono = mono * Monomial::var(n, var_index(name), e);
      }
      saw_factor = true;
    } while (lx.eat('*'));
    if (!saw_factor) fail_input("empty term in '" + text + "'");
    out.add_term(mono, coeff);
  }
  if (first) fail_input("empty polynomial string");
  return out;
}

}  // namespace reskit
