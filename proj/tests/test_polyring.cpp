#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reskit/poly.hpp"
#include "reskit/rng.hpp"

using namespace reskit;

namespace {

Scalar q(long num, long den = 1) { return Scalar::from_mpq(mpq_class(num, den)); }

MultiPoly x(const RingPtr& r, size_t i) { return MultiPoly::variable(r, i); }

VecS random_point(const RingPtr& r, SplitMix64& rng) {
  VecS p;
  for (size_t i = 0; i < r->nvars(); ++i)
    p.push_back(r->field.is_prime()
                    ? Scalar::from_int(r->field, static_cast<long long>(rng.below(r->field.p())))
                    : Scalar::from_int(r->field, rng.small_int()));
  return p;
}

MultiPoly random_poly(const RingPtr& r, SplitMix64& rng, int terms, uint32_t maxdeg) {
  MultiPoly p(r);
  for (int t = 0; t < terms; ++t) {
    std::vector<uint32_t> e(r->nvars(), 0);
    for (uint32_t d = rng.below(maxdeg + 1); d > 0; --d) e[rng.below(r->nvars())]++;
    const long long c = r->field.is_prime() ? static_cast<long long>(rng.below(r->field.p()))
                                            : rng.small_int();
    p.add_term(Monomial(e), Scalar::from_int(r->field, c));
  }
  return p;
}

}  // namespace

TEST_CASE("ring construction and validation") {
  const RingPtr r = make_ring(Field::rationals(), 3);
  CHECK(r->nvars() == 3);
  CHECK(r->vars == std::vector<std::string>{"x0", "x1", "x2"});
  const RingPtr s = make_ring(Field::prime(5), {"a", "b"});
  CHECK(s->vars[1] == "b");
  CHECK(same_ring(r, make_ring(Field::rationals(), 3)));
  CHECK(!same_ring(r, s));
  CHECK_THROWS_AS(make_ring(Field::rationals(), {"a", "a"}), Error);
  CHECK_THROWS_AS(make_ring(Field::rationals(), std::vector<std::string>{}), Error);
  CHECK_THROWS_AS(make_ring(Field::rationals(), {""}), Error);
}

TEST_CASE("monomial arithmetic and divisibility") {
  const Monomial a(std::vector<uint32_t>{2, 0, 1});
  const Monomial b(std::vector<uint32_t>{1, 1, 0});
  CHECK(a.deg() == 3);
  CHECK((a * b).exps() == std::vector<uint32_t>{3, 1, 1});
  CHECK(!b.divides(a));
  CHECK(Monomial(std::vector<uint32_t>{1, 0, 0}).divides(a));
  CHECK(a.div(Monomial(std::vector<uint32_t>{1, 0, 1})).exps() ==
        std::vector<uint32_t>{1, 0, 0});
  CHECK(mono_lcm(a, b).exps() == std::vector<uint32_t>{2, 1, 1});
  CHECK(!mono_coprime(a, b));
  CHECK(mono_coprime(Monomial(std::vector<uint32_t>{2, 0, 0}),
                     Monomial(std::vector<uint32_t>{0, 1, 3})));
  CHECK(pure_power_var(Monomial(std::vector<uint32_t>{0, 4, 0})) == 1);
  CHECK(pure_power_var(a) == -1);
  CHECK(pure_power_var(Monomial(3)) == -1);  // the unit monomial
}

TEST_CASE("grevlex and lex orders") {
  // x y^2 vs x^2 z, both degree 3 (variables x > y > z)
  const Monomial xy2(std::vector<uint32_t>{1, 2, 0});
  const Monomial x2z(std::vector<uint32_t>{2, 0, 1});
  CHECK(grevlex_less(x2z, xy2));     // grevlex: smaller last exponent wins
  CHECK(lex_less(xy2, x2z));         // lex: first exponent decides
  CHECK(mono_cmp(xy2, x2z, TermOrder::grevlex()) > 0);
  CHECK(mono_cmp(xy2, x2z, TermOrder::lex()) < 0);
  CHECK(mono_cmp(xy2, xy2, TermOrder::lex()) == 0);
  // degree dominates both orders
  const Monomial z4(std::vector<uint32_t>{0, 0, 4});
  CHECK(grevlex_less(xy2, z4));
  CHECK(!lex_less(xy2, z4));  // lex ignores total degree
}

TEST_CASE("polynomial arithmetic identities") {
  const RingPtr r = make_ring(Field::rationals(), 2);
  const MultiPoly sum = x(r, 0) + x(r, 1);
  const MultiPoly sq = sum * sum;
  MultiPoly expect = x(r, 0) * x(r, 0) + x(r, 0) * x(r, 1) * q(2) + x(r, 1) * x(r, 1);
  CHECK(sq == expect);
  CHECK((sq - sq).is_zero());
  CHECK((sq * q(0)).is_zero());
  CHECK(-(-sq) == sq);
  CHECK(sq.term_count() == 3);
  CHECK(sq.degree() == 2);
  CHECK(MultiPoly(r).degree() == -1);
  CHECK(sq.coeff(Monomial(std::vector<uint32_t>{1, 1})) == q(2));
  CHECK(sq.coeff(Monomial(std::vector<uint32_t>{2, 1})).is_zero());

  // add_term cancellation erases entries
  MultiPoly p(r);
  p.add_term(Monomial(std::vector<uint32_t>{1, 0}), q(3));
  p.add_term(Monomial(std::vector<uint32_t>{1, 0}), q(-3));
  CHECK(p.is_zero());

  const RingPtr other = make_ring(Field::rationals(), {"y0", "y1"});
  CHECK_THROWS_AS(x(r, 0) + x(other, 0), Error);
}

TEST_CASE("homogeneity detection") {
  const RingPtr r = make_ring(Field::prime(7), 3);
  const MultiPoly h = x(r, 0) * x(r, 1) + x(r, 2) * x(r, 2);
  CHECK(h.is_homogeneous());
  CHECK(h.homogeneous_degree() == 2);
  const MultiPoly nh = x(r, 0) + x(r, 1) * x(r, 2);
  CHECK(!nh.is_homogeneous());
  CHECK(MultiPoly(r).is_homogeneous());  // zero is homogeneous
  CHECK_THROWS_AS(nh.homogeneous_degree(), Error);
}

TEST_CASE("evaluation agrees with factored evaluation at random points") {
  for (const Field& f : {Field::rationals(), Field::prime(11)}) {
    const RingPtr r = make_ring(f, 3);
    const MultiPoly a = x(r, 0) + x(r, 1) * Scalar::from_int(f, 2);
    const MultiPoly b = x(r, 0) * Scalar::from_int(f, 3) - x(r, 2);
    const MultiPoly p = a * b;
    SplitMix64 rng(5);
    for (int t = 0; t < 20; ++t) {
      const VecS pt = random_point(r, rng);
      CHECK(p.evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
  }
}

TEST_CASE("substitution: algebra morphism and exactness") {
  const RingPtr r = make_ring(Field::rationals(), 2);  // x0, x1
  const RingPtr u = make_ring(Field::rationals(), {"u", "v"});
  const MultiPoly img0 = x(u, 0) + x(u, 1);  // x0 -> u + v
  const MultiPoly img1 = x(u, 0) - x(u, 1);  // x1 -> u - v
  const MultiPoly p = x(r, 0) * x(r, 0) - x(r, 1) * x(r, 1);
  const MultiPoly sub = poly_substitute(p, u, {img0, img1});
  CHECK(sub == x(u, 0) * x(u, 1) * q(4));  // (u+v)^2 - (u-v)^2 = 4uv

  // identity substitution is the identity
  const MultiPoly same = poly_substitute(p, r, {x(r, 0), x(r, 1)});
  CHECK(same == p);

  // morphism property on random polynomials
  SplitMix64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const MultiPoly f1 = random_poly(r, rng, 4, 3);
    const MultiPoly f2 = random_poly(r, rng, 4, 3);
    CHECK(poly_substitute(f1 * f2, u, {img0, img1}) ==
          poly_substitute(f1, u, {img0, img1}) * poly_substitute(f2, u, {img0, img1}));
    CHECK(poly_substitute(f1 + f2, u, {img0, img1}) ==
          poly_substitute(f1, u, {img0, img1}) + poly_substitute(f2, u, {img0, img1}));
  }
  CHECK_THROWS_AS(poly_substitute(p, u, {img0}), Error);  // arity mismatch
}

TEST_CASE("coefficient reduction mod p") {
  const RingPtr r = make_ring(Field::rationals(), 2);
  const RingPtr r5 = make_ring(Field::prime(5), 2);
  const MultiPoly p = x(r, 0) * q(7) + x(r, 1) * q(1, 3);
  const MultiPoly m = poly_reduce_mod(p, r5);
  CHECK(m == x(r5, 0) * Scalar::from_int(Field::prime(5), 2) +
                 x(r5, 1) * Scalar::from_int(Field::prime(5), 2));
  const MultiPoly bad = x(r, 0) * q(1, 5);
  CHECK_THROWS_AS(poly_reduce_mod(bad, r5), Error);
  // 5 x0 reduces to zero
  CHECK(poly_reduce_mod(x(r, 0) * q(5), r5).is_zero());
}

TEST_CASE("linear forms") {
  const RingPtr r = make_ring(Field::rationals(), 3);
  const LinearForm f(r, {q(1), q(0), q(-2)});
  CHECK(f.coeff(2) == q(-2));
  CHECK(LinearForm::from_poly(f.to_poly()) == f);
  CHECK(LinearForm::variable(r, 1).to_poly() == x(r, 1));
  CHECK(LinearForm::zero(r).is_zero());
  CHECK((f - f).is_zero());
  CHECK((f + f) == f * q(2));
  CHECK(f.evaluate({q(3), q(9), q(1)}) == q(1));
  CHECK_THROWS_AS(LinearForm::from_poly(x(r, 0) * x(r, 1)), Error);
  CHECK_THROWS_AS(LinearForm(r, {q(1)}), Error);  // arity mismatch
}

TEST_CASE("quadratic forms: Gram convention and round-trip") {
  const RingPtr r = make_ring(Field::rationals(), 3);
  const MultiPoly p = x(r, 0) * x(r, 0) * q(2) + x(r, 0) * x(r, 1) * q(3) -
                      x(r, 1) * x(r, 2);
  const QuadraticForm quad = QuadraticForm::from_poly(p);
  const DenseMatrix g = quad.gram();
  CHECK(g.at(0, 0) == q(2));
  CHECK(g.at(0, 1) == q(3, 2));
  CHECK(g.at(1, 0) == q(3, 2));
  CHECK(g.at(1, 2) == q(-1, 2));
  CHECK(g.at(2, 2).is_zero());
  CHECK(QuadraticForm::from_gram(r, g) == quad);

  // q(v) = v^T G v at random points
  SplitMix64 rng(8);
  for (int t = 0; t < 20; ++t) {
    VecS v;
    for (int i = 0; i < 3; ++i) v.push_back(q(rng.small_int()));
    Scalar vgv = Scalar::zero(r->field);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) vgv += v[i] * g.at(i, j) * v[j];
    CHECK(p.evaluate(v) == vgv);
  }

  CHECK_THROWS_AS(QuadraticForm::from_poly(x(r, 0)), Error);
  CHECK_THROWS_AS(QuadraticForm::from_poly(x(r, 0) * x(r, 1) * x(r, 2)), Error);
  CHECK_THROWS_AS(QuadraticForm::from_poly(x(r, 0) * x(r, 1) + x(r, 2)), Error);
  CHECK(QuadraticForm::from_poly(MultiPoly(r)).is_zero());
  CHECK(QuadraticForm::from_poly(MultiPoly(r)).rank() == 0);
}

TEST_CASE("pinned quadric ranks") {
  const RingPtr r = make_ring(Field::rationals(), 6);
  const MultiPoly rank5 = x(r, 0) * x(r, 4) - x(r, 1) * x(r, 3) + x(r, 2) * x(r, 2);
  CHECK(QuadraticForm::from_poly(rank5).rank() == 5);
  const MultiPoly rank6 = x(r, 0) * x(r, 0) + x(r, 0) * x(r, 5) + x(r, 1) * x(r, 4) -
                          x(r, 2) * x(r, 3);
  CHECK(QuadraticForm::from_poly(rank6).rank() == 6);
  CHECK(QuadraticForm::from_poly(x(r, 5) * x(r, 5)).rank() == 1);
}

TEST_CASE("quadric rank is invariant under invertible substitution") {
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    const RingPtr r = make_ring(f, 4);
    SplitMix64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
      // random quadric
      MultiPoly p(r);
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = i; j < 4; ++j) {
          const long long c = f.is_prime() ? static_cast<long long>(rng.below(f.p()))
                                           : rng.small_int();
          p = p + x(r, i) * x(r, j) * Scalar::from_int(f, c);
        }
      // random invertible change of variables
      DenseMatrix s(f, 4, 4);
      do {
        for (size_t i = 0; i < 4; ++i)
          for (size_t j = 0; j < 4; ++j)
            s.at(i, j) = f.is_prime()
                             ? Scalar::from_int(f, static_cast<long long>(rng.below(f.p())))
                             : Scalar::from_int(f, rng.small_int());
      } while (det_and_inverse(s).det.is_zero());
      std::vector<MultiPoly> images;
      for (size_t i = 0; i < 4; ++i) {
        MultiPoly img(r);
        for (size_t j = 0; j < 4; ++j) img = img + x(r, j) * s.at(i, j);
        images.push_back(img);
      }
      const MultiPoly moved = poly_substitute(p, r, images);
      CHECK(QuadraticForm::from_poly(moved).rank() ==
            QuadraticForm::from_poly(p).rank());
    }
  }
}

TEST_CASE("printing uses descending lex with caret powers") {
  const RingPtr r = make_ring(Field::rationals(), 6);
  const MultiPoly p = x(r, 2) * x(r, 2) + x(r, 0) * x(r, 4) - x(r, 1) * x(r, 3);
  CHECK(poly_to_string(p) == "x0*x4 - x1*x3 + x2^2");
  CHECK(poly_to_string(MultiPoly(r)) == "0");
  CHECK(poly_to_string(-x(r, 0)) == "-x0");
  CHECK(poly_to_string(MultiPoly::constant(r, q(-7, 2))) == "-7/2");
  CHECK(poly_to_string(x(r, 0) * q(1, 2) + MultiPoly::constant(r, q(1))) ==
        "1/2*x0 + 1");
  const RingPtr s = make_ring(Field::prime(5), {"a", "b"});
  CHECK(poly_to_string(x(s, 0) * x(s, 0) * Scalar::from_int(Field::prime(5), 3) -
                       x(s, 1)) == "3*a^2 + 4*b");
}

TEST_CASE("parsing round-trips and rejects junk") {
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    const RingPtr r = make_ring(f, 4);
    SplitMix64 rng(f.is_prime() ? 55 : 44);
    for (int t = 0; t < 25; ++t) {
      const MultiPoly p = random_poly(r, rng, 5, 3);
      CHECK(poly_parse(r, poly_to_string(p)) == p);
    }
  }
  const RingPtr r = make_ring(Field::rationals(), 4);
  CHECK(poly_parse(r, "x0^2*x1 - 3*x2") ==
        x(r, 0) * x(r, 0) * x(r, 1) - x(r, 2) * q(3));
  CHECK(poly_parse(r, "-x0 + x0") == MultiPoly(r));
  CHECK(poly_parse(r, " 1/2 * x0 ") == x(r, 0) * q(1, 2));
  CHECK(poly_parse(r, "0").is_zero());
  CHECK_THROWS_AS(poly_parse(r, "2^3"), Error);  // exponents attach to variables only
  CHECK_THROWS_AS(poly_parse(r, ""), Error);
  CHECK_THROWS_AS(poly_parse(r, "y0"), Error);
  CHECK_THROWS_AS(poly_parse(r, "x0^"), Error);
  CHECK_THROWS_AS(poly_parse(r, "x0**x1"), Error);
  CHECK_THROWS_AS(poly_parse(r, "x0 + "), Error);
  CHECK_THROWS_AS(poly_parse(r, "1/0"), Error);
  CHECK_THROWS_AS(poly_parse(r, "x0 x1"), Error);
}

TEST_CASE("leading terms under both orders") {
  const RingPtr r = make_ring(Field::rationals(), 3);
  const MultiPoly p = x(r, 0) * x(r, 1) * x(r, 1) * q(2) +
                      x(r, 0) * x(r, 0) * x(r, 2) * q(5);
  const auto [mg, cg] = p.leading(TermOrder::grevlex());
  CHECK(mg == Monomial(std::vector<uint32_t>{1, 2, 0}));
  CHECK(cg == q(2));
  const auto [ml, cl] = p.leading(TermOrder::lex());
  CHECK(ml == Monomial(std::vector<uint32_t>{2, 0, 1}));
  CHECK(cl == q(5));
  CHECK_THROWS_AS(MultiPoly(r).leading(TermOrder::grevlex()), Error);
}
