#include "reskit/fixtures.hpp"

namespace reskit {
namespace fixtures {

SkewLinearMatrix quintic_surface_matrix() {
  const RingPtr ring = make_ring(Field::rationals(), 6);
  auto x = [&](size_t v) { return LinearForm::variable(ring, v); };
  SkewLinearMatrix a(ring, 5);
  a.set_upper(0, 1, x(0));
  a.set_upper(0, 2, x(1));
  a.set_upper(0, 3, x(2));
  a.set_upper(0, 4, x(3));
  a.set_upper(1, 2, x(2));
  a.set_upper(1, 3, x(3));
  a.set_upper(1, 4, x(4));
  a.set_upper(2, 3, x(4));
  a.set_upper(2, 4, x(5));
  a.set_upper(3, 4, x(0) + x(5));
  return a;
}

SkewLinearMatrix quintic_surface_matrix_with(size_t i, size_t j,
                                             const LinearForm& f) {
  SkewLinearMatrix a = quintic_surface_matrix();
  a.set_upper(i, j, f);
  return a;
}

namespace {

BettiTable table_of(size_t vars,
                    std::initializer_list<std::tuple<int, int, long long>> cells) {
  BettiTable b(vars);
  for (const auto& [i, j, m] : cells) b.add(i, j, m);
  return b;
}

}  // namespace

BettiTable acm_curve_table() {
  return table_of(7, {{0, 0, 1},
                      {1, 2, 5},
                      {1, 3, 13},
                      {2, 3, 5},
                      {2, 4, 45},
                      {3, 5, 56},
                      {4, 6, 25},
                      {5, 8, 2}});
}

BettiTable generic_curve_table() {
  return table_of(7, {{0, 0, 1},
                      {1, 2, 5},
                      {1, 3, 8},
                      {2, 4, 45},
                      {3, 5, 56},
                      {4, 6, 25},
                      {5, 8, 2}});
}

BettiTable threefold_ideal_table() {
  return table_of(7, {{0, 2, 5}, {1, 3, 5}, {2, 5, 1}});
}

BettiTable bundle_table() {
  return table_of(7, {{0, 0, 15}, {1, 1, 45}, {2, 2, 45}, {3, 3, 15}});
}

BettiTable twisted_pair_table() {
  return table_of(7, {{0, 0, 2}, {1, 2, 10}, {2, 3, 10}, {3, 5, 2}});
}

IntPoly curve_numerator() {
  return IntPoly::from_terms(
      {{0, 1}, {2, -5}, {3, -8}, {4, 45}, {5, -56}, {6, 25}, {8, -2}});
}

IntPoly quintic_numerator() {
  return IntPoly::from_terms({{0, 1}, {2, -5}, {3, 5}, {5, -1}});
}

}  // namespace fixtures
}  // namespace reskit
