#include <doctest.h>

#include "sqtile/errors.hpp"
#include "sqtile/hamel.hpp"
#include "support/random_tilings.hpp"

using namespace sqtile;
using sqtile::testing::Rng;

namespace {
const Sqrt2Num kR2 = Sqrt2Num::sqrt2();
}

TEST_CASE("x-area values") {
  CHECK(x_area({1, 1}, {1, 1}, Sqrt2Num(-1)) == Sqrt2Num(0));
  CHECK(x_area(Sqrt2Num(1), {1, 1}, kR2) == Sqrt2Num(1, 1));
  // (1 + 0*x)(2 + 1*x) at x = -3
  CHECK(x_area(Sqrt2Num(1), {2, 1}, Sqrt2Num(-3)) == Sqrt2Num(-1));
}

TEST_CASE("x-area polynomial") {
  CHECK(x_area_poly({1, 1}, {1, 1}) == QuadPoly{1, 2, 1});
  CHECK(x_area_poly(Sqrt2Num(1), {Rational(5, 2), 7}) == QuadPoly{0, 7, Rational(5, 2)});
  CHECK(x_area_poly(Sqrt2Num(2), Sqrt2Num(3)) == QuadPoly{0, 0, 6});
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto w = testing::random_good(rng);
    const auto h = testing::random_good(rng);
    const auto x = testing::random_rational(rng, 30, 7);
    CHECK(Sqrt2Num(x_area_poly(w, h)(x)) == x_area(w, h, Sqrt2Num(x)));
  }
}

TEST_CASE("QuadPoly nonnegativity") {
  CHECK(QuadPoly{1, 2, 1}.nonnegative_everywhere());
  CHECK_FALSE(QuadPoly{1, 3, 1}.nonnegative_everywhere());
  CHECK_FALSE(QuadPoly{-1, 0, 0}.nonnegative_everywhere());
  CHECK(QuadPoly{0, 0, 0}.nonnegative_everywhere());
  CHECK_FALSE(QuadPoly{0, 1, 5}.nonnegative_everywhere());
  CHECK_FALSE(QuadPoly{0, 0, -1}.nonnegative_everywhere());
}

TEST_CASE("x_area_nonneg_for_all_x") {
  CHECK(x_area_nonneg_for_all_x({1, 1}, {2, 2}));
  CHECK_FALSE(x_area_nonneg_for_all_x(Sqrt2Num(1), {1, 1}));
  CHECK(x_area_nonneg_for_all_x(Sqrt2Num(3), Sqrt2Num(7)));
  CHECK_THROWS_AS(x_area_nonneg_for_all_x({1, -1}, Sqrt2Num(1)), std::invalid_argument);
}

TEST_CASE("ordinary and conjugate areas are x-areas") {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto w = testing::random_good(rng);
    const auto h = testing::random_good(rng);
    CHECK(x_area(w, h, kR2) == w * h);
    CHECK(x_area(w, h, -kR2) == conj(w * h));
  }
}

TEST_CASE("x-area of a square is a square") {
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const auto s = testing::random_good(rng);
    const auto x = testing::random_rational(rng, 40, 9);
    const Sqrt2Num v = x_area(s, s, Sqrt2Num(x));
    CHECK(v.is_rational());
    CHECK(v.a() >= Rational{});
    CHECK(v.a() == (s.a() + s.b() * x) * (s.a() + s.b() * x));
  }
}

TEST_CASE("y-area in the worked-example basis") {
  const Tiling t = testing::fig4_tiling();
  const Basis b = extract_basis(testing::side_list(t), t.table);
  for (const Rational y : {Rational(-3), Rational(0), Rational(5, 2)}) {
    CHECK(y_area(t.outer_w, t.outer_h, b, y) == y);
  }
  CHECK(y_area(Rational(1, 3), Rational(1, 3), b, 5) == Rational(1, 9));
  CHECK(y_area(t.tiles[2], b, 2) == 2);
  CHECK(y_area(t.tiles[0], b, 2) == 0);
}

TEST_CASE("additivity on the worked example") {
  const Tiling t = testing::fig4_tiling();
  const Basis b = extract_basis(testing::side_list(t), t.table);
  CHECK(additivity_check(t, b, {-1, 0, 7}));

  const Tiling single{t.table, t.outer_w, t.outer_h, {{LinExpr{}, LinExpr{}, t.outer_w, t.outer_h}}};
  CHECK(additivity_check(single, extract_basis(testing::side_list(single), t.table), {-4, 9}));

  Tiling broken = t;
  broken.tiles[0].h = broken.tiles[0].h + LinExpr(1);
  CHECK_THROWS_AS(additivity_check(broken, b, {-1}), InvalidTiling);
}

TEST_CASE("y_area_balance without geometry exposes a negative outer area") {
  // Two unit squares claimed to cover 1 x sqrt2: outer y-area -1, squares 1 + 1.
  GeneratorTable tab;
  const LinExpr r2 = LinExpr::generator(tab.declare_default("sqrt2"));
  const Tiling t{tab, LinExpr(1), r2,
                 {{LinExpr{}, LinExpr{}, LinExpr(1), LinExpr(1)}, {LinExpr{}, LinExpr(1), LinExpr(1), LinExpr(1)}}};
  const Basis b = extract_basis(testing::side_list(t), tab);
  const auto bal = y_area_balance(t, b, -1);
  CHECK(bal.outer == -1);
  CHECK(bal.tile_sum == 2);
  CHECK_FALSE(bal.holds());
}

TEST_CASE("additivity holds exactly on random guillotine tilings") {
  Rng rng(31);
  for (int iter = 0; iter < 40; ++iter) {
    const Tiling t = testing::random_incommensurable_tiling(rng, 5);
    const Basis b = extract_basis(testing::side_list(t), t.table);
    std::vector<Rational> ys;
    for (int k = 0; k < 5; ++k) ys.push_back(testing::random_rational(rng, 50, 9));
    CHECK(additivity_check(t, b, ys));
    for (const auto& p : t.tiles) {
      if (is_square(p)) {
        const auto [a, bb] = coords_st(p.w, b);
        CHECK(y_area(p, b, ys[0]) == (a + bb * ys[0]) * (a + bb * ys[0]));
      }
    }
  }
}

TEST_CASE("good-square analysis") {
  SUBCASE("rational rectangle tiled by unit squares") {
    const auto a = analyze_good_squares(std::vector<Sqrt2Num>(6, Sqrt2Num(1)), Sqrt2Num(2), Sqrt2Num(3));
    CHECK(a.A == 6);
    CHECK(a.B == 0);
    CHECK(a.C == 0);
    CHECK(a.area_identity_holds);
    CHECK(a.contradiction == GoodContradiction::none);
  }
  SUBCASE("1 x sqrt2 by rational squares") {
    const auto a = analyze_good_squares({Sqrt2Num(1), Sqrt2Num(Rational(1, 2))}, Sqrt2Num(1), kR2);
    CHECK_FALSE(a.area_identity_holds);
    CHECK(a.contradiction == GoodContradiction::area_mismatch);
  }
  SUBCASE("1 x (1 + sqrt2)") {
    const auto a = analyze_good_squares({Sqrt2Num(1), kR2}, Sqrt2Num(1), {1, 1});
    CHECK(a.squares_area == Sqrt2Num(3));
    CHECK(a.contradiction == GoodContradiction::area_mismatch);
  }
  SUBCASE("identity holding for a positive conjugate") {
    // (1 + sqrt2)^2 = 3 + 2 sqrt2 with conjugate 3 - 2 sqrt2 > 0
    const auto a = analyze_good_squares({{1, 1}}, {1, 1}, {1, 1});
    CHECK(a.area_identity_holds);
    CHECK(a.contradiction == GoodContradiction::none);
  }
  CHECK_THROWS_AS(analyze_good_squares({}, Sqrt2Num(1), Sqrt2Num(1)), std::invalid_argument);
}

TEST_CASE("area identity forces a nonnegative conjugate area") {
  // conj(sum s_i^2) = sum conj(s_i)^2 >= 0, so whenever the identity holds
  // the target's conjugate area is nonnegative.
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    std::vector<Sqrt2Num> sides;
    const auto n = testing::uniform(rng, 1, 6);
    Sqrt2Num total;
    for (long k = 0; k < n; ++k) {
      sides.push_back(testing::random_good(rng, 6, 4));
      total += sides.back() * sides.back();
    }
    const auto a = analyze_good_squares(sides, Sqrt2Num(1), total);
    CHECK(a.area_identity_holds);
    CHECK(total.conj().sign() >= 0);
    CHECK(a.contradiction == GoodContradiction::none);
  }
}
