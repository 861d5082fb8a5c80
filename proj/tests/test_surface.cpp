#include "doctest.h"

#include "crosscap/errors.hpp"
#include "crosscap/surface.hpp"

using namespace crosscap;

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(nonorientable_surface(5, 1)) == -4);
  CHECK(euler_characteristic(orientable_surface(0)) == 2);
  CHECK(euler_characteristic(orientable_surface(0, 0, 3)) == -1);
  CHECK(euler_characteristic(nonorientable_surface(4, 0, 1)) == -3);
  CHECK(euler_characteristic(orientable_surface(2, 1, 2)) == -5);
}

TEST_CASE("surface from chi") {
  CHECK(surface_from_chi(false, -3, 0, 1) == nonorientable_surface(4, 0, 1));
  CHECK(surface_from_chi(true, 0, 0, 0) == orientable_surface(1));
  CHECK(surface_from_chi(true, -3, 0, 1) == orientable_surface(2, 0, 1));
  CHECK_THROWS_AS(surface_from_chi(true, -2, 0, 1), ParityError);
  CHECK_THROWS_AS(surface_from_chi(true, 3, 0, 0), NegativeGenus);
  CHECK_THROWS_AS(surface_from_chi(false, 2, 0, 0), NegativeGenus);
}

TEST_CASE("chi round trip over a grid") {
  for (int k = 0; k <= 3; ++k)
    for (int b = 0; b <= 3; ++b) {
      for (int g = 0; g <= 6; ++g) {
        const auto s = orientable_surface(g, k, b);
        CHECK(surface_from_chi(true, euler_characteristic(s), k, b) == s);
      }
      for (int g = 1; g <= 8; ++g) {
        const auto s = nonorientable_surface(g, k, b);
        CHECK(surface_from_chi(false, euler_characteristic(s), k, b) == s);
      }
    }
}

TEST_CASE("invalid surfaces") {
  CHECK_THROWS_AS(nonorientable_surface(0), InvalidSurface);
  CHECK_THROWS_AS(orientable_surface(-1), InvalidSurface);
  CHECK_THROWS_AS(parse_surface_literal("N0"), InvalidSurface);
  CHECK_THROWS_AS(parse_surface_literal("T3"), InvalidSurface);
  CHECK_THROWS_AS(parse_surface_literal("N3x"), InvalidSurface);
  CHECK_THROWS_AS(parse_surface_literal(""), InvalidSurface);
}

TEST_CASE("surface literals") {
  CHECK(parse_surface_literal("N5k1b0") == nonorientable_surface(5, 1));
  CHECK(parse_surface_literal("S2k0b2") == orientable_surface(2, 0, 2));
  CHECK(parse_surface_literal("N6") == nonorientable_surface(6));
  CHECK(parse_surface_literal("S1b1") == orientable_surface(1, 0, 1));
  for (int g = 1; g <= 4; ++g)
    for (int k = 0; k <= 2; ++k)
      for (int b = 0; b <= 2; ++b) {
        const auto n = nonorientable_surface(g, k, b);
        const auto s = orientable_surface(g, k, b);
        CHECK(parse_surface_literal(to_literal(n)) == n);
        CHECK(parse_surface_literal(to_literal(s)) == s);
      }
  CHECK(describe(nonorientable_surface(3, 2, 1)) == "N_{3,1}^2");
  CHECK(describe(orientable_surface(1, 0, 1)) == "S_{1,1}");
}

TEST_CASE("homeomorphic exactly when all fields agree") {
  const SurfaceInvariants a = nonorientable_surface(3, 1, 1);
  CHECK(homeomorphic(a, a));
  CHECK_FALSE(homeomorphic(a, nonorientable_surface(3, 1, 0)));
  CHECK_FALSE(homeomorphic(a, nonorientable_surface(3, 0, 1)));
  CHECK_FALSE(homeomorphic(a, orientable_surface(3, 1, 1)));
  // same chi, different type
  CHECK_FALSE(homeomorphic(orientable_surface(1), nonorientable_surface(2)));
}

TEST_CASE("orientation double cover") {
  CHECK(orientation_double_cover(nonorientable_surface(5, 2)) == orientable_surface(4, 4));
  CHECK(orientation_double_cover(nonorientable_surface(1)) == orientable_surface(0));
  CHECK(orientation_double_cover(nonorientable_surface(6, 1)) == orientable_surface(5, 2));
  CHECK_THROWS_AS(orientation_double_cover(orientable_surface(2)), NotApplicable);
  for (int g = 1; g <= 12; ++g)
    for (int k = 0; k <= 4; ++k) {
      const auto s = nonorientable_surface(g, k);
      const auto cover = orientation_double_cover(s);
      CHECK(cover.orientable);
      CHECK(euler_characteristic(cover) == 2 * euler_characteristic(s));
      CHECK(cover.punctures == 2 * k);
      // a closed orientable surface with 2k punctures and chi 2(2-g-k) has genus g-1
      CHECK(2 - 2 * cover.genus - 2 * k == 2 * (2 - g - k));
    }
}

TEST_CASE("abelian rank formulas") {
  CHECK(expected_abelian_rank(7, 0, true) == 7);
  CHECK(expected_abelian_rank(6, 0, true) == 5);
  CHECK(expected_abelian_rank_with_s(6, 0, 1) == 5);
  CHECK(expected_abelian_rank_with_s(6, 0, 0) == 6);
  CHECK(expected_abelian_rank_with_s(4, 2, 1) == 4);
  CHECK_THROWS_AS(expected_abelian_rank_with_s(5, 0, 0), ParityError);
  CHECK_THROWS_AS(expected_abelian_rank(4, 0, true), NotApplicable);
}
