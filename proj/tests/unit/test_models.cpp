#include <doctest.h>

#include <novikit/models.hpp>
#include <novikit/smith.hpp>
#include <support/build.hpp>
#include <support/generators.hpp>

using namespace nk;
using nk::test::imat;
using nk::test::lmat;
using nk::test::P;

namespace {

const LaurentPoly z = LaurentPoly::z();

SeifertData seifert(const IntMatrix& e) {
  SeifertData s;
  s.base = IntComplex(1, 1, {e.rows()});
  s.e[1] = e;
  return s;
}

}  // namespace

TEST_CASE("mapping tori") {
  auto c = nk::test::circle();
  auto id = ChainMap<Integer>::identity(c);
  CHECK(novikov_homology(mapping_torus_complex(id, Direction::Plus), Direction::Plus).is_zero());
  CHECK(novikov_homology(mapping_torus_complex(id, Direction::Minus), Direction::Plus).is_zero());
  ChainMap<Integer> two(c, c, {{0, imat({{1}})}, {1, imat({{2}})}});
  auto m = mapping_torus_complex(two, Direction::Minus);
  CHECK(m.differential(2) == lmat({{LaurentPoly()}, {z - 2}}));
  CHECK(m.differential(1) == lmat({{z - 1, LaurentPoly()}}));
  ChainMap<Integer> neg(c, c, {{0, imat({{-1}})}, {1, imat({{-1}})}});
  CHECK(novikov_homology(mapping_torus_complex(neg, Direction::Minus), Direction::Plus).is_zero());
}

TEST_CASE("circle exercise") {
  auto fd = circle_exercise();
  CHECK(validate_fundamental_domain(fd).valid);
  auto fhat = algebraic_novikov_complex(fd);
  CHECK(fhat.ranks() == std::vector<Index>{1, 1});
  CHECK(fhat.lo() == 0);
  const auto d = fhat.differential(1)(0, 0);
  CHECK(d == RationalFunction(1 - z));
  CHECK(novikov_homology(fhat, Direction::Plus).is_zero());
  CHECK(d.is_unit());
}

TEST_CASE("knot fundamental domain") {
  auto tre = knot_fundamental_domain(seifert(imat({{0, 1}, {-1, 1}})));
  CHECK(validate_fundamental_domain(tre).valid);
  CHECK(tre.F.rank(2) == 2);
  CHECK(tre.F.rank(1) == 2);
  auto fhat = algebraic_novikov_complex(tre);
  CHECK(fhat.differential(2) == widen<RationalFunction>(lmat({{z, 1 - z}, {z - 1, LaurentPoly(1)}})));
  auto id = algebraic_novikov_complex(knot_fundamental_domain(seifert(imat({{1, 0}, {0, 1}}))));
  CHECK(id.differential(2) == widen<RationalFunction>(identity<LaurentPoly>(2)));
  auto zero = algebraic_novikov_complex(knot_fundamental_domain(seifert(imat({{0, 0}, {0, 0}}))));
  CHECK(zero.differential(2) == widen<RationalFunction>(lmat({{z, LaurentPoly()}, {LaurentPoly(), z}})));
  CHECK(cokernel_iso_check(tre, 1).passed);
  CHECK(cokernel_iso_check(tre, 16).passed);

  SeifertData bad;
  bad.base = IntComplex(0, 1, {1, 1}, {{1, imat({{2}})}});
  bad.e[1] = imat({{1}});
  CHECK_THROWS_AS(knot_fundamental_domain(bad), InvalidDomain);
}

TEST_CASE("alexander polynomials") {
  auto a = alexander_polynomials(seifert(imat({{0, 1}, {-1, 1}})));
  REQUIRE(a.size() == 1);
  CHECK(a[0].degree == 1);
  CHECK(a[0].delta == P({{0, 1}, {1, -1}, {2, 1}}));
  a = alexander_polynomials(seifert(imat({{0, -2}, {1, 1}})));
  CHECK(a[0].delta == P({{0, 2}, {1, -3}, {2, 2}}));
  a = alexander_polynomials(seifert(imat({{1, 0}, {0, 1}})));
  CHECK(a[0].delta == LaurentPoly(1));

  // Z -> Z^2 with d_2 = (2, 0)^T, so H_1 = Z/2 + Z.
  SeifertData s;
  s.base = IntComplex(1, 2, {2, 1}, {{2, imat({{2}, {0}})}});
  s.e[1] = imat({{1, 0}, {0, 3}});
  s.e[2] = imat({{1}});
  auto b = alexander_polynomials(s);
  REQUIRE(b.size() == 2);
  CHECK(b[0].torsion);
  CHECK(b[0].delta == P({{0, -3}, {1, 2}}));  // e = 3 on the free Z
  CHECK(b[1].delta == LaurentPoly(1));
}

TEST_CASE("fibering") {
  auto v = fibering_check(seifert(imat({{0, 1}, {-1, 1}})));
  CHECK(v.fibers);
  CHECK(v.extreme_coeffs_unit);
  CHECK(v.novikov_vanishes);
  v = fibering_check(seifert(imat({{0, -2}, {1, 1}})));
  CHECK_FALSE(v.fibers);
  CHECK_FALSE(v.extreme_coeffs_unit);
  CHECK_FALSE(v.vanishes_plus);
  CHECK_FALSE(v.vanishes_minus);
  SeifertData unknot;
  v = fibering_check(unknot);
  CHECK(v.fibers);
  CHECK(v.alexander.empty());
  // Delta(0) = 1 but leading coefficient 4: only the z^-1 side sees it.
  v = fibering_check(seifert(imat({{-1, 0}, {0, -1}})));
  CHECK(v.alexander[0].delta == P({{0, 1}, {1, -4}, {2, 4}}));
  CHECK(v.vanishes_plus);
  CHECK_FALSE(v.vanishes_minus);
  CHECK_FALSE(v.fibers);
}

TEST_CASE("random seifert data: criteria agree") {
  std::mt19937 rng(41);
  for (int t = 0; t < 60; ++t) {
    auto s = nk::test::random_seifert(rng, nk::test::uniform(rng, 1, 3));
    CHECK_NOTHROW(fibering_check(s));
  }
}
