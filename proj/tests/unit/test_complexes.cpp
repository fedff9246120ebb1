#include <doctest.h>

#include <novikit/homology.hpp>
#include <support/build.hpp>

using namespace nk;
using nk::test::imat;
using nk::test::lmat;

TEST_CASE("validate_complex") {
  CHECK(validate_complex(nk::test::circle()).valid);
  auto bad = IntComplex::unchecked(0, 2, {1, 1, 1}, {{2, imat({{1}})}, {1, imat({{1}})}});
  auto v = validate_complex(bad);
  CHECK_FALSE(v.valid);
  CHECK(*v.degree == 2);
  CHECK_THROWS_AS(IntComplex(0, 2, {1, 1, 1}, {{2, imat({{1}})}, {1, imat({{1}})}}), NotAComplex);
  CHECK(validate_complex(IntComplex()).valid);
  CHECK_THROWS_AS(IntComplex(0, 1, {1, 2}, {{1, imat({{1}})}}), ShapeError);
}

TEST_CASE("integral homology") {
  auto r = integral_homology(nk::test::circle());
  CHECK(r.at(0).betti == 1);
  CHECK(r.at(1).betti == 1);
  CHECK(r.at(0).torsion_count() == 0);
  r = integral_homology(IntComplex(0, 1, {1, 1}, {{1, imat({{2}})}}));
  CHECK(r.at(0).betti == 0);
  CHECK(r.at(0).torsion_factors == std::vector<Integer>{2});
  CHECK(r.at(1).betti == 0);
  r = integral_homology(IntComplex(0, 1, {2, 2}, {{1, imat({{2, 0}, {0, 3}})}}));
  CHECK(r.at(0).torsion_factors == std::vector<Integer>{6});
}

TEST_CASE("morse lower bounds") {
  CHECK(morse_lower_bounds(integral_homology(nk::test::circle())).values == std::vector<long>{1, 1});
  auto r = integral_homology(IntComplex(0, 2, {1, 1, 0}, {{1, imat({{2}})}}));
  CHECK(morse_lower_bounds(r).values == std::vector<long>{1, 1, 0});
  CHECK(morse_lower_bounds(HomologyReport{0, {{}, {}}}).values == std::vector<long>{0, 0});
}

TEST_CASE("mapping cones") {
  IntComplex point(0, 0, {1});
  auto cone = mapping_cone(ChainMap<Integer>::identity(point));
  CHECK(cone.lo() == 0);
  CHECK(cone.hi() == 1);
  CHECK(cone.differential(1) == imat({{1}}));
  CHECK(integral_homology(cone).is_zero());

  LaurentComplex lpoint(0, 0, {1});
  const auto z = LaurentPoly::z();
  auto circle = mapping_cone(ChainMap<LaurentPoly>(lpoint, lpoint, {{0, lmat({{1 - z}})}}));
  CHECK(circle.differential(1) == lmat({{1 - z}}));

  auto zero_cone = mapping_cone(ChainMap<Integer>(point, point, {}));
  CHECK(zero_cone.ranks() == std::vector<Index>{1, 1});
  CHECK(is_zero(zero_cone.differential(1)));
}

TEST_CASE("base change") {
  auto c = nk::test::circle();
  auto l = base_change<LaurentPoly>(c);
  CHECK(l.differential(1) == lmat({{LaurentPoly()}}));
  auto r = base_change<RationalFunction>(l);
  CHECK(r.differential(1)(0, 0).denominator() == LaurentPoly(1));
  AnyComplex any = r;
  CHECK_THROWS_AS(base_change(any, Grade::Integer), NarrowingNotSupported);
  CHECK(grade_of(base_change(AnyComplex(c), Grade::Laurent)) == Grade::Laurent);
}

TEST_CASE("chain map validation") {
  auto c = nk::test::circle();
  IntComplex two(0, 1, {1, 1}, {{1, imat({{2}})}});
  CHECK_THROWS_AS(ChainMap<Integer>(two, two, {{0, imat({{1}})}}), NotAChainMap);
  CHECK_NOTHROW(ChainMap<Integer>(two, two, {{0, imat({{3}})}, {1, imat({{3}})}}));
  CHECK_NOTHROW(ChainMap<Integer>(c, c, {{0, imat({{1}})}, {1, imat({{2}})}}));
}
