#include <doctest.h>

#include <novikit/models.hpp>
#include <support/build.hpp>
#include <support/generators.hpp>

using namespace nk;
using nk::test::imat;
using nk::test::lmat;
using nk::test::P;

namespace {

const LaurentPoly z = LaurentPoly::z();

ChainMap<Integer> degree_two_map() {
  auto c = nk::test::circle();
  return ChainMap<Integer>(c, c, {{0, imat({{1}})}, {1, imat({{2}})}});
}

}  // namespace

TEST_CASE("novikov homology of the circle") {
  auto c = nk::test::two_term(1 - z);
  auto r = novikov_homology(c, Direction::Plus);
  CHECK(r.conclusive);
  CHECK(r.is_zero());
  CHECK(novikov_homology(c, Direction::Minus).is_zero());
}

TEST_CASE("novikov homology of T(2)") {
  auto minus = mapping_torus_complex(degree_two_map(), Direction::Minus);
  auto r = novikov_homology(minus, Direction::Plus);
  for (int i = r.lo; i <= r.hi(); ++i) CHECK(r.at(i).betti == 0);
  CHECK(r.at(1).torsion_count == 1);
  CHECK(r.at(1).torsion_factors == std::vector<LaurentPoly>{P({{0, 2}, {1, -1}})});
  CHECK(r.at(0).torsion_count == 0);
  CHECK(r.at(2).torsion_count == 0);
  auto plus = mapping_torus_complex(degree_two_map(), Direction::Plus);
  CHECK(novikov_homology(plus, Direction::Plus).is_zero());
}

TEST_CASE("morse novikov bounds") {
  auto r = novikov_homology(mapping_torus_complex(degree_two_map(), Direction::Minus), Direction::Plus);
  auto b = morse_novikov_bounds(r);
  CHECK(b.at(1) == 1);
  CHECK(b.at(2) == 1);
  CHECK(b.at(0) == 0);
  NovikovReport zero{Direction::Plus, 0, {{}, {}}, true};
  CHECK(morse_novikov_bounds(zero).values == std::vector<long>{0, 0});
  NovikovReport b2{Direction::Plus, 0, {{}, {}, {3, 0, {}, true}}, true};
  CHECK(morse_novikov_bounds(b2).at(2) == 3);
}

TEST_CASE("check inequalities") {
  CHECK(check_inequalities({0, {1, 1}}, {0, {1, 1}}).satisfied());
  CHECK(check_inequalities({0, {0, 1}}, {0, {1, 1}}).violated == std::vector<int>{0});
  CHECK(check_inequalities({0, {}}, {3, {}}).satisfied());
  CHECK_THROWS_AS(check_inequalities({0, {1}}, {1, {1}}), DimensionMismatch);
}

TEST_CASE("finite domination") {
  auto v = finite_domination_check(nk::test::two_term(1 - z));
  CHECK(v.vanishes_plus);
  CHECK(v.vanishes_minus);
  CHECK(v.finitely_dominated);
  v = finite_domination_check(mapping_torus_complex(degree_two_map(), Direction::Minus));
  CHECK_FALSE(v.vanishes_plus);
  CHECK(v.vanishes_minus);
  CHECK_FALSE(v.finitely_dominated);
  v = finite_domination_check(nk::test::two_term(LaurentPoly(1)));
  CHECK(v.finitely_dominated);
}

TEST_CASE("euler characteristic and unit invariance") {
  std::mt19937 rng(23);
  for (int t = 0; t < 40; ++t) {
    auto c = nk::test::random_complex(rng, 0, 3);
    auto h = nk::test::random_homotopic_map(rng, c, nk::test::uniform(rng, -3, 3));
    for (Direction o : {Direction::Plus, Direction::Minus}) {
      auto m = mapping_torus_complex(h, o);
      for (Direction dir : {Direction::Plus, Direction::Minus}) {
        auto r = novikov_homology(m, dir);
        REQUIRE(r.conclusive);
        long chi_b = 0, chi_r = 0;
        for (int i = m.lo(); i <= m.hi(); ++i) {
          const long sign = (i % 2 == 0) ? 1 : -1;
          chi_b += sign * r.at(i).betti;
          chi_r += sign * static_cast<long>(m.rank(i));
        }
        CHECK(chi_b == chi_r);
        // Scaling one differential by -z^2 changes nothing.
        std::map<int, LaurentMatrix> d;
        for (int i = m.lo() + 1; i <= m.hi(); ++i) d[i] = m.differential(i);
        if (!d.empty()) {
          auto& first = d.begin()->second;
          first = first * LaurentPoly::monomial(-1, 2);
        }
        LaurentComplex scaled(m.lo(), m.hi(), m.ranks(), d);
        CHECK(novikov_homology(scaled, dir) == r);
        // The chain-level inequality rank_i >= b_i + q_i + q_{i-1}.
        CHECK(check_inequalities(ranks_of(m), morse_novikov_bounds(r)).satisfied());
      }
    }
  }
}

TEST_CASE("orientation duality") {
  std::mt19937 rng(29);
  for (int t = 0; t < 30; ++t) {
    auto c = nk::test::random_complex(rng, 0, 2);
    auto h = nk::test::random_homotopic_map(rng, c, nk::test::uniform(rng, -3, 3));
    auto minus = mapping_torus_complex(h, Direction::Minus);
    auto plus = mapping_torus_complex(h, Direction::Plus);
    // z - h = z (1 - z^-1 h): the minus complex is the reversed plus complex up to units.
    for (Direction dir : {Direction::Plus, Direction::Minus}) {
      auto a = novikov_homology(minus, dir);
      auto b = novikov_homology(plus, opposite(dir));
      REQUIRE(a.degrees.size() == b.degrees.size());
      for (int i = a.lo; i <= a.hi(); ++i) {
        CHECK(a.at(i).betti == b.at(i).betti);
        CHECK(a.at(i).torsion_count == b.at(i).torsion_count);
        auto fa = a.at(i).torsion_factors, fb = b.at(i).torsion_factors;
        REQUIRE(fa.size() == fb.size());
        for (std::size_t k = 0; k < fa.size(); ++k)
          CHECK(novikov_associated(fa[k], reverse_variable(fb[k]), dir));
      }
    }
  }
}
