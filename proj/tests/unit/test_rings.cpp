#include <doctest.h>

#include <novikit/factor.hpp>
#include <novikit/rational_function.hpp>
#include <novikit/series.hpp>
#include <novikit/smith.hpp>
#include <support/build.hpp>

#include <random>

using namespace nk;
using nk::test::P;
using nk::test::R;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int span = 4, int bound = 3) {
  std::uniform_int_distribution<int> lo(-2, 2), len(0, span), coef(-bound, bound);
  std::map<long, Integer> m;
  const int a = lo(rng);
  const int n = len(rng);
  for (int e = a; e <= a + n; ++e) m[e] = coef(rng);
  return normalize(m);
}

// Naive coefficient-by-coefficient product, independent of the class.
std::map<long, Integer> naive_product(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<long, Integer> out;
  for (auto& [ea, ca] : a.to_map())
    for (auto& [eb, cb] : b.to_map()) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

int uniform(std::mt19937& rng, int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }

// Primitive linear or quadratic with no rational root, so irreducible in Z[z].
LaurentPoly random_irreducible(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), lead(1, 4), deg(1, 2);
  for (;;) {
    const Integer a = lead(rng), b = coef(rng), c = coef(rng);
    if (deg(rng) == 1) {
      if (b == 0 || gcd(a, b) != 1) continue;
      return LaurentPoly::from_coeffs(0, {b, a});
    }
    if (c == 0 || gcd(gcd(a, b), c) != 1) continue;
    const Integer disc = b * b - 4 * a * c;
    if (disc >= 0 && boost::multiprecision::sqrt(disc) * boost::multiprecision::sqrt(disc) == disc) continue;
    return LaurentPoly::from_coeffs(0, {c, b, a});
  }
}

}  // namespace

TEST_CASE("normalize drops zero coefficients") {
  CHECK(normalize({{0, 1}, {1, 0}, {2, 3}}).to_map() == std::map<long, Integer>{{0, 1}, {2, 3}});
  CHECK(normalize({}).is_zero());
  CHECK(normalize({{-1, 2}, {0, -2}}) == P({{-1, 2}, {0, -2}}));
}

TEST_CASE("novikov units") {
  CHECK(is_novikov_unit(P({{0, 1}, {1, -1}}), Direction::Plus));
  CHECK_FALSE(is_novikov_unit(P({{1, 1}, {0, -2}}), Direction::Plus));
  CHECK(is_novikov_unit(P({{3, -1}}), Direction::Plus));
  CHECK(is_novikov_unit(P({{1, 1}, {0, -2}}), Direction::Minus));
  CHECK_FALSE(is_novikov_unit(LaurentPoly(), Direction::Plus));
}

TEST_CASE("series inversion") {
  auto inv = invert_as_series(P({{0, 1}, {1, -1}}), Direction::Plus, 3);
  CHECK(inv.to_poly() == P({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  inv = invert_as_series(P({{0, 1}, {1, -2}}), Direction::Plus, 3);
  CHECK(inv.to_poly() == P({{0, 1}, {1, 2}, {2, 4}, {3, 8}}));
  inv = invert_as_series(P({{2, 1}}), Direction::Plus, 5);
  CHECK(inv.to_poly() == P({{-2, 1}}));
  CHECK_THROWS_AS(invert_as_series(P({{1, 1}, {0, -2}}), Direction::Plus, 4), NotAUnit);
}

TEST_CASE("expand rational functions") {
  CHECK(expand(R(LaurentPoly::z(), P({{0, 1}, {1, -1}})), Direction::Plus, 3).to_poly() ==
        P({{1, 1}, {2, 1}, {3, 1}}));
  CHECK(expand(R(1, P({{0, 1}, {1, -2}})), Direction::Plus, 2).to_poly() ==
        P({{0, 1}, {1, 2}, {2, 4}}));
  const auto one_minus_z = P({{0, 1}, {1, -1}});
  CHECK(expand(R(one_minus_z, one_minus_z), Direction::Plus, 0).to_poly() == LaurentPoly(1));
  // 1/(1 - 2z) has no expansion in z^-1 with integer coefficients.
  CHECK_THROWS_AS(expand(R(1, P({{0, 1}, {1, -2}})), Direction::Minus, 3), NotAUnit);
}

TEST_CASE("variable reversal") {
  CHECK(reverse_variable(P({{0, 1}, {1, -2}})) == P({{0, 1}, {-1, -2}}));
  CHECK(reverse_variable(P({{1, 1}, {0, -2}})) == P({{-1, 1}, {0, -2}}));
  CHECK(reverse_variable(LaurentPoly()).is_zero());
}

TEST_CASE("rational function canonical form") {
  // (z^2 - z) / (z - z^2) = -1
  auto r = R(P({{2, 1}, {1, -1}}), P({{1, 1}, {2, -1}}));
  CHECK(r == RationalFunction(-1));
  // 2 / (2 - 4z) reduces to 1 / (1 - 2z)
  r = R(P({{0, 2}}), P({{0, 2}, {1, -4}}));
  CHECK(r.numerator() == LaurentPoly(1));
  CHECK(r.denominator() == P({{0, 1}, {1, -2}}));
  // denominator 2 - z is not in S up to units
  CHECK_THROWS_AS(R(1, P({{0, 2}, {1, -1}})), NotInRationalSubring);
  CHECK(R(1, P({{3, -1}})) == R(P({{-3, -1}})));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b).to_map() == naive_product(a, b));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(reverse_variable(reverse_variable(a)) == a);
    if (!a.is_zero())
      CHECK(is_novikov_unit(a, Direction::Minus) == is_novikov_unit(reverse_variable(a), Direction::Plus));
  }
}

TEST_CASE("series inverse multiplies back to one") {
  std::mt19937 rng(11);
  int tested = 0;
  for (int k = 0; k < 300 && tested < 60; ++k) {
    auto p = random_poly(rng);
    for (Direction dir : {Direction::Plus, Direction::Minus}) {
      if (!is_novikov_unit(p, dir)) continue;
      ++tested;
      for (long K : {0L, 3L, 9L}) {
        auto q = invert_as_series(p, dir, K);
        auto w = dir == Direction::Plus ? p : reverse_variable(p);
        auto prod = truncate(w * q.to_poly(), K, dir);
        CHECK(prod.to_poly() == LaurentPoly(1));
        CHECK(prod.through() == K);
      }
    }
  }
  CHECK(tested >= 20);
}

TEST_CASE("rational arithmetic and expansion are compatible") {
  std::mt19937 rng(5);
  for (int k = 0; k < 100; ++k) {
    auto n1 = random_poly(rng), n2 = random_poly(rng);
    auto d1 = random_poly(rng, 3), d2 = random_poly(rng, 3);
    // Denominators 1 + z*q with q a polynomial.
    d1 = LaurentPoly(1) + LaurentPoly::z() * d1.shifted(-d1.ord());
    d2 = LaurentPoly(1) + LaurentPoly::z() * d2.shifted(-d2.ord());
    auto r1 = RationalFunction::try_make(n1, d1);
    auto r2 = RationalFunction::try_make(n2, d2);
    if (!r1 || !r2) continue;
    // Canonical form is idempotent.
    CHECK(RationalFunction(r1->numerator(), r1->denominator()) == *r1);
    const long K = 8;
    auto e1 = expand(*r1, Direction::Plus, K);
    auto e2 = expand(*r2, Direction::Plus, K);
    auto sum = expand(*r1 + *r2, Direction::Plus, K);
    CHECK((e1 + e2).truncated(std::min(e1.through(), e2.through())) == sum.truncated(std::min(e1.through(), e2.through())));
    auto prod = e1 * e2;
    auto exact = expand(*r1 * *r2, Direction::Plus, prod.through());
    CHECK(prod == exact.truncated(prod.through()));
  }
}

TEST_CASE("factorization in Z[z]") {
  using Factors = std::vector<std::pair<LaurentPoly, int>>;
  CHECK(irreducible_factors(P({{0, 6}, {3, 48}})) == Factors{{P({{0, 1}, {1, 2}}), 1}, {P({{0, 1}, {1, -2}, {2, 4}}), 1}});
  CHECK(irreducible_factors(P({{-3, 2}})).empty());
  CHECK(irreducible_factors(pow(P({{0, 1}, {1, 1}}), 3)) == Factors{{P({{0, 1}, {1, 1}}), 3}});
  // x^4 + 1 stays irreducible although it splits modulo every prime.
  CHECK(irreducible_factors(P({{0, 1}, {4, 1}})) == Factors{{P({{0, 1}, {4, 1}}), 1}});

  std::mt19937 rng(91);
  for (int t = 0; t < 100; ++t) {
    std::map<std::vector<Integer>, std::pair<LaurentPoly, int>> want;
    LaurentPoly p = LaurentPoly::monomial(uniform(rng, -3, 3) * 2 + 1, uniform(rng, -2, 2));
    for (int k = uniform(rng, 1, 4); k > 0; --k) {
      const LaurentPoly f = random_irreducible(rng);
      const int m = uniform(rng, 1, 2);
      p *= pow(f, static_cast<unsigned>(m));
      auto& slot = want[f.coeffs()];
      slot.first = f;
      slot.second += m;
    }
    Factors expected;
    for (auto& [k, v] : want) expected.push_back(v);
    std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
      return a.first.deg() != b.first.deg() ? a.first.deg() < b.first.deg() : a.first.coeffs() < b.first.coeffs();
    });
    CAPTURE(p);
    CHECK(irreducible_factors(p) == expected);
  }
}

TEST_CASE("novikov representatives are canonical") {
  const LaurentPoly z = LaurentPoly::z();
  CHECK(novikov_representative(2 - 4 * z, Direction::Plus) == P({{0, 2}}));
  CHECK(novikov_representative((1 + z + 2 * z * z) * (2 + z), Direction::Plus) == 2 + z);
  CHECK(novikov_representative((1 + z + 2 * z * z) * (2 + z), Direction::Minus) == 1 + z + 2 * z * z);
  CHECK(novikov_representative(z - 2, Direction::Plus) == 2 - z);
  CHECK(novikov_representative(1 - 3 * z, Direction::Plus) == LaurentPoly(1));
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    const LaurentPoly p = random_poly(rng);
    if (p.is_zero()) continue;
    // Multiplying by a unit of either side changes nothing.
    LaurentPoly u = random_poly(rng, 3);
    if (u.is_zero()) continue;
    for (Direction dir : {Direction::Plus, Direction::Minus}) {
      const LaurentPoly unit = dir == Direction::Plus ? LaurentPoly(1) + z * u.shifted(-u.ord())
                                                      : LaurentPoly(1) + u.shifted(-u.deg() - 1);
      const LaurentPoly rep = novikov_representative(p, dir);
      CHECK(novikov_representative(p * unit, dir) == rep);
      CHECK(novikov_associated(rep, p, dir));
      CHECK(novikov_representative(rep, dir) == rep);
    }
  }
}
