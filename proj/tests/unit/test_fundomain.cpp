#include <doctest.h>

#include <novikit/fundamental_domain.hpp>
#include <novikit/novikov.hpp>
#include <support/build.hpp>
#include <support/generators.hpp>

using namespace nk;
using nk::test::imat;
using nk::test::lmat;
using nk::test::P;

namespace {

const LaurentPoly z = LaurentPoly::z();

FundamentalDomain scalar_domain(long dF = 0) {
  FundamentalDomain fd;
  fd.D = IntComplex(0, 0, {1});
  fd.F = IntComplex(0, 1, {1, 1}, {{1, imat({{dF}})}});
  fd.c[1] = imat({{1}});
  fd.h_D[0] = imat({{1}});
  fd.h_F[0] = imat({{1}});
  return fd;
}

FundamentalDomain point_domain(long h) {
  FundamentalDomain fd;
  fd.D = IntComplex(0, 0, {1});
  fd.h_D[0] = imat({{h}});
  return fd;
}

}  // namespace

TEST_CASE("validate fundamental domains") {
  CHECK(validate_fundamental_domain(scalar_domain()).valid);
  CHECK(validate_fundamental_domain(scalar_domain(1)).valid);
  CHECK(validate_fundamental_domain(point_domain(5)).valid);

  auto bad = scalar_domain();
  bad.h_F[0] = imat({{1, 2}});
  CHECK(validate_fundamental_domain(bad).identity == kIdentityShape);
  // d_D c + c d_F fails once D has a degree -1 target for c.
  FundamentalDomain fd;
  fd.D = IntComplex(0, 1, {1, 1}, {{1, imat({{0}})}});
  fd.F = IntComplex(1, 2, {1, 1}, {{2, imat({{1}})}});
  fd.c[1] = imat({{1}});
  fd.c[2] = imat({{1}});
  auto v = validate_fundamental_domain(fd);
  CHECK_FALSE(v.valid);
  CHECK(v.identity == kIdentityDC);
  CHECK(v.degree == 2);
  CHECK_THROWS_AS(require_valid(fd), InvalidDomain);
  // h_F must commute with the differentials.
  FundamentalDomain g;
  g.D = IntComplex(0, 1, {1, 1}, {{1, imat({{1}})}});
  g.F = IntComplex(0, 0, {1});
  g.h_F[0] = imat({{1}});
  g.h_D[0] = imat({{0}});
  g.h_D[1] = imat({{0}});
  CHECK(validate_fundamental_domain(g).identity == kIdentityHF);
}

TEST_CASE("assemble mapping cone") {
  auto c = assemble_mapping_cone(point_domain(1));
  CHECK(c.differential(1) == lmat({{1 - z}}));
  c = assemble_mapping_cone(point_domain(2));
  CHECK(c.differential(1) == lmat({{1 - 2 * z}}));
  CHECK(novikov_homology(c, Direction::Plus).is_zero());
  c = assemble_mapping_cone(scalar_domain());
  CHECK(c.ranks() == std::vector<Index>{2, 2});
  CHECK(c.differential(1) == lmat({{1 - z, LaurentPoly(1)}, {-z, LaurentPoly()}}));
  CHECK(validate_complex(c).valid);
}

TEST_CASE("algebraic novikov complex") {
  auto fhat = algebraic_novikov_complex(scalar_domain());
  CHECK(fhat.differential(1)(0, 0) == RationalFunction(z, 1 - z));
  auto t = algebraic_novikov_complex_truncated(scalar_domain(), 3);
  CHECK(expand(fhat.differential(1), 3) == t.differential(1));
  CHECK(t.differential(1)[0] == imat({{0}}));
  CHECK(t.differential(1)[3] == imat({{1}}));
  CHECK(algebraic_novikov_complex(scalar_domain(1)).differential(1)(0, 0) == RationalFunction(1, 1 - z));
  CHECK(algebraic_novikov_complex(point_domain(3)).empty());
}

TEST_CASE("cokernel identification") {
  CHECK(cokernel_iso_check(scalar_domain(), 8).passed);
  CHECK(cokernel_iso_check(point_domain(7), 8).passed);
  CHECK(cokernel_iso_check(scalar_domain(1), 0).passed);
}

TEST_CASE("torsion zeta") {
  CHECK(torsion_zeta(point_domain(0)).value == RationalFunction(1));
  CHECK(torsion_zeta(point_domain(1)).value == RationalFunction(1 - z));
  FundamentalDomain fd;
  fd.D = IntComplex(1, 1, {1});
  fd.h_D[1] = imat({{2}});
  CHECK(torsion_zeta(fd).value == RationalFunction(1, 1 - 2 * z));
}

TEST_CASE("random domains") {
  std::mt19937 rng(31);
  for (int t = 0; t < 40; ++t) {
    auto fd = nk::test::random_domain(rng);
    const long K = 10;
    CHECK(validate_complex(assemble_mapping_cone(fd)).valid);
    auto fhat = algebraic_novikov_complex(fd);
    CHECK(validate_complex(fhat).valid);
    auto v = cokernel_iso_check(fd, K);
    CHECK_MESSAGE(v.passed, v.check << " at degree " << v.degree << " order " << v.order);
    auto a = novikov_homology(assemble_mapping_cone(fd), Direction::Plus);
    auto b = novikov_homology(fhat, Direction::Plus);
    for (int i = std::min(a.lo, b.lo); i <= std::max(a.hi(), b.hi()); ++i) {
      CHECK(a.at(i).betti == b.at(i).betti);
      CHECK(a.at(i).torsion_factors == b.at(i).torsion_factors);
    }
    auto fd2 = nk::test::random_domain(rng);
    CHECK(torsion_zeta(direct_sum(fd, fd2)).value == torsion_zeta(fd).value * torsion_zeta(fd2).value);
  }
}
