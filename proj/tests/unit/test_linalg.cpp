#include <doctest.h>

#include <novikit/smith.hpp>
#include <support/build.hpp>

#include <random>

using namespace nk;
using nk::test::imat;
using nk::test::lmat;
using nk::test::P;

namespace {

const LaurentPoly z = LaurentPoly::z();

// gcd of all k x k minors: the k-th determinant divisor.
Integer determinant_divisor(const IntMatrix& m, Index k) {
  Integer g = 0;
  std::vector<Index> rows(k), cols(k);
  std::function<void(Index, Index, Index)> pick_rows, pick_cols;
  pick_cols = [&](Index start, Index depth, Index) {
    if (depth == k) {
      IntMatrix sub(k, k);
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      g = gcd(g, determinant(sub));
      return;
    }
    for (Index c = start; c < m.cols(); ++c) {
      cols[depth] = c;
      pick_cols(c + 1, depth + 1, 0);
    }
  };
  pick_rows = [&](Index start, Index depth, Index) {
    if (depth == k) {
      pick_cols(0, 0, 0);
      return;
    }
    for (Index r = start; r < m.rows(); ++r) {
      rows[depth] = r;
      pick_rows(r + 1, depth + 1, 0);
    }
  };
  pick_rows(0, 0, 0);
  return g;
}

IntMatrix random_int(std::mt19937& rng, Index r, Index c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937& rng, Index n) {
  IntMatrix u = identity<Integer>(n);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1), mult(-2, 2);
  for (int k = 0; k < 3 * n; ++k) {
    Index a = pick(rng), b = pick(rng);
    if (a == b) continue;
    u.row(a) += Integer(mult(rng)) * u.row(b);
  }
  return u;
}

}  // namespace

TEST_CASE("matmul") {
  auto m = lmat({{1 - z, z}, {LaurentPoly(2), LaurentPoly()}});
  CHECK(matmul(identity<LaurentPoly>(2), m) == m);
  CHECK(matmul(lmat({{1 - z}}), lmat({{1 + z}})) == lmat({{1 - z * z}}));
  auto e = matmul(zeros<Integer>(2, 0), zeros<Integer>(0, 3));
  CHECK(e.rows() == 2);
  CHECK(e.cols() == 3);
  CHECK(is_zero(e));
  CHECK_THROWS_AS(matmul(zeros<Integer>(2, 2), zeros<Integer>(3, 1)), DimensionMismatch);
}

TEST_CASE("smith normal form examples") {
  auto s = smith_normal_form_int(imat({{1, 0}, {0, 1}}));
  CHECK(s.invariant_factors == std::vector<Integer>{1, 1});
  CHECK(s.rank == 2);
  s = smith_normal_form_int(imat({{0}}));
  CHECK(s.invariant_factors.empty());
  CHECK(s.rank == 0);
  s = smith_normal_form_int(imat({{2, 4}, {6, 8}}));
  CHECK(s.invariant_factors == std::vector<Integer>{2, 4});
  CHECK(s.transforms_valid);
  CHECK(matmul(matmul(s.left, imat({{2, 4}, {6, 8}})), s.right) == s.diagonal);
}

TEST_CASE("smith normal form matches determinant divisors") {
  std::mt19937 rng(3);
  for (int t = 0; t < 150; ++t) {
    std::uniform_int_distribution<int> dim(1, 4);
    const Index r = dim(rng), c = dim(rng);
    IntMatrix m = random_int(rng, r, c, 6);
    if (t % 3 == 0) m.row(0) = m.row(r - 1) * Integer(2);
    const auto s = smith_normal_form_int(m);
    REQUIRE(s.transforms_valid);
    CHECK(matmul(matmul(s.left, m), s.right) == s.diagonal);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    Integer prev = 1;
    for (Index k = 1; k <= std::min(r, c); ++k) {
      const Integer dk = determinant_divisor(m, k);
      if (k <= s.rank) {
        CHECK(dk == prev * s.invariant_factors[k - 1]);
        prev = dk;
      } else {
        CHECK(dk == 0);
      }
    }
    // Unimodular change of basis leaves the factors alone.
    const auto s2 = smith_normal_form_int(matmul(matmul(random_unimodular(rng, r), m), random_unimodular(rng, c)));
    CHECK(s2.invariant_factors == s.invariant_factors);
  }
}

TEST_CASE("rank over the function field") {
  CHECK(rank_over_function_field(lmat({{1 - z}})) == 1);
  CHECK(rank_over_function_field(lmat({{1 - z, 2 - 2 * z}})) == 1);
  CHECK(rank_over_function_field(lmat({{z, 1 - z}, {z - 1, LaurentPoly(1)}})) == 2);
  CHECK(rank_over_function_field(lmat({{z, z * z}, {LaurentPoly(1), z}})) == 1);
  CHECK(rank_over_function_field(zeros<LaurentPoly>(3, 2)) == 0);
}

TEST_CASE("novikov diagonalization examples") {
  auto r = novikov_diagonalize(lmat({{1 - 2 * z}}), Direction::Plus);
  CHECK(r.rank == 1);
  CHECK(r.torsion_factors().empty());
  r = novikov_diagonalize(lmat({{z - 2}}), Direction::Plus);
  REQUIRE(r.torsion_factors().size() == 1);
  CHECK(r.torsion_factors()[0] == P({{0, 2}, {1, -1}}));
  CHECK(r.transforms_valid);
  r = novikov_diagonalize(lmat({{LaurentPoly(2), LaurentPoly()}, {LaurentPoly(), z}}), Direction::Plus);
  CHECK(r.rank == 2);
  CHECK(r.torsion_factors() == std::vector<LaurentPoly>{LaurentPoly(2)});
  r = novikov_diagonalize(lmat({{z - 2}}), Direction::Minus);
  CHECK(r.torsion_factors().empty());
  r = novikov_diagonalize(lmat({{1 - 2 * z}}), Direction::Minus);
  CHECK(r.torsion_count() == 1);
}

TEST_CASE("novikov diagonalization agrees with determinant on random matrices") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> coef(-3, 3), dim(1, 3), deg(0, 2);
  int full = 0;
  for (int t = 0; t < 150; ++t) {
    const Index n = dim(rng);
    LaurentMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        std::map<long, Integer> c;
        for (int e = 0, d = deg(rng); e <= d; ++e) c[e] = coef(rng);
        m(i, j) = normalize(c);
      }
    for (Direction dir : {Direction::Plus, Direction::Minus}) {
      const auto r = novikov_diagonalize(m, dir);
      CHECK(r.transforms_valid);
      CHECK(r.rank == rank_over_function_field(m));
      if (r.rank != n) continue;
      ++full;
      // Product of the invariant factors is associate to the determinant.
      LaurentPoly prod(1);
      for (const auto& f : r.invariant_factors) prod *= f;
      CHECK(novikov_associated(prod, determinant(m), dir));
    }
  }
  CHECK(full > 100);
}
