#include <novikit/novikov.hpp>

#include <future>

namespace nk {

NovikovDegree NovikovReport::at(int i) const {
  if (i < lo || i > hi()) return {};
  return degrees[static_cast<std::size_t>(i - lo)];
}

bool NovikovReport::is_zero() const {
  for (const auto& d : degrees)
    if (d.betti != 0 || d.torsion_count != 0) return false;
  return true;
}

namespace {

struct Torsion {
  Index rank = 0;
  long count = 0;
  std::vector<LaurentPoly> factors;
  bool conclusive = true;
};

template <typename Scalar>
NovikovReport novikov_impl(const ChainComplex<Scalar>& c, Direction dir, long max_operations) {
  NovikovReport r;
  r.direction = dir;
  r.lo = c.lo();
  if (c.empty()) return r;
  std::vector<Torsion> t;
  for (int i = c.lo(); i <= c.hi() + 1; ++i) {
    const Matrix<Scalar> d = c.differential(i);
    Torsion x;
    x.rank = rank_over_function_field(d);
    try {
      const auto res = novikov_diagonalize(d, dir, max_operations);
      if (res.rank != x.rank)
        throw InternalInconsistency("diagonal rank " + std::to_string(res.rank) +
                                    " differs from function-field rank " + std::to_string(x.rank) +
                                    " at degree " + std::to_string(i));
      x.factors = res.torsion_factors();
      x.count = static_cast<long>(x.factors.size());
    } catch (const Inconclusive& e) {
      x.conclusive = false;
      x.count = e.partial_torsion();
    }
    t.push_back(std::move(x));
  }
  auto at = [&](int i) -> const Torsion& { return t[static_cast<std::size_t>(i - c.lo())]; };
  for (int i = c.lo(); i <= c.hi(); ++i) {
    NovikovDegree d;
    d.betti = static_cast<long>(c.rank(i) - at(i).rank - at(i + 1).rank);
    d.torsion_count = at(i + 1).count;
    d.torsion_factors = at(i + 1).factors;
    d.conclusive = at(i + 1).conclusive;
    r.conclusive = r.conclusive && d.conclusive;
    r.degrees.push_back(std::move(d));
  }
  return r;
}

}  // namespace

NovikovReport novikov_homology(const LaurentComplex& c, Direction dir, long max_operations) {
  return novikov_impl(c, dir, max_operations);
}

NovikovReport novikov_homology(const RationalComplex& c, Direction dir, long max_operations) {
  return novikov_impl(c, dir, max_operations);
}

GradedCounts morse_novikov_bounds(const NovikovReport& r) {
  GradedCounts g{r.lo, {}};
  for (int i = r.lo; i <= r.hi(); ++i)
    g.values.push_back(r.at(i).betti + r.at(i).torsion_count + r.at(i - 1).torsion_count);
  return g;
}

InequalityVerdict check_inequalities(const GradedCounts& critical, const GradedCounts& bounds) {
  const bool both_empty = critical.values.empty() && bounds.values.empty();
  if (!both_empty && (critical.lo != bounds.lo || critical.values.size() != bounds.values.size()))
    throw DimensionMismatch("critical counts and bounds cover different degree ranges");
  InequalityVerdict v;
  for (int i = critical.lo; i <= critical.hi(); ++i)
    if (critical.at(i) < bounds.at(i)) v.violated.push_back(i);
  return v;
}

DominationVerdict finite_domination_check(const LaurentComplex& c, long max_operations) {
  auto minus = std::async(std::launch::async, [&] { return novikov_homology(c, Direction::Minus, max_operations); });
  const NovikovReport plus = novikov_homology(c, Direction::Plus, max_operations);
  const NovikovReport m = minus.get();
  DominationVerdict v;
  v.vanishes_plus = plus.conclusive && plus.is_zero();
  v.vanishes_minus = m.conclusive && m.is_zero();
  v.finitely_dominated = v.vanishes_plus && v.vanishes_minus;
  // A nonzero lower bound already decides a side.
  v.conclusive = (plus.conclusive || !plus.is_zero()) && (m.conclusive || !m.is_zero());
  return v;
}

}  // namespace nk
