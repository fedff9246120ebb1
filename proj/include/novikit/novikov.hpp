#pragma once

#include <novikit/homology.hpp>
#include <novikit/series.hpp>

#include <vector>

namespace nk {

struct NovikovDegree {
  long betti = 0;
  long torsion_count = 0;
  /// Normalized representatives; empty when the degree is inconclusive.
  std::vector<LaurentPoly> torsion_factors;
  /// False when diagonalization gave up; torsion_count is then a lower bound.
  bool conclusive = true;
  bool operator==(const NovikovDegree&) const = default;
};

struct NovikovReport {
  Direction direction = Direction::Plus;
  int lo = 0;
  std::vector<NovikovDegree> degrees;
  bool conclusive = true;

  int hi() const { return lo + static_cast<int>(degrees.size()) - 1; }
  NovikovDegree at(int i) const;
  /// Every degree has b = q = 0. Only meaningful when conclusive.
  bool is_zero() const;
  bool operator==(const NovikovReport&) const = default;
};

NovikovReport novikov_homology(const LaurentComplex& c, Direction dir,
                               long max_operations = kDefaultOperationCap);
NovikovReport novikov_homology(const RationalComplex& c, Direction dir,
                               long max_operations = kDefaultOperationCap);

GradedCounts morse_novikov_bounds(const NovikovReport& r);

struct InequalityVerdict {
  std::vector<int> violated;
  bool satisfied() const { return violated.empty(); }
};

/// Degrees where critical < bound. Ranges must agree (DimensionMismatch).
InequalityVerdict check_inequalities(const GradedCounts& critical, const GradedCounts& bounds);

struct DominationVerdict {
  bool vanishes_plus = false;
  bool vanishes_minus = false;
  bool finitely_dominated = false;
  /// Both sides were decided.
  bool conclusive = true;
};

/// Vanishing of Novikov homology over Z((z)) and Z((z^-1)), the two sides
/// computed concurrently.
DominationVerdict finite_domination_check(const LaurentComplex& c,
                                          long max_operations = kDefaultOperationCap);

}  // namespace nk
