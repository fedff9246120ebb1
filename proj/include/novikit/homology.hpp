#pragma once

#include <novikit/chain_complex.hpp>
#include <novikit/smith.hpp>

#include <vector>

namespace nk {

/// Per-degree integer counts on a degree range; zero outside it.
struct GradedCounts {
  int lo = 0;
  std::vector<long> values;

  int hi() const { return lo + static_cast<int>(values.size()) - 1; }
  long at(int i) const {
    if (i < lo || i > hi()) return 0;
    return values[static_cast<std::size_t>(i - lo)];
  }
  bool operator==(const GradedCounts&) const = default;
};

/// Ranks of a complex as counts.
template <typename Scalar>
GradedCounts ranks_of(const ChainComplex<Scalar>& c) {
  GradedCounts g{c.lo(), {}};
  for (int i = c.lo(); i <= c.hi(); ++i) g.values.push_back(static_cast<long>(c.rank(i)));
  return g;
}

struct HomologyDegree {
  long betti = 0;
  /// Non-unit invariant factors, divisibility order.
  std::vector<Integer> torsion_factors;
  long torsion_count() const { return static_cast<long>(torsion_factors.size()); }
  bool operator==(const HomologyDegree&) const = default;
};

struct HomologyReport {
  int lo = 0;
  std::vector<HomologyDegree> degrees;

  int hi() const { return lo + static_cast<int>(degrees.size()) - 1; }
  /// Zero group outside the range.
  HomologyDegree at(int i) const;
  bool is_zero() const;
  bool operator==(const HomologyReport&) const = default;
};

HomologyReport integral_homology(const IntComplex& c);

/// b_i + q_i + q_{i-1} per degree.
GradedCounts morse_lower_bounds(const HomologyReport& r);

}  // namespace nk
