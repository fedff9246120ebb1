#pragma once

#include <novikit/matrix.hpp>
#include <novikit/series.hpp>

#include <vector>

namespace nk {

inline constexpr long kDefaultOperationCap = 10000;

/// Smith normal form over Z: left * m * right == diagonal, invariant factors
/// positive and forming a divisibility chain.
struct SmithResult {
  std::vector<Integer> invariant_factors;
  Index rank = 0;
  /// Set when the re-multiplication check and the divisibility chain passed.
  bool transforms_valid = false;
  IntMatrix left, right, diagonal;

  /// Factors other than 1.
  std::vector<Integer> torsion_factors() const;
};

SmithResult smith_normal_form_int(const IntMatrix& m);

/// Diagonal form over Z((z)) (PLUS) or Z((z^-1)) (MINUS).
///
/// The reduction runs over the rational subring S^-1 Z[z,z^-1], a principal
/// ideal domain whose units are exactly its elements that are units in Z((z)).
/// MINUS inputs are reduced after reversing the variable, so `left`, `right`
/// and `diagonal` are expressed in z^-1 when direction is MINUS.
struct NovikovSmithResult {
  Direction direction = Direction::Plus;
  /// One normalized representative per nonzero diagonal entry, in divisibility
  /// order. Units normalize to 1.
  std::vector<LaurentPoly> invariant_factors;
  Index rank = 0;
  bool transforms_valid = false;
  long operations = 0;
  RationalMatrix left, right, diagonal;

  std::vector<LaurentPoly> torsion_factors() const;
  long torsion_count() const { return static_cast<long>(torsion_factors().size()); }
};

/// Throws Inconclusive when the operation cap is reached.
NovikovSmithResult novikov_diagonalize(const LaurentMatrix& m, Direction dir,
                                       long max_operations = kDefaultOperationCap);
/// Entries must lie in the rational subring of the chosen completion; on the
/// MINUS side every denominator needs highest coefficient +-1.
NovikovSmithResult novikov_diagonalize(const RationalMatrix& m, Direction dir,
                                       long max_operations = kDefaultOperationCap);

/// Canonical generator of the ideal p generates: the product of the integer
/// content and the irreducible factors of p that are not units on the `dir`
/// side, lowest exponent 0, extreme coefficient on the `dir` side positive.
/// Units give 1.
LaurentPoly novikov_representative(const LaurentPoly& p, Direction dir);

/// a and b differ by a unit factor in the chosen completion.
bool novikov_associated(const LaurentPoly& a, const LaurentPoly& b, Direction dir);

/// Rank over Q (for integer matrices) or over the rational function field
/// Q(z) (for Laurent and rational entries), by fraction-free elimination.
Index rank_over_rationals(const IntMatrix& m);
Index rank_over_function_field(const LaurentMatrix& m);
Index rank_over_function_field(const RationalMatrix& m);

/// Process-wide counts of diagonalization calls, for self-audit. Inconclusive
/// calls count as calls but neither valid nor invalid.
struct DiagonalizationTally {
  long integer_calls = 0, integer_valid = 0;
  long novikov_calls = 0, novikov_valid = 0, novikov_inconclusive = 0;
};
DiagonalizationTally diagonalization_tally();
void reset_diagonalization_tally();

/// Variable reversal for rational entries; requires every denominator to have
/// highest coefficient +-1 (else throws NotAUnit).
RationalMatrix reverse_variable(const RationalMatrix& m);

}  // namespace nk
