#pragma once

#include <novikit/fundamental_domain.hpp>
#include <novikit/novikov.hpp>

#include <map>
#include <vector>

namespace nk {

/// cone(1 - z h) for Plus, cone(z - h) for Minus; h a self-map of one complex.
LaurentComplex mapping_torus_complex(const ChainMap<Integer>& h, Direction orientation);

/// Fundamental domain of the lift of t -> 4t - 9t^2 + 6t^3 on the circle.
FundamentalDomain circle_exercise();

/// Reduced chain complex of the Seifert surface with a chain self-map e.
struct SeifertData {
  IntComplex base;
  /// e_i : base_i -> base_i; absent degrees are zero.
  std::map<int, IntMatrix> e;

  IntMatrix e_at(int i) const;
};

/// D = Z (+) base, F_i = base_i (+) base_{i-1}, d_F = [[d, e], [0, -d]],
/// c = (0 1), h_D = 0, h_F = (1 - e; 0). Throws InvalidDomain when e is not a
/// chain map ("e chain map") or has the wrong shape.
FundamentalDomain knot_fundamental_domain(const SeifertData& s);

struct AlexanderPolynomial {
  int degree = 0;
  /// det(e' + z(1 - e')) on the free part of H_degree, normalized.
  LaurentPoly delta;
  /// H_degree of the base has torsion, which delta ignores.
  bool torsion = false;
  bool operator==(const AlexanderPolynomial&) const = default;
};

/// One entry per degree of the base.
std::vector<AlexanderPolynomial> alexander_polynomials(const SeifertData& s);

/// Matrix of the map e induces on H_i / torsion, in some basis.
IntMatrix induced_free_action(const SeifertData& s, int i);

struct FiberingVerdict {
  std::vector<AlexanderPolynomial> alexander;
  bool vanishes_plus = false;
  bool vanishes_minus = false;
  /// Novikov homology of the knot complex vanishes over Z((z)) and Z((z^-1)).
  bool novikov_vanishes = false;
  /// Every Delta has constant and leading coefficient +-1.
  bool extreme_coeffs_unit = false;
  bool fibers = false;
  /// Torsion in the base homology, where the two criteria may legitimately part.
  bool torsion_flagged = false;
  bool conclusive = true;
};

/// Throws InternalInconsistency when the two criteria disagree without
/// torsion to explain it.
FiberingVerdict fibering_check(const SeifertData& s);

}  // namespace nk
