#pragma once

// Factorization in Z[z], used to pick canonical generators of ideals in the
// rational subring of the Novikov ring.

#include <novikit/laurent_poly.hpp>

#include <utility>
#include <vector>

namespace nk {

/// Irreducible factors of the primitive part of p, with multiplicity. The
/// power of z and the integer content are dropped; each factor is primitive
/// with positive leading coefficient, and the list is sorted by degree, then
/// coefficients. Precondition: p nonzero.
std::vector<std::pair<LaurentPoly, int>> irreducible_factors(const LaurentPoly& p);

}  // namespace nk
