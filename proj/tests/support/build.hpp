#pragma once

// Small constructors shared by the test binaries.

#include <novikit/chain_complex.hpp>

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace nk::test {

/// Laurent polynomial from (exponent, coefficient) pairs.
inline LaurentPoly P(std::initializer_list<std::pair<long, long>> terms) {
  std::map<long, Integer> m;
  for (auto [e, c] : terms) m[e] += c;
  return normalize(m);
}

inline const LaurentPoly Z = LaurentPoly::z();

inline IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Index i = 0;
  for (auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = Integer(v);
    ++i;
  }
  return m;
}

inline LaurentMatrix lmat(std::initializer_list<std::initializer_list<LaurentPoly>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  LaurentMatrix m(r, c);
  Index i = 0;
  for (auto& row : rows) {
    Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline RationalFunction R(const LaurentPoly& n, const LaurentPoly& d = LaurentPoly(1)) {
  return RationalFunction(n, d);
}

/// Circle complex over Z: ranks 1, 1 in degrees 0, 1 and d = 0.
inline IntComplex circle() { return IntComplex(0, 1, {1, 1}, {{1, imat({{0}})}}); }

/// Two-term Laurent complex p: degree 1 -> degree 0.
inline LaurentComplex two_term(const LaurentPoly& p) {
  return LaurentComplex(0, 1, {1, 1}, {{1, lmat({{p}})}});
}

}  // namespace nk::test
