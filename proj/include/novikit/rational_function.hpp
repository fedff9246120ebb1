#pragma once

#include <novikit/laurent_poly.hpp>

#include <concepts>
#include <optional>
#include <string>

namespace nk {

/// Element r/s of S^-1 Z[z, z^-1], where S is the set of integer polynomials
/// with constant term 1.
///
/// Canonical form: the denominator has exponents >= 0 and constant term +1,
/// any power of z lives in the numerator, and numerator and denominator are
/// coprime over Q. The denominator is then primitive, so the numerator's
/// integer content is never cancelled. Equality is equality of canonical forms.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}
  RationalFunction(const Integer& c) : num_(c), den_(1) {}
  template <std::integral T>
  RationalFunction(T c) : RationalFunction(Integer(c)) {}

  /// num/den after cancelling common factors. Throws NotInRationalSubring
  /// when the reduced denominator is not +-z^k times an element of S.
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  /// Same as the two-argument constructor, returning nullopt instead of
  /// throwing.
  static std::optional<RationalFunction> try_make(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(1); }
  /// Invertible in the rational subring (equivalently in Z((z))): the lowest
  /// coefficient of the numerator is +-1.
  bool is_unit() const;

  /// Order in Z((z)); precondition nonzero.
  long ord() const { return num_.ord(); }
  /// Lowest coefficient of the Z((z)) expansion; precondition nonzero.
  const Integer& lowest_coeff() const { return num_.lowest_coeff(); }

  RationalFunction inverse() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  struct Canonical {};
  RationalFunction(Canonical, LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

/// b / a when the quotient lies in the rational subring (i.e. a divides b in
/// Z((z))), nullopt otherwise. a = 0 divides only 0.
std::optional<RationalFunction> divide_in_ring(const RationalFunction& b, const RationalFunction& a);

/// a and b generate the same ideal of Z((z)).
bool associated(const RationalFunction& a, const RationalFunction& b);

std::string to_string(const RationalFunction& r);
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << to_string(r); }

}  // namespace nk
