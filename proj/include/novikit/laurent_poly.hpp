#pragma once

#include <novikit/integer.hpp>

#include <concepts>
#include <map>
#include <optional>
#include <string>
#include <ostream>
#include <vector>

namespace nk {

/// Element of Z[z, z^-1].
///
/// Stored densely as the lowest exponent plus the coefficient run up to the
/// highest exponent. Both ends of the run are nonzero; the zero polynomial has
/// an empty run.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Integer& c);
  template <std::integral T>
  LaurentPoly(T c) : LaurentPoly(Integer(c)) {}

  static LaurentPoly monomial(const Integer& c, long exponent);
  /// z^exponent
  static LaurentPoly z(long exponent = 1) { return monomial(Integer(1), exponent); }
  /// Coefficients for exponents lowest, lowest+1, ...; zeros are trimmed.
  static LaurentPoly from_coeffs(long lowest, std::vector<Integer> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest exponent. Precondition: nonzero.
  long ord() const { return lowest_; }
  /// Highest exponent. Precondition: nonzero.
  long deg() const { return lowest_ + static_cast<long>(coeffs_.size()) - 1; }
  long span() const { return is_zero() ? 0 : deg() - ord(); }
  std::size_t term_count() const;

  Integer coeff(long exponent) const;
  const Integer& lowest_coeff() const { return coeffs_.front(); }
  const Integer& highest_coeff() const { return coeffs_.back(); }
  /// Dense coefficient run starting at ord().
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  std::map<long, Integer> to_map() const;
  bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && lowest_ == 0); }

  /// z^k * p
  LaurentPoly shifted(long k) const;
  Integer content() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  void trim();

  long lowest_ = 0;
  std::vector<Integer> coeffs_;
};

/// Drops zero coefficients from a raw exponent -> coefficient map.
LaurentPoly normalize(const std::map<long, Integer>& raw);

/// Exponent j -> -j.
LaurentPoly reverse_variable(const LaurentPoly& p);

/// Human-readable form such as "1 - 2*z + z^-1". Output only.
std::string to_string(const LaurentPoly& p);
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

LaurentPoly pow(const LaurentPoly& p, unsigned e);

/// p / c for an integer c dividing every coefficient.
LaurentPoly divide_exact(const LaurentPoly& p, const Integer& c);

/// q with a = q * b in Z[z, z^-1], if one exists.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// p stripped of its power of z: lowest exponent 0.
LaurentPoly strip_monomial(const LaurentPoly& p);

/// p / content(p) with positive highest coefficient.
LaurentPoly primitive_part(const LaurentPoly& p);

/// Greatest common divisor in Z[z] of the monomial-stripped inputs. The result
/// has lowest exponent 0 and positive highest coefficient; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace nk
