#pragma once

#include <novikit/rational_function.hpp>

#include <string>
#include <vector>

namespace nk {

/// Which Novikov completion: PLUS is Z((z)), MINUS is Z((z^-1)).
enum class Direction { Plus, Minus };

inline Direction opposite(Direction d) { return d == Direction::Plus ? Direction::Minus : Direction::Plus; }
std::string to_string(Direction d);

inline constexpr long kDefaultPrecision = 32;

/// Window of an element of Z((w)), w = z for PLUS and w = z^-1 for MINUS.
///
/// Coefficients are stored for w-exponents lowest .. through(). The window is
/// exact on that range and unknown beyond it. When the window is nonzero its
/// first coefficient is nonzero; an all-zero window stores no coefficients and
/// has lowest = through() + 1.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(Direction dir, long lowest, std::vector<Integer> coeffs);
  /// All-zero window known through w-exponent `through`.
  static TruncatedSeries zero(Direction dir, long through);

  Direction direction() const { return dir_; }
  long lowest() const { return lowest_; }
  long through() const { return lowest_ + static_cast<long>(coeffs_.size()) - 1; }
  /// Number of retained exponents beyond the lowest.
  long precision() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of w^exponent; throws std::out_of_range beyond through().
  Integer coeff(long exponent) const;

  /// The window as a Laurent polynomial in w (not in z).
  LaurentPoly to_poly() const;

  /// Restrict to exponents <= through.
  TruncatedSeries truncated(long through) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  void trim();

  Direction dir_ = Direction::Plus;
  long lowest_ = 1;
  std::vector<Integer> coeffs_;
};

/// Window of a Laurent polynomial, given in the completion variable.
TruncatedSeries truncate(const LaurentPoly& p_in_w, long through, Direction dir = Direction::Plus);

/// p is nonzero and its extreme coefficient on the `dir` side (lowest exponent
/// for PLUS, highest for MINUS) is +-1.
bool is_novikov_unit(const LaurentPoly& p, Direction dir);

/// q with p*q == 1 through w-exponent `precision`. Throws NotAUnit.
TruncatedSeries invert_as_series(const LaurentPoly& p, Direction dir,
                                 long precision = kDefaultPrecision);

/// Window of r through w-exponent `precision`. On the MINUS side the reversed
/// denominator must be a unit; throws NotAUnit otherwise.
TruncatedSeries expand(const RationalFunction& r, Direction dir,
                       long precision = kDefaultPrecision);

std::string to_string(const TruncatedSeries& s);
inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << to_string(s); }
inline std::ostream& operator<<(std::ostream& os, Direction d) { return os << to_string(d); }

}  // namespace nk
