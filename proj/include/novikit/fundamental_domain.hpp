#pragma once

// Algebraic fundamental domains over Z, in block form
//   E = D (+) F,  d_E = [[d_D, c], [0, d_F]],  h = [h_D; h_F] : D -> E,
// and the complexes built from them.

#include <novikit/chain_complex.hpp>
#include <novikit/series.hpp>

#include <map>
#include <optional>
#include <string>

namespace nk {

struct FundamentalDomain {
  IntComplex D, F;
  /// c_i : F_i -> D_{i-1}
  std::map<int, IntMatrix> c;
  /// h_D_i : D_i -> D_i
  std::map<int, IntMatrix> h_D;
  /// h_F_i : D_i -> F_i
  std::map<int, IntMatrix> h_F;

  IntMatrix c_at(int i) const;
  IntMatrix h_D_at(int i) const;
  IntMatrix h_F_at(int i) const;

  /// Union of the degree ranges of D and F (empty when both are).
  int lo() const;
  int hi() const;
};

/// Identity names used in verdicts and InvalidDomain.
inline constexpr const char* kIdentityDD = "d_D d_D = 0";
inline constexpr const char* kIdentityFF = "d_F d_F = 0";
inline constexpr const char* kIdentityDC = "d_D c + c d_F = 0";
inline constexpr const char* kIdentityHD = "d_D h_D + c h_F = h_D d_D";
inline constexpr const char* kIdentityHF = "d_F h_F = h_F d_D";
inline constexpr const char* kIdentityShape = "block shapes";

struct DomainVerdict {
  bool valid = true;
  std::string identity;
  int degree = 0;
};

/// Checks block shapes and the five identity families, first failure wins.
DomainVerdict validate_fundamental_domain(const FundamentalDomain& fd);
/// Throws InvalidDomain on the first failure.
void require_valid(const FundamentalDomain& fd);

/// E = D (+) F over Z.
IntComplex domain_total_complex(const FundamentalDomain& fd);

/// phi = g - z h : D -> E over the Laurent ring.
ChainMap<LaurentPoly> domain_phi(const FundamentalDomain& fd);

/// C(phi): degree i carries D_{i-1} (+) D_i (+) F_i.
LaurentComplex assemble_mapping_cone(const FundamentalDomain& fd);

/// F-hat with d = d_F + z h_F (1 - z h_D)^-1 c, exactly.
RationalComplex algebraic_novikov_complex(const FundamentalDomain& fd);

/// Matrix-valued power series sum_{j=0..K} z^j coeffs[j], known through z^K.
struct SeriesMatrix {
  Index rows = 0, cols = 0;
  std::vector<IntMatrix> coeffs;

  static SeriesMatrix zero(Index rows, Index cols, long K);
  static SeriesMatrix constant(const IntMatrix& m, long K);
  long precision() const { return static_cast<long>(coeffs.size()) - 1; }
  const IntMatrix& operator[](long j) const { return coeffs[static_cast<std::size_t>(j)]; }
  bool operator==(const SeriesMatrix&) const = default;
};

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
/// Product truncated to the smaller precision.
SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
/// First exponent where a and b differ, if any.
std::optional<long> first_mismatch(const SeriesMatrix& a, const SeriesMatrix& b);

/// Entries must have no negative powers of z.
SeriesMatrix expand(const RationalMatrix& m, long K);
SeriesMatrix expand(const LaurentMatrix& m, long K);

/// sum_{j=0..K} z^j h^j
SeriesMatrix geometric_series(const IntMatrix& h, long K);

/// F-hat differentials summed to order K.
struct TruncatedComplex {
  int lo = 0, hi = -1;
  std::vector<Index> ranks;
  long precision = 0;
  std::map<int, SeriesMatrix> differentials;

  Index rank(int i) const;
  SeriesMatrix differential(int i) const;
};

TruncatedComplex algebraic_novikov_complex_truncated(const FundamentalDomain& fd, long K);

struct CokernelVerdict {
  bool passed = true;
  std::string check;
  int degree = 0;
  long order = 0;
};

/// Through order K, the projection pi(x_D, x_F) = x_F + z h_F (1 - z h_D)^-1 x_D
/// kills the image of phi, splits the F-inclusion, and carries d_E to d of
/// F-hat; the induced differential matches the exact one.
CokernelVerdict cokernel_iso_check(const FundamentalDomain& fd, long K);

struct ZetaFunction {
  RationalFunction value;
  bool operator==(const ZetaFunction&) const = default;
};

/// prod_i det(1 - z h_D | D_i)^((-1)^i)
ZetaFunction torsion_zeta(const FundamentalDomain& fd);

FundamentalDomain direct_sum(const FundamentalDomain& a, const FundamentalDomain& b);

}  // namespace nk
