#pragma once

// Dense matrices over the exact rings, as Eigen matrices of custom scalars.
//
// Convention for differentials: a degree-i matrix has one column per degree-i
// basis element and one row per degree-(i-1) basis element.

#include <novikit/errors.hpp>
#include <novikit/integer.hpp>
#include <novikit/laurent_poly.hpp>
#include <novikit/rational_function.hpp>

#include <Eigen/Core>

#include <limits>
#include <string>

namespace Eigen {

template <>
struct NumTraits<nk::LaurentPoly> : GenericNumTraits<nk::LaurentPoly> {
  using Real = nk::LaurentPoly;
  using NonInteger = nk::LaurentPoly;
  using Literal = nk::LaurentPoly;
  using Nested = nk::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32,
  };
  static int digits10() { return 0; }
};

template <>
struct NumTraits<nk::RationalFunction> : GenericNumTraits<nk::RationalFunction> {
  using Real = nk::RationalFunction;
  using NonInteger = nk::RationalFunction;
  using Literal = nk::RationalFunction;
  using Nested = nk::RationalFunction;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 64,
    MulCost = 128,
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace nk {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;
using LaurentMatrix = Matrix<LaurentPoly>;
using RationalMatrix = Matrix<RationalFunction>;
using Index = Eigen::Index;

/// Ring grades, ordered by inclusion Z < Z[z,z^-1] < S^-1 Z[z,z^-1].
enum class Grade { Integer = 0, Laurent = 1, Rational = 2 };

std::string to_string(Grade g);

template <typename Scalar>
struct GradeOf;
template <>
struct GradeOf<Integer> {
  static constexpr Grade value = Grade::Integer;
};
template <>
struct GradeOf<LaurentPoly> {
  static constexpr Grade value = Grade::Laurent;
};
template <>
struct GradeOf<RationalFunction> {
  static constexpr Grade value = Grade::Rational;
};

template <typename Scalar>
Matrix<Scalar> zeros(Index rows, Index cols) {
  return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

template <typename Scalar>
Matrix<Scalar> identity(Index n) {
  Matrix<Scalar> m = zeros<Scalar>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

/// Exact product; throws DimensionMismatch.
template <typename Scalar>
Matrix<Scalar> matmul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  Matrix<Scalar> out = zeros<Scalar>(a.rows(), b.cols());
  if (a.cols() == 0) return out;
  out.noalias() = a.lazyProduct(b);
  return out;
}

template <typename Scalar>
bool is_zero(const Matrix<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == Scalar(0))) return false;
  return true;
}

/// Reinterpret entries in a wider ring.
template <typename To, typename From>
Matrix<To> widen(const Matrix<From>& m) {
  static_assert(static_cast<int>(GradeOf<To>::value) >= static_cast<int>(GradeOf<From>::value),
                "widen only goes from a subring to a larger ring");
  Matrix<To> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<To, RationalFunction> && std::is_same_v<From, Integer>)
        out(i, j) = RationalFunction(LaurentPoly(m(i, j)));
      else
        out(i, j) = To(m(i, j));
    }
  return out;
}

/// 1 - z*h for an integer square matrix h.
LaurentMatrix one_minus_z_times(const IntMatrix& h);
/// a + z*b for integer matrices of the same shape.
LaurentMatrix linear_pencil(const IntMatrix& a, const IntMatrix& b);

LaurentMatrix reverse_variable(const LaurentMatrix& m);

/// Determinant by fraction-free elimination (Bareiss).
Integer determinant(const IntMatrix& m);
LaurentPoly determinant(const LaurentMatrix& m);
RationalFunction determinant(const RationalMatrix& m);

/// Classical adjugate: adj(m) * m = det(m) * 1.
LaurentMatrix adjugate(const LaurentMatrix& m);

/// Inverse of a square Laurent matrix whose determinant is a unit of the
/// rational subring. Throws NotAUnit otherwise.
RationalMatrix inverse_in_rational_subring(const LaurentMatrix& m);

std::string to_string(const IntMatrix& m);
std::string to_string(const LaurentMatrix& m);
std::string to_string(const RationalMatrix& m);

}  // namespace nk
