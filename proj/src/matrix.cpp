#include <novikit/matrix.hpp>

#include <sstream>
#include <utility>

namespace nk {

std::string to_string(Grade g) {
  switch (g) {
    case Grade::Integer: return "integer";
    case Grade::Laurent: return "laurent";
    case Grade::Rational: return "rational";
  }
  return "?";
}

LaurentMatrix one_minus_z_times(const IntMatrix& h) {
  return linear_pencil(identity<Integer>(h.rows()), IntMatrix(-h));
}

LaurentMatrix linear_pencil(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("pencil blocks differ in shape");
  LaurentMatrix out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out(i, j) = LaurentPoly(a(i, j)) + LaurentPoly::monomial(b(i, j), 1);
  return out;
}

LaurentMatrix reverse_variable(const LaurentMatrix& m) {
  return m.unaryExpr([](const LaurentPoly& p) { return reverse_variable(p); });
}

namespace {

template <typename Scalar, typename ExactDiv>
Scalar bareiss(Matrix<Scalar> a, ExactDiv exact_div) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  bool negate = false;
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == Scalar(0)) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (!(a(i, k) == Scalar(0))) {
          swap = i;
          break;
        }
      if (swap < 0) return Scalar(0);
      a.row(k).swap(a.row(swap));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  Scalar d = a(n - 1, n - 1);
  return negate ? Scalar(-d) : d;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  return bareiss<Integer>(m, [](const Integer& a, const Integer& b) { return Integer(a / b); });
}

LaurentPoly determinant(const LaurentMatrix& m) {
  return bareiss<LaurentPoly>(m, [](const LaurentPoly& a, const LaurentPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw InternalInconsistency("inexact Bareiss division");
    return *q;
  });
}

RationalFunction determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  // Scale each row by the product of its denominators.
  LaurentMatrix cleared(m.rows(), m.cols());
  LaurentPoly scale(1);
  for (Index i = 0; i < m.rows(); ++i) {
    LaurentPoly row_den(1);
    for (Index j = 0; j < m.cols(); ++j) row_den *= m(i, j).denominator();
    for (Index j = 0; j < m.cols(); ++j)
      cleared(i, j) = *divide_exact(m(i, j).numerator() * row_den, m(i, j).denominator());
    scale *= row_den;
  }
  return RationalFunction(determinant(cleared), scale);
}

LaurentMatrix adjugate(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("adjugate of a non-square matrix");
  const Index n = m.rows();
  LaurentMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = LaurentPoly(1);
    return adj;
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      LaurentMatrix minor(n - 1, n - 1);
      for (Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Index c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      LaurentPoly cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

RationalMatrix inverse_in_rational_subring(const LaurentMatrix& m) {
  const LaurentPoly det = determinant(m);
  if (!is_unit(det.is_zero() ? Integer(0) : det.lowest_coeff())) {
    throw NotAUnit("determinant " + to_string(det) + " is not a unit of the rational subring");
  }
  const LaurentMatrix adj = adjugate(m);
  RationalMatrix inv(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) inv(i, j) = RationalFunction(adj(i, j), det);
  return inv;
}

namespace {

template <typename Scalar>
std::string render(const Matrix<Scalar>& m) {
  std::ostringstream os;
  os << "[";
  for (Index i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

std::string to_string(const IntMatrix& m) { return render(m); }
std::string to_string(const LaurentMatrix& m) { return render(m); }
std::string to_string(const RationalMatrix& m) { return render(m); }

}  // namespace nk
