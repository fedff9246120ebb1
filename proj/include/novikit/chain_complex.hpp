#pragma once

#include <novikit/matrix.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace nk {

/// Bounded based free chain complex concentrated in degrees [lo, hi].
///
/// `differential(i)` maps degree i to degree i-1 and is stored for i in
/// (lo, hi]; outside that range it is the zero matrix of the right shape.
/// The public constructor checks shapes and d o d = 0.
template <typename Scalar>
class ChainComplex {
 public:
  /// The empty complex.
  ChainComplex() = default;

  ChainComplex(int lo, int hi, std::vector<Index> ranks,
               std::map<int, Matrix<Scalar>> differentials = {})
      : ChainComplex(unchecked(lo, hi, std::move(ranks), std::move(differentials))) {
    require_valid();
  }

  /// Shape-checked but without the d o d = 0 check; feed to validate_complex.
  static ChainComplex unchecked(int lo, int hi, std::vector<Index> ranks,
                                std::map<int, Matrix<Scalar>> differentials = {}) {
    ChainComplex c;
    if (hi < lo) {
      if (!ranks.empty() || !differentials.empty()) throw ShapeError("empty degree range with data");
      return c;
    }
    if (static_cast<int>(ranks.size()) != hi - lo + 1)
      throw ShapeError("expected " + std::to_string(hi - lo + 1) + " ranks, got " +
                       std::to_string(ranks.size()));
    c.lo_ = lo;
    c.hi_ = hi;
    c.ranks_ = std::move(ranks);
    for (auto& [deg, m] : differentials) {
      if (deg <= lo || deg > hi) {
        if (!is_zero(m) || m.size() != 0)
          throw ShapeError("differential at degree " + std::to_string(deg) + " outside (lo, hi]");
        continue;
      }
      if (m.rows() != c.rank(deg - 1) || m.cols() != c.rank(deg))
        throw ShapeError("differential at degree " + std::to_string(deg) + " is " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(c.rank(deg - 1)) + "x" + std::to_string(c.rank(deg)));
      c.diffs_.emplace(deg, std::move(m));
    }
    return c;
  }

  bool empty() const { return hi_ < lo_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  Grade grade() const { return GradeOf<Scalar>::value; }
  const std::vector<Index>& ranks() const { return ranks_; }

  Index rank(int i) const {
    if (i < lo_ || i > hi_) return 0;
    return ranks_[static_cast<std::size_t>(i - lo_)];
  }

  Matrix<Scalar> differential(int i) const {
    auto it = diffs_.find(i);
    if (it != diffs_.end()) return it->second;
    return zeros<Scalar>(rank(i - 1), rank(i));
  }

  void require_valid() const;

 private:
  int lo_ = 0;
  int hi_ = -1;
  std::vector<Index> ranks_;
  std::map<int, Matrix<Scalar>> diffs_;
};

using IntComplex = ChainComplex<Integer>;
using LaurentComplex = ChainComplex<LaurentPoly>;
using RationalComplex = ChainComplex<RationalFunction>;

template <typename Scalar>
struct ComplexVerdict {
  bool valid = true;
  /// First degree i with d_{i-1} d_i != 0, and that product.
  std::optional<int> degree;
  Matrix<Scalar> product;
};

template <typename Scalar>
ComplexVerdict<Scalar> validate_complex(const ChainComplex<Scalar>& c) {
  ComplexVerdict<Scalar> v;
  if (c.empty()) return v;
  for (int i = c.lo() + 2; i <= c.hi(); ++i) {
    Matrix<Scalar> dd = matmul(c.differential(i - 1), c.differential(i));
    if (!is_zero(dd)) {
      v.valid = false;
      v.degree = i;
      v.product = std::move(dd);
      return v;
    }
  }
  return v;
}

template <typename Scalar>
void ChainComplex<Scalar>::require_valid() const {
  auto v = validate_complex(*this);
  if (!v.valid) throw NotAComplex(*v.degree, to_string(v.product));
}

/// Degree-preserving chain map. `component(i)` is target_i x source_i; absent
/// components are zero.
template <typename Scalar>
class ChainMap {
 public:
  ChainMap(ChainComplex<Scalar> source, ChainComplex<Scalar> target,
           std::map<int, Matrix<Scalar>> components)
      : source_(std::move(source)), target_(std::move(target)) {
    for (auto& [deg, m] : components) {
      if (m.rows() != target_.rank(deg) || m.cols() != source_.rank(deg)) {
        if (m.size() == 0 && target_.rank(deg) * source_.rank(deg) == 0) continue;
        throw ShapeError("chain map component at degree " + std::to_string(deg) +
                         " has the wrong shape");
      }
      components_.emplace(deg, std::move(m));
    }
    if (auto bad = first_noncommuting_degree()) throw NotAChainMap(*bad);
  }

  static ChainMap identity(const ChainComplex<Scalar>& c) {
    std::map<int, Matrix<Scalar>> comps;
    for (int i = c.lo(); i <= c.hi(); ++i) comps.emplace(i, nk::identity<Scalar>(c.rank(i)));
    return ChainMap(c, c, std::move(comps));
  }

  const ChainComplex<Scalar>& source() const { return source_; }
  const ChainComplex<Scalar>& target() const { return target_; }

  Matrix<Scalar> component(int i) const {
    auto it = components_.find(i);
    if (it != components_.end()) return it->second;
    return zeros<Scalar>(target_.rank(i), source_.rank(i));
  }

  int lo() const { return std::min(source_.lo(), target_.lo()); }
  int hi() const { return std::max(source_.hi(), target_.hi()); }

 private:
  std::optional<int> first_noncommuting_degree() const {
    for (int i = lo(); i <= hi() + 1; ++i) {
      if (!(matmul(target_.differential(i), component(i)) ==
            matmul(component(i - 1), source_.differential(i))))
        return i;
    }
    return std::nullopt;
  }

  ChainComplex<Scalar> source_, target_;
  std::map<int, Matrix<Scalar>> components_;
};

/// Writes `block` into `m` at (row, col).
template <typename Scalar>
void put_block(Matrix<Scalar>& m, Index row, Index col, const Matrix<Scalar>& block) {
  if (block.size() == 0) return;
  m.block(row, col, block.rows(), block.cols()) = block;
}

/// Cone of f: cone_i = source_{i-1} (+) target_i with differential
/// [[-d_source, 0], [f, d_target]], the shifted source listed first.
template <typename Scalar>
ChainComplex<Scalar> mapping_cone(const ChainMap<Scalar>& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  if (src.empty() && tgt.empty()) return {};
  const int lo = src.empty() ? tgt.lo() : (tgt.empty() ? src.lo() + 1 : std::min(src.lo() + 1, tgt.lo()));
  const int hi = src.empty() ? tgt.hi() : (tgt.empty() ? src.hi() + 1 : std::max(src.hi() + 1, tgt.hi()));
  std::vector<Index> ranks;
  for (int i = lo; i <= hi; ++i) ranks.push_back(src.rank(i - 1) + tgt.rank(i));
  std::map<int, Matrix<Scalar>> diffs;
  for (int i = lo + 1; i <= hi; ++i) {
    Matrix<Scalar> d = zeros<Scalar>(src.rank(i - 2) + tgt.rank(i - 1), src.rank(i - 1) + tgt.rank(i));
    put_block<Scalar>(d, 0, 0, -src.differential(i - 1));
    put_block<Scalar>(d, src.rank(i - 2), 0, f.component(i - 1));
    put_block<Scalar>(d, src.rank(i - 2), src.rank(i - 1), tgt.differential(i));
    diffs.emplace(i, std::move(d));
  }
  return ChainComplex<Scalar>(lo, hi, std::move(ranks), std::move(diffs));
}

template <typename Scalar>
ChainComplex<Scalar> direct_sum(const ChainComplex<Scalar>& a, const ChainComplex<Scalar>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  std::vector<Index> ranks;
  for (int i = lo; i <= hi; ++i) ranks.push_back(a.rank(i) + b.rank(i));
  std::map<int, Matrix<Scalar>> diffs;
  for (int i = lo + 1; i <= hi; ++i) {
    Matrix<Scalar> d = zeros<Scalar>(a.rank(i - 1) + b.rank(i - 1), a.rank(i) + b.rank(i));
    put_block<Scalar>(d, 0, 0, a.differential(i));
    put_block<Scalar>(d, a.rank(i - 1), a.rank(i), b.differential(i));
    diffs.emplace(i, std::move(d));
  }
  return ChainComplex<Scalar>(lo, hi, std::move(ranks), std::move(diffs));
}

/// Entries reinterpreted in a wider ring; differentials unchanged.
template <typename To, typename From>
ChainComplex<To> base_change(const ChainComplex<From>& c) {
  if (c.empty()) return {};
  std::map<int, Matrix<To>> diffs;
  for (int i = c.lo() + 1; i <= c.hi(); ++i) diffs.emplace(i, widen<To>(c.differential(i)));
  return ChainComplex<To>::unchecked(c.lo(), c.hi(), c.ranks(), std::move(diffs));
}

template <typename To, typename From>
ChainMap<To> base_change(const ChainMap<From>& f) {
  std::map<int, Matrix<To>> comps;
  for (int i = f.lo(); i <= f.hi(); ++i) comps.emplace(i, widen<To>(f.component(i)));
  return ChainMap<To>(base_change<To>(f.source()), base_change<To>(f.target()), std::move(comps));
}

/// A complex of runtime-selected grade.
using AnyComplex = std::variant<IntComplex, LaurentComplex, RationalComplex>;

Grade grade_of(const AnyComplex& c);

/// Widening base change Z -> Laurent -> Rational; throws NarrowingNotSupported.
AnyComplex base_change(const AnyComplex& c, Grade target);

}  // namespace nk
