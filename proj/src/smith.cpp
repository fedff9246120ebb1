#include <novikit/smith.hpp>

#include <novikit/factor.hpp>

#include <atomic>
#include <optional>
#include <tuple>
#include <utility>

namespace nk {

namespace {

// Ring operations the reduction needs. `divide` returns b/a when a | b;
// `descend` returns q such that b - q*a is strictly smaller in `size` or, for
// the Novikov ring, has a strictly higher order with the same size.
struct IntegerRing {
  using Scalar = Integer;
  static bool is_zero(const Integer& a) { return a == 0; }
  static std::optional<Integer> divide(const Integer& b, const Integer& a) {
    if (b % a != 0) return std::nullopt;
    return Integer(b / a);
  }
  static Integer descend(const Integer& b, const Integer& a) { return b / a; }
  static Integer size(const Integer& a) { return abs(a); }
  static long weight(const Integer&) { return 0; }
};

struct NovikovRing {
  using Scalar = RationalFunction;
  static bool is_zero(const RationalFunction& a) { return a.is_zero(); }
  static std::optional<RationalFunction> divide(const RationalFunction& b, const RationalFunction& a) {
    return divide_in_ring(b, a);
  }
  static RationalFunction descend(const RationalFunction& b, const RationalFunction& a) {
    Integer q = b.lowest_coeff() / a.lowest_coeff();
    return RationalFunction(LaurentPoly::monomial(q, b.ord() - a.ord()));
  }
  static Integer size(const RationalFunction& a) { return abs(a.lowest_coeff()); }
  static long weight(const RationalFunction& a) {
    return a.numerator().span() + a.denominator().span();
  }
};

template <typename Ring>
class SmithEngine {
 public:
  using Scalar = typename Ring::Scalar;

  SmithEngine(Matrix<Scalar> m, long cap)
      : m_(std::move(m)),
        left_(identity<Scalar>(m_.rows())),
        right_(identity<Scalar>(m_.cols())),
        cap_(cap) {}

  // Returns false when the cap was hit; `fixed()` pivots are then final.
  bool run() {
    const Index n = std::min(m_.rows(), m_.cols());
    for (t_ = 0; t_ < n; ++t_) {
      auto start = argmin(t_, m_.rows(), t_, m_.cols());
      if (!start) return true;
      move_to_pivot(*start);
      if (!reduce_pivot()) return false;
    }
    return true;
  }

  Index fixed() const { return t_; }
  long operations() const { return ops_; }
  const Matrix<Scalar>& diagonal() const { return m_; }
  const Matrix<Scalar>& left() const { return left_; }
  const Matrix<Scalar>& right() const { return right_; }

 private:
  using Key = std::tuple<Integer, long>;
  Key key(const Scalar& a) const { return {Ring::size(a), Ring::weight(a)}; }

  std::optional<std::pair<Index, Index>> argmin(Index r0, Index r1, Index c0, Index c1) const {
    std::optional<std::pair<Index, Index>> best;
    Key best_key;
    for (Index i = r0; i < r1; ++i)
      for (Index j = c0; j < c1; ++j) {
        if (Ring::is_zero(m_(i, j))) continue;
        Key k = key(m_(i, j));
        if (!best || k < best_key) {
          best = {i, j};
          best_key = std::move(k);
        }
      }
    return best;
  }

  bool charge() { return ++ops_ <= cap_; }

  void move_to_pivot(std::pair<Index, Index> at) {
    if (at.first != t_) {
      m_.row(t_).swap(m_.row(at.first));
      left_.row(t_).swap(left_.row(at.first));
    }
    if (at.second != t_) {
      m_.col(t_).swap(m_.col(at.second));
      right_.col(t_).swap(right_.col(at.second));
    }
  }

  // row i -= q * row t
  void row_op(Index i, const Scalar& q) {
    for (Index j = t_; j < m_.cols(); ++j)
      if (!Ring::is_zero(m_(t_, j))) m_(i, j) -= q * m_(t_, j);
    for (Index j = 0; j < left_.cols(); ++j)
      if (!Ring::is_zero(left_(t_, j))) left_(i, j) -= q * left_(t_, j);
  }

  // col j -= q * col t
  void col_op(Index j, const Scalar& q) {
    for (Index i = t_; i < m_.rows(); ++i)
      if (!Ring::is_zero(m_(i, t_))) m_(i, j) -= q * m_(i, t_);
    for (Index i = 0; i < right_.rows(); ++i)
      if (!Ring::is_zero(right_(i, t_))) right_(i, j) -= q * right_(i, t_);
  }

  // Pivots change only on a strictly smaller size; otherwise the reduction
  // keeps descending against the same pivot.
  void switch_to_smaller_pivot() {
    const Integer pivot_size = Ring::size(m_(t_, t_));
    auto col_best = argmin(t_ + 1, m_.rows(), t_, t_ + 1);
    auto row_best = argmin(t_, t_ + 1, t_ + 1, m_.cols());
    std::optional<std::pair<Index, Index>> pick;
    for (const auto& cand : {col_best, row_best}) {
      if (!cand) continue;
      const auto& e = m_(cand->first, cand->second);
      if (Ring::size(e) >= pivot_size) continue;
      if (!pick || key(e) < key(m_(pick->first, pick->second))) pick = cand;
    }
    if (pick) move_to_pivot(*pick);
  }

  // Clears row and column t and leaves a pivot dividing the rest.
  bool reduce_pivot() {
    for (;;) {
      switch_to_smaller_pivot();
      bool clear = true;
      for (Index i = t_ + 1; i < m_.rows(); ++i) {
        if (Ring::is_zero(m_(i, t_))) continue;
        if (!charge()) return false;
        if (auto q = Ring::divide(m_(i, t_), m_(t_, t_))) {
          row_op(i, *q);
        } else {
          row_op(i, Ring::descend(m_(i, t_), m_(t_, t_)));
          clear = false;
        }
      }
      for (Index j = t_ + 1; j < m_.cols(); ++j) {
        if (Ring::is_zero(m_(t_, j))) continue;
        if (!charge()) return false;
        if (auto q = Ring::divide(m_(t_, j), m_(t_, t_))) {
          col_op(j, *q);
        } else {
          col_op(j, Ring::descend(m_(t_, j), m_(t_, t_)));
          clear = false;
        }
      }
      if (!clear) continue;
      // Row and column clear: the pivot must divide the trailing block.
      std::optional<Index> offending;
      for (Index i = t_ + 1; i < m_.rows() && !offending; ++i)
        for (Index j = t_ + 1; j < m_.cols(); ++j)
          if (!Ring::is_zero(m_(i, j)) && !Ring::divide(m_(i, j), m_(t_, t_))) {
            offending = i;
            break;
          }
      if (!offending) return true;
      if (!charge()) return false;
      // row t += row i
      for (Index j = t_; j < m_.cols(); ++j) m_(t_, j) += m_(*offending, j);
      for (Index j = 0; j < left_.cols(); ++j) left_(t_, j) += left_(*offending, j);
    }
  }

  Matrix<Scalar> m_, left_, right_;
  long cap_;
  long ops_ = 0;
  Index t_ = 0;
};

template <typename Scalar>
bool is_diagonal(const Matrix<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (i != j && !(m(i, j) == Scalar(0))) return false;
  return true;
}

}  // namespace

std::vector<Integer> SmithResult::torsion_factors() const {
  std::vector<Integer> out;
  for (const auto& f : invariant_factors)
    if (f != 1) out.push_back(f);
  return out;
}

namespace {

struct Counters {
  std::atomic<long> integer_calls{0}, integer_valid{0};
  std::atomic<long> novikov_calls{0}, novikov_valid{0}, novikov_inconclusive{0};
};

Counters& counters() {
  static Counters c;
  return c;
}

}  // namespace

DiagonalizationTally diagonalization_tally() {
  const Counters& c = counters();
  return {c.integer_calls, c.integer_valid, c.novikov_calls, c.novikov_valid, c.novikov_inconclusive};
}

void reset_diagonalization_tally() {
  Counters& c = counters();
  c.integer_calls = c.integer_valid = 0;
  c.novikov_calls = c.novikov_valid = c.novikov_inconclusive = 0;
}

SmithResult smith_normal_form_int(const IntMatrix& m) {
  SmithEngine<IntegerRing> engine(m, std::numeric_limits<long>::max());
  engine.run();
  SmithResult res;
  res.left = engine.left();
  res.right = engine.right();
  res.diagonal = engine.diagonal();
  for (Index t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    if (res.diagonal(t, t) == 0) break;
    if (res.diagonal(t, t) < 0) {
      res.diagonal(t, t) = -res.diagonal(t, t);
      res.left.row(t) = -res.left.row(t);
    }
    res.invariant_factors.push_back(res.diagonal(t, t));
  }
  res.rank = static_cast<Index>(res.invariant_factors.size());
  bool chain = true;
  for (std::size_t k = 1; k < res.invariant_factors.size(); ++k)
    chain = chain && divides(res.invariant_factors[k - 1], res.invariant_factors[k]);
  res.transforms_valid = chain && is_diagonal(res.diagonal) &&
                         matmul(matmul(res.left, m), res.right) == res.diagonal;
  ++counters().integer_calls;
  if (res.transforms_valid) ++counters().integer_valid;
  return res;
}

std::vector<LaurentPoly> NovikovSmithResult::torsion_factors() const {
  std::vector<LaurentPoly> out;
  for (const auto& f : invariant_factors)
    if (!(f == LaurentPoly(1))) out.push_back(f);
  return out;
}

LaurentPoly novikov_representative(const LaurentPoly& p, Direction dir) {
  if (p.is_zero()) return p;
  if (dir == Direction::Minus)
    return strip_monomial(reverse_variable(novikov_representative(reverse_variable(p), Direction::Plus)));
  // Irreducible factors with constant term +-1 are units; everything else,
  // integer content included, generates the ideal.
  LaurentPoly rep(abs(p.content()));
  for (const auto& [pi, mult] : irreducible_factors(p))
    if (!is_unit(pi.lowest_coeff())) rep *= pow(pi, static_cast<unsigned>(mult));
  return rep.lowest_coeff() < 0 ? -rep : rep;
}

bool novikov_associated(const LaurentPoly& a, const LaurentPoly& b, Direction dir) {
  if (dir == Direction::Minus)
    return novikov_associated(reverse_variable(a), reverse_variable(b), Direction::Plus);
  return associated(RationalFunction(a), RationalFunction(b));
}

RationalMatrix reverse_variable(const RationalMatrix& m) {
  return m.unaryExpr([](const RationalFunction& r) {
    if (!is_novikov_unit(r.denominator(), Direction::Minus)) {
      throw NotAUnit("denominator " + to_string(r.denominator()) +
                     " is not invertible in the minus Novikov ring");
    }
    return RationalFunction(reverse_variable(r.numerator()), reverse_variable(r.denominator()));
  });
}

NovikovSmithResult novikov_diagonalize(const RationalMatrix& input, Direction dir, long max_operations) {
  const RationalMatrix m = dir == Direction::Plus ? input : reverse_variable(input);
  SmithEngine<NovikovRing> engine(m, max_operations);
  const bool finished = engine.run();
  if (!finished) {
    long partial = 0;
    for (Index t = 0; t < engine.fixed(); ++t)
      if (!engine.diagonal()(t, t).is_unit()) ++partial;
    ++counters().novikov_calls;
    ++counters().novikov_inconclusive;
    throw Inconclusive(partial, max_operations);
  }
  NovikovSmithResult res;
  res.direction = dir;
  res.operations = engine.operations();
  res.left = engine.left();
  res.right = engine.right();
  res.diagonal = engine.diagonal();
  bool reps_ok = true;
  for (Index t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    const RationalFunction& d = res.diagonal(t, t);
    if (d.is_zero()) break;
    LaurentPoly rep = novikov_representative(d.numerator(), Direction::Plus);
    reps_ok = reps_ok && associated(RationalFunction(rep), d);
    if (dir == Direction::Minus) rep = novikov_representative(reverse_variable(rep), Direction::Minus);
    res.invariant_factors.push_back(std::move(rep));
  }
  res.rank = static_cast<Index>(res.invariant_factors.size());
  bool chain = true;
  for (Index t = 1; t < res.rank; ++t)
    chain = chain && divide_in_ring(res.diagonal(t, t), res.diagonal(t - 1, t - 1)).has_value();
  res.transforms_valid = reps_ok && chain && is_diagonal(res.diagonal) &&
                         matmul(matmul(res.left, m), res.right) == res.diagonal;
  ++counters().novikov_calls;
  if (res.transforms_valid) ++counters().novikov_valid;
  return res;
}

NovikovSmithResult novikov_diagonalize(const LaurentMatrix& m, Direction dir, long max_operations) {
  return novikov_diagonalize(widen<RationalFunction>(m), dir, max_operations);
}

// ---- ranks ----

Index rank_over_rationals(const IntMatrix& m) { return smith_normal_form_int(m).rank; }

Index rank_over_function_field(const LaurentMatrix& input) {
  // Fraction-free elimination; rows are kept primitive to limit growth.
  LaurentMatrix a = input;
  Index rank = 0;
  for (Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Index pivot = -1;
    for (Index i = rank; i < a.rows(); ++i)
      if (!a(i, col).is_zero()) {
        if (pivot < 0 || a(i, col).span() < a(pivot, col).span()) pivot = i;
      }
    if (pivot < 0) continue;
    a.row(rank).swap(a.row(pivot));
    for (Index i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const LaurentPoly p = a(rank, col);
      const LaurentPoly q = a(i, col);
      LaurentPoly g(0);
      for (Index j = col; j < a.cols(); ++j) {
        a(i, j) = p * a(i, j) - q * a(rank, j);
        g = gcd(g, a(i, j));
      }
      if (!g.is_zero() && !(g == LaurentPoly(1)))
        for (Index j = col; j < a.cols(); ++j) a(i, j) = *divide_exact(a(i, j), g);
    }
    ++rank;
  }
  return rank;
}

Index rank_over_function_field(const RationalMatrix& m) {
  LaurentMatrix cleared(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    LaurentPoly row_den(1);
    for (Index j = 0; j < m.cols(); ++j) row_den *= m(i, j).denominator();
    for (Index j = 0; j < m.cols(); ++j)
      cleared(i, j) = *divide_exact(m(i, j).numerator() * row_den, m(i, j).denominator());
  }
  return rank_over_function_field(cleared);
}

}  // namespace nk
