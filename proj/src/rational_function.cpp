#include <novikit/errors.hpp>
#include <novikit/rational_function.hpp>

namespace nk {

std::optional<RationalFunction> RationalFunction::try_make(const LaurentPoly& num,
                                                           const LaurentPoly& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return RationalFunction();
  const long k = den.ord();
  LaurentPoly n = num.shifted(-k);
  LaurentPoly d = den.shifted(-k);
  const LaurentPoly g = gcd(n, d);
  if (!(g == LaurentPoly(1))) {
    n = *divide_exact(n, g);
    d = *divide_exact(d, g);
  }
  // Cancelling may have moved the lowest exponent of d.
  const long k2 = d.ord();
  n = n.shifted(-k2);
  d = d.shifted(-k2);
  if (!nk::is_unit(d.lowest_coeff())) return std::nullopt;
  if (d.lowest_coeff() < 0) {
    n = -n;
    d = -d;
  }
  return RationalFunction(Canonical{}, std::move(n), std::move(d));
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) {
  auto r = try_make(num, den);
  if (!r) {
    throw NotInRationalSubring("denominator " + to_string(den) + " of " + to_string(num) +
                               " has no representative with constant term 1");
  }
  *this = std::move(*r);
}

bool RationalFunction::is_unit() const { return !is_zero() && nk::is_unit(num_.lowest_coeff()); }

RationalFunction RationalFunction::inverse() const {
  if (!is_unit()) throw NotAUnit(to_string(*this) + " is not a unit in Z((z))");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(Canonical{}, -num_, den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (is_polynomial()) {
      num_ += o.num_;
      return *this;
    }
    return *this = RationalFunction(num_ + o.num_, den_);
  }
  return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
}

std::optional<RationalFunction> divide_in_ring(const RationalFunction& b, const RationalFunction& a) {
  if (a.is_zero()) {
    if (b.is_zero()) return RationalFunction();
    return std::nullopt;
  }
  return RationalFunction::try_make(b.numerator() * a.denominator(),
                                    b.denominator() * a.numerator());
}

bool associated(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto q = divide_in_ring(b, a);
  return q && q->is_unit();
}

std::string to_string(const RationalFunction& r) {
  if (r.is_polynomial()) return to_string(r.numerator());
  return "(" + to_string(r.numerator()) + ")/(" + to_string(r.denominator()) + ")";
}

}  // namespace nk
