#include <novikit/errors.hpp>
#include <novikit/series.hpp>

#include <algorithm>
#include <stdexcept>

namespace nk {

std::string to_string(Direction d) { return d == Direction::Plus ? "plus" : "minus"; }

TruncatedSeries::TruncatedSeries(Direction dir, long lowest, std::vector<Integer> coeffs)
    : dir_(dir), lowest_(lowest), coeffs_(std::move(coeffs)) {
  trim();
}

TruncatedSeries TruncatedSeries::zero(Direction dir, long through) {
  TruncatedSeries s;
  s.dir_ = dir;
  s.lowest_ = through + 1;
  return s;
}

void TruncatedSeries::trim() {
  const long t = through();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    lowest_ = t + 1;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  lowest_ += static_cast<long>(lead);
}

Integer TruncatedSeries::coeff(long exponent) const {
  if (exponent > through()) throw std::out_of_range("exponent beyond the known window");
  if (exponent < lowest_) return Integer(0);
  return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
}

LaurentPoly TruncatedSeries::to_poly() const { return LaurentPoly::from_coeffs(lowest_, coeffs_); }

TruncatedSeries TruncatedSeries::truncated(long t) const {
  if (t >= through()) return *this;
  if (t < lowest_) return zero(dir_, t);
  std::vector<Integer> c(coeffs_.begin(), coeffs_.begin() + (t - lowest_ + 1));
  return TruncatedSeries(dir_, lowest_, std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.dir_ != b.dir_) throw std::invalid_argument("series from different completions");
  const long t = std::min(a.through(), b.through());
  const long lo = std::min(a.lowest_, b.lowest_);
  if (lo > t) return TruncatedSeries::zero(a.dir_, t);
  std::vector<Integer> c(static_cast<std::size_t>(t - lo + 1));
  for (long e = lo; e <= t; ++e) c[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
  return TruncatedSeries(a.dir_, lo, std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::vector<Integer> neg = b.coeffs_;
  for (auto& x : neg) x = -x;
  TruncatedSeries nb = b;
  nb.coeffs_ = std::move(neg);
  return a + nb;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.dir_ != b.dir_) throw std::invalid_argument("series from different completions");
  const long t = std::min(a.through() + b.lowest_, b.through() + a.lowest_);
  const long lo = a.lowest_ + b.lowest_;
  if (a.is_zero() || b.is_zero() || lo > t) return TruncatedSeries::zero(a.dir_, t);
  std::vector<Integer> c(static_cast<std::size_t>(t - lo + 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < c.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncatedSeries(a.dir_, lo, std::move(c));
}

TruncatedSeries truncate(const LaurentPoly& p, long through, Direction dir) {
  if (p.is_zero() || p.ord() > through) return TruncatedSeries::zero(dir, through);
  std::vector<Integer> c(static_cast<std::size_t>(through - p.ord() + 1));
  for (long e = p.ord(); e <= through; ++e) c[static_cast<std::size_t>(e - p.ord())] = p.coeff(e);
  return TruncatedSeries(dir, p.ord(), std::move(c));
}

bool is_novikov_unit(const LaurentPoly& p, Direction dir) {
  if (p.is_zero()) return false;
  return is_unit(dir == Direction::Plus ? p.lowest_coeff() : p.highest_coeff());
}

namespace {

// Coefficients v_0..v_n of u^-1 for u with u(0) = +-1 and lowest exponent 0.
std::vector<Integer> inverse_coeffs(const LaurentPoly& u, long n) {
  const auto& uc = u.coeffs();
  const Integer& u0 = uc.front();
  std::vector<Integer> v(static_cast<std::size_t>(n + 1));
  v[0] = u0;  // u0 = +-1 is its own inverse
  for (long k = 1; k <= n; ++k) {
    Integer acc(0);
    const long top = std::min<long>(k, static_cast<long>(uc.size()) - 1);
    for (long i = 1; i <= top; ++i) acc += uc[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(k - i)];
    v[static_cast<std::size_t>(k)] = -(u0 * acc);
  }
  return v;
}

}  // namespace

TruncatedSeries invert_as_series(const LaurentPoly& p, Direction dir, long precision) {
  if (precision < 0) throw std::invalid_argument("negative series precision");
  if (!is_novikov_unit(p, dir)) {
    throw NotAUnit(to_string(p) + " is not a unit in the " + to_string(dir) + " Novikov ring");
  }
  const LaurentPoly w = dir == Direction::Plus ? p : reverse_variable(p);
  const long k = w.ord();
  return TruncatedSeries(dir, -k, inverse_coeffs(strip_monomial(w), precision));
}

TruncatedSeries expand(const RationalFunction& r, Direction dir, long precision) {
  const bool plus = dir == Direction::Plus;
  const LaurentPoly num = plus ? r.numerator() : reverse_variable(r.numerator());
  const LaurentPoly den = plus ? r.denominator() : reverse_variable(r.denominator());
  if (!is_novikov_unit(den, Direction::Plus)) {
    throw NotAUnit("denominator " + to_string(r.denominator()) + " is not a unit in the " +
                   to_string(dir) + " Novikov ring");
  }
  if (num.is_zero()) return TruncatedSeries::zero(dir, precision);
  const long lowest = num.ord() - den.ord();
  if (lowest > precision) return TruncatedSeries::zero(dir, precision);
  const std::vector<Integer> inv = inverse_coeffs(strip_monomial(den), precision - lowest);
  std::vector<Integer> c(static_cast<std::size_t>(precision - lowest + 1));
  const auto& nc = num.coeffs();
  for (std::size_t i = 0; i < nc.size() && i < c.size(); ++i) {
    if (nc[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += nc[i] * inv[j];
  }
  return TruncatedSeries(dir, lowest, std::move(c));
}

std::string to_string(const TruncatedSeries& s) {
  const bool plus = s.direction() == Direction::Plus;
  LaurentPoly in_z = plus ? s.to_poly() : reverse_variable(s.to_poly());
  std::string body = s.is_zero() ? "0" : to_string(in_z);
  const long next = plus ? s.through() + 1 : -(s.through() + 1);
  return body + " + O(z^" + std::to_string(next) + ")";
}

}  // namespace nk
