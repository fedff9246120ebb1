#include <novikit/laurent_poly.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace nk {

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.lowest_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(long lowest, std::vector<Integer> coeffs) {
  LaurentPoly p;
  p.lowest_ = lowest;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    lowest_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) lowest_ = 0;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

Integer LaurentPoly::coeff(long exponent) const {
  if (is_zero() || exponent < ord() || exponent > deg()) return Integer(0);
  return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
}

std::map<long, Integer> LaurentPoly::to_map() const {
  std::map<long, Integer> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out.emplace(lowest_ + static_cast<long>(k), coeffs_[k]);
  return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.lowest_ += k;
  return p;
}

Integer LaurentPoly::content() const {
  Integer g(0);
  for (const auto& c : coeffs_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long lo = std::min(ord(), o.ord());
  const long hi = std::max(deg(), o.deg());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    out[static_cast<std::size_t>(lowest_ - lo) + k] = std::move(coeffs_[k]);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    out[static_cast<std::size_t>(o.lowest_ - lo) + k] += o.coeffs_[k];
  lowest_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly::from_coeffs(a.lowest_ + b.lowest_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly normalize(const std::map<long, Integer>& raw) {
  LaurentPoly p;
  for (const auto& [e, c] : raw)
    if (c != 0) p += LaurentPoly::monomial(c, e);
  return p;
}

LaurentPoly reverse_variable(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Integer> rev(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentPoly::from_coeffs(-p.deg(), std::move(rev));
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.to_map()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "z";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& p, unsigned e) {
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly divide_exact(const LaurentPoly& p, const Integer& c) {
  std::vector<Integer> out = p.coeffs();
  for (auto& x : out) x /= c;
  return LaurentPoly::from_coeffs(p.is_zero() ? 0 : p.ord(), std::move(out));
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly{};
  if (a.span() < b.span()) return std::nullopt;
  // Long division from the top; the bottom terms must then cancel exactly.
  std::vector<Integer> rem = a.coeffs();
  const auto& div = b.coeffs();
  const std::size_t n = div.size();
  std::vector<Integer> quot(rem.size() - n + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& top = rem[k + n - 1];
    if (top == 0) continue;
    if (top % div.back() != 0) return std::nullopt;
    Integer q = top / div.back();
    for (std::size_t j = 0; j < n; ++j) rem[k + j] -= q * div[j];
    quot[k] = std::move(q);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return LaurentPoly::from_coeffs(a.ord() - b.ord(), std::move(quot));
}

LaurentPoly strip_monomial(const LaurentPoly& p) {
  return p.is_zero() ? p : p.shifted(-p.ord());
}

LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = divide_exact(p, p.content());
  return q.highest_coeff() < 0 ? -q : q;
}

namespace {

// Pseudo-remainder of a by b for ordinary polynomials (lowest exponent 0).
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
  const Integer& lb = b.highest_coeff();
  while (!a.is_zero() && a.deg() >= b.deg()) {
    LaurentPoly t = LaurentPoly::monomial(a.highest_coeff(), a.deg() - b.deg()) * b;
    a = a * LaurentPoly(lb) - t;
    if (!a.is_zero()) {
      // Keep coefficients in check; only the primitive part matters downstream.
      a = divide_exact(a, a.content());
    }
  }
  return a;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) {
    LaurentPoly s = strip_monomial(b);
    return s.highest_coeff() < 0 ? -s : s;
  }
  if (b.is_zero()) return gcd(b, a);
  const Integer c = gcd(a.content(), b.content());
  LaurentPoly x = primitive_part(strip_monomial(a));
  LaurentPoly y = primitive_part(strip_monomial(b));
  if (x.deg() < y.deg()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.deg() == 0) {
      x = LaurentPoly(1);
      break;
    }
    LaurentPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  x = primitive_part(x);
  return x * LaurentPoly(c);
}

}  // namespace nk
