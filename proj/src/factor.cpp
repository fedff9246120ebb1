#include <novikit/factor.hpp>

#include <novikit/errors.hpp>

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <random>

// Zassenhaus with a single prime: the prime is chosen above twice the Mignotte
// bound, so the modular factors recombine directly without Hensel lifting.
// Degrees here are small, which keeps Cantor-Zassenhaus with a large modulus cheap.

namespace nk {

namespace {

using Poly = std::vector<Integer>;  // coefficients, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }

Integer reduce(const Integer& a, const Integer& m) {
  Integer r = a % m;
  return r < 0 ? Integer(r + m) : r;
}

Integer inverse(const Integer& a, const Integer& m) {
  Integer r0 = m, r1 = reduce(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const Integer q = r0 / r1;
    std::tie(r0, r1) = std::make_tuple(r1, Integer(r0 - q * r1));
    std::tie(s0, s1) = std::make_tuple(s1, Integer(s0 - q * s1));
  }
  if (r0 != 1) throw InternalInconsistency("no modular inverse");
  return reduce(s0, m);
}

Poly reduce(Poly a, const Integer& m) {
  for (auto& c : a) c = reduce(c, m);
  trim(a);
  return a;
}

Poly sub(Poly a, const Poly& b, const Integer& m) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = reduce(a[i] - b[i], m);
  trim(a);
  return a;
}

Poly mul(const Poly& a, const Poly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return reduce(std::move(out), m);
}

// a = q b + r over Z/m, m prime.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, const Integer& m) {
  const Integer inv = inverse(b.back(), m);
  Poly q;
  if (degree(a) >= degree(b)) q.assign(a.size() - b.size() + 1, Integer(0));
  while (!a.empty() && degree(a) >= degree(b)) {
    const std::size_t shift = a.size() - b.size();
    const Integer t = reduce(a.back() * inv, m);
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = reduce(a[shift + i] - t * b[i], m);
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly rem(const Poly& a, const Poly& b, const Integer& m) { return divmod(a, b, m).second; }

Poly monic(Poly a, const Integer& m) {
  if (a.empty()) return a;
  const Integer inv = inverse(a.back(), m);
  for (auto& c : a) c = reduce(c * inv, m);
  return a;
}

Poly gcd_mod(Poly a, Poly b, const Integer& m) {
  while (!b.empty()) {
    Poly r = rem(a, b, m);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), m);
}

Poly powmod(Poly base, Integer e, const Poly& f, const Integer& m) {
  Poly out{Integer(1)};
  base = rem(base, f, m);
  while (e > 0) {
    if ((e & 1) != 0) out = rem(mul(out, base, m), f, m);
    base = rem(mul(base, base, m), f, m);
    e >>= 1;
  }
  return out;
}

Poly derivative(const Poly& a) {
  Poly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<long>(i));
  trim(out);
  return out;
}

Integer random_below(std::mt19937_64& rng, const Integer& m) {
  Integer r = 0;
  for (unsigned bits = 0; bits < msb(m) + 64; bits += 64) r = (r << 64) + Integer(rng());
  return r % m;
}

// Cantor-Zassenhaus equal-degree split of a monic squarefree f whose
// irreducible factors all have degree d. m is an odd prime.
void equal_degree(const Poly& f, long d, const Integer& m, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  const Integer e = (pow(m, static_cast<unsigned>(d)) - 1) / 2;
  for (;;) {
    Poly a;
    for (long i = 0; i < degree(f); ++i) a.push_back(random_below(rng, m));
    trim(a);
    if (degree(a) < 1) continue;
    Poly b = sub(powmod(a, e, f, m), Poly{Integer(1)}, m);
    Poly g = gcd_mod(b, f, m);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(g, d, m, rng, out);
      equal_degree(divmod(f, g, m).first, d, m, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree f over Z/m.
std::vector<Poly> factor_mod(Poly f, const Integer& m) {
  std::mt19937_64 rng(0x5eed);
  std::vector<Poly> out;
  const Poly x{Integer(0), Integer(1)};
  Poly h = x;
  for (long d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, m, f, m);
    Poly g = gcd_mod(sub(h, x, m), f, m);
    if (degree(g) > 0) {
      equal_degree(g, d, m, rng, out);
      f = divmod(f, g, m).first;
      h = rem(h, f, m);
    }
  }
  if (degree(f) > 0) out.push_back(monic(f, m));
  return out;
}

Poly symmetric(Poly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    c = reduce(c, m);
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

LaurentPoly to_laurent(const Poly& a) { return LaurentPoly::from_coeffs(0, a); }

// Factors of a primitive squarefree f with positive leading coefficient.
std::vector<LaurentPoly> factor_squarefree(const LaurentPoly& f_in) {
  if (f_in.deg() <= 1) return {f_in};
  const Poly f = f_in.coeffs();
  const long n = degree(f);
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, abs(c));
  // |lc| * 2^n * ||f||_2, with ||f||_2 <= (n + 1) max |c|.
  const Integer bound = abs(f.back()) * (Integer(1) << n) * (n + 1) * maxc;
  Integer m = 2 * bound + 1;
  for (;;) {
    m += 1;
    if (!boost::multiprecision::miller_rabin_test(m, 25)) continue;
    if (reduce(f.back(), m) == 0) continue;
    const Poly fm = reduce(f, m);
    if (degree(gcd_mod(fm, reduce(derivative(f), m), m)) == 0) break;
  }

  std::vector<Poly> mod = factor_mod(monic(reduce(f, m), m), m);
  std::vector<LaurentPoly> out;
  LaurentPoly rest = f_in;
  for (std::size_t s = 1; 2 * s <= mod.size();) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      Poly g{reduce(rest.highest_coeff(), m)};
      for (std::size_t i : pick) g = mul(g, mod[i], m);
      const LaurentPoly cand = primitive_part(to_laurent(symmetric(g, m)));
      auto q = cand.ord() == 0 ? divide_exact(rest, cand) : std::nullopt;
      if (q) {
        out.push_back(cand);
        rest = *q;
        for (std::size_t k = s; k-- > 0;) mod.erase(mod.begin() + static_cast<long>(pick[k]));
        found = true;
        break;
      }
      // Next s-subset in lexicographic order.
      std::size_t k = s;
      while (k > 0 && pick[k - 1] == mod.size() - s + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.deg() > 0) out.push_back(primitive_part(rest));
  return out;
}

}  // namespace

std::vector<std::pair<LaurentPoly, int>> irreducible_factors(const LaurentPoly& p) {
  if (p.is_zero()) throw DimensionMismatch("cannot factor zero");
  const LaurentPoly f = primitive_part(strip_monomial(p));
  if (f.deg() == 0) return {};
  const LaurentPoly g = gcd(f, to_laurent(derivative(f.coeffs())));
  const LaurentPoly squarefree = primitive_part(*divide_exact(f, g));

  std::vector<std::pair<LaurentPoly, int>> out;
  for (const auto& pi : factor_squarefree(squarefree)) {
    int mult = 0;
    LaurentPoly rest = f;
    while (auto q = divide_exact(rest, pi)) {
      rest = *q;
      ++mult;
    }
    out.emplace_back(pi, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    return a.first.coeffs() < b.first.coeffs();
  });
  return out;
}

}  // namespace nk
