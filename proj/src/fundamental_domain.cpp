#include <novikit/fundamental_domain.hpp>

#include <algorithm>

namespace nk {

namespace {

IntMatrix lookup(const std::map<int, IntMatrix>& m, int i, Index rows, Index cols) {
  auto it = m.find(i);
  if (it != m.end() && it->second.rows() == rows && it->second.cols() == cols) return it->second;
  return zeros<Integer>(rows, cols);
}

template <typename Scalar>
Matrix<Scalar> block_diag(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out = zeros<Scalar>(a.rows() + b.rows(), a.cols() + b.cols());
  put_block<Scalar>(out, 0, 0, a);
  put_block<Scalar>(out, a.rows(), a.cols(), b);
  return out;
}

LaurentMatrix times_z(const IntMatrix& m) {
  return linear_pencil(zeros<Integer>(m.rows(), m.cols()), m);
}

}  // namespace

IntMatrix FundamentalDomain::c_at(int i) const { return lookup(c, i, D.rank(i - 1), F.rank(i)); }
IntMatrix FundamentalDomain::h_D_at(int i) const { return lookup(h_D, i, D.rank(i), D.rank(i)); }
IntMatrix FundamentalDomain::h_F_at(int i) const { return lookup(h_F, i, F.rank(i), D.rank(i)); }

int FundamentalDomain::lo() const {
  if (D.empty()) return F.lo();
  if (F.empty()) return D.lo();
  return std::min(D.lo(), F.lo());
}

int FundamentalDomain::hi() const {
  if (D.empty()) return F.hi();
  if (F.empty()) return D.hi();
  return std::max(D.hi(), F.hi());
}

DomainVerdict validate_fundamental_domain(const FundamentalDomain& fd) {
  auto fail = [](const char* what, int degree) { return DomainVerdict{false, what, degree}; };
  // Supplied blocks must have the shapes the complexes dictate.
  auto shapes_ok = [](const std::map<int, IntMatrix>& m, auto rows, auto cols) -> std::optional<int> {
    for (const auto& [i, b] : m) {
      if (b.rows() == rows(i) && b.cols() == cols(i)) continue;
      if (b.size() == 0 && rows(i) * cols(i) == 0) continue;
      return i;
    }
    return std::nullopt;
  };
  auto rD = [&](int i) { return fd.D.rank(i); };
  auto rF = [&](int i) { return fd.F.rank(i); };
  auto rDm = [&](int i) { return fd.D.rank(i - 1); };
  if (auto i = shapes_ok(fd.c, rDm, rF)) return fail(kIdentityShape, *i);
  if (auto i = shapes_ok(fd.h_D, rD, rD)) return fail(kIdentityShape, *i);
  if (auto i = shapes_ok(fd.h_F, rF, rD)) return fail(kIdentityShape, *i);

  if (auto v = validate_complex(fd.D); !v.valid) return fail(kIdentityDD, *v.degree);
  if (auto v = validate_complex(fd.F); !v.valid) return fail(kIdentityFF, *v.degree);
  const int lo = fd.lo(), hi = fd.hi();
  for (int i = lo; i <= hi + 1; ++i) {
    IntMatrix lhs = matmul(fd.D.differential(i - 1), fd.c_at(i)) + matmul(fd.c_at(i - 1), fd.F.differential(i));
    if (!is_zero(lhs)) return fail(kIdentityDC, i);
  }
  for (int i = lo; i <= hi + 1; ++i) {
    IntMatrix lhs = matmul(fd.D.differential(i), fd.h_D_at(i)) + matmul(fd.c_at(i), fd.h_F_at(i));
    if (!(lhs == matmul(fd.h_D_at(i - 1), fd.D.differential(i)))) return fail(kIdentityHD, i);
  }
  for (int i = lo; i <= hi + 1; ++i) {
    if (!(matmul(fd.F.differential(i), fd.h_F_at(i)) == matmul(fd.h_F_at(i - 1), fd.D.differential(i))))
      return fail(kIdentityHF, i);
  }
  return {};
}

void require_valid(const FundamentalDomain& fd) {
  auto v = validate_fundamental_domain(fd);
  if (!v.valid) throw InvalidDomain(v.identity, v.degree);
}

IntComplex domain_total_complex(const FundamentalDomain& fd) {
  if (fd.D.empty() && fd.F.empty()) return {};
  const int lo = fd.lo(), hi = fd.hi();
  std::vector<Index> ranks;
  for (int i = lo; i <= hi; ++i) ranks.push_back(fd.D.rank(i) + fd.F.rank(i));
  std::map<int, IntMatrix> diffs;
  for (int i = lo + 1; i <= hi; ++i) {
    IntMatrix d = zeros<Integer>(ranks[i - 1 - lo], ranks[i - lo]);
    put_block<Integer>(d, 0, 0, fd.D.differential(i));
    put_block<Integer>(d, 0, fd.D.rank(i), fd.c_at(i));
    put_block<Integer>(d, fd.D.rank(i - 1), fd.D.rank(i), fd.F.differential(i));
    diffs.emplace(i, std::move(d));
  }
  return IntComplex(lo, hi, std::move(ranks), std::move(diffs));
}

ChainMap<LaurentPoly> domain_phi(const FundamentalDomain& fd) {
  require_valid(fd);
  const IntComplex E = domain_total_complex(fd);
  std::map<int, LaurentMatrix> comps;
  for (int i = fd.D.lo(); i <= fd.D.hi(); ++i) {
    LaurentMatrix phi = zeros<LaurentPoly>(E.rank(i), fd.D.rank(i));
    put_block<LaurentPoly>(phi, 0, 0, one_minus_z_times(fd.h_D_at(i)));
    put_block<LaurentPoly>(phi, fd.D.rank(i), 0, LaurentMatrix(-times_z(fd.h_F_at(i))));
    comps.emplace(i, std::move(phi));
  }
  return ChainMap<LaurentPoly>(base_change<LaurentPoly>(fd.D), base_change<LaurentPoly>(E), std::move(comps));
}

LaurentComplex assemble_mapping_cone(const FundamentalDomain& fd) { return mapping_cone(domain_phi(fd)); }

RationalComplex algebraic_novikov_complex(const FundamentalDomain& fd) {
  require_valid(fd);
  if (fd.F.empty()) return {};
  std::map<int, RationalMatrix> diffs;
  for (int i = fd.F.lo() + 1; i <= fd.F.hi(); ++i) {
    const RationalMatrix inv = inverse_in_rational_subring(one_minus_z_times(fd.h_D_at(i - 1)));
    const RationalMatrix zh = widen<RationalFunction>(times_z(fd.h_F_at(i - 1)));
    RationalMatrix d = widen<RationalFunction>(fd.F.differential(i)) +
                       matmul(matmul(zh, inv), widen<RationalFunction>(fd.c_at(i)));
    diffs.emplace(i, std::move(d));
  }
  return RationalComplex(fd.F.lo(), fd.F.hi(), fd.F.ranks(), std::move(diffs));
}

// ---- series matrices ----

SeriesMatrix SeriesMatrix::zero(Index rows, Index cols, long K) {
  SeriesMatrix s;
  s.rows = rows;
  s.cols = cols;
  s.coeffs.assign(static_cast<std::size_t>(K + 1), zeros<Integer>(rows, cols));
  return s;
}

SeriesMatrix SeriesMatrix::constant(const IntMatrix& m, long K) {
  SeriesMatrix s = zero(m.rows(), m.cols(), K);
  s.coeffs[0] = m;
  return s;
}

namespace {

void check_shapes(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("series matrices differ in shape");
}

SeriesMatrix times_z(const SeriesMatrix& a) {
  SeriesMatrix out = SeriesMatrix::zero(a.rows, a.cols, a.precision());
  for (long j = 1; j <= a.precision(); ++j) out.coeffs[j] = a[j - 1];
  return out;
}

}  // namespace

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  check_shapes(a, b);
  const long K = std::min(a.precision(), b.precision());
  SeriesMatrix out = SeriesMatrix::zero(a.rows, a.cols, K);
  for (long j = 0; j <= K; ++j) out.coeffs[j] = a[j] + b[j];
  return out;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  check_shapes(a, b);
  const long K = std::min(a.precision(), b.precision());
  SeriesMatrix out = SeriesMatrix::zero(a.rows, a.cols, K);
  for (long j = 0; j <= K; ++j) out.coeffs[j] = a[j] - b[j];
  return out;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.cols != b.rows) throw DimensionMismatch("series matrix product shapes");
  const long K = std::min(a.precision(), b.precision());
  SeriesMatrix out = SeriesMatrix::zero(a.rows, b.cols, K);
  for (long i = 0; i <= K; ++i) {
    if (is_zero(a[i])) continue;
    for (long j = 0; i + j <= K; ++j) out.coeffs[i + j] += matmul(a[i], b[j]);
  }
  return out;
}

std::optional<long> first_mismatch(const SeriesMatrix& a, const SeriesMatrix& b) {
  check_shapes(a, b);
  const long K = std::min(a.precision(), b.precision());
  for (long j = 0; j <= K; ++j)
    if (!(a[j] == b[j])) return j;
  return std::nullopt;
}

SeriesMatrix expand(const RationalMatrix& m, long K) {
  SeriesMatrix out = SeriesMatrix::zero(m.rows(), m.cols(), K);
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      if (m(r, c).ord() < 0) throw std::invalid_argument("entry has negative powers of z");
      const TruncatedSeries s = nk::expand(m(r, c), Direction::Plus, K);
      for (long j = 0; j <= K; ++j) out.coeffs[j](r, c) = s.coeff(j);
    }
  return out;
}

SeriesMatrix expand(const LaurentMatrix& m, long K) { return expand(widen<RationalFunction>(m), K); }

SeriesMatrix geometric_series(const IntMatrix& h, long K) {
  SeriesMatrix out = SeriesMatrix::zero(h.rows(), h.cols(), K);
  IntMatrix power = identity<Integer>(h.rows());
  for (long j = 0; j <= K; ++j) {
    out.coeffs[j] = power;
    power = matmul(power, h);
  }
  return out;
}

Index TruncatedComplex::rank(int i) const {
  if (i < lo || i > hi) return 0;
  return ranks[static_cast<std::size_t>(i - lo)];
}

SeriesMatrix TruncatedComplex::differential(int i) const {
  auto it = differentials.find(i);
  if (it != differentials.end()) return it->second;
  return SeriesMatrix::zero(rank(i - 1), rank(i), precision);
}

namespace {

// z h_F_i (sum_j z^j h_D_i^j): the D-part of the projection at degree i.
SeriesMatrix projection_block(const FundamentalDomain& fd, int i, long K) {
  return times_z(SeriesMatrix::constant(fd.h_F_at(i), K) * geometric_series(fd.h_D_at(i), K));
}

}  // namespace

TruncatedComplex algebraic_novikov_complex_truncated(const FundamentalDomain& fd, long K) {
  if (K < 0) throw std::invalid_argument("precision must be nonnegative");
  require_valid(fd);
  TruncatedComplex t;
  t.precision = K;
  if (fd.F.empty()) return t;
  t.lo = fd.F.lo();
  t.hi = fd.F.hi();
  t.ranks = fd.F.ranks();
  for (int i = t.lo + 1; i <= t.hi; ++i) {
    // d_F + sum_{j=1..K} z^j h_F h_D^{j-1} c
    SeriesMatrix d = SeriesMatrix::constant(fd.F.differential(i), K);
    IntMatrix term = fd.c_at(i);
    for (long j = 1; j <= K; ++j) {
      d.coeffs[j] += matmul(fd.h_F_at(i - 1), term);
      term = matmul(fd.h_D_at(i - 1), term);
    }
    t.differentials.emplace(i, std::move(d));
  }
  return t;
}

CokernelVerdict cokernel_iso_check(const FundamentalDomain& fd, long K) {
  require_valid(fd);
  auto fail = [](const char* what, int degree, long order) { return CokernelVerdict{false, what, degree, order}; };
  const int lo = fd.lo(), hi = fd.hi();
  const TruncatedComplex trunc = algebraic_novikov_complex_truncated(fd, K);
  const RationalComplex exact = algebraic_novikov_complex(fd);

  for (int i = lo; i <= hi; ++i) {
    const IntMatrix h = fd.h_D_at(i);
    const Index nD = fd.D.rank(i), nF = fd.F.rank(i);
    const SeriesMatrix one = SeriesMatrix::constant(identity<Integer>(nD), K);
    const SeriesMatrix one_minus = one - times_z(SeriesMatrix::constant(h, K));
    if (auto j = first_mismatch(one_minus * geometric_series(h, K), one)) return fail("geometric series", i, *j);

    // pi phi = P (1 - z h_D) - z h_F
    const SeriesMatrix P = projection_block(fd, i, K);
    const SeriesMatrix pi_phi = P * one_minus - times_z(SeriesMatrix::constant(fd.h_F_at(i), K));
    if (auto j = first_mismatch(pi_phi, SeriesMatrix::zero(nF, nD, K))) return fail("pi phi = 0", i, *j);
  }

  for (int i = lo; i <= hi + 1; ++i) {
    // pi_{i-1} d_E = d_Fhat pi_i, blockwise on the D and F columns.
    const SeriesMatrix dhat = trunc.differential(i);
    const SeriesMatrix P_prev = projection_block(fd, i - 1, K);
    const SeriesMatrix P = projection_block(fd, i, K);
    const SeriesMatrix d_col_D = P_prev * SeriesMatrix::constant(fd.D.differential(i), K);
    if (auto j = first_mismatch(d_col_D, dhat * P)) return fail("pi d_E = d_Fhat pi", i, *j);
    const SeriesMatrix d_col_F =
        P_prev * SeriesMatrix::constant(fd.c_at(i), K) + SeriesMatrix::constant(fd.F.differential(i), K);
    if (auto j = first_mismatch(d_col_F, dhat)) return fail("pi d_E = d_Fhat pi", i, *j);

    if (auto j = first_mismatch(expand(exact.differential(i), K), dhat)) return fail("exact = truncated", i, *j);
    if (auto j = first_mismatch(trunc.differential(i - 1) * dhat,
                                SeriesMatrix::zero(trunc.rank(i - 2), trunc.rank(i), K)))
      return fail("d_Fhat d_Fhat = 0", i, *j);
  }
  return {};
}

ZetaFunction torsion_zeta(const FundamentalDomain& fd) {
  LaurentPoly num(1), den(1);
  for (int i = fd.D.lo(); i <= fd.D.hi(); ++i) {
    const LaurentPoly det = determinant(one_minus_z_times(fd.h_D_at(i)));
    if (i % 2 == 0)
      num *= det;
    else
      den *= det;
  }
  return {RationalFunction(num, den)};
}

FundamentalDomain direct_sum(const FundamentalDomain& a, const FundamentalDomain& b) {
  FundamentalDomain s;
  s.D = direct_sum(a.D, b.D);
  s.F = direct_sum(a.F, b.F);
  const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  for (int i = lo; i <= hi + 1; ++i) {
    s.c.emplace(i, block_diag(a.c_at(i), b.c_at(i)));
    s.h_D.emplace(i, block_diag(a.h_D_at(i), b.h_D_at(i)));
    s.h_F.emplace(i, block_diag(a.h_F_at(i), b.h_F_at(i)));
  }
  return s;
}

}  // namespace nk
