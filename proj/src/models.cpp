#include <novikit/models.hpp>
#include <novikit/smith.hpp>

#include <algorithm>

namespace nk {

LaurentComplex mapping_torus_complex(const ChainMap<Integer>& h, Direction orientation) {
  const IntComplex& c = h.source();
  const IntComplex& t = h.target();
  bool same = c.lo() == t.lo() && c.hi() == t.hi() && c.ranks() == t.ranks();
  for (int i = c.lo() + 1; same && i <= c.hi(); ++i) same = c.differential(i) == t.differential(i);
  if (!same) throw ShapeError("mapping torus needs a self-map");
  std::map<int, LaurentMatrix> comps;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    const IntMatrix one = identity<Integer>(c.rank(i));
    comps.emplace(i, orientation == Direction::Plus ? linear_pencil(one, IntMatrix(-h.component(i)))
                                                    : linear_pencil(IntMatrix(-h.component(i)), one));
  }
  const LaurentComplex lc = base_change<LaurentPoly>(c);
  return mapping_cone(ChainMap<LaurentPoly>(lc, lc, std::move(comps)));
}

FundamentalDomain circle_exercise() {
  // f'(t) = 18t^2 - 18t + 4 vanishes at t = 1/3 (max, f = 5/9) and t = 2/3
  // (min, f = 4/9). Cut the circle at the regular value 0 and take D = the
  // piece of the cover containing 0, one point. F holds the two critical
  // points, x (index 1) over y (index 0). Of the two downward lines from x, one
  // reaches y in the same domain, the other runs through the cut to y's
  // translate one deck step down, i.e. through D into z*y.
  FundamentalDomain fd;
  fd.D = IntComplex(0, 0, {1});
  fd.F = IntComplex(0, 1, {1, 1}, {{1, IntMatrix::Constant(1, 1, Integer(1))}});
  fd.c[1] = IntMatrix::Constant(1, 1, Integer(-1));
  fd.h_D[0] = IntMatrix::Constant(1, 1, Integer(0));
  fd.h_F[0] = IntMatrix::Constant(1, 1, Integer(1));
  return fd;
}

IntMatrix SeifertData::e_at(int i) const {
  auto it = e.find(i);
  if (it != e.end()) return it->second;
  return zeros<Integer>(base.rank(i), base.rank(i));
}

namespace {

void check_seifert(const SeifertData& s) {
  for (const auto& [i, m] : s.e)
    if (m.rows() != s.base.rank(i) || m.cols() != s.base.rank(i)) {
      if (m.size() == 0 && s.base.rank(i) == 0) continue;
      throw InvalidDomain("e shape", i);
    }
  if (s.base.empty()) return;
  for (int i = s.base.lo() + 1; i <= s.base.hi(); ++i)
    if (!(matmul(s.base.differential(i), s.e_at(i)) == matmul(s.e_at(i - 1), s.base.differential(i))))
      throw InvalidDomain("e chain map", i);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const Integer det = determinant(m);
  if (!is_unit(det)) throw InternalInconsistency("transform is not unimodular");
  const LaurentMatrix adj = adjugate(widen<LaurentPoly>(m));
  IntMatrix inv(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) inv(i, j) = adj(i, j).coeff(0) * det;
  return inv;
}

struct FreeAction {
  IntMatrix matrix;
  bool torsion = false;
};

FreeAction free_action(const SeifertData& s, int i) {
  const IntMatrix d = s.base.differential(i);
  const Index n = s.base.rank(i);
  const SmithResult sd = smith_normal_form_int(d);
  const Index k = n - sd.rank;
  // The last k columns of `right` span the cycles.
  const IntMatrix rinv = inverse_unimodular(sd.right);
  const IntMatrix cycles = sd.right.rightCols(k);
  auto coords = [&](const IntMatrix& x) -> IntMatrix { return matmul(rinv, x).bottomRows(k); };
  const IntMatrix bk = coords(s.base.differential(i + 1));
  const SmithResult sb = smith_normal_form_int(bk);
  // New cycle coordinates y = L x: the first sb.rank span the boundaries up to
  // scaling, the rest map onto H_i / torsion.
  const IntMatrix ek = coords(matmul(s.e_at(i), cycles));
  const IntMatrix e_new = matmul(matmul(sb.left, ek), inverse_unimodular(sb.left));
  const Index f = k - sb.rank;
  FreeAction a;
  a.matrix = e_new.bottomRightCorner(f, f);
  // The saturated boundary lattice is e-invariant, so the upper-right block vanishes.
  if (!is_zero(IntMatrix(e_new.bottomLeftCorner(f, sb.rank))))
    throw InternalInconsistency("induced action does not preserve the boundaries");
  a.torsion = !sb.torsion_factors().empty();
  return a;
}

}  // namespace

IntMatrix induced_free_action(const SeifertData& s, int i) {
  check_seifert(s);
  return free_action(s, i).matrix;
}

FundamentalDomain knot_fundamental_domain(const SeifertData& s) {
  check_seifert(s);
  const IntComplex& b = s.base;
  auto off = [](int i) -> Index { return i == 0 ? 1 : 0; };
  FundamentalDomain fd;

  const int dlo = b.empty() ? 0 : std::min(b.lo(), 0);
  const int dhi = b.empty() ? 0 : std::max(b.hi(), 0);
  std::vector<Index> dr;
  for (int i = dlo; i <= dhi; ++i) dr.push_back(b.rank(i) + off(i));
  std::map<int, IntMatrix> dd;
  for (int i = dlo + 1; i <= dhi; ++i) {
    IntMatrix d = zeros<Integer>(b.rank(i - 1) + off(i - 1), b.rank(i) + off(i));
    put_block<Integer>(d, off(i - 1), off(i), b.differential(i));
    dd.emplace(i, std::move(d));
  }
  fd.D = IntComplex(dlo, dhi, std::move(dr), std::move(dd));
  if (b.empty()) return fd;

  const int flo = b.lo(), fhi = b.hi() + 1;
  std::vector<Index> fr;
  for (int i = flo; i <= fhi; ++i) fr.push_back(b.rank(i) + b.rank(i - 1));
  std::map<int, IntMatrix> fdiff;
  for (int i = flo + 1; i <= fhi; ++i) {
    IntMatrix d = zeros<Integer>(b.rank(i - 1) + b.rank(i - 2), b.rank(i) + b.rank(i - 1));
    put_block<Integer>(d, 0, 0, b.differential(i));
    put_block<Integer>(d, 0, b.rank(i), s.e_at(i - 1));
    put_block<Integer>(d, b.rank(i - 1), b.rank(i), IntMatrix(-b.differential(i - 1)));
    fdiff.emplace(i, std::move(d));
  }
  fd.F = IntComplex(flo, fhi, std::move(fr), std::move(fdiff));

  for (int i = flo; i <= fhi; ++i) {
    IntMatrix c = zeros<Integer>(fd.D.rank(i - 1), fd.F.rank(i));
    put_block<Integer>(c, off(i - 1), b.rank(i), identity<Integer>(b.rank(i - 1)));
    fd.c.emplace(i, std::move(c));
  }
  for (int i = dlo; i <= dhi; ++i) {
    IntMatrix h = zeros<Integer>(fd.F.rank(i), fd.D.rank(i));
    put_block<Integer>(h, 0, off(i), IntMatrix(identity<Integer>(b.rank(i)) - s.e_at(i)));
    fd.h_F.emplace(i, std::move(h));
  }
  require_valid(fd);
  return fd;
}

std::vector<AlexanderPolynomial> alexander_polynomials(const SeifertData& s) {
  check_seifert(s);
  std::vector<AlexanderPolynomial> out;
  if (s.base.empty()) return out;
  for (int i = s.base.lo(); i <= s.base.hi(); ++i) {
    const FreeAction a = free_action(s, i);
    const Index n = a.matrix.rows();
    LaurentPoly delta = strip_monomial(determinant(linear_pencil(a.matrix, IntMatrix(identity<Integer>(n) - a.matrix))));
    if (!delta.is_zero() && delta.highest_coeff() < 0) delta = -delta;
    out.push_back({i, delta, a.torsion});
  }
  return out;
}

FiberingVerdict fibering_check(const SeifertData& s) {
  FiberingVerdict v;
  v.alexander = alexander_polynomials(s);
  v.extreme_coeffs_unit = std::all_of(v.alexander.begin(), v.alexander.end(), [](const AlexanderPolynomial& a) {
    return !a.delta.is_zero() && is_unit(a.delta.lowest_coeff()) && is_unit(a.delta.highest_coeff());
  });
  v.torsion_flagged = std::any_of(v.alexander.begin(), v.alexander.end(),
                                  [](const AlexanderPolynomial& a) { return a.torsion; });
  const LaurentComplex knot = assemble_mapping_cone(knot_fundamental_domain(s));
  const DominationVerdict dom = finite_domination_check(knot);
  v.vanishes_plus = dom.vanishes_plus;
  v.vanishes_minus = dom.vanishes_minus;
  v.novikov_vanishes = dom.finitely_dominated;
  v.conclusive = dom.conclusive;
  v.fibers = v.novikov_vanishes;
  if (v.conclusive && !v.torsion_flagged && v.novikov_vanishes != v.extreme_coeffs_unit)
    throw InternalInconsistency("Novikov vanishing and Alexander coefficients disagree");
  return v;
}

}  // namespace nk
