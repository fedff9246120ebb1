#include <novikit/homology.hpp>

namespace nk {

HomologyDegree HomologyReport::at(int i) const {
  if (i < lo || i > hi()) return {};
  return degrees[static_cast<std::size_t>(i - lo)];
}

bool HomologyReport::is_zero() const {
  for (const auto& d : degrees)
    if (d.betti != 0 || !d.torsion_factors.empty()) return false;
  return true;
}

HomologyReport integral_homology(const IntComplex& c) {
  HomologyReport r;
  r.lo = c.lo();
  if (c.empty()) return r;
  // snf[i] is the Smith form of d_i for i in [lo, hi+1].
  std::vector<SmithResult> snf;
  for (int i = c.lo(); i <= c.hi() + 1; ++i) snf.push_back(smith_normal_form_int(c.differential(i)));
  auto at = [&](int i) -> const SmithResult& { return snf[static_cast<std::size_t>(i - c.lo())]; };
  for (int i = c.lo(); i <= c.hi(); ++i) {
    HomologyDegree d;
    d.betti = static_cast<long>(c.rank(i) - at(i).rank - at(i + 1).rank);
    d.torsion_factors = at(i + 1).torsion_factors();
    r.degrees.push_back(std::move(d));
  }
  return r;
}

GradedCounts morse_lower_bounds(const HomologyReport& r) {
  GradedCounts g{r.lo, {}};
  for (int i = r.lo; i <= r.hi(); ++i)
    g.values.push_back(r.at(i).betti + r.at(i).torsion_count() + r.at(i - 1).torsion_count());
  return g;
}

}  // namespace nk
