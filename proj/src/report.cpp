#include <novikit/document.hpp>
#include <novikit/smith.hpp>

#include <sstream>

namespace nk {

namespace {

using nk::encode;

std::string ring_name(Direction d) { return d == Direction::Plus ? "Z((z))" : "Z((z^-1))"; }

Json encode(const GradedCounts& g) {
  Json out = Json::array();
  for (int i = g.lo; i <= g.hi(); ++i) out.push_back(Json{{"degree", i}, {"count", g.at(i)}});
  return out;
}

std::string text_counts(const GradedCounts& g, const std::string& sym) {
  if (g.values.empty()) return "(none)";
  std::ostringstream os;
  for (int i = g.lo; i <= g.hi(); ++i) os << (i == g.lo ? "" : ", ") << sym << "_" << i << " >= " << g.at(i);
  return os.str();
}

template <typename Scalar>
Json encode_matrix(const Matrix<Scalar>& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Scalar>
Json encode_complex(const ChainComplex<Scalar>& c) {
  Json d = Json::object();
  for (int i = c.lo() + 1; i <= c.hi(); ++i) d[std::to_string(i)] = encode_matrix(c.differential(i));
  Json ranks = Json::array();
  for (Index r : c.ranks()) ranks.push_back(r);
  return Json{{"lo", c.lo()}, {"hi", c.hi()}, {"ranks", ranks}, {"differentials", d}};
}

template <typename Scalar>
std::string text_ranks(const ChainComplex<Scalar>& c) {
  if (c.empty()) return "(empty)";
  std::ostringstream os;
  for (int i = c.lo(); i <= c.hi(); ++i) os << (i == c.lo() ? "" : ", ") << "C_" << i << " = " << c.rank(i);
  return os.str();
}

Json encode(const HomologyReport& r) {
  Json out = Json::array();
  for (int i = r.lo; i <= r.hi(); ++i) {
    Json f = Json::array();
    for (const auto& t : r.at(i).torsion_factors) f.push_back(encode(t));
    out.push_back(Json{{"degree", i}, {"betti", r.at(i).betti}, {"torsion_count", r.at(i).torsion_count()}, {"torsion_factors", f}});
  }
  return out;
}

std::string text_group(long betti, const std::vector<std::string>& torsion, const std::string& ring,
                       const std::string& quotient_ring) {
  std::vector<std::string> parts;
  if (betti == 1) parts.push_back(ring);
  if (betti > 1) parts.push_back(ring + "^" + std::to_string(betti));
  for (const auto& t : torsion) parts.push_back(quotient_ring + "/(" + t + ")");
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? " + " : "") + parts[k];
  return s;
}

std::string text(const HomologyReport& r) {
  std::ostringstream os;
  for (int i = r.lo; i <= r.hi(); ++i) {
    std::vector<std::string> t;
    for (const auto& f : r.at(i).torsion_factors) t.push_back(to_string(f));
    os << "  H_" << i << " = " << text_group(r.at(i).betti, t, "Z", "Z") << "\n";
  }
  return os.str();
}

Json encode(const NovikovReport& r) {
  Json degs = Json::array();
  for (int i = r.lo; i <= r.hi(); ++i) {
    const NovikovDegree d = r.at(i);
    Json f = Json::array();
    for (const auto& t : d.torsion_factors) f.push_back(encode(t));
    degs.push_back(Json{{"degree", i},
                        {"betti", d.betti},
                        {"torsion_count", d.torsion_count},
                        {"torsion_factors", f},
                        {"conclusive", d.conclusive}});
  }
  return Json{{"direction", to_string(r.direction)}, {"conclusive", r.conclusive}, {"degrees", degs}};
}

std::string text(const NovikovReport& r) {
  std::ostringstream os;
  if (r.conclusive && r.is_zero()) {
    os << "  all Novikov homology zero\n";
    return os.str();
  }
  for (int i = r.lo; i <= r.hi(); ++i) {
    const NovikovDegree d = r.at(i);
    std::vector<std::string> t;
    for (const auto& f : d.torsion_factors) t.push_back(to_string(f));
    if (d.conclusive)
      os << "  H_" << i << " = " << text_group(d.betti, t, ring_name(r.direction), ring_name(r.direction)) << "\n";
    else
      os << "  H_" << i << ": free rank " << d.betti << ", torsion unknown (at least " << d.torsion_count
         << " generators; diagonalization hit the operation cap)\n";
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json encode(const DominationVerdict& v) {
  return Json{{"vanishes_plus", v.vanishes_plus},
              {"vanishes_minus", v.vanishes_minus},
              {"finitely_dominated", v.finitely_dominated},
              {"conclusive", v.conclusive}};
}

std::string text(const DominationVerdict& v) {
  return "finitely dominated: " + yes_no(v.finitely_dominated) + " (vanishes over Z((z)): " +
         yes_no(v.vanishes_plus) + ", over Z((z^-1)): " + yes_no(v.vanishes_minus) + ")" +
         (v.conclusive ? "" : " [inconclusive]") + "\n";
}

struct Oracle {
  Json checks = Json::array();
  std::ostringstream text;
  bool failed = false;

  void add(const std::string& name, bool passed, const std::string& detail = "") {
    Json c{{"check", name}, {"passed", passed}};
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(std::move(c));
    text << "  [" << (passed ? "pass" : "FAIL") << "] " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    failed = failed || !passed;
  }
};

template <typename Scalar>
void oracle_novikov(Oracle& o, const ChainComplex<Scalar>& c, const NovikovReport& r) {
  bool ranks_ok = true, transforms_ok = true;
  for (int i = c.lo() + 1; i <= c.hi(); ++i) {
    try {
      const auto res = novikov_diagonalize(c.differential(i), r.direction);
      ranks_ok = ranks_ok && res.rank == rank_over_function_field(c.differential(i));
      transforms_ok = transforms_ok && res.transforms_valid;
    } catch (const Inconclusive&) {
    }
  }
  o.add("rank vs diagonal form", ranks_ok);
  o.add("diagonal transforms re-multiplied", transforms_ok);
  long chi_b = 0, chi_r = 0;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    const long s = (i % 2 == 0) ? 1 : -1;
    chi_b += s * r.at(i).betti;
    chi_r += s * static_cast<long>(c.rank(i));
  }
  o.add("Euler characteristic", chi_b == chi_r);
  o.add("rank_i >= b_i + q_i + q_{i-1}", check_inequalities(ranks_of(c), morse_novikov_bounds(r)).satisfied());
}

// z -> z^-1 on every differential.
LaurentComplex reverse_base(const LaurentComplex& c) {
  std::map<int, LaurentMatrix> d;
  for (int i = c.lo() + 1; i <= c.hi(); ++i) d.emplace(i, reverse_variable(c.differential(i)));
  return LaurentComplex(c.lo(), c.hi(), c.ranks(), std::move(d));
}

struct Out {
  Json result = Json::object();
  std::ostringstream text;
  bool inconclusive = false;
};

void run_complex_homology(const IntComplex& c, Out& out, Oracle* o) {
  const HomologyReport r = integral_homology(c);
  const GradedCounts b = morse_lower_bounds(r);
  out.result["ranks"] = encode(ranks_of(c));
  out.result["homology"] = encode(r);
  out.result["morse_bounds"] = encode(b);
  out.text << "ranks: " << text_ranks(c) << "\nintegral homology:\n" << text(r);
  out.text << "Morse bounds: " << text_counts(b, "c") << "\n";
  if (o) {
    bool ok = true;
    for (int i = c.lo(); i <= c.hi() + 1; ++i) {
      const auto s = smith_normal_form_int(c.differential(i));
      ok = ok && s.transforms_valid && s.rank == rank_over_rationals(c.differential(i));
    }
    o->add("rank vs Smith form", ok);
    o->add("rank_i >= b_i + q_i + q_{i-1}", check_inequalities(ranks_of(c), b).satisfied());
  }
}

void run_novikov(const LaurentComplex& c, Direction dir, long cap, Out& out, Oracle* o) {
  const NovikovReport r = novikov_homology(c, dir, cap);
  const GradedCounts b = morse_novikov_bounds(r);
  out.result["ranks"] = encode(ranks_of(c));
  out.result["novikov"] = encode(r);
  out.result["morse_novikov_bounds"] = encode(b);
  out.text << "ranks: " << text_ranks(c) << "\nNovikov homology over " << ring_name(dir) << ":\n" << text(r);
  out.text << "Morse-Novikov bounds: " << text_counts(b, "c") << "\n";
  out.inconclusive = !r.conclusive;
  if (o) oracle_novikov(*o, c, r);
}

void run_domination(const LaurentComplex& c, long cap, Out& out, Oracle* o) {
  const DominationVerdict v = finite_domination_check(c, cap);
  out.result = encode(v);
  out.text << text(v);
  out.inconclusive = !v.conclusive;
  if (o) {
    const bool a = novikov_homology(c, Direction::Plus).is_zero();
    const bool b = novikov_homology(reverse_base(c), Direction::Plus).is_zero();
    o->add("minus side by reversal", !v.conclusive || (a == v.vanishes_plus && b == v.vanishes_minus));
  }
}

void run_fundomain(const FundomainJob& job, long K, long cap, Out& out, Oracle* o) {
  const FundamentalDomain& fd = job.domain;
  const LaurentComplex cone = assemble_mapping_cone(fd);
  const RationalComplex fhat = algebraic_novikov_complex(fd);
  const CokernelVerdict ck = cokernel_iso_check(fd, K);
  const ZetaFunction zeta = torsion_zeta(fd);
  const NovikovReport rc = novikov_homology(cone, Direction::Plus, cap);
  const NovikovReport rf = novikov_homology(fhat, Direction::Plus, cap);

  Json series = Json::object();
  for (int i = fhat.lo() + 1; i <= fhat.hi(); ++i) {
    const RationalMatrix& d = fhat.differential(i);
    Json rows = Json::array();
    for (Index r = 0; r < d.rows(); ++r) {
      Json row = Json::array();
      for (Index cc = 0; cc < d.cols(); ++cc) row.push_back(encode(expand(d(r, cc), Direction::Plus, K).to_poly()));
      rows.push_back(std::move(row));
    }
    series[std::to_string(i)] = std::move(rows);
  }
  if (!job.builtin.empty()) out.result["builtin"] = job.builtin;
  out.result["cone_ranks"] = encode(ranks_of(cone));
  out.result["fhat"] = encode_complex(fhat);
  out.result["fhat_series"] = Json{{"through", K}, {"differentials", series}};
  out.result["novikov_fhat"] = encode(rf);
  out.result["novikov_cone"] = encode(rc);
  out.result["cokernel_check"] = Json{{"through", K}, {"passed", ck.passed}};
  if (!ck.passed) out.result["cokernel_check"].update(Json{{"check", ck.check}, {"degree", ck.degree}, {"order", ck.order}});
  out.result["torsion_zeta"] = encode(zeta.value);

  if (!job.builtin.empty()) out.text << "builtin: " << job.builtin << "\n";
  out.text << "C(phi) ranks: " << text_ranks(cone) << "\nF-hat ranks: " << text_ranks(fhat) << "\n";
  for (int i = fhat.lo() + 1; i <= fhat.hi(); ++i)
    out.text << "d_Fhat_" << i << " = " << to_string(fhat.differential(i)) << "\n";
  out.text << "Novikov homology of F-hat over Z((z)):\n" << text(rf);
  out.text << "Novikov homology of C(phi) over Z((z)):\n" << text(rc);
  out.text << "cokernel identification through z^" << K << ": " << (ck.passed ? "pass" : "FAIL (" + ck.check + ")")
           << "\ntorsion zeta: " << to_string(zeta.value) << "\n";
  out.inconclusive = !rc.conclusive || !rf.conclusive;
  if (o) {
    o->add("exact vs truncated F-hat", ck.passed, ck.passed ? "" : ck.check);
    bool agree = rc.conclusive && rf.conclusive;
    for (int i = std::min(rc.lo, rf.lo); agree && i <= std::max(rc.hi(), rf.hi()); ++i)
      agree = rc.at(i).betti == rf.at(i).betti && rc.at(i).torsion_factors == rf.at(i).torsion_factors;
    o->add("C(phi) and F-hat Novikov homology agree", agree);
  }
}

void run_mapping_torus(const MappingTorusJob& job, Direction dir, long cap, Out& out, Oracle* o) {
  const LaurentComplex c = mapping_torus_complex(job.h, job.orientation);
  out.result["orientation"] = to_string(job.orientation);
  out.text << "orientation: " << to_string(job.orientation) << "\n";
  run_novikov(c, dir, cap, out, o);
  const DominationVerdict v = finite_domination_check(c, cap);
  out.result["domination"] = encode(v);
  out.text << text(v);
  out.inconclusive = out.inconclusive || !v.conclusive;
  if (o) {
    const LaurentComplex other = mapping_torus_complex(job.h, opposite(job.orientation));
    const NovikovReport a = novikov_homology(c, dir), b = novikov_homology(other, opposite(dir));
    bool dual = a.conclusive && b.conclusive;
    for (int i = a.lo; dual && i <= a.hi(); ++i)
      dual = a.at(i).betti == b.at(i).betti && a.at(i).torsion_count == b.at(i).torsion_count;
    o->add("orientation duality", dual);
    o->add("1 - zh acyclic over Z((z))",
           novikov_homology(mapping_torus_complex(job.h, Direction::Plus), Direction::Plus).is_zero());
  }
}

void run_knot(const SeifertData& s, Out& out, Oracle* o) {
  const FiberingVerdict v = fibering_check(s);
  Json alex = Json::array();
  for (const auto& a : v.alexander)
    alex.push_back(Json{{"degree", a.degree}, {"delta", encode(a.delta)}, {"torsion", a.torsion}});
  out.result["alexander"] = alex;
  out.result["vanishes_plus"] = v.vanishes_plus;
  out.result["vanishes_minus"] = v.vanishes_minus;
  out.result["novikov_vanishes"] = v.novikov_vanishes;
  out.result["extreme_coeffs_unit"] = v.extreme_coeffs_unit;
  out.result["torsion_flagged"] = v.torsion_flagged;
  out.result["fibers"] = v.fibers;
  for (const auto& a : v.alexander)
    out.text << "Delta_" << a.degree << " = " << to_string(a.delta) << (a.torsion ? "  [torsion in H_" + std::to_string(a.degree) + " ignored]" : "") << "\n";
  out.text << "Novikov homology vanishes: " << yes_no(v.novikov_vanishes) << " (Z((z)): " << yes_no(v.vanishes_plus)
           << ", Z((z^-1)): " << yes_no(v.vanishes_minus) << ")\n";
  out.text << "extreme coefficients +-1: " << yes_no(v.extreme_coeffs_unit) << "\n";
  out.text << "fibers: " << (v.fibers ? "true" : "false") << "\n";
  out.inconclusive = !v.conclusive;
  if (o) {
    o->add("fibering (ii) vs (iii)", v.torsion_flagged || !v.conclusive || v.novikov_vanishes == v.extreme_coeffs_unit);
    const NovikovReport r = novikov_homology(assemble_mapping_cone(knot_fundamental_domain(s)), Direction::Plus);
    bool ses = r.conclusive;
    for (const auto& a : v.alexander) {
      if (a.torsion || !ses) continue;
      const IntMatrix e = induced_free_action(s, a.degree);
      const auto d = novikov_diagonalize(
          linear_pencil(e, IntMatrix(identity<Integer>(e.rows()) - e)), Direction::Plus);
      const auto mine = r.at(a.degree).torsion_factors;
      const auto theirs = d.torsion_factors();
      ses = ses && mine.size() == theirs.size();
      for (std::size_t k = 0; ses && k < mine.size(); ++k) ses = novikov_associated(mine[k], theirs[k], Direction::Plus);
    }
    o->add("short exact sequence", ses);
  }
}

void run_inequalities(const InequalitiesJob& job, Direction dir, long cap, Out& out) {
  GradedCounts bounds;
  if (job.bounds) {
    bounds = *job.bounds;
  } else if (const auto* ic = std::get_if<IntComplex>(&*job.complex)) {
    bounds = morse_lower_bounds(integral_homology(*ic));
  } else {
    const NovikovReport r = novikov_homology(std::get<LaurentComplex>(*job.complex), dir, cap);
    out.inconclusive = !r.conclusive;
    bounds = morse_novikov_bounds(r);
  }
  const InequalityVerdict v = check_inequalities(job.critical, bounds);
  out.result["critical"] = encode(job.critical);
  out.result["bounds"] = encode(bounds);
  out.result["violated"] = v.violated;
  out.result["satisfied"] = v.satisfied();
  out.text << "bounds: " << text_counts(bounds, "c") << "\n";
  out.text << "inequalities " << (v.satisfied() ? "satisfied" : "violated") << "\n";
  if (!v.satisfied()) {
    out.text << "violated at degrees:";
    for (int i : v.violated) out.text << " " << i;
    out.text << "\n";
  }
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
  if (dynamic_cast<const NotAComplex*>(&e)) return "NotAComplex";
  if (dynamic_cast<const NotAChainMap*>(&e)) return "NotAChainMap";
  if (dynamic_cast<const InvalidDomain*>(&e)) return "InvalidDomain";
  if (dynamic_cast<const ShapeError*>(&e)) return "ShapeError";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const NotAUnit*>(&e)) return "NotAUnit";
  if (dynamic_cast<const NotInRationalSubring*>(&e)) return "NotInRationalSubring";
  if (dynamic_cast<const NarrowingNotSupported*>(&e)) return "NarrowingNotSupported";
  if (dynamic_cast<const InternalInconsistency*>(&e)) return "InternalInconsistency";
  if (dynamic_cast<const Inconclusive*>(&e)) return "Inconclusive";
  return "Error";
}

}  // namespace

Report run(const JobDocument& job, const RunOverrides& overrides) {
  JobOptions opt = job.options;
  if (overrides.precision) opt.precision = *overrides.precision;
  if (overrides.direction) opt.direction = *overrides.direction;
  Out out;
  Oracle oracle;
  Oracle* o = overrides.oracle ? &oracle : nullptr;
  switch (job.kind) {
    case JobKind::ComplexHomology: run_complex_homology(std::get<IntComplex>(job.payload), out, o); break;
    case JobKind::Novikov: run_novikov(std::get<LaurentComplex>(job.payload), opt.direction, opt.operation_cap, out, o); break;
    case JobKind::Domination: run_domination(std::get<LaurentComplex>(job.payload), opt.operation_cap, out, o); break;
    case JobKind::Fundomain: run_fundomain(std::get<FundomainJob>(job.payload), opt.precision, opt.operation_cap, out, o); break;
    case JobKind::MappingTorus: run_mapping_torus(std::get<MappingTorusJob>(job.payload), opt.direction, opt.operation_cap, out, o); break;
    case JobKind::Knot: run_knot(std::get<SeifertData>(job.payload), out, o); break;
    case JobKind::Inequalities: run_inequalities(std::get<InequalitiesJob>(job.payload), opt.direction, opt.operation_cap, out); break;
  }
  Report rep;
  rep.exit = oracle.failed ? ExitCode::Error : (out.inconclusive ? ExitCode::Inconclusive : ExitCode::Ok);
  const std::string status = oracle.failed ? "oracle-failure" : (out.inconclusive ? "inconclusive" : "ok");
  rep.data = Json{{"name", job.name},
                  {"kind", to_string(job.kind)},
                  {"options", Json{{"precision", opt.precision}, {"direction", to_string(opt.direction)}}},
                  {"status", status},
                  {"result", std::move(out.result)}};
  if (o) rep.data["oracle"] = std::move(oracle.checks);
  std::ostringstream t;
  t << "== " << (job.name.empty() ? "(unnamed)" : job.name) << " [" << to_string(job.kind) << "]\n";
  t << out.text.str();
  if (o && !oracle.checks.empty()) t << "oracle checks:\n" << oracle.text.str();
  t << "status: " << status << "\n";
  rep.text = t.str();
  return rep;
}

Report run_text(const std::string& text, const std::string& source, const RunOverrides& overrides) {
  try {
    return run(parse_document(text), overrides);
  } catch (const std::exception& e) {
    Report rep;
    rep.exit = ExitCode::Error;
    Json err{{"type", error_type(e)}, {"message", e.what()}};
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) err["path"] = p->path();
    rep.data = Json{{"source", source}, {"status", "error"}, {"error", err}};
    rep.text = "== " + source + "\nerror: " + error_type(e) + ": " + e.what() + "\nstatus: error\n";
    return rep;
  }
}

}  // namespace nk
