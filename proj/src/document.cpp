#include <novikit/document.hpp>

#include <array>
#include <charconv>

namespace nk {

namespace {

constexpr std::array<std::pair<JobKind, const char*>, 7> kKinds{{
    {JobKind::ComplexHomology, "complex-homology"},
    {JobKind::Novikov, "novikov"},
    {JobKind::Domination, "domination"},
    {JobKind::Fundomain, "fundomain"},
    {JobKind::MappingTorus, "mapping-torus"},
    {JobKind::Knot, "knot"},
    {JobKind::Inequalities, "inequalities"},
}};

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw ParseError(path.empty() ? "/" : path, reason);
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(child(path, key), "missing field");
  return *it;
}

const Json* optional_field(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

long parse_long(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

int parse_degree_key(const std::string& key, const std::string& path) {
  int v = 0;
  auto [p, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  if (ec != std::errc() || p != key.data() + key.size()) fail(child(path, key), "degree keys are decimal integers");
  return v;
}

Integer parse_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      fail(path, "integer string must be decimal digits");
    return Integer(s);
  }
  if (j.is_number_float()) fail(path, "non-integer number (write large integers as decimal strings)");
  fail(path, "expected an integer");
}

Direction parse_direction(const Json& j, const std::string& path) {
  if (j == "plus") return Direction::Plus;
  if (j == "minus") return Direction::Minus;
  fail(path, "expected \"plus\" or \"minus\"");
}

template <typename Scalar>
Scalar parse_entry(const Json& j, const std::string& path) {
  if constexpr (std::is_same_v<Scalar, Integer>) {
    return parse_integer(j, path);
  } else {
    return decode_poly(j, path);
  }
}

template <typename Scalar>
Matrix<Scalar> parse_matrix(const Json& j, Index rows, Index cols, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (static_cast<Index>(j.size()) != rows)
    fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix<Scalar> m = zeros<Scalar>(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    const std::string rp = child(path, static_cast<std::size_t>(r));
    if (!row.is_array()) fail(rp, "expected a row array");
    if (static_cast<Index>(row.size()) != cols)
      fail(rp, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    for (Index c = 0; c < cols; ++c)
      m(r, c) = parse_entry<Scalar>(row[static_cast<std::size_t>(c)], child(rp, static_cast<std::size_t>(c)));
  }
  return m;
}

struct Shape {
  int lo = 0, hi = -1;
  std::vector<Index> ranks;
  Index rank(int i) const { return (i < lo || i > hi) ? 0 : ranks[static_cast<std::size_t>(i - lo)]; }
};

Shape parse_shape(const Json& j, const std::string& path) {
  Shape s;
  s.lo = static_cast<int>(parse_long(field(j, "lo", path), child(path, "lo")));
  s.hi = static_cast<int>(parse_long(field(j, "hi", path), child(path, "hi")));
  const Json& ranks = field(j, "ranks", path);
  const std::string rp = child(path, "ranks");
  if (!ranks.is_array()) fail(rp, "expected an array");
  const long expected = s.hi >= s.lo ? s.hi - s.lo + 1 : 0;
  if (static_cast<long>(ranks.size()) != expected)
    fail(rp, "expected " + std::to_string(expected) + " ranks for degrees " + std::to_string(s.lo) + ".." +
                 std::to_string(s.hi));
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const long r = parse_long(ranks[k], child(rp, k));
    if (r < 0) fail(child(rp, k), "rank must be nonnegative");
    s.ranks.push_back(r);
  }
  return s;
}

/// {degree: matrix} with shapes rows(i) x cols(i).
template <typename Scalar, typename Rows, typename Cols>
std::map<int, Matrix<Scalar>> parse_graded(const Json& j, const std::string& path, Rows rows, Cols cols) {
  std::map<int, Matrix<Scalar>> out;
  if (!j.is_object()) fail(path, "expected an object keyed by degree");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int deg = parse_degree_key(it.key(), path);
    out.emplace(deg, parse_matrix<Scalar>(it.value(), rows(deg), cols(deg), child(path, it.key())));
  }
  return out;
}

template <typename Scalar>
ChainComplex<Scalar> parse_complex(const Json& j, const std::string& path) {
  const Shape s = parse_shape(j, path);
  std::map<int, Matrix<Scalar>> diffs;
  if (const Json* d = optional_field(j, "differentials")) {
    const std::string dp = child(path, "differentials");
    diffs = parse_graded<Scalar>(*d, dp, [&](int i) { return s.rank(i - 1); }, [&](int i) { return s.rank(i); });
    for (const auto& [deg, m] : diffs)
      if (deg <= s.lo || deg > s.hi) fail(child(dp, std::to_string(deg)), "differential degree outside (lo, hi]");
  }
  try {
    return ChainComplex<Scalar>(s.lo, s.hi, s.ranks, std::move(diffs));
  } catch (const NotAComplex& e) {
    throw ValidationError(path + ": NotAComplex at degree " + std::to_string(e.degree()) + ": " + e.what());
  }
}

/// Laurent complexes may use bare integers; a "ring" field is not needed.
AnyComplex parse_any_complex(const Json& j, const std::string& path, Grade grade) {
  if (grade == Grade::Integer) return parse_complex<Integer>(j, path);
  return parse_complex<LaurentPoly>(j, path);
}

template <typename Scalar>
ChainMap<Scalar> parse_self_map(const ChainComplex<Scalar>& c, const Json& j, const std::string& path) {
  auto comps = parse_graded<Scalar>(j, path, [&](int i) { return c.rank(i); }, [&](int i) { return c.rank(i); });
  try {
    return ChainMap<Scalar>(c, c, std::move(comps));
  } catch (const NotAChainMap& e) {
    throw ValidationError(path + ": NotAChainMap at degree " + std::to_string(e.degree()));
  }
}

GradedCounts parse_counts(const Json& j, const std::string& path) {
  GradedCounts g;
  g.lo = static_cast<int>(parse_long(field(j, "lo", path), child(path, "lo")));
  const Json& v = field(j, "counts", path);
  if (!v.is_array()) fail(child(path, "counts"), "expected an array");
  for (std::size_t k = 0; k < v.size(); ++k) g.values.push_back(parse_long(v[k], child(child(path, "counts"), k)));
  return g;
}

FundomainJob parse_fundomain(const Json& j, const std::string& path) {
  FundomainJob job;
  if (const Json* b = optional_field(j, "builtin")) {
    if (*b != "circle-exercise") fail(child(path, "builtin"), "unknown builtin (known: circle-exercise)");
    job.builtin = "circle-exercise";
    job.domain = circle_exercise();
    return job;
  }
  FundamentalDomain& fd = job.domain;
  fd.D = parse_complex<Integer>(field(j, "D", path), child(path, "D"));
  fd.F = parse_complex<Integer>(field(j, "F", path), child(path, "F"));
  auto rD = [&](int i) { return fd.D.rank(i); };
  auto rDm = [&](int i) { return fd.D.rank(i - 1); };
  auto rF = [&](int i) { return fd.F.rank(i); };
  if (const Json* c = optional_field(j, "c")) fd.c = parse_graded<Integer>(*c, child(path, "c"), rDm, rF);
  if (const Json* h = optional_field(j, "hD")) fd.h_D = parse_graded<Integer>(*h, child(path, "hD"), rD, rD);
  if (const Json* h = optional_field(j, "hF")) fd.h_F = parse_graded<Integer>(*h, child(path, "hF"), rF, rD);
  const DomainVerdict v = validate_fundamental_domain(fd);
  if (!v.valid)
    throw ValidationError(path + ": InvalidDomain: identity '" + v.identity + "' fails at degree " +
                          std::to_string(v.degree));
  return job;
}

}  // namespace

std::string to_string(JobKind k) {
  for (auto [kind, name] : kKinds)
    if (kind == k) return name;
  return "?";
}

std::optional<JobKind> job_kind_from_string(const std::string& s) {
  for (auto [kind, name] : kKinds)
    if (s == name) return kind;
  return std::nullopt;
}

LaurentPoly decode_poly(const Json& j, const std::string& path) {
  if (j.is_number() || j.is_string()) return LaurentPoly(parse_integer(j, path));
  if (!j.is_object()) fail(path, "expected a coefficient map such as {\"0\": 1, \"1\": -2}");
  std::map<long, Integer> m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    long e = 0;
    const std::string& key = it.key();
    auto [p, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
    if (ec != std::errc() || p != key.data() + key.size()) fail(child(path, key), "exponent keys are decimal integers");
    m[e] += parse_integer(it.value(), child(path, key));
  }
  return normalize(m);
}

Json encode(const Integer& a) {
  if (auto v = to_int64(a)) return *v;
  return a.str();
}

Json encode(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.to_map()) out[std::to_string(e)] = encode(c);
  return out;
}

Json encode(const RationalFunction& r) {
  return Json{{"numerator", encode(r.numerator())}, {"denominator", encode(r.denominator())}};
}

JobDocument parse_document(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Report line and column rather than the byte offset.
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
  }
  if (!root.is_object()) fail("", "document must be a JSON object");
  JobDocument doc;
  const Json& kind = field(root, "kind", "");
  if (!kind.is_string()) fail("/kind", "expected a string");
  auto k = job_kind_from_string(kind.get<std::string>());
  if (!k) fail("/kind", "unknown kind '" + kind.get<std::string>() + "'");
  doc.kind = *k;
  if (const Json* n = optional_field(root, "name")) {
    if (!n->is_string()) fail("/name", "expected a string");
    doc.name = n->get<std::string>();
  }
  if (const Json* o = optional_field(root, "options")) {
    if (!o->is_object()) fail("/options", "expected an object");
    for (auto it = o->begin(); it != o->end(); ++it) {
      const std::string p = child("/options", it.key());
      if (it.key() == "precision") {
        doc.options.precision = parse_long(it.value(), p);
        if (doc.options.precision < 0) fail(p, "precision must be nonnegative");
      } else if (it.key() == "operation_cap") {
        doc.options.operation_cap = parse_long(it.value(), p);
        if (doc.options.operation_cap < 1) fail(p, "operation_cap must be positive");
      } else if (it.key() == "direction") {
        doc.options.direction = parse_direction(it.value(), p);
      } else {
        fail(p, "unknown option");
      }
    }
  }
  const Json& payload = field(root, "payload", "");
  const std::string pp = "/payload";
  switch (doc.kind) {
    case JobKind::ComplexHomology:
      doc.payload = parse_complex<Integer>(payload, pp);
      break;
    case JobKind::Novikov:
    case JobKind::Domination:
      doc.payload = parse_complex<LaurentPoly>(payload, pp);
      break;
    case JobKind::Fundomain:
      doc.payload = parse_fundomain(payload, pp);
      break;
    case JobKind::MappingTorus: {
      const IntComplex c = parse_complex<Integer>(field(payload, "complex", pp), child(pp, "complex"));
      MappingTorusJob job{parse_self_map(c, field(payload, "h", pp), child(pp, "h")), Direction::Plus};
      if (const Json* o = optional_field(payload, "orientation"))
        job.orientation = parse_direction(*o, child(pp, "orientation"));
      doc.payload = std::move(job);
      break;
    }
    case JobKind::Knot: {
      SeifertData s;
      s.base = parse_complex<Integer>(field(payload, "base", pp), child(pp, "base"));
      auto r = [&](int i) { return s.base.rank(i); };
      s.e = parse_graded<Integer>(field(payload, "e", pp), child(pp, "e"), r, r);
      try {
        knot_fundamental_domain(s);
      } catch (const InvalidDomain& e) {
        throw ValidationError(child(pp, "e") + ": " + e.what());
      }
      doc.payload = std::move(s);
      break;
    }
    case JobKind::Inequalities: {
      InequalitiesJob job;
      job.critical = parse_counts(field(payload, "critical", pp), child(pp, "critical"));
      const Json* b = optional_field(payload, "bounds");
      const Json* c = optional_field(payload, "complex");
      if ((b == nullptr) == (c == nullptr)) fail(pp, "give exactly one of \"bounds\" or \"complex\"");
      if (b) job.bounds = parse_counts(*b, child(pp, "bounds"));
      if (c) {
        Grade g = Grade::Laurent;
        if (const Json* ring = optional_field(payload, "ring")) {
          if (*ring == "integer")
            g = Grade::Integer;
          else if (*ring != "laurent")
            fail(child(pp, "ring"), "expected \"integer\" or \"laurent\"");
        }
        job.complex = parse_any_complex(*c, child(pp, "complex"), g);
      }
      doc.payload = std::move(job);
      break;
    }
  }
  return doc;
}

}  // namespace nk
