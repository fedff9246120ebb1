#pragma once

// JSON job documents and their reports.

#include <novikit/models.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

namespace nk {

using Json = nlohmann::ordered_json;

enum class JobKind { ComplexHomology, Novikov, Domination, Fundomain, MappingTorus, Knot, Inequalities };

std::string to_string(JobKind k);
std::optional<JobKind> job_kind_from_string(const std::string& s);

struct JobOptions {
  long precision = kDefaultPrecision;
  Direction direction = Direction::Plus;
  /// Elementary-operation cap for each Novikov diagonalization.
  long operation_cap = kDefaultOperationCap;
};

struct MappingTorusJob {
  ChainMap<Integer> h;
  Direction orientation = Direction::Plus;
};

struct InequalitiesJob {
  GradedCounts critical;
  /// Either explicit bounds or a complex whose homology gives them.
  std::optional<GradedCounts> bounds;
  std::optional<AnyComplex> complex;
};

struct FundomainJob {
  FundamentalDomain domain;
  /// Set for builtin fixtures, e.g. "circle-exercise".
  std::string builtin;
};

using JobPayload = std::variant<IntComplex, LaurentComplex, FundomainJob, MappingTorusJob, SeifertData, InequalitiesJob>;

struct JobDocument {
  JobKind kind = JobKind::ComplexHomology;
  std::string name;
  JobOptions options;
  JobPayload payload;
};

/// Throws ParseError (with a JSON-pointer path) or ValidationError.
JobDocument parse_document(const std::string& text);

/// CLI flags applied on top of a document's own options.
struct RunOverrides {
  std::optional<long> precision;
  std::optional<Direction> direction;
  bool oracle = false;
};

enum class ExitCode { Ok = 0, Inconclusive = 1, Error = 2 };

struct Report {
  Json data;
  std::string text;
  ExitCode exit = ExitCode::Ok;
};

Report run(const JobDocument& job, const RunOverrides& overrides = {});

/// parse + run; every library error becomes an error report with exit 2.
Report run_text(const std::string& text, const std::string& source, const RunOverrides& overrides = {});

// Encodings shared with tests.
Json encode(const Integer& a);
Json encode(const LaurentPoly& p);
Json encode(const RationalFunction& r);
LaurentPoly decode_poly(const Json& j, const std::string& path);

}  // namespace nk
