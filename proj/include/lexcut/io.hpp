#pragma once

#include <json.hpp>

#include "lexcut/analysis.hpp"

namespace lexcut {

using Json = nlohmann::ordered_json;

struct Instance {
  size_t n = 0;
  ZVector objective;
  std::optional<LatticeBasis> basis;
  FeasibleSet set;
};

/// Parses and validates an instance document: schema, basis unimodularity
/// and first-row match, polytope boundedness. Errors carry the field path.
Instance parse_instance(const Json& doc);
Instance load_instance(const std::string& path);
Json instance_to_json(const Instance& inst);

Json trace_to_json(const SolveOutcome& outcome);
SolveOutcome trace_from_json(const Json& doc);

/// "2x1 + x2 >= 2", "3/2 x1 - x3 >= -1", "0 >= -1". Constant terms on the
/// left move to the right-hand side.
LinearInequality parse_inequality(const std::string& text, size_t n);
std::string format_inequality(const LinearInequality& h);

std::string format_point(const QVector& x);

ZVector parse_int_csv(const std::string& text);

/// "identity" (needs n) or semicolon-separated integer rows "2,3;1,2".
LatticeBasis parse_basis_arg(const std::string& text, size_t n);

}  // namespace lexcut
