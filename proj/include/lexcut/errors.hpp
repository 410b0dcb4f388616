#pragma once

#include <stdexcept>
#include <string>

namespace lexcut {

/// Base class for all typed library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroVector : Error {
  ZeroVector() : Error("zero vector") {}
};

struct NotPrimitive : Error {
  explicit NotPrimitive(const std::string& w = "vector entries are not relatively prime") : Error(w) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& w = "dimension mismatch") : Error(w) {}
};

struct ZeroPoint : Error {
  ZeroPoint() : Error("point is zero") {}
};

struct OutsideCone : Error {
  explicit OutsideCone(const std::string& w = "point lies outside the cone K") : Error(w) {}
};

struct NonIntegerProducts : Error {
  explicit NonIntegerProducts(const std::string& w = "basis products expected to be integer are not") : Error(w) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& w = "index out of range") : Error(w) {}
};

struct UnboundedQuery : Error {
  explicit UnboundedQuery(const std::string& w = "linear program is unbounded") : Error(w) {}
};

struct IterationLimit : Error {
  explicit IterationLimit(const std::string& w = "iteration limit reached") : Error(w) {}
};

struct EmptyInput : Error {
  explicit EmptyInput(const std::string& w = "feasible set is empty") : Error(w) {}
};

struct ZeroObjective : Error {
  ZeroObjective() : Error("objective vector is zero") {}
};

struct NotProper : Error {
  explicit NotProper(const std::string& w = "inequality is not a proper Chvatal-Gomory inequality") : Error(w) {}
};

struct NonIntegerG : Error {
  explicit NonIntegerG(const std::string& w = "Chvatal-Gomory left-hand side must be integer") : Error(w) {}
};

struct NotApplicable : Error {
  explicit NotApplicable(const std::string& w = "construction preconditions not met") : Error(w) {}
};

struct BoxTooLarge : Error {
  explicit BoxTooLarge(const std::string& w = "enumeration box exceeds the cell cap") : Error(w) {}
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& w) : Error(w) {}
};

}  // namespace lexcut
