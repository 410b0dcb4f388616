#include "lexcut/rational.hpp"

#include <sstream>

namespace lexcut {

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const QVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw SchemaError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw SchemaError("invalid rational literal: '" + s + "'");
  if (q.get_den() == 0) throw SchemaError("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

ZVector to_integer(const QVector& v) {
  ZVector out;
  out.reserve(v.size());
  for (const Rational& q : v) {
    if (!is_integer(q)) throw NonIntegerProducts("entry " + to_string(q) + " is not integer");
    out.push_back(q.get_num());
  }
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const ZVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Int dot(const ZVector& a, const ZVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool z_lex_less(const ZVector& a, const ZVector& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

bool is_zero(const QVector& v) {
  for (const Rational& q : v)
    if (q != 0) return false;
  return true;
}

bool is_zero(const ZVector& v) {
  for (const Int& z : v)
    if (z != 0) return false;
  return true;
}

QVector add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  QVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector sub(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  QVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector scale(const Rational& s, const QVector& v) {
  QVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

QVector negate(const QVector& v) { return scale(Rational(-1), v); }

}  // namespace lexcut
