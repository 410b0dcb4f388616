#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lexcut/errors.hpp"

namespace lexcut {

// Exact scalar types. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the Rational invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

using ZVector = std::vector<Int>;
using QVector = std::vector<Rational>;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Int rat_floor(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rational& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Integer nearest to q (ties round up).
inline Int nearest_int(const Rational& q) { return rat_floor(q + Rational(1, 2)); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Distance from q to the nearest integer.
inline Rational int_distance(const Rational& q) { return rat_abs(q - Rational(nearest_int(q))); }

std::string to_string(const Rational& q);
std::string to_string(const QVector& v);

/// Parses "p", "-p", or "p/q" with q > 0 after canonicalization.
Rational parse_rational(const std::string& s);

inline QVector to_rational(const ZVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const Int& z : v) out.emplace_back(z);
  return out;
}

/// Converts a vector with integer entries back to Int; throws NonIntegerProducts otherwise.
ZVector to_integer(const QVector& v);

Rational dot(const QVector& a, const QVector& b);
Rational dot(const ZVector& a, const QVector& b);
Int dot(const ZVector& a, const ZVector& b);

bool is_zero(const QVector& v);
bool is_zero(const ZVector& v);

/// Entrywise lexicographic order on integer vectors (the standard lex order
/// on C-coordinates).
bool z_lex_less(const ZVector& a, const ZVector& b);

QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& s, const QVector& v);
QVector negate(const QVector& v);

}  // namespace lexcut
