#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace axtk {

// Error hierarchy: every failure the library reports deliberately derives
// from Error, so callers can distinguish our diagnostics from harness bugs.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ArithmeticError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Quadratic extension Q(w) with w^2 + c1*w + c0 = 0.  The minimal polynomial
// must be irreducible over Q, i.e. c1^2 - 4*c0 is not a rational square.
class QuadField {
 public:
  QuadField(const mpq_class& c1, const mpq_class& c0);

  const mpq_class& c1() const { return c1_; }
  const mpq_class& c0() const { return c0_; }
  bool same(const QuadField& o) const { return c1_ == o.c1_ && c0_ == o.c0_; }

 private:
  mpq_class c1_, c0_;
};

using FieldPtr = std::shared_ptr<const QuadField>;

FieldPtr make_quad_field(const mpq_class& c1, const mpq_class& c0);

// Exact scalar: either a rational or an element a + b*w of a quadratic
// extension.  Canonical form: the field tag is present iff b != 0, so any
// value that happens to be rational compares equal to its rational form.
class Scalar {
 public:
  Scalar() : a_(0), b_(0) {}
  Scalar(int n) : a_(n), b_(0) {}
  Scalar(long n) : a_(n), b_(0) {}
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : a_(q), b_(0) { a_.canonicalize(); }
  Scalar(const mpq_class& a, const mpq_class& b, FieldPtr f);

  static Scalar omega(FieldPtr f) { return Scalar(0, 1, std::move(f)); }
  // Parses "p", "p/q", "p/q+r/s*w", "p/q-r/s*w" or "r/s*w".  A w-term
  // requires a field; supplying none is an error.
  static Scalar parse(const std::string& text, const FieldPtr& field = nullptr);

  bool is_rational() const { return !field_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return !field_ && a_ == 1; }
  const mpq_class& rat_part() const { return a_; }
  const mpq_class& ext_part() const { return b_; }
  // Field tag; null for rationals.
  const FieldPtr& field() const { return field_; }
  // The rational value; errors if the scalar is not rational.
  const mpq_class& as_rational() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inv() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Deterministic total order used for canonical sorting; compares the
  // rational part, then the w-coefficient.  Not an order embedding of R.
  int cmp(const Scalar& o) const;
  bool operator<(const Scalar& o) const { return cmp(o) < 0; }

  // For rationals only: sign of the value (-1, 0, +1).
  int sgn() const;

  std::string str() const;
  double to_double() const;  // rationals only

  size_t hash() const;

 private:
  mpq_class a_, b_;
  FieldPtr field_;  // set iff b_ != 0

  void normalize();
  static FieldPtr merge_fields(const Scalar& x, const Scalar& y);
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Rational helper: p/q with exact reduction.
Scalar frac(long num, long den);

}  // namespace axtk

template <>
struct std::hash<axtk::Scalar> {
  size_t operator()(const axtk::Scalar& s) const { return s.hash(); }
};
