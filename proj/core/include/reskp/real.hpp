#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <vector>

#include "reskp/rational.hpp"

namespace reskp {

// Finest enclosure width exponent used unless a caller asks otherwise:
// enclosures are refined to width <= 10^-30.
inline constexpr int kDefaultPrecisionDigits = 30;

// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& q) { return {q, q}; }
  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool overlaps(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// Throws OutOfDomain when the divisor straddles zero.
Interval operator/(const Interval& a, const Interval& b);

// Enclosure of sqrt(q) of width <= 10^-digits; a point when q is the square
// of a rational.
Interval sqrt_enclosure(const Rational& q, int digits);

// An exact real number given as an expression over rationals, square roots,
// min/max and isolated polynomial roots. Evaluation produces rational
// enclosures at any requested precision; values that happen to be rational
// (including square roots of rational squares) evaluate to point intervals.
//
// Immutable and cheap to copy; safe to share between threads.
class Real {
 public:
  Real();  // zero
  Real(const Rational& q);  // NOLINT(google-explicit-constructor)
  Real(long value);         // NOLINT(google-explicit-constructor)

  static Real sqrt(const Real& x);
  static Real min(const Real& a, const Real& b);
  static Real max(const Real& a, const Real& b);
  // The unique root of the polynomial sum(coeffs[i] * x^i) inside (lo, hi);
  // the polynomial must change sign on the bracket.
  static Real polynomial_root(std::vector<Rational> coeffs, const Rational& lo,
                              const Rational& hi);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  // Rational enclosure of width <= 10^-digits. Throws PrecisionExhausted if
  // the expression cannot be resolved (e.g. a divisor that is exactly zero).
  Interval enclose(int digits) const;

  // The value, if the expression is rational.
  std::optional<Rational> exact_value() const;

  struct Node;

 private:
  explicit Real(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Three-way comparison refining both enclosures up to 10^-max_digits.
// Equality is only reported when both sides are exactly rational.
// Throws PrecisionExhausted when the enclosures still overlap.
std::strong_ordering compare(const Real& a, const Real& b,
                             int max_digits = kDefaultPrecisionDigits);

// Evaluates sum(coeffs[i] * x^i) exactly.
Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x);

// An enclosed real used wherever an irrational quantity (a competitive ratio,
// a policy threshold, an adversary parameter before rounding) takes part in a
// decision. Holds a coarse and a fine (10^-digits) enclosure, computed once.
class RatioValue {
 public:
  RatioValue();  // exactly zero
  RatioValue(const Rational& q);  // NOLINT
  explicit RatioValue(Real value, int digits = kDefaultPrecisionDigits);

  const Rational& lower() const { return fine_.lo; }
  const Rational& upper() const { return fine_.hi; }
  const Interval& enclosure() const { return fine_; }
  const Real& real() const { return value_; }
  bool is_exact() const { return fine_.is_point(); }
  int digits() const { return digits_; }
  Rational midpoint() const { return fine_.midpoint(); }
  double approx() const;

 private:
  friend std::strong_ordering compare(const Rational& x, const RatioValue& v);

  Real value_;
  Interval coarse_;
  Interval fine_;
  int digits_ = kDefaultPrecisionDigits;
};

// Decides x <=> v from the coarse enclosure, then the fine one. Throws
// PrecisionExhausted if x lies inside the fine enclosure of an irrational v.
std::strong_ordering compare(const Rational& x, const RatioValue& v);
std::strong_ordering compare(const RatioValue& a, const RatioValue& b);

inline bool operator<(const Rational& x, const RatioValue& v) { return compare(x, v) < 0; }
inline bool operator<=(const Rational& x, const RatioValue& v) { return compare(x, v) <= 0; }
inline bool operator>(const Rational& x, const RatioValue& v) { return compare(x, v) > 0; }
inline bool operator>=(const Rational& x, const RatioValue& v) { return compare(x, v) >= 0; }

// Frequently used constants.
Real sqrt2_minus_1();
Real golden_ratio_minus_1();

}  // namespace reskp
