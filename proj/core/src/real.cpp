#include "reskp/real.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "reskp/errors.hpp"

namespace reskp {
namespace {

// Raised internally when an enclosure of a nonzero divisor still straddles
// zero; the caller retries at a finer working precision.
struct ZeroStraddle {};

std::strong_ordering ordering_from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const Rational& min_of(const Rational& a, const Rational& b) { return a < b ? a : b; }
const Rational& max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_point() && b.is_point()) return Interval::point(a.lo * b.lo);
  const Rational p1 = a.lo * b.lo;
  const Rational p2 = a.lo * b.hi;
  const Rational p3 = a.hi * b.lo;
  const Rational p4 = a.hi * b.hi;
  return {min_of(min_of(p1, p2), min_of(p3, p4)), max_of(max_of(p1, p2), max_of(p3, p4))};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw OutOfDomain("interval division by an enclosure containing zero");
  const Interval reciprocal{Rational(1) / b.hi, Rational(1) / b.lo};
  return a * reciprocal;
}

Interval sqrt_enclosure(const Rational& q, int digits) {
  if (q < 0) throw OutOfDomain("square root of a negative number");
  if (q == 0) return Interval::point(Rational(0));
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Interval::point(Rational(rn, rd));
  }
  // sqrt(num/den) = sqrt(num*den)/den
  const Integer scale = pow10_integer(static_cast<unsigned>(digits));
  const Integer radicand = num * den * scale * scale;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  const Integer denominator = den * scale;
  Rational lo(root, denominator);
  Rational hi(root + 1, denominator);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

enum class Op { kConst, kAdd, kSub, kMul, kDiv, kNeg, kSqrt, kMin, kMax, kRoot };

struct Real::Node {
  Op op = Op::kConst;
  Rational value;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  std::vector<Rational> coeffs;
  Rational lo;
  Rational hi;
};

namespace {

using NodePtr = std::shared_ptr<const Real::Node>;

NodePtr make_const(const Rational& q) {
  auto n = std::make_shared<Real::Node>();
  n->op = Op::kConst;
  n->value = q;
  return n;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Real::Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

// Rounds a non-degenerate interval outward to a 10^-(w+3) grid so that
// denominators stay bounded through long expression chains.
Interval tidy(Interval x, int w) {
  if (x.is_point()) return x;
  const Integer grid = pow10_integer(static_cast<unsigned>(w + 3));
  return {floor_to_grid(x.lo, grid), ceil_to_grid(x.hi, grid)};
}

Interval eval(const Real::Node& n, int w) {
  switch (n.op) {
    case Op::kConst:
      return Interval::point(n.value);
    case Op::kAdd:
      return tidy(eval(*n.a, w) + eval(*n.b, w), w);
    case Op::kSub:
      return tidy(eval(*n.a, w) - eval(*n.b, w), w);
    case Op::kNeg:
      return -eval(*n.a, w);
    case Op::kMul:
      return tidy(eval(*n.a, w + 2) * eval(*n.b, w + 2), w);
    case Op::kDiv: {
      const Interval den = eval(*n.b, w + 4);
      if (den.is_point() && den.lo == 0) throw OutOfDomain("division by zero");
      if (den.lo <= 0 && den.hi >= 0) throw ZeroStraddle{};
      return tidy(eval(*n.a, w + 4) / den, w);
    }
    case Op::kSqrt: {
      const Interval x = eval(*n.a, w + 2);
      if (x.hi < 0) throw OutOfDomain("square root of a negative number");
      if (x.is_point()) return sqrt_enclosure(x.lo, w);
      const Rational lo = x.lo < 0 ? Rational(0) : x.lo;
      return {sqrt_enclosure(lo, w + 1).lo, sqrt_enclosure(x.hi, w + 1).hi};
    }
    case Op::kMin: {
      const Interval a = eval(*n.a, w);
      const Interval b = eval(*n.b, w);
      return {min_of(a.lo, b.lo), min_of(a.hi, b.hi)};
    }
    case Op::kMax: {
      const Interval a = eval(*n.a, w);
      const Interval b = eval(*n.b, w);
      return {max_of(a.lo, b.lo), max_of(a.hi, b.hi)};
    }
    case Op::kRoot: {
      Rational lo = n.lo;
      Rational hi = n.hi;
      const int sign_lo = sgn(evaluate_polynomial(n.coeffs, lo));
      const Rational target = pow10(-(w + 1));
      while (hi - lo > target) {
        const Rational mid = (lo + hi) / 2;
        const int s = sgn(evaluate_polynomial(n.coeffs, mid));
        if (s == 0) return Interval::point(mid);
        if (s == sign_lo) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return {lo, hi};
    }
  }
  return {};
}

}  // namespace

Real::Real() : node_(make_const(Rational(0))) {}
Real::Real(const Rational& q) : node_(make_const(q)) {}
Real::Real(long value) : node_(make_const(Rational(value))) {}
Real::Real(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Real Real::sqrt(const Real& x) {
  auto n = std::make_shared<Node>();
  n->op = Op::kSqrt;
  n->a = x.node_;
  return Real(std::move(n));
}

Real Real::min(const Real& a, const Real& b) { return Real(make_binary(Op::kMin, a.node_, b.node_)); }
Real Real::max(const Real& a, const Real& b) { return Real(make_binary(Op::kMax, a.node_, b.node_)); }

Real Real::polynomial_root(std::vector<Rational> coeffs, const Rational& lo, const Rational& hi) {
  const int s_lo = sgn(evaluate_polynomial(coeffs, lo));
  const int s_hi = sgn(evaluate_polynomial(coeffs, hi));
  if (s_lo == 0) return Real(lo);
  if (s_hi == 0) return Real(hi);
  if (s_lo == s_hi) throw OutOfDomain("polynomial does not change sign on the bracket");
  auto n = std::make_shared<Node>();
  n->op = Op::kRoot;
  n->coeffs = std::move(coeffs);
  n->lo = lo;
  n->hi = hi;
  return Real(std::move(n));
}

Real operator+(const Real& a, const Real& b) { return Real(make_binary(Op::kAdd, a.node_, b.node_)); }
Real operator-(const Real& a, const Real& b) { return Real(make_binary(Op::kSub, a.node_, b.node_)); }
Real operator*(const Real& a, const Real& b) { return Real(make_binary(Op::kMul, a.node_, b.node_)); }
Real operator/(const Real& a, const Real& b) { return Real(make_binary(Op::kDiv, a.node_, b.node_)); }
Real operator-(const Real& a) {
  auto n = std::make_shared<Real::Node>();
  n->op = Op::kNeg;
  n->a = a.node_;
  return Real(std::move(n));
}

Interval Real::enclose(int digits) const {
  const Rational target = pow10(-digits);
  const Integer grid = pow10_integer(static_cast<unsigned>(digits + 2));
  for (int guard = 3; guard <= 99; guard += 12) {
    Interval x;
    try {
      x = eval(*node_, digits + guard);
    } catch (const ZeroStraddle&) {
      continue;
    }
    if (!x.is_point()) x = {floor_to_grid(x.lo, grid), ceil_to_grid(x.hi, grid)};
    if (x.width() <= target) return x;
  }
  throw PrecisionExhausted("cannot enclose value to width 1e-" + std::to_string(digits));
}

std::optional<Rational> Real::exact_value() const {
  try {
    const Interval x = eval(*node_, 12);
    if (x.is_point()) return x.lo;
  } catch (const ZeroStraddle&) {
  }
  return std::nullopt;
}

std::strong_ordering compare(const Real& a, const Real& b, int max_digits) {
  const Real d = a - b;
  std::vector<int> ladder;
  for (int digits = 8; digits < max_digits; digits += 8) ladder.push_back(digits);
  ladder.push_back(max_digits);
  for (int digits : ladder) {
    const Interval x = d.enclose(digits);
    if (x.is_point()) return ordering_from_sign(sgn(x.lo));
    if (x.lo > 0) return std::strong_ordering::greater;
    if (x.hi < 0) return std::strong_ordering::less;
  }
  throw PrecisionExhausted("values indistinguishable at width 1e-" + std::to_string(max_digits));
}

RatioValue::RatioValue() : RatioValue(Rational(0)) {}

RatioValue::RatioValue(const Rational& q)
    : value_(q), coarse_(Interval::point(q)), fine_(Interval::point(q)) {}

RatioValue::RatioValue(Real value, int digits) : value_(std::move(value)), digits_(digits) {
  fine_ = value_.enclose(digits);
  if (fine_.is_point() || digits <= 10) {
    coarse_ = fine_;
  } else {
    const Integer grid = pow10_integer(10);
    coarse_ = {floor_to_grid(fine_.lo, grid), ceil_to_grid(fine_.hi, grid)};
  }
}

double RatioValue::approx() const { return to_double(fine_.midpoint()); }

std::strong_ordering compare(const Rational& x, const RatioValue& v) {
  if (x < v.coarse_.lo) return std::strong_ordering::less;
  if (x > v.coarse_.hi) return std::strong_ordering::greater;
  if (v.fine_.is_point()) return ordering_from_sign(cmp(x, v.fine_.lo));
  if (x < v.fine_.lo) return std::strong_ordering::less;
  if (x > v.fine_.hi) return std::strong_ordering::greater;
  throw PrecisionExhausted("rational " + to_decimal_string(x) +
                           " lies inside an enclosure of width 1e-" + std::to_string(v.digits()));
}

std::strong_ordering compare(const RatioValue& a, const RatioValue& b) {
  if (a.is_exact() && b.is_exact()) return ordering_from_sign(cmp(a.lower(), b.lower()));
  if (a.upper() < b.lower()) return std::strong_ordering::less;
  if (a.lower() > b.upper()) return std::strong_ordering::greater;
  throw PrecisionExhausted("enclosures overlap");
}

Real sqrt2_minus_1() { return Real::sqrt(Real(2)) - Real(1); }
Real golden_ratio_minus_1() { return (Real::sqrt(Real(5)) - Real(1)) / Real(2); }

}  // namespace reskp
