#include "reskp/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "reskp/errors.hpp"

namespace reskp {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void fail(std::string_view text, const char* why) {
  throw ParseError("cannot parse rational '" + std::string(text) + "': " + why);
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  const std::string_view text = trim(raw);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) fail(text, "empty");

  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(text, "expected p/q with decimal integers");
    Integer q(std::string(den), 10);
    if (q == 0) fail(text, "zero denominator");
    result = Rational(Integer(std::string(num), 10), q);
    result.canonicalize();
  } else {
    std::string_view mantissa = body;
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = body.substr(0, e);
      std::string_view exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) fail(text, "bad exponent");
      exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) fail(text, "no digits");
    if (!int_part.empty() && !all_digits(int_part)) fail(text, "bad integer part");
    if (!frac_part.empty() && !all_digits(frac_part)) fail(text, "bad fractional part");
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer numerator(digits, 10);
    exponent -= static_cast<long>(frac_part.size());
    result = Rational(numerator) * pow10(static_cast<int>(exponent));
  }
  return negative ? Rational(-result) : result;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (q == 0) return "0";
  const bool negative = q < 0;
  const Rational a = abs(q);

  // 10^e <= a < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 10));
  while (a < pow10(static_cast<int>(e))) --e;
  while (a >= pow10(static_cast<int>(e + 1))) ++e;

  const int n = significant_digits;
  const Rational scaled = a * pow10(static_cast<int>(n - 1 - e));
  Integer m = floor_to_grid(scaled + Rational(1, 2), Integer(1)).get_num();
  if (m == pow10_integer(static_cast<unsigned>(n))) {
    m = pow10_integer(static_cast<unsigned>(n - 1));
    ++e;
  }
  const std::string ds = m.get_str();  // exactly n digits

  auto strip = [](std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };

  std::string out;
  if (e < -4 || e >= n) {
    std::string mant = ds.substr(0, 1);
    if (n > 1) mant += "." + ds.substr(1);
    mant = strip(mant);
    const long ae = e < 0 ? -e : e;
    std::string exp_digits = std::to_string(ae);
    if (exp_digits.size() < 2) exp_digits = "0" + exp_digits;
    out = mant + "e" + (e < 0 ? "-" : "+") + exp_digits;
  } else if (e >= 0) {
    const auto int_len = static_cast<std::size_t>(e + 1);
    out = ds.substr(0, int_len);
    if (int_len < ds.size()) out = strip(out + "." + ds.substr(int_len));
  } else {
    out = strip("0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds);
  }
  return negative ? "-" + out : out;
}

Integer pow10_integer(unsigned exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

Rational pow10(int exponent) {
  if (exponent >= 0) return Rational(pow10_integer(static_cast<unsigned>(exponent)));
  return Rational(Integer(1), pow10_integer(static_cast<unsigned>(-exponent)));
}

Rational pow(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  return Rational(num, den);  // already canonical
}

Rational floor_to_grid(const Rational& x, const Integer& denominator) {
  Integer scaled_num = x.get_num() * denominator;
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
  Rational r(k, denominator);
  r.canonicalize();
  return r;
}

Rational ceil_to_grid(const Rational& x, const Integer& denominator) {
  Integer scaled_num = x.get_num() * denominator;
  Integer k;
  mpz_cdiv_q(k.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
  Rational r(k, denominator);
  r.canonicalize();
  return r;
}

Rational round_to_grid(const Rational& x, const Integer& denominator) {
  const Rational half(Integer(1), denominator * 2);
  if (x >= 0) return floor_to_grid(x + half, denominator);
  return -floor_to_grid(-x + half, denominator);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace reskp
