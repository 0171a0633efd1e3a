#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace reskp {

// Exact arbitrary-precision rational. Always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", a plain integer, or a decimal literal ("0.35", ".5",
// "1.25e-3"). Decimal literals are converted exactly. Surrounding whitespace
// is ignored. Throws ParseError.
Rational parse_rational(std::string_view text);

// Always "p/q", including integers ("1/1", "0/1").
std::string to_fraction_string(const Rational& q);

// Correctly rounded (half away from zero) decimal with the given number of
// significant digits, formatted like printf's %g: trailing zeros dropped,
// scientific notation outside [1e-5, 1e<digits>).
std::string to_decimal_string(const Rational& q, int significant_digits = 15);

Integer pow10_integer(unsigned exponent);
// 10^exponent; negative exponents give 1/10^|exponent|.
Rational pow10(int exponent);
Rational pow(const Rational& base, unsigned exponent);

// Largest / smallest multiple of 1/denominator that is <= / >= x.
Rational floor_to_grid(const Rational& x, const Integer& denominator);
Rational ceil_to_grid(const Rational& x, const Integer& denominator);
// Nearest multiple of 1/denominator, ties away from zero.
Rational round_to_grid(const Rational& x, const Integer& denominator);

double to_double(const Rational& q);

}  // namespace reskp
