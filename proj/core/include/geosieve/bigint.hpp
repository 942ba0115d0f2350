#ifndef GEOSIEVE_BIGINT_HPP
#define GEOSIEVE_BIGINT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace geosieve
{

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
// Variable-precision real; precision is set per computation, in decimal digits.
using Real = boost::multiprecision::mpfr_float;

// Accepts "p", "-p" or "p/q" with q > 0. Throws parse_error otherwise.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational &q);
std::string to_string(const BigInt &z);

BigInt factorial(unsigned n);

// Natural logarithm of a positive integer at the current default precision of
// Real. Only the leading bits of x are converted, the rest is carried as a
// power-of-two shift, so the result is accurate for integers of any length.
Real log_of(const BigInt &x);

int sign(const BigInt &z);
int sign(const Rational &q);

} // namespace geosieve

#endif
