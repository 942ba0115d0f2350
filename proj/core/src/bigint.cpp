#include <geosieve/bigint.hpp>

#include <cctype>

#include <geosieve/errors.hpp>

namespace geosieve
{

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_txt = text.substr(0, slash);
    if (!is_integer_literal(num_txt)) {
        raise(error_code::parse_error, "not a rational: '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_txt.front() == '+' ? num_txt.substr(1) : num_txt));
    BigInt den(1);
    if (slash != std::string_view::npos) {
        const auto den_txt = text.substr(slash + 1);
        if (!is_integer_literal(den_txt) || den_txt.front() == '-') {
            raise(error_code::parse_error, "bad denominator in '" + std::string(text) + "'");
        }
        den = BigInt(std::string(den_txt.front() == '+' ? den_txt.substr(1) : den_txt));
        if (den == 0) {
            raise(error_code::parse_error, "zero denominator in '" + std::string(text) + "'");
        }
    }
    return Rational(num, den);
}

std::string to_string(const Rational &q)
{
    if (denominator(q) == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const BigInt &z)
{
    return z.str();
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.backend().data(), n);
    return r;
}

Real log_of(const BigInt &x)
{
    if (x <= 0) {
        raise(error_code::bad_params, "log_of requires a positive integer");
    }
    // Keep a few guard bits beyond the working precision.
    const unsigned keep_bits = static_cast<unsigned>(Real::default_precision() * 3.33) + 64;
    const auto msb_pos = static_cast<unsigned>(boost::multiprecision::msb(x));
    if (msb_pos <= keep_bits) {
        return log(Real(x));
    }
    const unsigned shift = msb_pos - keep_bits;
    const BigInt head = x >> shift;
    return log(Real(head)) + Real(shift) * log(Real(2));
}

int sign(const BigInt &z)
{
    return z.sign();
}

int sign(const Rational &q)
{
    return q.sign();
}

} // namespace geosieve
