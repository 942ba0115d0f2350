#ifndef GEOSIEVE_SERIES_HPP
#define GEOSIEVE_SERIES_HPP

#include <cstddef>
#include <vector>

#include <geosieve/bigint.hpp>

namespace geosieve
{

// Power series with big-integer coefficients c_0..c_S, truncated at x^S.
// Arithmetic keeps the truncation order of the left operand.
class BigIntSeries
{
public:
    explicit BigIntSeries(std::size_t order);
    BigIntSeries(std::size_t order, std::vector<BigInt> coefficients);

    static BigIntSeries one(std::size_t order);
    static BigIntSeries monomial(std::size_t order, std::size_t degree, const BigInt &c = 1);
    // 1 / (1 - c x) = sum_s c^s x^s.
    static BigIntSeries geometric(std::size_t order, const BigInt &c);

    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1;
    }
    const std::vector<BigInt> &coefficients() const noexcept
    {
        return m_coeffs;
    }
    const BigInt &operator[](std::size_t s) const
    {
        return m_coeffs[s];
    }
    bool is_zero() const;

    BigIntSeries &operator+=(const BigIntSeries &other);
    BigIntSeries &operator-=(const BigIntSeries &other);
    BigIntSeries &operator*=(const BigIntSeries &other);
    // Exact division by a series whose constant term is +1 or -1; throws
    // bad_params otherwise.
    BigIntSeries &operator/=(const BigIntSeries &unit);
    // Multiplies by x^k.
    BigIntSeries shifted(std::size_t k) const;

    friend BigIntSeries operator+(BigIntSeries a, const BigIntSeries &b)
    {
        return a += b;
    }
    friend BigIntSeries operator-(BigIntSeries a, const BigIntSeries &b)
    {
        return a -= b;
    }
    friend BigIntSeries operator*(BigIntSeries a, const BigIntSeries &b)
    {
        return a *= b;
    }
    friend BigIntSeries operator/(BigIntSeries a, const BigIntSeries &b)
    {
        return a /= b;
    }
    friend bool operator==(const BigIntSeries &a, const BigIntSeries &b)
    {
        return a.m_coeffs == b.m_coeffs;
    }

private:
    std::vector<BigInt> m_coeffs;
};

} // namespace geosieve

#endif
