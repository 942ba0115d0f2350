#include <geosieve/series.hpp>

#include <algorithm>

#include <geosieve/errors.hpp>

namespace geosieve
{

BigIntSeries::BigIntSeries(std::size_t order) : m_coeffs(order + 1, BigInt(0)) {}

BigIntSeries::BigIntSeries(std::size_t order, std::vector<BigInt> coefficients) : m_coeffs(std::move(coefficients))
{
    m_coeffs.resize(order + 1, BigInt(0));
}

BigIntSeries BigIntSeries::one(std::size_t order)
{
    return monomial(order, 0);
}

BigIntSeries BigIntSeries::monomial(std::size_t order, std::size_t degree, const BigInt &c)
{
    BigIntSeries s(order);
    if (degree <= order) {
        s.m_coeffs[degree] = c;
    }
    return s;
}

BigIntSeries BigIntSeries::geometric(std::size_t order, const BigInt &c)
{
    BigIntSeries s(order);
    BigInt p = 1;
    for (auto &coeff : s.m_coeffs) {
        coeff = p;
        p *= c;
    }
    return s;
}

bool BigIntSeries::is_zero() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const BigInt &c) { return c == 0; });
}

BigIntSeries &BigIntSeries::operator+=(const BigIntSeries &other)
{
    const auto n = std::min(m_coeffs.size(), other.m_coeffs.size());
    for (std::size_t i = 0; i < n; ++i) {
        m_coeffs[i] += other.m_coeffs[i];
    }
    return *this;
}

BigIntSeries &BigIntSeries::operator-=(const BigIntSeries &other)
{
    const auto n = std::min(m_coeffs.size(), other.m_coeffs.size());
    for (std::size_t i = 0; i < n; ++i) {
        m_coeffs[i] -= other.m_coeffs[i];
    }
    return *this;
}

BigIntSeries &BigIntSeries::operator*=(const BigIntSeries &other)
{
    std::vector<BigInt> out(m_coeffs.size(), BigInt(0));
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        if (m_coeffs[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < other.m_coeffs.size() && i + j < out.size(); ++j) {
            out[i + j] += m_coeffs[i] * other.m_coeffs[j];
        }
    }
    m_coeffs = std::move(out);
    return *this;
}

BigIntSeries &BigIntSeries::operator/=(const BigIntSeries &unit)
{
    if (unit.m_coeffs.empty() || abs(unit.m_coeffs[0]) != 1) {
        raise(error_code::bad_params, "series division needs a constant term of +1 or -1");
    }
    const BigInt &u0 = unit.m_coeffs[0];
    std::vector<BigInt> q(m_coeffs.size(), BigInt(0));
    for (std::size_t s = 0; s < q.size(); ++s) {
        BigInt acc = m_coeffs[s];
        for (std::size_t j = 1; j <= s && j < unit.m_coeffs.size(); ++j) {
            acc -= unit.m_coeffs[j] * q[s - j];
        }
        q[s] = acc * u0;
    }
    m_coeffs = std::move(q);
    return *this;
}

BigIntSeries BigIntSeries::shifted(std::size_t k) const
{
    BigIntSeries s(order());
    for (std::size_t i = 0; i + k < s.m_coeffs.size(); ++i) {
        s.m_coeffs[i + k] = m_coeffs[i];
    }
    return s;
}

} // namespace geosieve
