#ifndef GEOSIEVE_TEST_ORACLES_HPP
#define GEOSIEVE_TEST_ORACLES_HPP

// Independent reference computations for tests. Nothing here calls into the
// library's Whitney tables, Mobius recursion or flat enumeration.

#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include <geosieve/bigint.hpp>

namespace oracle
{

using geosieve::BigInt;

// Unsigned Stirling numbers of the first kind c(n,k), 0 <= k <= n <= n_max.
inline std::vector<std::vector<BigInt>> stirling_first(unsigned n_max)
{
    std::vector<std::vector<BigInt>> c(n_max + 1, std::vector<BigInt>(n_max + 1, BigInt(0)));
    c[0][0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            c[n][k] = c[n - 1][k - 1] + BigInt(n - 1) * c[n - 1][k];
        }
    }
    return c;
}

inline std::vector<std::vector<BigInt>> stirling_second(unsigned n_max)
{
    std::vector<std::vector<BigInt>> S(n_max + 1, std::vector<BigInt>(n_max + 1, BigInt(0)));
    S[0][0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            S[n][k] = S[n - 1][k - 1] + BigInt(k) * S[n - 1][k];
        }
    }
    return S;
}

// Bell numbers B_0..B_{n_max} from the Bell triangle.
inline std::vector<BigInt> bell(unsigned n_max)
{
    std::vector<BigInt> out{BigInt(1)};
    std::vector<BigInt> row{BigInt(1)};
    for (unsigned i = 1; i <= n_max; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto &v : row) {
            next.push_back(next.back() + v);
        }
        row = std::move(next);
        out.push_back(row.front());
    }
    return out;
}

inline BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

inline BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

// Coefficients (highest degree first) of prod_i (lambda - root_i).
inline std::vector<BigInt> poly_from_roots(const std::vector<long> &roots)
{
    std::vector<BigInt> p{BigInt(1)};
    for (auto r : roots) {
        std::vector<BigInt> next(p.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i] += p[i];
            next[i + 1] -= p[i] * r;
        }
        p = std::move(next);
    }
    return p;
}

// Every closed set of a rank function on {0..E-1}, by scanning all subsets.
inline std::vector<std::uint64_t> brute_force_flats(unsigned E, const std::function<unsigned(std::uint64_t)> &rank)
{
    std::vector<std::uint64_t> flats;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << E); ++a) {
        const auto r = rank(a);
        bool closed = true;
        for (unsigned e = 0; e < E && closed; ++e) {
            if (!(a & (std::uint64_t{1} << e)) && rank(a | (std::uint64_t{1} << e)) == r) {
                closed = false;
            }
        }
        if (closed) {
            flats.push_back(a);
        }
    }
    return flats;
}

} // namespace oracle

#endif
