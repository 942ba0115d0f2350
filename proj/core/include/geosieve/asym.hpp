#ifndef GEOSIEVE_ASYM_HPP
#define GEOSIEVE_ASYM_HPP

#include <optional>

#include <geosieve/bigint.hpp>

// Saddle-point asymptotics for the r-Dowling numbers D_{m,r}(n):
//
//   D_{m,r}(n) ~ exp(g0) / sqrt(4 pi g2) * n! / delta^n
//
// with delta the positive root of delta (r + exp(m delta)) = n,
// g0 = r delta + (exp(m delta) - 1)/m and g2 = (n + m delta^2 exp(m delta))/2.
// Everything is evaluated in log space with MPFR at a caller-chosen precision.
namespace geosieve
{

inline constexpr unsigned default_asym_digits = 50;

struct SaddleData {
    unsigned m = 1;
    unsigned r = 1;
    unsigned n = 1;
    unsigned digits = default_asym_digits;
    Real delta;
    Real g0;
    Real g2;
    // Natural log of the main term.
    Real log_asymptotic;
};

// Scoped MPFR working precision; restores the previous default on exit.
class PrecisionGuard
{
public:
    explicit PrecisionGuard(unsigned digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard &) = delete;
    PrecisionGuard &operator=(const PrecisionGuard &) = delete;

private:
    unsigned m_saved;
};

// Positive root of delta (r + exp(m delta)) = n: bisection to bracket, then
// Newton polish, falling back to bisection on any non-finite step. Requires
// m, r, n >= 1 and digits >= 35 (so that a 1e-30 relative tolerance is
// meaningful). Throws no_convergence after 200 iterations.
Real solve_delta(unsigned m, unsigned r, unsigned n, unsigned digits = default_asym_digits);

SaddleData saddle_values(unsigned m, unsigned r, unsigned n, unsigned digits = default_asym_digits);

struct ExactComparison {
    SaddleData saddle;
    Real log_exact;
    // exp(log_asymptotic - log_exact).
    Real ratio;
    // |ratio - 1|.
    Real rel_err;
    // rel_err * sqrt(n) / (log n)^12.
    Real normalized_err;
};

// Exact D_{m,r}(n) from the r-Whitney triangle compared with the main term.
ExactComparison compare_exact(unsigned m, unsigned r, unsigned n, unsigned digits = default_asym_digits);

// delta (r + exp(m delta)) - n at the given delta, evaluated at the current
// default precision.
Real saddle_residual(unsigned m, unsigned r, unsigned n, const Real &delta);

} // namespace geosieve

#endif
