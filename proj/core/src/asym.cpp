#include <geosieve/asym.hpp>

#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>

#include <geosieve/dowling.hpp>
#include <geosieve/errors.hpp>

namespace geosieve
{

namespace
{

constexpr int max_iterations = 200;

void check_params(unsigned m, unsigned r, unsigned n, unsigned digits)
{
    if (m == 0 || r == 0 || n == 0) {
        raise(error_code::bad_params, "m, r and n must all be positive");
    }
    if (digits < 35) {
        raise(error_code::bad_params, "at least 35 digits are needed for the 1e-30 root tolerance");
    }
}

bool finite(const Real &x)
{
    return boost::multiprecision::isfinite(x);
}

} // namespace

PrecisionGuard::PrecisionGuard(unsigned digits) : m_saved(Real::default_precision())
{
    Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard()
{
    Real::default_precision(m_saved);
}

Real saddle_residual(unsigned m, unsigned r, unsigned n, const Real &delta)
{
    return delta * (Real(r) + exp(Real(m) * delta)) - Real(n);
}

Real solve_delta(unsigned m, unsigned r, unsigned n, unsigned digits)
{
    check_params(m, r, n, digits);
    PrecisionGuard guard(digits + 10);

    // The map is strictly increasing from -n at 0, so double the upper end
    // until it turns positive.
    Real lo = 0;
    Real hi = 1;
    int iter = 0;
    while (saddle_residual(m, r, n, hi) < 0) {
        lo = hi;
        hi *= 2;
        if (++iter > max_iterations) {
            raise(error_code::no_convergence, "could not bracket the saddle point");
        }
    }
    // A few bisection steps bring Newton into its quadratic regime.
    for (int i = 0; i < 60; ++i) {
        const Real mid = (lo + hi) / 2;
        (saddle_residual(m, r, n, mid) < 0 ? lo : hi) = mid;
    }

    const Real tol = pow(Real(10), -static_cast<int>(digits));
    Real delta = (lo + hi) / 2;
    for (iter = 0; iter < max_iterations; ++iter) {
        const Real e = exp(Real(m) * delta);
        const Real f = delta * (Real(r) + e) - Real(n);
        const Real df = Real(r) + e * (1 + Real(m) * delta);
        Real next = delta - f / df;
        if (!finite(next) || next < lo || next > hi) {
            next = (lo + hi) / 2;
        }
        (saddle_residual(m, r, n, next) < 0 ? lo : hi) = next;
        const Real step = abs(next - delta);
        delta = next;
        if (step <= tol * delta) {
            break;
        }
    }
    if (iter == max_iterations) {
        raise(error_code::no_convergence, "saddle point did not converge in " + std::to_string(max_iterations)
                                              + " iterations");
    }
    if (abs(saddle_residual(m, r, n, delta)) > Real(n) * Real("1e-30")) {
        raise(error_code::no_convergence, "saddle point residual above 1e-30 relative");
    }
    // delta exp(m delta) < n forces delta <= log(n)/m once n > e^m.
    if (Real(n) > exp(Real(m)) && delta > log(Real(n)) / m) {
        raise(error_code::no_convergence, "saddle point violates delta <= log(n)/m");
    }
    return delta;
}

SaddleData saddle_values(unsigned m, unsigned r, unsigned n, unsigned digits)
{
    SaddleData d;
    d.m = m;
    d.r = r;
    d.n = n;
    d.digits = digits;
    d.delta = solve_delta(m, r, n, digits);

    PrecisionGuard guard(digits + 10);
    const Real e = exp(Real(m) * d.delta);
    d.g0 = Real(r) * d.delta + (e - 1) / m;
    d.g2 = (Real(n) + Real(m) * d.delta * d.delta * e) / 2;
    const Real pi = boost::math::constants::pi<Real>();
    d.log_asymptotic = d.g0 + log_of(factorial(n)) - Real(n) * log(d.delta) - log(4 * pi * d.g2) / 2;
    return d;
}

ExactComparison compare_exact(unsigned m, unsigned r, unsigned n, unsigned digits)
{
    ExactComparison c;
    c.saddle = saddle_values(m, r, n, digits);

    PrecisionGuard guard(digits + 10);
    c.log_exact = log_of(r_dowling_number(m, r, n));
    c.ratio = exp(c.saddle.log_asymptotic - c.log_exact);
    c.rel_err = abs(c.ratio - 1);
    const Real ln = log(Real(n));
    c.normalized_err = c.rel_err * sqrt(Real(n)) / pow(ln, 12);
    return c;
}

} // namespace geosieve
