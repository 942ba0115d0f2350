#ifndef GEOSIEVE_DOWLING_HPP
#define GEOSIEVE_DOWLING_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <geosieve/bigint.hpp>
#include <geosieve/poset.hpp>
#include <geosieve/series.hpp>
#include <geosieve/sieve.hpp>

// Dowling lattices Q_n(G) and their Whitney numbers.
//
// The group G enters every numerical invariant only through its order m, so
// the explicit lattice is built for the cyclic group Z_m: a group label is an
// exponent in {0..m-1} and scalar multiplication is addition mod m.
namespace geosieve
{

// A partial G-partition of {x_1..x_n} in canonical form.
//
// Elements are 0-based (element i stands for x_{i+1}). block_of[i] is 0 when
// x_{i+1} lies in the zero block, otherwise the 1-based index of its block;
// blocks are numbered in order of their smallest element. exponent[i] is the
// group label of x_{i+1}; the smallest element of every block carries 0,
// which picks one representative per equivalence class.
struct PartialGPartition {
    std::vector<unsigned> block_of;
    std::vector<unsigned> exponent;

    unsigned size() const noexcept
    {
        return static_cast<unsigned>(block_of.size());
    }
    unsigned block_count() const;
    unsigned rank() const
    {
        return size() - block_count();
    }
    // Non-zero blocks as sorted element lists.
    std::vector<std::vector<unsigned>> blocks() const;
    std::vector<unsigned> zero_block() const;
    // E.g. "{0,3}{1,2g1}{4}": the first group is the zero block with the
    // extra point 0, "g1" marks group exponent 1.
    std::string label() const;

    friend auto operator<=>(const PartialGPartition &, const PartialGPartition &) = default;
};

// F <= G in Q_n(Z_m).
bool dowling_leq(const PartialGPartition &f, const PartialGPartition &g, unsigned m);

struct DowlingLattice {
    unsigned n = 0;
    unsigned m = 1;
    FiniteLattice lattice;
    std::vector<PartialGPartition> elements;

    std::size_t index_of(const PartialGPartition &p) const;
};

struct DowlingCaps {
    unsigned max_n = 5;
    unsigned max_m = 4;
};

// Enumerates every canonical partial Z_m-partition of an n-set. Throws
// too_large beyond the caps and bad_params for m = 0.
DowlingLattice build_Qn(unsigned n, unsigned m, DowlingCaps caps = {});

// Element with x_1..x_k in the zero block and singleton blocks {x_i}, i > k.
// It has rank k and [bottom, tau] is isomorphic to Q_k(G).
PartialGPartition canonical_sieve_tau(unsigned n, unsigned k);
// The k atoms whose zero block is a single x_i, i <= k; their join is tau.
std::vector<PartialGPartition> canonical_sieve_atoms(unsigned n, unsigned k);

// Sieve instance with A = Q_n(G), T = canonical_sieve_atoms, X = #Q_n(G) and
// f(c) = #Q_c(G) / #Q_n(G).
SieveInstance dowling_sieve_instance(const std::shared_ptr<const DowlingLattice> &D, unsigned k);

struct WhitneyTriangle {
    enum class Kind { first, second };

    Kind kind = Kind::first;
    unsigned m = 1;
    // Shift parameter; always 1 for the first kind.
    unsigned r = 1;
    std::vector<std::vector<BigInt>> rows;

    unsigned n_max() const noexcept
    {
        return static_cast<unsigned>(rows.size()) - 1;
    }
    // Zero outside 0 <= k <= n <= n_max.
    BigInt at(long n, long k) const;
};

// w_m(n,k) = w_m(n-1,k-1) - (1+m(n-1)) w_m(n-1,k), w_m(0,0) = 1.
WhitneyTriangle whitney_first_table(unsigned m, unsigned n_max);

// W_{m,r}(n,k) = W_{m,r}(n-1,k-1) + (km+r) W_{m,r}(n-1,k), W(0,0) = 1.
WhitneyTriangle whitney_second_table(unsigned m, unsigned r, unsigned n_max);

// Rank profile (index = rank) of Q_n(G) read off row n: rank i <-> k = n - i.
std::vector<BigInt> rank_indexed_row(const WhitneyTriangle &t, unsigned n);

// Expands (mx+r)^n and sum_k m^k W_{m,r}(n,k) (x)_k in the monomial basis
// and compares them coefficient by coefficient.
bool r_whitney_definition_check(unsigned m, unsigned r, unsigned n);

// c_{n,t}(s) = sum_k w_m(n,k) W_m(k+s,t). The tables must reach rows n and
// n + s respectively.
BigInt shifted_convolution(const WhitneyTriangle &first, const WhitneyTriangle &second, unsigned n, unsigned t,
                           unsigned s);
BigInt shifted_convolution(unsigned m, unsigned n, unsigned t, unsigned s);

struct OrthogonalityReport {
    bool passed = true;
    std::size_t checked = 0;
    // (n, s, which) of the first failure; which = 0 for sum_r W(n,r) w(r,s),
    // 1 for sum_r w(n,r) W(r,s).
    std::optional<std::tuple<unsigned, unsigned, int>> counterexample;
};

OrthogonalityReport conv_orthogonality_check(unsigned m, unsigned n_max);

// (1/x) prod_{j=n}^{t} x / (1 - (1+jm)x), truncated at x^order. The zero
// series when t < n.
BigIntSeries conv_series(unsigned m, unsigned n, unsigned t, std::size_t order);

// c_{n,t}(s) == W_{m,1+mn}(s, t-n), with both sides 0 when t < n.
bool conv_equals_rwhitney_check(unsigned m, unsigned n, unsigned t, unsigned s);

BigInt dowling_number(unsigned m, unsigned n);
BigInt r_dowling_number(unsigned m, unsigned r, unsigned n);
// D_{m,r}(0..n_max).
std::vector<BigInt> r_dowling_numbers(unsigned m, unsigned r, unsigned n_max);

// D_{m,1+mk}(n-k).
BigInt dowling_sieve_closed_form(unsigned m, unsigned n, unsigned k);

struct IntervalProfileReport {
    std::vector<BigInt> upper_profile;
    std::vector<BigInt> expected_upper;
    std::vector<BigInt> lower_profile;
    std::vector<BigInt> expected_lower;
    bool passed = false;
};

// Compares the rank profiles of [F, top] with Q_cr(G) and of [bottom, F]
// with Q_{n_0}(G) x P_{n_1} x ... x P_{n_s}.
IntervalProfileReport interval_profile_check(const DowlingLattice &D, std::size_t element);
IntervalProfileReport interval_profile_check(unsigned n, unsigned m, std::size_t element);

} // namespace geosieve

#endif
