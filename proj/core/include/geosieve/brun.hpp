#ifndef GEOSIEVE_BRUN_HPP
#define GEOSIEVE_BRUN_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <geosieve/bigint.hpp>
#include <geosieve/poset.hpp>

namespace geosieve
{

std::vector<Rational> to_rationals(std::span<const BigInt> values);

struct UnimodalResult {
    bool unimodal = false;
    // Smallest valid peak index when unimodal.
    std::optional<std::size_t> peak;
};

// Throws negative_entry on any a_i < 0. The empty sequence is unimodal with no peak.
UnimodalResult is_unimodal(std::span<const Rational> seq);
UnimodalResult is_unimodal(std::span<const BigInt> seq);

struct LogConcaveResult {
    bool log_concave = false;
    // First interior k with a_k^2 < a_{k-1} a_{k+1}.
    std::optional<std::size_t> first_violation;
};

// Throws negative_entry on any a_i < 0.
LogConcaveResult is_log_concave(std::span<const Rational> seq);
LogConcaveResult is_log_concave(std::span<const BigInt> seq);

struct AlternatingSumsReport {
    // partial_sums[c] = sum_{i <= c} (-1)^i a_i.
    std::vector<Rational> partial_sums;
    bool passed = false;
    std::optional<std::size_t> first_failure;
};

/// Checks the alternating partial-sum inequalities for a non-negative unimodal
/// sequence whose full alternating sum vanishes: every even cutoff gives a
/// sum >= 0 and every odd cutoff a sum <= 0.
///
/// The three hypotheses are verified first; a failure raises
/// hypothesis_violated naming the hypothesis and a witness index.
AlternatingSumsReport alternating_partial_sums_check(std::span<const Rational> seq);
AlternatingSumsReport alternating_partial_sums_check(std::span<const BigInt> seq);

// First cutoff k at which (-1)^k sums[k] < 0, if any.
std::optional<std::size_t> brun_sign_violation(std::span<const BigInt> sums);

struct BrunReport {
    // partial_sums[k] = sum of mu(bottom, x) over rank(x) <= k, k = 0..rank(L).
    std::vector<BigInt> partial_sums;
    std::vector<BigInt> whitney_first;
};

// Throws not_geometric if L fails the axioms, brun_violation if some partial
// sum has the wrong sign.
BrunReport verify_brun(const FiniteLattice &L);

// (-1)^i w_i.
std::vector<BigInt> absolute_whitney(std::span<const BigInt> w);

} // namespace geosieve

#endif
