#include <geosieve/brun.hpp>

#include <string>

#include <geosieve/errors.hpp>

namespace geosieve
{

namespace
{

void require_non_negative(std::span<const Rational> seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0) {
            raise(error_code::negative_entry, "entry " + std::to_string(i) + " is " + to_string(seq[i]));
        }
    }
}

} // namespace

std::vector<Rational> to_rationals(std::span<const BigInt> values)
{
    std::vector<Rational> out;
    out.reserve(values.size());
    for (const auto &v : values) {
        out.emplace_back(v);
    }
    return out;
}

UnimodalResult is_unimodal(std::span<const Rational> seq)
{
    require_non_negative(seq);
    if (seq.empty()) {
        return {true, std::nullopt};
    }
    const std::size_t n = seq.size();
    // Valid peaks j are exactly those with rise_end >= j >= fall_start.
    std::size_t rise_end = 0;
    while (rise_end + 1 < n && seq[rise_end] <= seq[rise_end + 1]) {
        ++rise_end;
    }
    std::size_t fall_start = n - 1;
    while (fall_start > 0 && seq[fall_start - 1] >= seq[fall_start]) {
        --fall_start;
    }
    if (fall_start <= rise_end) {
        return {true, fall_start};
    }
    return {false, std::nullopt};
}

UnimodalResult is_unimodal(std::span<const BigInt> seq)
{
    const auto q = to_rationals(seq);
    return is_unimodal(std::span<const Rational>(q));
}

LogConcaveResult is_log_concave(std::span<const Rational> seq)
{
    require_non_negative(seq);
    for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
        if (seq[k] * seq[k] < seq[k - 1] * seq[k + 1]) {
            return {false, k};
        }
    }
    return {true, std::nullopt};
}

LogConcaveResult is_log_concave(std::span<const BigInt> seq)
{
    const auto q = to_rationals(seq);
    return is_log_concave(std::span<const Rational>(q));
}

AlternatingSumsReport alternating_partial_sums_check(std::span<const Rational> seq)
{
    if (seq.empty()) {
        raise(error_code::hypothesis_violated, "sequence is empty");
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0) {
            raise(error_code::hypothesis_violated, "non-negativity fails at index " + std::to_string(i));
        }
    }
    const auto uni = is_unimodal(seq);
    if (!uni.unimodal) {
        raise(error_code::hypothesis_violated, "sequence is not unimodal");
    }

    AlternatingSumsReport rep;
    rep.partial_sums.reserve(seq.size());
    Rational acc = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        acc += (i % 2 == 0) ? seq[i] : Rational(-seq[i]);
        rep.partial_sums.push_back(acc);
    }
    if (acc != 0) {
        raise(error_code::hypothesis_violated, "alternating sum is " + to_string(acc) + ", not 0");
    }
    for (std::size_t c = 0; c < rep.partial_sums.size(); ++c) {
        const auto s = rep.partial_sums[c].sign();
        if ((c % 2 == 0 && s < 0) || (c % 2 == 1 && s > 0)) {
            rep.first_failure = c;
            break;
        }
    }
    rep.passed = !rep.first_failure.has_value();
    return rep;
}

AlternatingSumsReport alternating_partial_sums_check(std::span<const BigInt> seq)
{
    const auto q = to_rationals(seq);
    return alternating_partial_sums_check(std::span<const Rational>(q));
}

std::optional<std::size_t> brun_sign_violation(std::span<const BigInt> sums)
{
    for (std::size_t k = 0; k < sums.size(); ++k) {
        const auto s = sums[k].sign();
        if ((k % 2 == 0 && s < 0) || (k % 2 == 1 && s > 0)) {
            return k;
        }
    }
    return std::nullopt;
}

BrunReport verify_brun(const FiniteLattice &L)
{
    const auto geo = is_geometric(L);
    if (!geo.geometric) {
        raise(error_code::not_geometric, geo.diagnostic);
    }
    BrunReport rep;
    rep.whitney_first = whitney_first_lattice(L);
    rep.partial_sums = rep.whitney_first;
    for (std::size_t i = 1; i < rep.partial_sums.size(); ++i) {
        rep.partial_sums[i] += rep.partial_sums[i - 1];
    }
    if (const auto bad = brun_sign_violation(rep.partial_sums)) {
        raise(error_code::brun_violation, "partial Mobius sum up to rank " + std::to_string(*bad) + " is "
                                              + to_string(rep.partial_sums[*bad]));
    }
    return rep;
}

std::vector<BigInt> absolute_whitney(std::span<const BigInt> w)
{
    std::vector<BigInt> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.push_back(i % 2 == 0 ? w[i] : BigInt(-w[i]));
    }
    return out;
}

} // namespace geosieve
