#include <geosieve/dowling.hpp>

#include <algorithm>
#include <map>
#include <string>

#include <geosieve/errors.hpp>
#include <geosieve/lattice_generators.hpp>

namespace geosieve
{

unsigned PartialGPartition::block_count() const
{
    return block_of.empty() ? 0 : *std::max_element(block_of.begin(), block_of.end());
}

std::vector<std::vector<unsigned>> PartialGPartition::blocks() const
{
    std::vector<std::vector<unsigned>> out(block_count());
    for (unsigned i = 0; i < size(); ++i) {
        if (block_of[i] != 0) {
            out[block_of[i] - 1].push_back(i);
        }
    }
    return out;
}

std::vector<unsigned> PartialGPartition::zero_block() const
{
    std::vector<unsigned> out;
    for (unsigned i = 0; i < size(); ++i) {
        if (block_of[i] == 0) {
            out.push_back(i);
        }
    }
    return out;
}

std::string PartialGPartition::label() const
{
    std::string s = "{0";
    for (auto i : zero_block()) {
        s += "," + std::to_string(i + 1);
    }
    s += "}";
    for (const auto &b : blocks()) {
        s += "{";
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j > 0) {
                s += ",";
            }
            s += std::to_string(b[j] + 1);
            if (exponent[b[j]] != 0) {
                s += "g" + std::to_string(exponent[b[j]]);
            }
        }
        s += "}";
    }
    return s;
}

bool dowling_leq(const PartialGPartition &f, const PartialGPartition &g, unsigned m)
{
    const unsigned n = f.size();
    if (g.size() != n) {
        return false;
    }
    // Refinement in P_{n+1}: the zero block of f sits inside that of g, every
    // other block of f inside a single block of g.
    std::vector<long> target(f.block_count() + 1, -1);
    std::vector<unsigned> offset(f.block_count() + 1, 0);
    for (unsigned i = 0; i < n; ++i) {
        const auto fb = f.block_of[i];
        const auto gb = g.block_of[i];
        if (fb == 0) {
            if (gb != 0) {
                return false;
            }
            continue;
        }
        if (target[fb] == -1) {
            target[fb] = gb;
            // Scalar taking alpha to beta on this block, fixed by its first element.
            offset[fb] = (g.exponent[i] + m - f.exponent[i]) % m;
            continue;
        }
        if (target[fb] != static_cast<long>(gb)) {
            return false;
        }
        // beta restricted to the block must be a scalar multiple of alpha.
        if (gb != 0 && (g.exponent[i] + m - f.exponent[i]) % m != offset[fb]) {
            return false;
        }
    }
    return true;
}

std::size_t DowlingLattice::index_of(const PartialGPartition &p) const
{
    const auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) {
        raise(error_code::index_out_of_range, "partial G-partition " + p.label() + " not in Q_n(G)");
    }
    return static_cast<std::size_t>(it - elements.begin());
}

namespace
{

// Odometer over the free exponents (non-minimal block elements).
bool next_labels(PartialGPartition &p, const std::vector<unsigned> &free_slots, unsigned m)
{
    for (auto slot : free_slots) {
        if (++p.exponent[slot] < m) {
            return true;
        }
        p.exponent[slot] = 0;
    }
    return false;
}

} // namespace

DowlingLattice build_Qn(unsigned n, unsigned m, DowlingCaps caps)
{
    if (m == 0) {
        raise(error_code::bad_params, "group order must be at least 1");
    }
    if (n > caps.max_n || m > caps.max_m) {
        raise(error_code::too_large, "Q_" + std::to_string(n) + "(Z_" + std::to_string(m)
                                         + ") exceeds caps n <= " + std::to_string(caps.max_n)
                                         + ", m <= " + std::to_string(caps.max_m));
    }

    // Partitions of {x_0, x_1..x_n}; the block holding x_0 is the zero block.
    std::vector<PartialGPartition> elems;
    for (const auto &rgs : set_partitions(n + 1)) {
        PartialGPartition p;
        p.block_of.assign(rgs.begin() + 1, rgs.end());
        p.exponent.assign(n, 0);
        std::vector<unsigned> free_slots;
        std::vector<bool> seen(n + 2, false);
        for (unsigned i = 0; i < n; ++i) {
            const auto b = p.block_of[i];
            if (b != 0 && seen[b]) {
                free_slots.push_back(i);
            }
            seen[b] = true;
        }
        do {
            elems.push_back(p);
        } while (next_labels(p, free_slots, m));
    }
    std::sort(elems.begin(), elems.end());

    std::vector<Cover> covers;
    for (std::size_t a = 0; a < elems.size(); ++a) {
        const auto ra = elems[a].rank();
        for (std::size_t b = 0; b < elems.size(); ++b) {
            if (elems[b].rank() == ra + 1 && dowling_leq(elems[a], elems[b], m)) {
                covers.emplace_back(a, b);
            }
        }
    }
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (const auto &p : elems) {
        labels.push_back(p.label());
    }
    auto lattice = FiniteLattice::build(covers, elems.size(), std::move(labels));
    return DowlingLattice{n, m, std::move(lattice), std::move(elems)};
}

PartialGPartition canonical_sieve_tau(unsigned n, unsigned k)
{
    if (k > n) {
        raise(error_code::bad_params, "tau rank k must not exceed n");
    }
    PartialGPartition p;
    p.exponent.assign(n, 0);
    p.block_of.assign(n, 0);
    for (unsigned i = k; i < n; ++i) {
        p.block_of[i] = i - k + 1;
    }
    return p;
}

std::vector<PartialGPartition> canonical_sieve_atoms(unsigned n, unsigned k)
{
    if (k > n) {
        raise(error_code::bad_params, "tau rank k must not exceed n");
    }
    std::vector<PartialGPartition> out;
    for (unsigned z = 0; z < k; ++z) {
        PartialGPartition p;
        p.exponent.assign(n, 0);
        p.block_of.assign(n, 0);
        unsigned next = 1;
        for (unsigned i = 0; i < n; ++i) {
            if (i != z) {
                p.block_of[i] = next++;
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

SieveInstance dowling_sieve_instance(const std::shared_ptr<const DowlingLattice> &D, unsigned k)
{
    std::vector<std::size_t> atom_ids;
    for (const auto &a : canonical_sieve_atoms(D->n, k)) {
        atom_ids.push_back(D->index_of(a));
    }
    const auto sizes = r_dowling_numbers(D->m, 1, D->n);
    std::vector<Rational> f;
    for (unsigned c = 0; c <= D->n; ++c) {
        f.emplace_back(sizes[c], sizes[D->n]);
    }
    std::shared_ptr<const FiniteLattice> L(D, &D->lattice);
    // Q_n(G) is geometric by Dowling's theorem; the unit tests check it
    // explicitly for every size used here.
    return SieveInstance::make(std::move(L), SieveInstance::all_elements(D->lattice), std::move(atom_ids),
                               std::move(f), Rational(sizes[D->n]), false);
}

BigInt WhitneyTriangle::at(long n, long k) const
{
    if (n < 0 || k < 0 || k > n || n >= static_cast<long>(rows.size())) {
        return 0;
    }
    return rows[n][k];
}

WhitneyTriangle whitney_first_table(unsigned m, unsigned n_max)
{
    if (m == 0) {
        raise(error_code::bad_params, "m must be at least 1");
    }
    WhitneyTriangle t;
    t.kind = WhitneyTriangle::Kind::first;
    t.m = m;
    t.r = 1;
    t.rows.resize(n_max + 1);
    t.rows[0] = {BigInt(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto &prev = t.rows[n - 1];
        auto &row = t.rows[n];
        row.assign(n + 1, BigInt(0));
        const BigInt c = 1 + BigInt(m) * (n - 1);
        for (unsigned k = 0; k <= n; ++k) {
            if (k >= 1) {
                row[k] += prev[k - 1];
            }
            if (k < n) {
                row[k] -= c * prev[k];
            }
        }
    }
    return t;
}

WhitneyTriangle whitney_second_table(unsigned m, unsigned r, unsigned n_max)
{
    if (m == 0) {
        raise(error_code::bad_params, "m must be at least 1");
    }
    WhitneyTriangle t;
    t.kind = WhitneyTriangle::Kind::second;
    t.m = m;
    t.r = r;
    t.rows.resize(n_max + 1);
    t.rows[0] = {BigInt(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto &prev = t.rows[n - 1];
        auto &row = t.rows[n];
        row.assign(n + 1, BigInt(0));
        for (unsigned k = 0; k <= n; ++k) {
            if (k >= 1) {
                row[k] += prev[k - 1];
            }
            if (k < n) {
                row[k] += (BigInt(k) * m + r) * prev[k];
            }
        }
    }
    return t;
}

std::vector<BigInt> rank_indexed_row(const WhitneyTriangle &t, unsigned n)
{
    std::vector<BigInt> out(t.rows.at(n).rbegin(), t.rows.at(n).rend());
    return out;
}

bool r_whitney_definition_check(unsigned m, unsigned r, unsigned n)
{
    // Left side: (mx + r)^n.
    std::vector<BigInt> lhs{BigInt(1)};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<BigInt> next(lhs.size() + 1, BigInt(0));
        for (std::size_t d = 0; d < lhs.size(); ++d) {
            next[d] += lhs[d] * r;
            next[d + 1] += lhs[d] * m;
        }
        lhs = std::move(next);
    }

    // Right side: sum_k m^k W(n,k) (x)_k with (x)_k expanded incrementally.
    const auto W = whitney_second_table(m, r, n);
    std::vector<BigInt> rhs(n + 1, BigInt(0));
    std::vector<BigInt> falling{BigInt(1)};
    BigInt mk = 1;
    for (unsigned k = 0; k <= n; ++k) {
        for (std::size_t d = 0; d < falling.size(); ++d) {
            rhs[d] += mk * W.at(n, k) * falling[d];
        }
        // (x)_{k+1} = (x)_k * (x - k).
        std::vector<BigInt> next(falling.size() + 1, BigInt(0));
        for (std::size_t d = 0; d < falling.size(); ++d) {
            next[d + 1] += falling[d];
            next[d] -= falling[d] * k;
        }
        falling = std::move(next);
        mk *= m;
    }
    return lhs == rhs;
}

BigInt shifted_convolution(const WhitneyTriangle &first, const WhitneyTriangle &second, unsigned n, unsigned t,
                           unsigned s)
{
    if (first.kind != WhitneyTriangle::Kind::first || second.kind != WhitneyTriangle::Kind::second
        || second.r != 1 || first.m != second.m) {
        raise(error_code::bad_params, "shifted_convolution needs w_m and W_m tables of the same m");
    }
    if (first.n_max() < n || second.n_max() < n + s) {
        raise(error_code::bad_params, "Whitney tables too short for this convolution");
    }
    BigInt acc = 0;
    for (unsigned k = 0; k <= n; ++k) {
        acc += first.at(n, k) * second.at(k + s, t);
    }
    return acc;
}

BigInt shifted_convolution(unsigned m, unsigned n, unsigned t, unsigned s)
{
    return shifted_convolution(whitney_first_table(m, n), whitney_second_table(m, 1, n + s), n, t, s);
}

OrthogonalityReport conv_orthogonality_check(unsigned m, unsigned n_max)
{
    const auto w = whitney_first_table(m, n_max);
    const auto W = whitney_second_table(m, 1, n_max);
    OrthogonalityReport rep;
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned s = 0; s <= n_max; ++s) {
            BigInt a = 0, b = 0;
            for (unsigned r = 0; r <= n_max; ++r) {
                a += W.at(n, r) * w.at(r, s);
                b += w.at(n, r) * W.at(r, s);
            }
            const BigInt delta = n == s ? 1 : 0;
            rep.checked += 2;
            if (a != delta || b != delta) {
                rep.passed = false;
                rep.counterexample = std::tuple{n, s, a != delta ? 0 : 1};
                return rep;
            }
        }
    }
    return rep;
}

BigIntSeries conv_series(unsigned m, unsigned n, unsigned t, std::size_t order)
{
    if (t < n) {
        return BigIntSeries(order);
    }
    // (1/x) prod_{j=n}^{t} x/(1-(1+jm)x) = x^{t-n} prod_j 1/(1-(1+jm)x).
    auto acc = BigIntSeries::monomial(order, t - n);
    for (unsigned j = n; j <= t; ++j) {
        acc *= BigIntSeries::geometric(order, 1 + BigInt(j) * m);
    }
    return acc;
}

bool conv_equals_rwhitney_check(unsigned m, unsigned n, unsigned t, unsigned s)
{
    const auto c = shifted_convolution(m, n, t, s);
    if (t < n) {
        return c == 0;
    }
    const auto W = whitney_second_table(m, 1 + m * n, s);
    return c == W.at(s, static_cast<long>(t) - n);
}

std::vector<BigInt> r_dowling_numbers(unsigned m, unsigned r, unsigned n_max)
{
    if (m == 0) {
        raise(error_code::bad_params, "m must be at least 1");
    }
    // Rolling rows of the r-Whitney triangle; only row sums are kept.
    std::vector<BigInt> out;
    out.reserve(n_max + 1);
    std::vector<BigInt> row{BigInt(1)};
    out.emplace_back(1);
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<BigInt> next(n + 1, BigInt(0));
        for (unsigned k = 0; k <= n; ++k) {
            if (k >= 1) {
                next[k] += row[k - 1];
            }
            if (k < n) {
                next[k] += (BigInt(k) * m + r) * row[k];
            }
        }
        row = std::move(next);
        BigInt sum = 0;
        for (const auto &v : row) {
            sum += v;
        }
        out.push_back(std::move(sum));
    }
    return out;
}

BigInt r_dowling_number(unsigned m, unsigned r, unsigned n)
{
    return r_dowling_numbers(m, r, n).back();
}

BigInt dowling_number(unsigned m, unsigned n)
{
    return r_dowling_number(m, 1, n);
}

BigInt dowling_sieve_closed_form(unsigned m, unsigned n, unsigned k)
{
    if (k > n) {
        raise(error_code::bad_params, "need 0 <= k <= n");
    }
    return r_dowling_number(m, 1 + m * k, n - k);
}

namespace
{

std::vector<BigInt> multiply_profiles(const std::vector<BigInt> &a, const std::vector<BigInt> &b)
{
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

} // namespace

IntervalProfileReport interval_profile_check(const DowlingLattice &D, std::size_t element)
{
    const auto &L = D.lattice;
    if (element >= L.size()) {
        raise(error_code::index_out_of_range, "element " + std::to_string(element));
    }
    const auto &F = D.elements[element];
    IntervalProfileReport rep;

    const unsigned co_rank = D.n - F.rank();
    rep.upper_profile = whitney_second_lattice(interval(L, element, L.top()));
    rep.expected_upper = rank_indexed_row(whitney_second_table(D.m, 1, co_rank), co_rank);

    rep.lower_profile = whitney_second_lattice(interval(L, L.bottom(), element));
    const auto n0 = static_cast<unsigned>(F.zero_block().size());
    rep.expected_lower = rank_indexed_row(whitney_second_table(D.m, 1, n0), n0);
    for (const auto &b : F.blocks()) {
        const auto nj = static_cast<unsigned>(b.size());
        // P_{nj} has S(nj, nj - i) elements of rank i; W_{1,0} is the
        // classical Stirling triangle of the second kind. Its rank-nj entry
        // S(nj, 0) is zero and is dropped.
        auto row = rank_indexed_row(whitney_second_table(1, 0, nj), nj);
        row.pop_back();
        rep.expected_lower = multiply_profiles(rep.expected_lower, row);
    }
    rep.passed = rep.upper_profile == rep.expected_upper && rep.lower_profile == rep.expected_lower;
    return rep;
}

IntervalProfileReport interval_profile_check(unsigned n, unsigned m, std::size_t element)
{
    return interval_profile_check(build_Qn(n, m), element);
}

} // namespace geosieve
