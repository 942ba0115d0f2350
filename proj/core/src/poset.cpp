#include <geosieve/poset.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include <geosieve/errors.hpp>

namespace geosieve
{

FiniteLattice FiniteLattice::build(std::span<const Cover> covers, std::size_t n_elems,
                                   std::vector<std::string> labels)
{
    if (n_elems == 0) {
        raise(error_code::index_out_of_range, "a lattice needs at least one element");
    }
    if (!labels.empty() && labels.size() != n_elems) {
        raise(error_code::index_out_of_range, "label count does not match element count");
    }

    FiniteLattice L;
    L.m_labels = std::move(labels);
    L.m_upper_covers.resize(n_elems);
    std::vector<std::vector<std::size_t>> lower_covers(n_elems);
    std::set<Cover> seen;
    for (const auto &[x, y] : covers) {
        if (x >= n_elems || y >= n_elems) {
            raise(error_code::index_out_of_range,
                  "cover (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
        }
        if (x == y) {
            raise(error_code::cyclic, "self-cover on element " + std::to_string(x));
        }
        if (!seen.insert({x, y}).second) {
            raise(error_code::duplicate_cover,
                  "cover (" + std::to_string(x) + "," + std::to_string(y) + ") listed twice");
        }
        L.m_upper_covers[x].push_back(y);
        lower_covers[y].push_back(x);
    }
    L.m_covers.assign(covers.begin(), covers.end());
    for (auto &v : L.m_upper_covers) {
        std::sort(v.begin(), v.end());
    }

    // Kahn topological order, bottom-up.
    std::vector<std::size_t> indeg(n_elems);
    for (std::size_t y = 0; y < n_elems; ++y) {
        indeg[y] = lower_covers[y].size();
    }
    std::vector<std::size_t> minima, maxima;
    for (std::size_t x = 0; x < n_elems; ++x) {
        if (lower_covers[x].empty()) {
            minima.push_back(x);
        }
        if (L.m_upper_covers[x].empty()) {
            maxima.push_back(x);
        }
    }
    std::vector<std::size_t> topo;
    topo.reserve(n_elems);
    std::deque<std::size_t> ready(minima.begin(), minima.end());
    while (!ready.empty()) {
        const auto x = ready.front();
        ready.pop_front();
        topo.push_back(x);
        for (auto y : L.m_upper_covers[x]) {
            if (--indeg[y] == 0) {
                ready.push_back(y);
            }
        }
    }
    if (topo.size() != n_elems) {
        raise(error_code::cyclic, "cover relation contains a directed cycle");
    }
    if (minima.size() != 1) {
        raise(error_code::multiple_minima, std::to_string(minima.size()) + " minimal elements");
    }
    if (maxima.size() != 1) {
        raise(error_code::multiple_maxima, std::to_string(maxima.size()) + " maximal elements");
    }
    L.m_bottom = minima.front();
    L.m_top = maxima.front();

    // Rank is the longest chain length from the bottom; gradedness then
    // requires every cover to step the rank by exactly one.
    L.m_rank.assign(n_elems, 0);
    for (auto x : topo) {
        for (auto y : L.m_upper_covers[x]) {
            L.m_rank[y] = std::max(L.m_rank[y], L.m_rank[x] + 1);
        }
    }
    for (const auto &[x, y] : L.m_covers) {
        if (L.m_rank[y] != L.m_rank[x] + 1) {
            raise(error_code::not_graded, "cover (" + std::to_string(x) + "," + std::to_string(y)
                                              + ") jumps from rank " + std::to_string(L.m_rank[x])
                                              + " to " + std::to_string(L.m_rank[y]));
        }
    }

    L.m_up.assign(n_elems, Bitset(n_elems));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        auto &row = L.m_up[*it];
        row.set(*it);
        for (auto y : L.m_upper_covers[*it]) {
            row |= L.m_up[y];
        }
    }
    L.m_down.assign(n_elems, Bitset(n_elems));
    for (std::size_t x = 0; x < n_elems; ++x) {
        for (auto y = L.m_up[x].find_first(); y != Bitset::npos; y = L.m_up[x].find_next(y)) {
            L.m_down[y].set(x);
        }
    }

    L.m_rank_order.resize(n_elems);
    std::iota(L.m_rank_order.begin(), L.m_rank_order.end(), std::size_t{0});
    std::stable_sort(L.m_rank_order.begin(), L.m_rank_order.end(),
                     [&](std::size_t a, std::size_t b) { return L.m_rank[a] < L.m_rank[b]; });

    // With a unique bottom, existence of all joins already makes this a
    // lattice: the meet of x and y is the join of their common lower bounds.
    for (std::size_t x = 0; x < n_elems; ++x) {
        for (std::size_t y = x + 1; y < n_elems; ++y) {
            if (L.m_up[x].test(y) || L.m_up[y].test(x)) {
                continue;
            }
            const Bitset common = L.m_up[x] & L.m_up[y];
            const auto c = L.least_of(common);
            if (!common.is_subset_of(L.m_up[c])) {
                raise(error_code::not_a_lattice,
                      "elements " + std::to_string(x) + " and " + std::to_string(y) + " have no join");
            }
        }
    }
    return L;
}

std::string FiniteLattice::label(std::size_t x) const
{
    return m_labels.empty() ? std::to_string(x) : m_labels[x];
}

std::size_t FiniteLattice::least_of(const Bitset &s) const
{
    auto best = s.find_first();
    for (auto i = s.find_next(best); i != Bitset::npos; i = s.find_next(i)) {
        if (m_rank[i] < m_rank[best]) {
            best = i;
        }
    }
    return best;
}

std::size_t FiniteLattice::greatest_of(const Bitset &s) const
{
    auto best = s.find_first();
    for (auto i = s.find_next(best); i != Bitset::npos; i = s.find_next(i)) {
        if (m_rank[i] > m_rank[best]) {
            best = i;
        }
    }
    return best;
}

std::size_t FiniteLattice::meet(std::size_t x, std::size_t y) const
{
    if (m_up[x].test(y)) {
        return x;
    }
    if (m_up[y].test(x)) {
        return y;
    }
    return greatest_of(m_down[x] & m_down[y]);
}

std::size_t FiniteLattice::join(std::size_t x, std::size_t y) const
{
    if (m_up[x].test(y)) {
        return y;
    }
    if (m_up[y].test(x)) {
        return x;
    }
    return least_of(m_up[x] & m_up[y]);
}

std::vector<std::size_t> atoms(const FiniteLattice &L)
{
    return L.upper_covers(L.bottom());
}

GeometricReport is_geometric(const FiniteLattice &L)
{
    GeometricReport rep;
    const auto at = atoms(L);
    Bitset atom_set(L.size());
    for (auto a : at) {
        atom_set.set(a);
    }

    for (auto x : L.rank_order()) {
        std::size_t j = L.bottom();
        const Bitset below = L.down_set(x) & atom_set;
        for (auto a = below.find_first(); a != Bitset::npos; a = below.find_next(a)) {
            j = L.join(j, a);
        }
        if (j != x) {
            rep.violated_axiom = "NotAtomistic";
            rep.witness = std::pair{x, x};
            rep.diagnostic = "NotAtomistic: element " + L.label(x)
                             + " is not the join of the atoms below it";
            return rep;
        }
    }

    for (std::size_t x = 0; x < L.size(); ++x) {
        for (std::size_t y = x + 1; y < L.size(); ++y) {
            const auto lhs = L.rank(L.meet(x, y)) + L.rank(L.join(x, y));
            if (lhs > L.rank(x) + L.rank(y)) {
                rep.violated_axiom = "NotSemimodular";
                rep.witness = std::pair{x, y};
                rep.diagnostic = "NotSemimodular: r(x^y)+r(xvy) > r(x)+r(y) for x=" + L.label(x)
                                 + ", y=" + L.label(y);
                return rep;
            }
        }
    }
    rep.geometric = true;
    return rep;
}

MobiusTable mobius(const FiniteLattice &L, std::size_t x)
{
    if (x >= L.size()) {
        raise(error_code::index_out_of_range, "mobius base " + std::to_string(x));
    }
    MobiusTable t;
    t.base = x;
    t.values.assign(L.size(), BigInt(0));
    const Bitset &above = L.up_set(x);
    // Rank order guarantees every y < z in [x, z] is finished before z.
    for (auto z : L.rank_order()) {
        if (!above.test(z)) {
            continue;
        }
        if (z == x) {
            t.values[z] = 1;
            continue;
        }
        const Bitset between = above & L.down_set(z);
        BigInt acc = 0;
        for (auto y = between.find_first(); y != Bitset::npos; y = between.find_next(y)) {
            if (y != z) {
                acc += t.values[y];
            }
        }
        t.values[z] = -acc;
    }
    return t;
}

std::vector<std::size_t> interval_elements(const FiniteLattice &L, std::size_t x, std::size_t y)
{
    if (x >= L.size() || y >= L.size()) {
        raise(error_code::index_out_of_range, "interval endpoint out of range");
    }
    if (!L.leq(x, y)) {
        raise(error_code::not_comparable, L.label(x) + " is not below " + L.label(y));
    }
    const Bitset members = L.up_set(x) & L.down_set(y);
    std::vector<std::size_t> out;
    out.reserve(members.count());
    for (auto u = members.find_first(); u != Bitset::npos; u = members.find_next(u)) {
        out.push_back(u);
    }
    return out;
}

FiniteLattice interval(const FiniteLattice &L, std::size_t x, std::size_t y)
{
    const auto elems = interval_elements(L, x, y);
    std::vector<std::size_t> local(L.size(), L.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        local[elems[i]] = i;
    }
    std::vector<Cover> sub;
    for (auto u : elems) {
        for (auto v : L.upper_covers(u)) {
            if (local[v] != L.size()) {
                sub.emplace_back(local[u], local[v]);
            }
        }
    }
    std::vector<std::string> labels;
    if (!L.labels().empty()) {
        for (auto u : elems) {
            labels.push_back(L.labels()[u]);
        }
    }
    return FiniteLattice::build(sub, elems.size(), std::move(labels));
}

std::vector<BigInt> whitney_first_lattice(const FiniteLattice &L, const MobiusTable &from_bottom)
{
    std::vector<BigInt> w(L.rank() + 1, BigInt(0));
    for (std::size_t x = 0; x < L.size(); ++x) {
        w[L.rank(x)] += from_bottom[x];
    }
    return w;
}

std::vector<BigInt> whitney_first_lattice(const FiniteLattice &L)
{
    return whitney_first_lattice(L, mobius(L, L.bottom()));
}

std::vector<BigInt> whitney_second_lattice(const FiniteLattice &L)
{
    std::vector<BigInt> W(L.rank() + 1, BigInt(0));
    for (std::size_t x = 0; x < L.size(); ++x) {
        W[L.rank(x)] += 1;
    }
    return W;
}

std::vector<BigInt> partial_mobius_sums(const FiniteLattice &L)
{
    auto w = whitney_first_lattice(L);
    for (std::size_t i = 1; i < w.size(); ++i) {
        w[i] += w[i - 1];
    }
    return w;
}

BigInt partial_mobius_sum(const FiniteLattice &L, std::size_t k)
{
    const auto sums = partial_mobius_sums(L);
    return sums[std::min(k, sums.size() - 1)];
}

} // namespace geosieve
