#ifndef GEOSIEVE_POSET_HPP
#define GEOSIEVE_POSET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include <geosieve/bigint.hpp>

namespace geosieve
{

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// A cover pair (x, y) means x <: y.
using Cover = std::pair<std::size_t, std::size_t>;

// An explicit finite graded lattice, immutable after construction.
//
// The order is stored as its reflexive-transitive closure: up_set(x) holds
// every y with x <= y and down_set(x) every y with y <= x. Meets and joins are
// read off as the minimum-rank element of an intersection of such sets.
class FiniteLattice
{
public:
    // Validates and closes the cover relation. Throws geosieve_error with
    // index_out_of_range, duplicate_cover, cyclic, multiple_minima,
    // multiple_maxima, not_graded or not_a_lattice.
    static FiniteLattice build(std::span<const Cover> covers, std::size_t n_elems,
                               std::vector<std::string> labels = {});

    std::size_t size() const noexcept
    {
        return m_rank.size();
    }
    const std::vector<Cover> &covers() const noexcept
    {
        return m_covers;
    }
    std::size_t bottom() const noexcept
    {
        return m_bottom;
    }
    std::size_t top() const noexcept
    {
        return m_top;
    }
    unsigned rank(std::size_t x) const
    {
        return m_rank[x];
    }
    // Rank of the lattice, i.e. of its top element.
    unsigned rank() const noexcept
    {
        return m_rank[m_top];
    }
    bool leq(std::size_t x, std::size_t y) const
    {
        return m_up[x].test(y);
    }
    const Bitset &up_set(std::size_t x) const
    {
        return m_up[x];
    }
    const Bitset &down_set(std::size_t x) const
    {
        return m_down[x];
    }
    const std::vector<std::size_t> &upper_covers(std::size_t x) const
    {
        return m_upper_covers[x];
    }
    // All elements sorted by (rank, index).
    const std::vector<std::size_t> &rank_order() const noexcept
    {
        return m_rank_order;
    }
    const std::vector<std::string> &labels() const noexcept
    {
        return m_labels;
    }
    std::string label(std::size_t x) const;

    std::size_t meet(std::size_t x, std::size_t y) const;
    std::size_t join(std::size_t x, std::size_t y) const;

private:
    FiniteLattice() = default;

    std::size_t least_of(const Bitset &s) const;
    std::size_t greatest_of(const Bitset &s) const;

    std::vector<Cover> m_covers;
    std::vector<std::vector<std::size_t>> m_upper_covers;
    std::vector<Bitset> m_up;
    std::vector<Bitset> m_down;
    std::vector<unsigned> m_rank;
    std::vector<std::size_t> m_rank_order;
    std::vector<std::string> m_labels;
    std::size_t m_bottom = 0;
    std::size_t m_top = 0;
};

inline FiniteLattice build_lattice(std::span<const Cover> covers, std::size_t n_elems,
                                   std::vector<std::string> labels = {})
{
    return FiniteLattice::build(covers, n_elems, std::move(labels));
}

inline std::size_t meet(const FiniteLattice &L, std::size_t x, std::size_t y)
{
    return L.meet(x, y);
}

inline std::size_t join(const FiniteLattice &L, std::size_t x, std::size_t y)
{
    return L.join(x, y);
}

// Elements covering the bottom, in increasing index order.
std::vector<std::size_t> atoms(const FiniteLattice &L);

struct GeometricReport {
    bool geometric = false;
    // Empty when geometric, otherwise "NotAtomistic" or "NotSemimodular".
    std::string violated_axiom;
    // Offending element (atomistic) or pair (semimodular).
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::string diagnostic;
};

GeometricReport is_geometric(const FiniteLattice &L);

// Values mu(base, y) for every element y, zero where base is not <= y.
struct MobiusTable {
    std::size_t base = 0;
    std::vector<BigInt> values;

    const BigInt &operator[](std::size_t y) const
    {
        return values[y];
    }
};

MobiusTable mobius(const FiniteLattice &L, std::size_t x);

// The sub-lattice [x, y], re-indexed in increasing order of the original
// indices, with rank shifted so that x has rank 0. Labels are carried over.
// Throws not_comparable unless x <= y.
FiniteLattice interval(const FiniteLattice &L, std::size_t x, std::size_t y);

// Index map used by interval(): position i of the result is element
// interval_elements(L, x, y)[i] of L.
std::vector<std::size_t> interval_elements(const FiniteLattice &L, std::size_t x, std::size_t y);

// w_i = sum of mu(bottom, x) over elements of rank i, i = 0..rank(L).
std::vector<BigInt> whitney_first_lattice(const FiniteLattice &L);
std::vector<BigInt> whitney_first_lattice(const FiniteLattice &L, const MobiusTable &from_bottom);

// W_i = number of elements of rank i.
std::vector<BigInt> whitney_second_lattice(const FiniteLattice &L);

// Sum of mu(bottom, x) over elements of rank <= k.
BigInt partial_mobius_sum(const FiniteLattice &L, std::size_t k);

// Prefix sums of whitney_first_lattice, one per k = 0..rank(L).
std::vector<BigInt> partial_mobius_sums(const FiniteLattice &L);

} // namespace geosieve

#endif
