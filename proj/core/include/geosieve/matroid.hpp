#ifndef GEOSIEVE_MATROID_HPP
#define GEOSIEVE_MATROID_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <geosieve/bigint.hpp>
#include <geosieve/poset.hpp>

namespace geosieve
{

// Subset of the ground set {0..E-1}, bit i set iff element i is present.
using Subset = std::uint64_t;

inline constexpr unsigned max_ground_size = 63;

// A matroid given by a rank function on subsets of {0..E-1}.
//
// Two backends share this interface: an explicit family of independent sets
// (rank via greedy extension, valid because of the exchange property) and a
// pure rank oracle (uniform and graphic matroids).
class Matroid
{
public:
    using RankOracle = std::function<unsigned(Subset)>;

    // Checks the independence axioms; throws invalid_matroid on failure.
    static Matroid from_independents(unsigned ground_size, std::vector<Subset> independents);
    static Matroid from_rank_oracle(unsigned ground_size, RankOracle oracle, std::string kind);

    static Matroid uniform(unsigned k, unsigned n);
    // Graphic matroid of a graph; element i is edges[i].
    static Matroid graphic(unsigned vertices, std::vector<std::pair<unsigned, unsigned>> edges);
    static Matroid complete_graph(unsigned vertices);
    // Every subset independent.
    static Matroid free_matroid(unsigned n);

    unsigned ground_size() const noexcept
    {
        return m_ground_size;
    }
    Subset ground() const noexcept
    {
        return m_ground_size == 0 ? 0 : (~Subset{0} >> (64 - m_ground_size));
    }
    const std::string &kind() const noexcept
    {
        return m_kind;
    }

    unsigned rank_of(Subset a) const;
    unsigned rank() const
    {
        return rank_of(ground());
    }
    bool is_independent(Subset a) const;

private:
    Matroid() = default;

    unsigned m_ground_size = 0;
    std::string m_kind;
    RankOracle m_rank;
};

inline unsigned rank_of(const Matroid &M, Subset a)
{
    return M.rank_of(a);
}

// {x : r(A + x) = r(A)}.
Subset closure(const Matroid &M, Subset a);

bool is_flat(const Matroid &M, Subset a);

// Loops, and pairs of parallel non-loop elements.
std::vector<unsigned> loops(const Matroid &M);
std::vector<std::pair<unsigned, unsigned>> parallel_pairs(const Matroid &M);
bool is_simple(const Matroid &M);

struct FlatsLattice {
    FiniteLattice lattice;
    // flats[i] is the flat represented by lattice element i.
    std::vector<Subset> flats;
};

// All flats ordered by inclusion. Throws not_simple on loops or parallel
// elements, too_large when more than max_flats flats are reached.
FlatsLattice flats_lattice(const Matroid &M, std::size_t max_flats = 200000);

// Coefficients w_0..w_r of chi_M(lambda) = sum_i w_i lambda^(r-i).
struct CharPoly {
    std::vector<BigInt> coefficients;

    // Evaluates the polynomial at lambda.
    BigInt operator()(const BigInt &lambda) const;
};

inline constexpr unsigned default_char_poly_cap = 20;

// Direct sum over all 2^E subsets; throws too_large when E > cap.
CharPoly char_poly(const Matroid &M, unsigned cap = default_char_poly_cap);

// Signed count of the subsets of F whose closure is F. Throws not_a_flat.
BigInt mobius_via_closure(const Matroid &M, Subset flat);

struct Simplification {
    Matroid matroid;
    // element_map[e] is the new index of e, or nullopt if e is a loop.
    std::vector<std::optional<unsigned>> element_map;
    // representative[i] is the original element standing for new element i.
    std::vector<unsigned> representative;
};

Simplification simplify(const Matroid &M);

std::string subset_to_string(Subset a);

} // namespace geosieve

#endif
