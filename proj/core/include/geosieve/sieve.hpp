#ifndef GEOSIEVE_SIEVE_HPP
#define GEOSIEVE_SIEVE_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <geosieve/bigint.hpp>
#include <geosieve/poset.hpp>

namespace geosieve
{

// A sieve problem on a geometric lattice of rank n: count the members a of A
// with a ^ tau = bottom, where tau is the join of the atom set T.
//
// density[c] is f(c) for co-rank c = n - rank(y), c = 0..n. Instances are
// immutable once made and share their lattice.
class SieveInstance
{
public:
    // Validates atoms, computes tau and checks f >= 0, X > 0. Throws
    // invalid_instance. Pass check_geometric = false only for lattices already
    // known to be geometric.
    static SieveInstance make(std::shared_ptr<const FiniteLattice> lattice, std::vector<std::size_t> sifted,
                              std::vector<std::size_t> sieving_atoms, std::vector<Rational> density,
                              Rational scale, bool check_geometric = true);

    // A = every element of the lattice.
    static std::vector<std::size_t> all_elements(const FiniteLattice &L);

    const FiniteLattice &lattice() const noexcept
    {
        return *m_lattice;
    }
    const std::shared_ptr<const FiniteLattice> &lattice_ptr() const noexcept
    {
        return m_lattice;
    }
    const std::vector<std::size_t> &sifted() const noexcept
    {
        return m_sifted;
    }
    const std::vector<std::size_t> &sieving_atoms() const noexcept
    {
        return m_atoms;
    }
    std::size_t tau() const noexcept
    {
        return m_tau;
    }
    const std::vector<Rational> &density() const noexcept
    {
        return m_density;
    }
    const Rational &scale() const noexcept
    {
        return m_scale;
    }
    unsigned lattice_rank() const noexcept
    {
        return m_lattice->rank();
    }
    unsigned co_rank(std::size_t y) const
    {
        return m_lattice->rank() - m_lattice->rank(y);
    }

private:
    SieveInstance() = default;

    std::shared_ptr<const FiniteLattice> m_lattice;
    std::vector<std::size_t> m_sifted;
    std::vector<std::size_t> m_atoms;
    std::size_t m_tau = 0;
    std::vector<Rational> m_density;
    Rational m_scale;
};

// #{a in A : a ^ tau = bottom}.
std::size_t sifted_count_exact(const SieveInstance &inst);

// #{a in A : a >= y}. Throws not_comparable unless y <= tau.
std::size_t count_above(const SieveInstance &inst, std::size_t y);

// X * sum_{k=0}^{r(tau)} f(n-k) w_k([bottom, tau]).
Rational sieve_main_term(const SieveInstance &inst);

// sum_{k=0}^{r(tau)} (n-k) f(n-k) |w_k([bottom, tau])|, the error certificate
// with implied constant 1.
Rational sieve_error_bound(const SieveInstance &inst);

// sum_{y <= tau} mu(bottom, y) #A_y; equals the sifted count.
BigInt sifted_count_mobius(const SieveInstance &inst);

struct BrunBounds {
    BigInt lower;
    BigInt upper;
};

// Truncated Mobius expansions: the upper bound keeps rank(y) <= 2k, the lower
// bound rank(y) <= 2k + 1.
BrunBounds brun_bounds(const SieveInstance &inst, std::size_t k);

} // namespace geosieve

#endif
