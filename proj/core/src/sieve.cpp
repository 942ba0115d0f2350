#include <geosieve/sieve.hpp>

#include <algorithm>
#include <set>
#include <string>

#include <geosieve/brun.hpp>
#include <geosieve/errors.hpp>

namespace geosieve
{

namespace
{

// Mobius values from the bottom restricted to [bottom, tau], together with
// the up-counts #A_y for each such y.
struct TruncationData {
    std::vector<std::size_t> below_tau;
    std::vector<BigInt> mu;
    std::vector<std::size_t> above_count;
};

TruncationData truncation_data(const SieveInstance &inst)
{
    const auto &L = inst.lattice();
    const auto tau_interval = interval(L, L.bottom(), inst.tau());
    const auto elems = interval_elements(L, L.bottom(), inst.tau());
    // mu on [bottom, tau] equals mu on L restricted to that interval.
    const auto mu = mobius(tau_interval, tau_interval.bottom());

    TruncationData d;
    d.below_tau = elems;
    d.mu.reserve(elems.size());
    d.above_count.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        d.mu.push_back(mu[i]);
        d.above_count.push_back(count_above(inst, elems[i]));
    }
    return d;
}

BigInt truncated_sum(const SieveInstance &inst, const TruncationData &d, std::size_t cutoff)
{
    const auto &L = inst.lattice();
    BigInt acc = 0;
    for (std::size_t i = 0; i < d.below_tau.size(); ++i) {
        if (L.rank(d.below_tau[i]) <= cutoff) {
            acc += d.mu[i] * d.above_count[i];
        }
    }
    return acc;
}

std::vector<BigInt> tau_whitney_first(const SieveInstance &inst)
{
    const auto &L = inst.lattice();
    const auto sub = interval(L, L.bottom(), inst.tau());
    if (!is_geometric(sub).geometric) {
        raise(error_code::not_geometric, "[bottom, tau] failed the geometric lattice axioms");
    }
    return whitney_first_lattice(sub);
}

} // namespace

SieveInstance SieveInstance::make(std::shared_ptr<const FiniteLattice> lattice, std::vector<std::size_t> sifted,
                                  std::vector<std::size_t> sieving_atoms, std::vector<Rational> density,
                                  Rational scale, bool check_geometric)
{
    if (!lattice) {
        raise(error_code::invalid_instance, "missing lattice");
    }
    const auto &L = *lattice;
    if (check_geometric) {
        const auto geo = is_geometric(L);
        if (!geo.geometric) {
            raise(error_code::invalid_instance, "lattice is not geometric: " + geo.diagnostic);
        }
    }
    for (auto a : sifted) {
        if (a >= L.size()) {
            raise(error_code::invalid_instance, "element " + std::to_string(a) + " of A out of range");
        }
    }
    const auto at = atoms(L);
    std::size_t tau = L.bottom();
    std::set<std::size_t> seen;
    for (auto t : sieving_atoms) {
        if (!std::binary_search(at.begin(), at.end(), t)) {
            raise(error_code::invalid_instance, "element " + std::to_string(t) + " of T is not an atom");
        }
        if (!seen.insert(t).second) {
            raise(error_code::invalid_instance, "atom " + std::to_string(t) + " repeated in T");
        }
        tau = L.join(tau, t);
    }
    if (density.size() != L.rank() + 1) {
        raise(error_code::invalid_instance, "f must have " + std::to_string(L.rank() + 1)
                                                + " entries (co-ranks 0..n), got " + std::to_string(density.size()));
    }
    for (std::size_t c = 0; c < density.size(); ++c) {
        if (density[c] < 0) {
            raise(error_code::invalid_instance, "f(" + std::to_string(c) + ") is negative");
        }
    }
    if (scale <= 0) {
        raise(error_code::invalid_instance, "X must be positive");
    }

    SieveInstance inst;
    inst.m_lattice = std::move(lattice);
    inst.m_sifted = std::move(sifted);
    inst.m_atoms = std::move(sieving_atoms);
    inst.m_tau = tau;
    inst.m_density = std::move(density);
    inst.m_scale = std::move(scale);
    return inst;
}

std::vector<std::size_t> SieveInstance::all_elements(const FiniteLattice &L)
{
    std::vector<std::size_t> out(L.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = i;
    }
    return out;
}

std::size_t sifted_count_exact(const SieveInstance &inst)
{
    const auto &L = inst.lattice();
    return static_cast<std::size_t>(std::count_if(inst.sifted().begin(), inst.sifted().end(), [&](std::size_t a) {
        return L.meet(a, inst.tau()) == L.bottom();
    }));
}

std::size_t count_above(const SieveInstance &inst, std::size_t y)
{
    const auto &L = inst.lattice();
    if (y >= L.size() || !L.leq(y, inst.tau())) {
        raise(error_code::not_comparable, "count_above needs y <= tau");
    }
    const auto &up = L.up_set(y);
    return static_cast<std::size_t>(
        std::count_if(inst.sifted().begin(), inst.sifted().end(), [&](std::size_t a) { return up.test(a); }));
}

Rational sieve_main_term(const SieveInstance &inst)
{
    const auto w = tau_whitney_first(inst);
    const unsigned n = inst.lattice_rank();
    Rational acc = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        acc += inst.density()[n - k] * Rational(w[k]);
    }
    return inst.scale() * acc;
}

Rational sieve_error_bound(const SieveInstance &inst)
{
    const auto w = tau_whitney_first(inst);
    const unsigned n = inst.lattice_rank();
    Rational acc = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        acc += Rational(n - k) * inst.density()[n - k] * Rational(abs(w[k]));
    }
    return acc;
}

BigInt sifted_count_mobius(const SieveInstance &inst)
{
    const auto d = truncation_data(inst);
    return truncated_sum(inst, d, inst.lattice().rank());
}

BrunBounds brun_bounds(const SieveInstance &inst, std::size_t k)
{
    const auto d = truncation_data(inst);
    return BrunBounds{truncated_sum(inst, d, 2 * k + 1), truncated_sum(inst, d, 2 * k)};
}

} // namespace geosieve
