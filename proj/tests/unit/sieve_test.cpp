#include <memory>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <geosieve/dowling.hpp>
#include <geosieve/errors.hpp>
#include <geosieve/lattice_generators.hpp>
#include <geosieve/sieve.hpp>

using namespace geosieve;

namespace
{

std::vector<Rational> boolean_density(unsigned n)
{
    // In B_n the up-set of a co-rank c element has 2^c elements.
    std::vector<Rational> f;
    for (unsigned c = 0; c <= n; ++c) {
        f.emplace_back(BigInt(1) << c, BigInt(1) << n);
    }
    return f;
}

error_code code_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const geosieve_error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no exception";
    return error_code::parse_error;
}

} // namespace

TEST(Sieve, BooleanFullSieve)
{
    auto L = std::make_shared<const FiniteLattice>(boolean_lattice(3));
    const auto inst = SieveInstance::make(L, SieveInstance::all_elements(*L), atoms(*L), boolean_density(3), 8);
    EXPECT_EQ(inst.tau(), L->top());
    EXPECT_EQ(sifted_count_exact(inst), 1u);
    EXPECT_EQ(sifted_count_mobius(inst), 1);
    EXPECT_EQ(sieve_main_term(inst), 1);
    const auto b = brun_bounds(inst, 0);
    EXPECT_EQ(b.upper, 8);
    EXPECT_EQ(b.lower, 8 - 12);
    EXPECT_EQ(brun_bounds(inst, 1).upper, 8 - 12 + 6);
    EXPECT_EQ(brun_bounds(inst, 2).lower, 1);
}

TEST(Sieve, EmptySievingSetCountsEverything)
{
    auto L = std::make_shared<const FiniteLattice>(partition_lattice(4));
    std::vector<std::size_t> A{0, 3, 5, 7, 11};
    std::vector<Rational> f(L->rank() + 1, Rational(1));
    const auto inst = SieveInstance::make(L, A, {}, f, 1);
    EXPECT_EQ(inst.tau(), L->bottom());
    EXPECT_EQ(sifted_count_exact(inst), A.size());
    EXPECT_EQ(brun_bounds(inst, 0).lower, BigInt(A.size()));
}

TEST(Sieve, DowlingSpotValue)
{
    auto D = std::make_shared<const DowlingLattice>(build_Qn(3, 2));
    const auto inst = dowling_sieve_instance(D, 1);
    EXPECT_EQ(D->lattice.rank(inst.tau()), 1u);
    EXPECT_EQ(sifted_count_exact(inst), 18u);
    EXPECT_EQ(sifted_count_mobius(inst), 18);
    EXPECT_EQ(sieve_main_term(inst), 18);
    EXPECT_EQ(sieve_error_bound(inst), Rational(7, 2));
    EXPECT_EQ(brun_bounds(inst, 0).lower, 18);
    EXPECT_EQ(brun_bounds(inst, 0).upper, 24);
    EXPECT_EQ(dowling_sieve_closed_form(2, 3, 1), 18);
}

TEST(Sieve, SandwichOnRandomInstances)
{
    auto L = std::make_shared<const FiniteLattice>(partition_lattice(5));
    const auto at = atoms(*L);
    std::mt19937 rng(11);
    std::bernoulli_distribution coin(0.4);
    std::vector<Rational> f(L->rank() + 1, Rational(1, 2));
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::size_t> A, T;
        for (std::size_t x = 0; x < L->size(); ++x) {
            if (coin(rng)) {
                A.push_back(x);
            }
        }
        for (auto a : at) {
            if (coin(rng)) {
                T.push_back(a);
            }
        }
        const auto inst = SieveInstance::make(L, A, T, f, 10);
        const BigInt exact(sifted_count_exact(inst));
        EXPECT_EQ(sifted_count_mobius(inst), exact);
        const unsigned r_tau = L->rank(inst.tau());
        for (std::size_t k = 0; k <= 3; ++k) {
            const auto b = brun_bounds(inst, k);
            EXPECT_LE(b.lower, exact);
            EXPECT_GE(b.upper, exact);
            if (2 * k >= r_tau) {
                EXPECT_EQ(b.lower, exact);
                EXPECT_EQ(b.upper, exact);
            }
        }
    }
}

TEST(Sieve, InstanceValidation)
{
    auto L = std::make_shared<const FiniteLattice>(boolean_lattice(2));
    const auto f = boolean_density(2);
    const auto all = SieveInstance::all_elements(*L);
    EXPECT_EQ(code_of([&] { SieveInstance::make(L, all, {3}, f, 4); }), error_code::invalid_instance);
    EXPECT_EQ(code_of([&] { SieveInstance::make(L, all, {1, 1}, f, 4); }), error_code::invalid_instance);
    EXPECT_EQ(code_of([&] { SieveInstance::make(L, all, {1}, {f[0]}, 4); }), error_code::invalid_instance);
    EXPECT_EQ(code_of([&] { SieveInstance::make(L, all, {1}, f, 0); }), error_code::invalid_instance);
    EXPECT_EQ(code_of([&] { SieveInstance::make(L, {9}, {1}, f, 4); }), error_code::invalid_instance);
    auto C = std::make_shared<const FiniteLattice>(chain_lattice(2));
    EXPECT_EQ(code_of([&] { SieveInstance::make(C, {0}, {1}, {1, 1, 1}, 1); }), error_code::invalid_instance);

    const auto inst = SieveInstance::make(L, all, {1}, f, 4);
    EXPECT_EQ(code_of([&] { count_above(inst, 2); }), error_code::not_comparable);
}
