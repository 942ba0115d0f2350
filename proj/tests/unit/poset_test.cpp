#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <geosieve/errors.hpp>
#include <geosieve/lattice_generators.hpp>
#include <geosieve/poset.hpp>

#include "oracles.hpp"

using namespace geosieve;

namespace
{

std::vector<BigInt> big(std::initializer_list<long> xs)
{
    std::vector<BigInt> out;
    for (auto x : xs) {
        out.emplace_back(x);
    }
    return out;
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

TEST(Poset, DiamondBasics)
{
    // 0 < a, b < 1
    std::vector<Cover> c{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    const auto L = build_lattice(c, 4);
    EXPECT_EQ(L.bottom(), 0u);
    EXPECT_EQ(L.top(), 3u);
    EXPECT_EQ(L.rank(), 2u);
    EXPECT_EQ(L.meet(1, 2), 0u);
    EXPECT_EQ(L.join(1, 2), 3u);
    EXPECT_TRUE(L.leq(0, 3));
    EXPECT_FALSE(L.leq(1, 2));
    EXPECT_EQ(atoms(L), (std::vector<std::size_t>{1, 2}));
}

TEST(Poset, SingletonIsLegal)
{
    const auto L = build_lattice({}, 1);
    EXPECT_EQ(L.rank(), 0u);
    EXPECT_EQ(L.bottom(), L.top());
    EXPECT_EQ(mobius(L, 0)[0], 1);
    EXPECT_EQ(partial_mobius_sum(L, 0), 1);
    EXPECT_EQ(partial_mobius_sum(L, 5), 1);
    EXPECT_TRUE(is_geometric(L).geometric);
}

TEST(Poset, ConstructionErrors)
{
    std::vector<Cover> cyc{{0, 1}, {1, 2}, {2, 1}};
    EXPECT_EQ(code_of([&] { build_lattice(cyc, 3); }), error_code::cyclic);

    std::vector<Cover> dup{{0, 1}, {0, 1}};
    EXPECT_EQ(code_of([&] { build_lattice(dup, 2); }), error_code::duplicate_cover);

    std::vector<Cover> oob{{0, 5}};
    EXPECT_EQ(code_of([&] { build_lattice(oob, 2); }), error_code::index_out_of_range);

    std::vector<Cover> two_min{{0, 2}, {1, 2}};
    EXPECT_EQ(code_of([&] { build_lattice(two_min, 3); }), error_code::multiple_minima);

    std::vector<Cover> two_max{{0, 1}, {0, 2}};
    EXPECT_EQ(code_of([&] { build_lattice(two_max, 3); }), error_code::multiple_maxima);

    // Pentagon N_5: 0 < a < b < 1 and 0 < c < 1 is not graded.
    std::vector<Cover> pent{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
    EXPECT_EQ(code_of([&] { build_lattice(pent, 5); }), error_code::not_graded);

    // Two atoms under two coatoms, no join.
    std::vector<Cover> bowtie{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
    EXPECT_EQ(code_of([&] { build_lattice(bowtie, 6); }), error_code::not_a_lattice);
}

TEST(Poset, BooleanMobiusIsSigned)
{
    for (unsigned n = 0; n <= 6; ++n) {
        const auto L = boolean_lattice(n);
        const auto mu = mobius(L, L.bottom());
        for (std::size_t x = 0; x < L.size(); ++x) {
            const BigInt expect = (L.rank(x) % 2 == 0) ? 1 : -1;
            EXPECT_EQ(mu[x], expect);
        }
    }
}

TEST(Poset, PartitionMobiusTop)
{
    // mu(0,1) on Pi_n is (-1)^{n-1}(n-1)!.
    for (unsigned n = 1; n <= 6; ++n) {
        const auto L = partition_lattice(n);
        const BigInt sgn = (n % 2 == 1) ? 1 : -1;
        EXPECT_EQ(mobius(L, L.bottom())[L.top()], sgn * oracle::factorial(n - 1)) << n;
    }
}

TEST(Poset, GeneratorSizes)
{
    const auto bell = oracle::bell(8);
    for (unsigned n = 1; n <= 7; ++n) {
        EXPECT_EQ(BigInt(partition_lattice(n).size()), bell[n]);
        EXPECT_EQ(set_partitions(n).size(), partition_lattice(n).size());
    }
    EXPECT_EQ(chain_lattice(4).size(), 5u);
    EXPECT_EQ(divisor_lattice(12).size(), 6u);
    EXPECT_EQ(boolean_lattice(5).size(), 32u);
}

TEST(Poset, MobiusDefiningIdentityAllPairs)
{
    // sum_{x <= z <= y} mu(x, z) = [x == y]
    for (const auto &L : {boolean_lattice(4), partition_lattice(4), divisor_lattice(60), chain_lattice(3)}) {
        for (std::size_t x = 0; x < L.size(); ++x) {
            const auto mu = mobius(L, x);
            for (std::size_t y = 0; y < L.size(); ++y) {
                if (!L.leq(x, y)) {
                    continue;
                }
                BigInt s = 0;
                for (std::size_t z = 0; z < L.size(); ++z) {
                    if (L.leq(x, z) && L.leq(z, y)) {
                        s += mu[z];
                    }
                }
                EXPECT_EQ(s, x == y ? 1 : 0);
            }
        }
    }
}

TEST(Poset, MeetJoinAxiomsOnRandomPairs)
{
    const auto L = partition_lattice(5);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, L.size() - 1);
    for (int i = 0; i < 400; ++i) {
        const auto x = pick(rng), y = pick(rng), z = pick(rng);
        const auto m = L.meet(x, y), j = L.join(x, y);
        EXPECT_TRUE(L.leq(m, x) && L.leq(m, y));
        EXPECT_TRUE(L.leq(x, j) && L.leq(y, j));
        EXPECT_EQ(L.meet(x, y), L.meet(y, x));
        EXPECT_EQ(L.join(x, L.join(y, z)), L.join(L.join(x, y), z));
        EXPECT_EQ(L.meet(x, L.join(x, y)), x);
        if (L.leq(z, x) && L.leq(z, y)) {
            EXPECT_TRUE(L.leq(z, m));
        }
        // Semimodularity.
        EXPECT_LE(L.rank(j) + L.rank(m), L.rank(x) + L.rank(y));
    }
}

TEST(Poset, GeometricVerdicts)
{
    EXPECT_TRUE(is_geometric(boolean_lattice(4)).geometric);
    EXPECT_TRUE(is_geometric(partition_lattice(5)).geometric);

    const auto chain = is_geometric(chain_lattice(3));
    EXPECT_FALSE(chain.geometric);
    EXPECT_EQ(chain.violated_axiom, "NotAtomistic");

    // Divisors of 12 are distributive but 4 is not a join of atoms.
    EXPECT_EQ(is_geometric(divisor_lattice(12)).violated_axiom, "NotAtomistic");

    // Atomistic but not semimodular: atoms a, b under x and c, d under y,
    // so a v c = 1 sits two ranks above a.
    std::vector<Cover> c{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}, {5, 7}, {6, 7}};
    const auto L = build_lattice(c, 8);
    const auto rep = is_geometric(L);
    EXPECT_FALSE(rep.geometric);
    EXPECT_EQ(rep.violated_axiom, "NotSemimodular");
    EXPECT_FALSE(rep.diagnostic.empty());
}

TEST(Poset, IntervalIsSubLattice)
{
    const auto L = boolean_lattice(4);
    const auto I = interval(L, 0b0001, 0b1011);
    EXPECT_EQ(I.size(), 4u);
    EXPECT_EQ(I.rank(), 2u);
    EXPECT_EQ(interval_elements(L, 0b0001, 0b1011).size(), 4u);
    try {
        interval(L, 0b0001, 0b0010);
        FAIL();
    } catch (const geosieve_error &e) {
        EXPECT_EQ(e.code(), error_code::not_comparable);
    }
}

TEST(Poset, WhitneyNumbers)
{
    EXPECT_EQ(whitney_first_lattice(boolean_lattice(3)), big({1, -3, 3, -1}));
    EXPECT_EQ(whitney_second_lattice(boolean_lattice(3)), big({1, 3, 3, 1}));
    EXPECT_EQ(partial_mobius_sums(boolean_lattice(3)), big({1, -2, 1, 0}));

    const auto s1 = oracle::stirling_first(7);
    const auto S2 = oracle::stirling_second(7);
    for (unsigned n = 1; n <= 6; ++n) {
        const auto L = partition_lattice(n);
        const auto w = whitney_first_lattice(L);
        const auto W = whitney_second_lattice(L);
        for (unsigned k = 0; k < n; ++k) {
            const BigInt sgn = (k % 2 == 0) ? 1 : -1;
            EXPECT_EQ(w[k], sgn * s1[n][n - k]);
            EXPECT_EQ(W[k], S2[n][n - k]);
        }
    }
}
