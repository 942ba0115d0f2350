#include <vector>

#include <gtest/gtest.h>

#include <geosieve/brun.hpp>
#include <geosieve/errors.hpp>
#include <geosieve/lattice_generators.hpp>
#include <geosieve/matroid.hpp>

using namespace geosieve;

namespace
{

std::vector<Rational> q(std::initializer_list<const char *> xs)
{
    std::vector<Rational> out;
    for (auto x : xs) {
        out.push_back(parse_rational(x));
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

TEST(Brun, UnimodalPeakIsSmallestIndex)
{
    const auto r = is_unimodal(q({"1", "3", "3", "1"}));
    EXPECT_TRUE(r.unimodal);
    EXPECT_EQ(r.peak, 1u);
    EXPECT_FALSE(is_unimodal(q({"1", "3", "1", "3"})).unimodal);
    EXPECT_TRUE(is_unimodal(q({"5"})).unimodal);
    EXPECT_EQ(code_of([] { is_unimodal(q({"1", "-1"})); }), error_code::negative_entry);
}

TEST(Brun, LogConcave)
{
    EXPECT_TRUE(is_log_concave(q({"1", "4", "6", "4", "1"})).log_concave);
    const auto r = is_log_concave(q({"1", "1", "3"}));
    EXPECT_FALSE(r.log_concave);
    EXPECT_EQ(r.first_violation, 1u);
    EXPECT_TRUE(is_log_concave(q({"1/2", "1", "2"})).log_concave);
}

TEST(Brun, AlternatingSumsOfBinomialRow)
{
    const auto r = alternating_partial_sums_check(q({"1", "3", "3", "1"}));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.partial_sums, q({"1", "-2", "1", "0"}));
}

TEST(Brun, AlternatingSumsRationalInput)
{
    const auto r = alternating_partial_sums_check(q({"1/2", "3/2", "3/2", "1/2"}));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.partial_sums.back(), 0);
}

TEST(Brun, HypothesisChecks)
{
    EXPECT_EQ(code_of([] { alternating_partial_sums_check(std::vector<Rational>{}); }),
              error_code::hypothesis_violated);
    EXPECT_EQ(code_of([] { alternating_partial_sums_check(q({"1", "2", "1", "2"})); }),
              error_code::hypothesis_violated);
    EXPECT_EQ(code_of([] { alternating_partial_sums_check(q({"1", "2", "2"})); }), error_code::hypothesis_violated);
    EXPECT_EQ(code_of([] { alternating_partial_sums_check(q({"1", "-1"})); }), error_code::hypothesis_violated);
}

TEST(Brun, SignViolation)
{
    const std::vector<BigInt> good{1, -2, 1, 0};
    EXPECT_FALSE(brun_sign_violation(good).has_value());
    const std::vector<BigInt> bad{1, 2, 1, 0};
    EXPECT_EQ(brun_sign_violation(bad), 1u);
}

TEST(Brun, VerifyBrunOnGeometricLattices)
{
    const auto rep = verify_brun(boolean_lattice(3));
    EXPECT_EQ(rep.partial_sums, (std::vector<BigInt>{1, -2, 1, 0}));
    for (unsigned n = 1; n <= 6; ++n) {
        const auto r = verify_brun(partition_lattice(n));
        EXPECT_EQ(r.partial_sums.back(), n == 1 ? 1 : 0);
        for (std::size_t k = 0; k < r.partial_sums.size(); ++k) {
            EXPECT_GE(r.partial_sums[k] * (k % 2 == 0 ? 1 : -1), 0);
        }
    }
    EXPECT_NO_THROW(verify_brun(flats_lattice(Matroid::complete_graph(5)).lattice));
}

TEST(Brun, VerifyBrunRejectsNonGeometric)
{
    EXPECT_EQ(code_of([] { verify_brun(chain_lattice(3)); }), error_code::not_geometric);
}

TEST(Brun, AbsoluteWhitney)
{
    const std::vector<BigInt> w{1, -6, 11, -6};
    EXPECT_EQ(absolute_whitney(w), (std::vector<BigInt>{1, 6, 11, 6}));
}
