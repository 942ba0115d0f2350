#include <gtest/gtest.h>

#include <geosieve/asym.hpp>
#include <geosieve/errors.hpp>

using namespace geosieve;

namespace
{

// Reference values computed with an independent mpmath implementation at 60
// digits (bisection on the saddle equation, exact r-Dowling sums).
struct Frozen {
    unsigned m, r, n;
    const char *delta;
};

const Frozen frozen_delta[] = {
    {1, 1, 2, "0.6748316143423993509028640916965980248554"},
    {1, 1, 10, "1.633506170155846384193165178978923428636"},
    {1, 1, 100, "3.359275045369593541052674833834732749537"},
    {2, 3, 100, "1.940989276329317904052567688932585217667"},
};

} // namespace

TEST(Asym, DeltaMatchesReference)
{
    PrecisionGuard guard(50);
    for (const auto &f : frozen_delta) {
        const Real d = solve_delta(f.m, f.r, f.n, 50);
        EXPECT_LT(abs(d - Real(f.delta)), Real("1e-35")) << f.m << "," << f.r << "," << f.n;
        EXPECT_LT(abs(saddle_residual(f.m, f.r, f.n, d)), Real("1e-28"));
    }
}

TEST(Asym, SaddleValuesMatchReference)
{
    PrecisionGuard guard(50);
    const auto s = saddle_values(1, 1, 100, 50);
    EXPECT_LT(abs(s.g0 - Real("31.1276026307631909850804706385")), Real("1e-25"));
    EXPECT_LT(abs(s.g2 - Real("212.321387853258234680814008399")), Real("1e-25"));
    EXPECT_LT(abs(s.log_asymptotic - Real("269.749896470371172870374049368")), Real("1e-25"));

    const auto t = saddle_values(2, 3, 100, 50);
    EXPECT_LT(abs(t.log_asymptotic - Real("323.012030637625752352275800153")), Real("1e-25"));
}

TEST(Asym, RelativeErrorShrinks)
{
    PrecisionGuard guard(50);
    Real prev = 1;
    for (unsigned n : {50u, 100u, 200u}) {
        const auto c = compare_exact(1, 1, n, 50);
        EXPECT_LT(c.rel_err, prev);
        EXPECT_GT(c.ratio, 1);
        prev = c.rel_err;
    }
    EXPECT_LT(abs(compare_exact(1, 1, 50, 50).rel_err - Real("0.007151350176602312")), Real("1e-15"));
}

TEST(Asym, BadParameters)
{
    EXPECT_THROW(solve_delta(0, 1, 10), geosieve_error);
    EXPECT_THROW(solve_delta(1, 1, 0), geosieve_error);
    EXPECT_THROW(solve_delta(1, 1, 10, 20), geosieve_error);
}

TEST(Asym, PrecisionGuardRestores)
{
    const auto before = Real::default_precision();
    {
        PrecisionGuard g(80);
        EXPECT_EQ(Real::default_precision(), 80u);
    }
    EXPECT_EQ(Real::default_precision(), before);
}
