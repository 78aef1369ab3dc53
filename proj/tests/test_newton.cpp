#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>

#include "renormlab/newton1d.hpp"

using namespace renormlab;

namespace {

Pair1D golden_seed(double c2 = 0.0, int m = 2, int n = 56)
{
    RotationNumber g = RotationNumber::golden();
    double lo = c2 == 0.0 ? 0.55 : 0.40;
    double hi = c2 == 0.0 ? 0.72 : 0.75;
    double w = tune_lift([&](double v) { return arnold_lift(v, c2); }, lo, hi, g, 22);
    Pair1D z = pair_from_circle_map(arnold_lift(w, c2), g, m, n);
    // a few renormalizations bring the seed close to the fixed point
    for (int k = 0; k < 4; ++k) z = renormalize(z).pair;
    return z;
}

} // namespace

TEST_CASE("golden fixed point: convergence, normalization, self-consistency")
{
    auto t0 = std::chrono::steady_clock::now();
    Pair1D seed = golden_seed();
    RotationNumber g = RotationNumber::golden();
    FixedPointResult fp = newton_fixed_point(seed, g);
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();

    CHECK(fp.sup_residual < 1e-9);
    CHECK(fp.residual < 1e-11);
    CHECK(secs < 300.0);

    // normalization rows: xi(0) = 1 essentially exactly
    CHECK(std::abs(fp.pair.xi0() - 1.0) < 1e-12);

    // heights along 10 further renormalizations all equal 1
    Pair1D cur = fp.pair;
    for (int k = 0; k < 10; ++k) {
        RenormStep st = renormalize(cur);
        CHECK(st.r == 1);
        cur = st.pair;
    }

    // rescaling constant is iteration-independent
    Pair1D a = fp.pair;
    double lam0 = renormalize(a).lambda;
    a = renormalize(a).pair;
    double lam1 = renormalize(a).lambda;
    a = renormalize(a).pair;
    double lam2 = renormalize(a).lambda;
    CHECK(std::abs(lam1 - lam0) < 1e-9);
    CHECK(std::abs(lam2 - lam0) < 1e-9);
    CHECK(lam0 < 0.0);
    CHECK(std::abs(lam0) < 1.0);

    // the fixed point is an almost commuting pair with a cubic critical point
    PairDefects d = check_pair(fp.pair);
    CHECK(std::abs(d.jets[0]) < 1e-11);
    CHECK(std::abs(d.jets[3]) < 1e-7);
    CHECK(std::abs(d.eta_third) > 1e-2);
    CHECK(d.monotone);
}

TEST_CASE("fixed point is locally unique: two seeds agree")
{
    RotationNumber g = RotationNumber::golden();
    FixedPointResult a = newton_fixed_point(golden_seed(0.0), g);
    FixedPointResult b = newton_fixed_point(golden_seed(0.05), g);
    CHECK(pair_distance(a.pair, b.pair) < 1e-8);
    CHECK(std::abs(a.lambda - b.lambda) < 1e-9);
}

TEST_CASE("spectrum: one simple unstable eigenvalue, rescaling mode excluded")
{
    RotationNumber g = RotationNumber::golden();
    FixedPointResult fp = newton_fixed_point(golden_seed(), g);
    SpectrumResult sp = renorm_spectrum(fp.pair, g, 10);

    REQUIRE(sp.eigenvalues.size() >= 5);
    CHECK(sp.unstable_count == 1);
    double mu0 = std::abs(sp.eigenvalues[0]);
    double mu1 = std::abs(sp.eigenvalues[1]);
    CHECK(mu0 > 1.05);
    CHECK(mu1 < 0.95);
    CHECK(mu0 - mu1 > 0.05);

    // no eigenvalue sits near 1 (the trivial rescaling mode is excluded)
    for (const auto& m : sp.eigenvalues) CHECK(std::abs(std::abs(m) - 1.0) > 1e-3);

    // the leading eigenvalue is real for the golden pair class
    CHECK(std::abs(sp.eigenvalues[0].imag()) < 1e-6 * mu0);
}
