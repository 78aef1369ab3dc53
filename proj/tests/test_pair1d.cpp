#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "renormlab/pair1d.hpp"

using namespace renormlab;

namespace {

const double kGoldenRho = (std::sqrt(5.0) - 1.0) / 2.0;

// Tune the lift to f_rho, then build the level-m pair. The pair's heights
// are the (m+1)-shifted digits of rho(f).
Pair1D tuned_arnold_pair(const RotationNumber& f_rho, int depth, double wlo, double whi,
                         double c2 = 0.0, int m = 2, int n = 56)
{
    auto family = [&](double w) { return arnold_lift(w, c2); };
    double omega = tune_lift(family, wlo, whi, f_rho, depth);
    return pair_from_circle_map(arnold_lift(omega, c2), f_rho, m, n);
}

} // namespace

TEST_CASE("height: golden rigid pair, tuned [2,1,1,...], fixed point case")
{
    Pair1D T = Pair1D::rigid(kGoldenRho);
    Height h = height(T);
    CHECK_FALSE(h.infinite);
    CHECK(h.r == 1);

    // direct orbit oracle: eta-iterates of xi(0) cross zero after one step
    double x = T.xi0();
    CHECK(T.eta.eval(x) > 0.0);
    CHECK(T.eta.eval(T.eta.eval(x)) < 0.0);

    // a pair whose eta has a fixed point before crossing
    ChebFun1 eta_fp = ChebFun1::fit([](double x2) { return x2 - 0.2 + 0.25 * x2 * x2; },
                                    Interval{0.0, 1.0}.widened(0.1), 8);
    ChebFun1 xi_fp = ChebFun1::fit([](double x2) { return x2 + 1.0; },
                                   Interval{-0.2, 0.0}.widened(0.1), 8);
    Height hf = height(Pair1D{eta_fp, xi_fp});
    CHECK(hf.infinite);
}

TEST_CASE("height 2 for a pair with rotation number [2,1,1,...]")
{
    // level-0 pair heights are the 1-shifted digits of rho(f)
    RotationNumber f_rho{{1, 2}, {1}};
    Pair1D z = tuned_arnold_pair(f_rho, 5, 0.62, 0.85, 0.0, 0);
    Height h = height(z);
    CHECK_FALSE(h.infinite);
    CHECK(h.r == 2);
}

TEST_CASE("prerenormalize: golden rigid pair, affine oracle")
{
    Pair1D T = Pair1D::rigid(kGoldenRho);
    PreRenorm pre = prerenormalize(T);
    CHECK(pre.r == 1);
    // eta_new = x + 1 - rho on [-rho, 0], xi_new = x - rho on [0, 1-rho]
    for (double x : cheb_nodes({-kGoldenRho, 0.0}, 9))
        CHECK(pre.pair.eta.eval(x) == doctest::Approx(x + 1.0 - kGoldenRho).epsilon(1e-12));
    for (double x : cheb_nodes({0.0, 1.0 - kGoldenRho}, 9))
        CHECK(pre.pair.xi.eval(x) == doctest::Approx(x - kGoldenRho).epsilon(1e-12));
}

TEST_CASE("prerenormalize: height-2 branch matches the pointwise orbit oracle")
{
    RotationNumber f_rho{{1, 2}, {1}};
    Pair1D z = tuned_arnold_pair(f_rho, 5, 0.62, 0.85, 0.0, 0);
    PreRenorm pre = prerenormalize(z);
    CHECK(pre.r == 2);
    for (double x : cheb_nodes(z.nominal_xi(), 9)) {
        double want = z.eta.eval(z.eta.eval(z.xi.eval(x)));
        CHECK(pre.pair.eta.eval(x) == doctest::Approx(want).epsilon(1e-11));
    }
}

TEST_CASE("prerenormalize preserves commutation")
{
    Pair1D z = tuned_arnold_pair(RotationNumber::golden(), 12, 0.55, 0.72);
    auto j0 = commutator_jets(z);
    PreRenorm pre = prerenormalize(z);
    auto j1 = commutator_jets(pre.pair);
    CHECK(std::abs(j0[0]) < 1e-13);
    CHECK(std::abs(j0[1]) < 1e-11);
    CHECK(std::abs(j0[2]) < 1e-9);
    CHECK(std::abs(j0[3]) < 3e-8);
    // representation jets of the composed pair carry the fit-noise floor of
    // third derivatives; the value and low jets stay tight
    CHECK(std::abs(j1[0]) < 1e-12);
    CHECK(std::abs(j1[1]) < 1e-10);
    CHECK(std::abs(j1[2]) < 1e-8);
    CHECK(std::abs(j1[3]) < 1e-6);
    // exact jet transport along the return words tracks the true pair
    RotationDigits rd = rotation_digits(z, 3);
    auto jw = renormalized_commutator_jets(z, rd.digits, 2);
    for (double v : jw) CHECK(std::abs(v) < 10 * kTolComm);
}

TEST_CASE("renormalize: golden rigid pair is fixed with s = -theta")
{
    Pair1D T = Pair1D::rigid(kGoldenRho);
    RenormStep st = renormalize(T);
    CHECK(st.lambda == doctest::Approx(-kGoldenRho).epsilon(1e-12));
    CHECK(st.pair.xi0() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(pair_distance(st.pair, T) < 1e-11);
}

TEST_CASE("renormalize: commutator jets stay small, heights consume CF digits")
{
    RotationNumber pair_rho{{2}, {1}};      // pair digits 2,1,1,1,...
    RotationNumber f_rho{{1, 2}, {1}};      // lift digits, one level up
    Pair1D z = tuned_arnold_pair(f_rho, 12, 0.62, 0.85, 0.0, 0);
    std::vector<int> heights_seen;
    Pair1D cur = z;
    std::vector<int> consumed;
    for (int i = 0; i < 5; ++i) {
        RenormStep st = renormalize(cur);
        consumed.push_back(st.r);
        heights_seen.push_back(st.r);
        auto jw = renormalized_commutator_jets(z, heights_seen, i + 1);
        for (double v : jw) CHECK(std::abs(v) < 10 * kTolComm);
        cur = st.pair;
    }
    for (int i = 0; i < 5; ++i) CHECK(consumed[i] == pair_rho.digit(i));
}

TEST_CASE("rotation_digits: rigid golden depth 8; rational flag")
{
    Pair1D T = Pair1D::rigid(kGoldenRho);
    RotationDigits rd = rotation_digits(T, 8);
    CHECK_FALSE(rd.rational);
    REQUIRE(rd.digits.size() == 8);
    for (int d : rd.digits) CHECK(d == 1);

    // rational rotation number: rigid pair with rho = 1/2 hits a tie/fixed
    ChebFun1 eta_fp = ChebFun1::fit([](double x2) { return x2 - 0.2 + 0.25 * x2 * x2; },
                                    Interval{0.0, 1.0}.widened(0.1), 8);
    ChebFun1 xi_fp = ChebFun1::fit([](double x2) { return x2 + 1.0; },
                                   Interval{-0.2, 0.0}.widened(0.1), 8);
    RotationDigits rf = rotation_digits(Pair1D{eta_fp, xi_fp}, 3);
    CHECK(rf.rational);
}

TEST_CASE("rotation_digits: tuned Arnold pairs hit their targets")
{
    Pair1D g = tuned_arnold_pair(RotationNumber::golden(), 12, 0.55, 0.72);
    RotationDigits rd = rotation_digits(g, 6);
    REQUIRE(rd.digits.size() == 6);
    for (int d : rd.digits) CHECK(d == 1);

    Pair1D t2 = tuned_arnold_pair(RotationNumber::periodic({2}), 7, 0.35, 0.55, 0.0, 0);
    RotationDigits rd2 = rotation_digits(t2, 5);
    REQUIRE(rd2.digits.size() == 5);
    for (int d : rd2.digits) CHECK(d == 2);
}

TEST_CASE("pair_from_circle_map: rigid rotation gives the affine pair")
{
    RotationNumber g = RotationNumber::golden();
    CircleLift rot{[=](double x) { return x + kGoldenRho; }};
    Pair1D z = pair_from_circle_map(rot, g, 2, 24);
    // normalized golden affine pair: eta(0) = -theta, unit slopes
    CHECK(z.xi0() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(z.eta0() == doctest::Approx(-kGoldenRho).epsilon(1e-10));
    CHECK(z.eta.derivative(1).eval(0.4) == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(z.xi.derivative(1).eval(-0.3) == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("pair_from_circle_map: exact commutation and shifted CF digits")
{
    Pair1D z = tuned_arnold_pair(RotationNumber::golden(), 12, 0.55, 0.72, 0.0, 2);
    auto jets = commutator_jets(z);
    CHECK(std::abs(jets[0]) < 1e-13);
    CHECK(std::abs(jets[1]) < 1e-11);
    CHECK(std::abs(jets[2]) < 1e-9);
    CHECK(std::abs(jets[3]) < 3e-8);

    PairDefects d = check_pair(z);
    CHECK(d.xi0_dev < 1e-12);
    CHECK(d.eta_crit < 1e-9);
    CHECK(d.xi_crit < 1e-9);
    CHECK(std::abs(d.eta_third) > 1e-3);
    CHECK(d.monotone);

    // golden tail is shift invariant: digits all 1
    RotationDigits rd = rotation_digits(z, 5);
    for (int dg : rd.digits) CHECK(dg == 1);
}

TEST_CASE("commutator_jets: perturbation oracles")
{
    Pair1D z = tuned_arnold_pair(RotationNumber::golden(), 7, 0.55, 0.72);
    auto j0 = commutator_jets(z);
    double delta = 1e-5;

    // xi + delta x^4: jets respond through the outer composition by
    // -delta (eta^4)^{(k)}(0); direct jet algebra oracle below.
    ChebFun1 xi4 = ChebFun1::fit([&](double x) {
        return z.xi.eval(x) + delta * x * x * x * x;
    }, z.xi.domain(), z.fit_degree());
    auto j4 = commutator_jets(Pair1D{z.eta, xi4});
    auto je = jets_at(z.eta, 0.0, 3);
    double e0 = je[0], e1 = je[1], e2 = je[2], e3 = je[3];
    std::array<double, 4> pow4_jets = {
        e0 * e0 * e0 * e0,
        4.0 * e0 * e0 * e0 * e1,
        12.0 * e0 * e0 * e1 * e1 + 4.0 * e0 * e0 * e0 * e2,
        24.0 * e0 * e1 * e1 * e1 + 36.0 * e0 * e0 * e1 * e2 + 4.0 * e0 * e0 * e0 * e3};
    for (int k = 0; k < 4; ++k)
        CHECK(j4[k] - j0[k] == doctest::Approx(-delta * pow4_jets[k]).epsilon(1e-4).scale(
                  std::max(1.0, std::abs(delta * pow4_jets[k]))));

    // xi + delta x: jet[1] shifts by delta eta'(xi(0)) + O(delta^2), nonzero;
    // finite-difference oracle in delta.
    auto perturbed = [&](double dd) {
        ChebFun1 xi1 = ChebFun1::fit([&](double x) { return z.xi.eval(x) + dd * x; },
                                     z.xi.domain(), z.fit_degree());
        return commutator_jets(Pair1D{z.eta, xi1});
    };
    auto jp = perturbed(delta), jm = perturbed(-delta);
    double fd_shift = (jp[1] - jm[1]) / (2.0 * delta);
    double want = jets_at(z.eta, z.xi0(), 1)[1];  // eta'(xi(0)), eta'(0) = 0
    CHECK(fd_shift == doctest::Approx(want).epsilon(1e-5));
    CHECK(std::abs(fd_shift) > 1e-3);
}

TEST_CASE("circle_map_from_pair: rigid golden and glue residual")
{
    Pair1D T = Pair1D::rigid(kGoldenRho);
    PiecewiseCircleMap f = circle_map_from_pair(T);
    CHECK(f.glue_residual < 1e-12);
    CHECK(f.circumference() == doctest::Approx(1.0).epsilon(1e-12));
    // rotation by rho on the glued circle
    int w = 0;
    double x = 0.2;
    double y = f.step(x, w);
    CHECK(y == doctest::Approx(x - kGoldenRho + (x < 0.0 ? 1.0 : 0.0)).epsilon(1e-12));

    std::vector<int> cf = f.rotation_cf(3, 200000);
    REQUIRE(cf.size() >= 3);
    CHECK(cf[0] == 1);
    CHECK(cf[1] == 1);
    CHECK(cf[2] == 1);
}

TEST_CASE("circle_map_from_pair: nonlinear golden pair, 3 CF terms")
{
    Pair1D z = tuned_arnold_pair(RotationNumber::golden(), 12, 0.55, 0.72);
    PiecewiseCircleMap f = circle_map_from_pair(z);
    CHECK(f.glue_residual < 1e-10);
    std::vector<int> cf = f.rotation_cf(3, 500000);
    REQUIRE(cf.size() >= 3);
    CHECK(cf[0] == 1);
    CHECK(cf[1] == 1);
    CHECK(cf[2] == 1);
}

TEST_CASE("dynamical_partition: golden rigid k=1 has 3 elements")
{
    Pair1D T = Pair1D::rigid(kGoldenRho);
    PartitionLevel P = dynamical_partition(T, 1);
    REQUIRE(P.elements.size() == 3);
    CHECK(P.max_gap < 1e-10);
    CHECK(P.max_overlap < 1e-10);
    CHECK(P.elements.front().iv.lo == doctest::Approx(-kGoldenRho).epsilon(1e-10));
    CHECK(P.elements.back().iv.hi == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("dynamical_partition: [2,1,...] level-1 combinatorics")
{
    RotationNumber f_rho{{1, 2}, {1}};
    Pair1D z = tuned_arnold_pair(f_rho, 5, 0.62, 0.85, 0.0, 0);
    PartitionLevel P = dynamical_partition(z, 1);
    REQUIRE(P.elements.size() == 4);

    double eta0 = z.eta0();
    double etaxi0 = z.eta.eval(z.xi0());
    double eta2xi0 = z.eta.eval(etaxi0);
    // spatial order: [eta0, 0], [0, eta^2 xi(0)], [eta^2 xi(0), eta xi(0)], [eta xi(0), 1]
    CHECK(P.elements[0].iv.lo == doctest::Approx(eta0).epsilon(1e-9));
    CHECK(P.elements[0].iv.hi == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(P.elements[1].iv.hi == doctest::Approx(eta2xi0).epsilon(1e-9));
    CHECK(P.elements[1].is_J);
    CHECK(P.elements[2].iv.hi == doctest::Approx(etaxi0).epsilon(1e-9));
    CHECK(P.elements[3].iv.hi == doctest::Approx(1.0).epsilon(1e-9));

    // every proper prefix precedes the full word in the prec order
    RotationDigits rd = rotation_digits(z, 1);
    ReturnWords rw = return_words(rd.digits, 1);
    auto smi = word_multi_index(rw.s);
    for (const auto& el : P.elements)
        if (!el.is_J) CHECK(multi_index_prec(el.multi_index, smi));
}

TEST_CASE("dynamical_partition: diameters decay geometrically, adjacent commensurable")
{
    Pair1D z = tuned_arnold_pair(RotationNumber::golden(), 16, 0.55, 0.72);
    std::vector<double> ks, logd;
    double worst_ratio = 1.0;
    for (int k = 2; k <= 7; ++k) {
        PartitionLevel P = dynamical_partition(z, k);
        ks.push_back(k);
        logd.push_back(std::log(P.max_diameter));
        if (k >= 4) {
            worst_ratio = std::max(worst_ratio, P.max_adjacent_ratio);
            worst_ratio = std::max(worst_ratio, 1.0 / P.min_adjacent_ratio);
        }
    }
    double slope = fit_slope(ks, logd);
    CHECK(slope < std::log(0.95));  // gamma < 1
    CHECK(worst_ratio < 40.0);      // C0-commensurability, measured
}

TEST_CASE("two golden pairs converge together under renormalization")
{
    Pair1D a = tuned_arnold_pair(RotationNumber::golden(), 25, 0.55, 0.72, 0.0);
    Pair1D b = tuned_arnold_pair(RotationNumber::golden(), 25, 0.40, 0.75, 0.05);
    CHECK(pair_distance(a, b) > 1e-4);  // genuinely distinct family members
    Pair1D ra = a, rb = b;
    std::vector<double> dists;
    for (int k = 0; k < 14; ++k) {
        ra = renormalize(ra).pair;
        rb = renormalize(rb).pair;
        dists.push_back(pair_distance(ra, rb));
    }
    // monotone decay after the transient, and a clear overall contraction
    for (size_t k = 5; k + 1 < dists.size(); ++k) CHECK(dists[k + 1] < dists[k]);
    CHECK(dists.back() < 0.15 * dists[2]);
}
