#pragma once

// Two-dimensional dissipative pairs Z = (A, B) with A = (a, h), B = (b, x):
// the embedding of 1D pairs, conditions D1-D4, the per-y coordinate change,
// the preliminary renormalization, the commuting projection solved through
// its closed-form jet equations, the full renormalization step, and the
// construction of genuinely commuting pairs from a dissipative annulus
// family.

#include <array>
#include <functional>
#include <optional>

#include "renormlab/pair1d.hpp"

namespace renormlab {

struct Pair2D {
    ChebFun2 a, h;  // A = (a, h) on Gamma_1
    ChebFun2 b;     // B = (b, x) on Gamma_2

    Interval X1() const { return a.domain_x(); }
    Interval Y1() const { return a.domain_y(); }
    Interval X2() const { return b.domain_x(); }
    Interval Y2() const { return b.domain_y(); }

    std::array<double, 2> applyA(double x, double y) const
    {
        return {a.eval(x, y), h.eval(x, y)};
    }
    std::array<double, 2> applyB(double x, double y) const
    {
        return {b.eval(x, y), x};
    }

    // 2x2 Jacobians
    std::array<double, 4> DA(double x, double y) const;
    std::array<double, 4> DB(double x, double y) const;
    double jacA(double x, double y) const;
    double jacB(double x, double y) const;

    // 1D slices at y = 0 (the L projection)
    ChebFun1 slice_eta() const { return a.slice_y(0.0); }
    ChebFun1 slice_xi() const { return b.slice_y(0.0); }
    Pair1D slice_pair() const { return {slice_eta(), slice_xi()}; }

    // sup |d/dy| over both maps' components
    double norm_y() const;
};

// ------------------------------------------------------------- construction

// Embedding of a twice-renormalizable 1D pair: A = (word, previous word),
// B = (eta^{r0} o xi, x), Lambda-normalized so that b(0,0) = 1.
Pair2D embed_pair(const Pair1D& zeta, int nx = 32, int ny = 6, double ywidth = -1.0);

struct DConditionsReport {
    std::array<double, 4> d1_jets{};  // jets of L[A,B] at 0
    double d2_defect = 0.0;           // |b(0,0) - 1|
    bool d3_twice_renormalizable = false;
    int r0 = -1, r1 = -1;
    double d4_distance = 0.0;         // sup distance to the reference pair
    bool pass(double tol_comm, double eps) const
    {
        double j = std::max({std::abs(d1_jets[0]), std::abs(d1_jets[1]),
                             std::abs(d1_jets[2]), std::abs(d1_jets[3])});
        return j < tol_comm && d2_defect < 1e-10 && d3_twice_renormalizable &&
               d4_distance <= eps;
    }
};

DConditionsReport check_D_conditions(const Pair2D& Z, const Pair2D& Zstar, double eps);

// sup distance between two pairs over the intersection of their rectangles.
double pair2d_distance(const Pair2D& A, const Pair2D& B, int gx = 25, int gy = 7);

// ------------------------------------------------------------- renormalization

// x-component of A^{r0} and its inverse in x at fixed y (the coordinate
// change H), evaluated pointwise.
struct CoordinateChangeH {
    const Pair2D* Z = nullptr;
    int r0 = 1;

    double forward_x(double u, double y) const;   // pi_1 A^{r0}(u, y)
    double forward_dx(double u, double y) const;  // d/du of the above
    double forward_dy(double u, double y) const;  // d/dy of the above
    // solve forward_x(u, y) = x for u near guess
    double inverse_x(double x, double y, double guess, double tol = 1e-13) const;

    std::array<double, 2> apply(double x, double y, double guess) const
    {
        return {inverse_x(x, y, guess), y};
    }
    std::array<double, 2> apply_inverse(double u, double y) const
    {
        return {forward_x(u, y), y};
    }
};

// Fitted H and H^{-1} first components over a rectangle (for verification).
struct FittedH {
    ChebFun2 Hx;     // (x,y) -> u
    ChebFun2 Hinvx;  // (u,y) -> x
    double roundtrip_residual = 0.0;
};

FittedH coordinate_change_H(const Pair2D& Z, int r0, Interval x_range, Interval y_range,
                            int nx = 24, int ny = 6);

struct TildeRenormResult {
    Pair2D pair;          // Lambda(p~ Z), before the commuting projection
    double lambda = 0.0;  // the Lambda rescaling factor
    int r0 = 0, r1 = 0;
    double b_form_residual = 0.0;  // max |pi_2 - x| over the B fit (exact by construction)
    double norm_y_before = 0.0, norm_y_after = 0.0;
};

TildeRenormResult tilde_renorm(const Pair2D& Z, int nx = 32, int ny = 6);

// ------------------------------------------------------------- projection

struct ProjectionParams {
    double c = 0.0, d = 0.0, e = 0.0, f = 0.0;
    double max_abs() const
    {
        return std::max({std::abs(c), std::abs(d), std::abs(e), std::abs(f)});
    }
};

// Jets 0..3 of L[A~, B~] at 0 where B~ = B + (cx+dx^2+ex^3+fx^4, 0), by the
// closed forms in terms of partial derivatives of a and b.
std::array<double, 4> commutator_jets_2d(const Pair2D& Z, const ProjectionParams& p);

// Direct-composition oracle for the same jets.
std::array<double, 4> commutator_jets_2d_direct(const Pair2D& Z, const ProjectionParams& p);

// The 4x4 Jacobian d(jets)/d(c,d,e,f) of the closed forms.
std::array<std::array<double, 4>, 4> projection_jacobian(const Pair2D& Z,
                                                         const ProjectionParams& p);

struct ProjectionResult {
    Pair2D pair;
    ProjectionParams params;
    std::array<double, 4> final_jets{};
    bool outside_regime = false;  // params left the expected eps^2 disk
    int iterations = 0;
};

// Newton solve of the four jet equations for (c,d,e,f) with the analytic
// Jacobian; identity on commuting pairs.
ProjectionResult project_commuting(const Pair2D& Z, double tol = 1e-12, int max_iter = 30,
                                   double regime_radius = 1e-2);

struct Renorm2DStep {
    Pair2D pair;
    double lambda = 0.0;
    int r0 = 0, r1 = 0;
    ProjectionParams pi_params;
    double norm_y_before = 0.0, norm_y_after = 0.0;
};

// Full renormalization: the commuting projection applied to the preliminary
// renormalization.
Renorm2DStep renormalize2d(const Pair2D& Z, int nx = 32, int ny = 6);

// ------------------------------------------------------------- annulus family

struct AnnulusMap {
    CircleLift f;    // critical circle lift, cubic at 0
    double eps = 0.0;
    // dissipation profile g(x,y); default g(x,y) = y
    std::function<double(double, double)> g = [](double, double y) { return y; };
    std::function<double(double, double)> dg_dy = [](double, double) { return 1.0; };

    std::array<double, 2> apply(double x, double y) const
    {
        return {f(x) + eps * g(x, y), x};
    }
};

// The commuting pair (T^{-p_{m+1}} F^{q_{m+1}}, T^{-p_m} F^{q_m}) in the
// normal form, Lambda-normalized. m = 0 is the direct global construction;
// even m >= 2 composes m/2 renormalization steps (the coordinate changes H
// realize the shear onto the normal form).
Pair2D annulus_pair(const AnnulusMap& F, const RotationNumber& rho, int m,
                    int nx = 32, int ny = 6);

// Bisection on omega matching the first `depth` heights of the induced
// pair's slice dynamics to the target.
double tune_annulus_rotation(const std::function<AnnulusMap(double)>& family,
                             double omega_lo, double omega_hi,
                             const RotationNumber& target, int depth);

} // namespace renormlab
