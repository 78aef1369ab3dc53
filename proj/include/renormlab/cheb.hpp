#pragma once

// Calculus of truncated analytic maps of one and two real variables,
// represented by Chebyshev expansions on intervals / rectangles.
// All types are immutable value objects; operations are pure functions.

#include <cstddef>
#include <functional>
#include <vector>

#include "renormlab/errors.hpp"

namespace renormlab {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    double half() const { return 0.5 * (hi - lo); }
    bool contains(double x) const { return x >= lo && x <= hi; }
    // Signed-endpoint constructor: order the endpoints.
    static Interval hull(double a, double b) { return a <= b ? Interval{a, b} : Interval{b, a}; }
    Interval widened(double frac) const {
        double m = frac * width();
        return {lo - m, hi + m};
    }
};

// Permitted extrapolation beyond the fitted domain, as a fraction of width.
inline constexpr double kExtrapolationMargin = 0.05;
inline constexpr int kNmaxDefault = 64;

class ChebFun1 {
public:
    ChebFun1() = default;
    ChebFun1(Interval dom, std::vector<double> coeffs, double trunc = 0.0)
        : dom_(dom), c_(std::move(coeffs)), trunc_(trunc) {}

    // Interpolates f at n+1 Chebyshev (first kind) nodes of dom.
    static ChebFun1 fit(const std::function<double(double)>& f, Interval dom, int n);
    static ChebFun1 constant(double v, Interval dom);
    static ChebFun1 identity(Interval dom);

    double operator()(double x) const { return eval(x); }
    double eval(double x) const;
    // eval without the domain guard (used internally for probes).
    double eval_unchecked(double x) const;

    ChebFun1 derivative(int order = 1) const;
    double deriv_at(double x, int order = 1) const;

    // x -> s^{-1} f(s x) on the rescaled domain; s may be negative.
    ChebFun1 rescaled(double s) const;

    // Drop trailing coefficients below tol (relative to max |c|); adds to trunc_err.
    ChebFun1 trimmed(double tol = 1e-15) const;

    // Refit to a new domain/degree by sampling this function.
    ChebFun1 refit(Interval dom, int n) const;

    const Interval& domain() const { return dom_; }
    const std::vector<double>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    double trunc_err() const { return trunc_; }
    void set_trunc_err(double t) { trunc_ = t; }
    double max_abs_coeff() const;
    // Estimate of the neglected tail: sum of |c_j| over the last few modes.
    double tail_estimate(int ntail = 3) const;

private:
    void check_domain(double x) const;
    Interval dom_{0.0, 1.0};
    std::vector<double> c_{0.0};
    double trunc_ = 0.0;
};

// f(g(x)) sampled on the nodes of g's domain (or `target` if given), refit.
ChebFun1 compose(const ChebFun1& f, const ChebFun1& g, int n = -1);
ChebFun1 compose(const ChebFun1& f, const ChebFun1& g, Interval target, int n);

// Inverse of a strictly monotone branch: g with f(g(x)) = x on target.
ChebFun1 invert_on(const ChebFun1& f, Interval target, int n = -1,
                   double tol_factor = 1e-13, int max_iter = 60);

// Single safeguarded Newton inversion: solve f(u) = y for u in bracket.
double invert_point(const std::function<double(double)>& f, double y,
                    double ulo, double uhi, double tol, int max_iter = 60);

// Tensor-product Chebyshev map on a rectangle.
class ChebFun2 {
public:
    ChebFun2() = default;
    ChebFun2(Interval dx, Interval dy, std::vector<std::vector<double>> coeffs, double trunc = 0.0)
        : dx_(dx), dy_(dy), c_(std::move(coeffs)), trunc_(trunc) {}

    static ChebFun2 fit(const std::function<double(double, double)>& f,
                        Interval dx, Interval dy, int nx, int ny);
    static ChebFun2 from_1d(const ChebFun1& f, Interval dy, int ny = 0);
    static ChebFun2 constant(double v, Interval dx, Interval dy);

    double operator()(double x, double y) const { return eval(x, y); }
    double eval(double x, double y) const;
    double eval_unchecked(double x, double y) const;

    ChebFun2 partial_x() const;
    ChebFun2 partial_y() const;
    ChebFun1 slice_y(double y0, int n = -1) const;

    // sup of |f| and of |partial_y f| over a probe grid.
    double sup_abs(int gx = 33, int gy = 9) const;
    double sup_abs_dy(int gx = 33, int gy = 9) const;

    const Interval& domain_x() const { return dx_; }
    const Interval& domain_y() const { return dy_; }
    const std::vector<std::vector<double>>& coeffs() const { return c_; }
    int degree_x() const { return static_cast<int>(c_.size()) - 1; }
    int degree_y() const { return c_.empty() ? -1 : static_cast<int>(c_[0].size()) - 1; }
    double trunc_err() const { return trunc_; }

private:
    Interval dx_{0.0, 1.0}, dy_{0.0, 1.0};
    std::vector<std::vector<double>> c_{{0.0}};  // c_[i][j]: T_i(x) T_j(y)
    double trunc_ = 0.0;
};

// f(gx(x,y), gy(x,y)) sampled on the rectangle of gx and refit.
ChebFun2 compose2(const ChebFun2& f, const ChebFun2& gx, const ChebFun2& gy,
                  int nx = -1, int ny = -1);

// Chebyshev nodes (first kind) of count n+1 on dom, in increasing order.
std::vector<double> cheb_nodes(Interval dom, int n);

} // namespace renormlab
