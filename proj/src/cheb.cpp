#include "renormlab/cheb.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace renormlab {

namespace {

// Chebyshev coefficients from samples at first-kind nodes t_k = cos(pi(k+1/2)/(n+1)).
std::vector<double> transform(const std::vector<double>& vals)
{
    const int m = static_cast<int>(vals.size());
    std::vector<double> c(m, 0.0);
    for (int j = 0; j < m; ++j) {
        double s = 0.0;
        for (int k = 0; k < m; ++k)
            s += vals[k] * std::cos(j * M_PI * (k + 0.5) / m);
        c[j] = 2.0 * s / m;
    }
    c[0] *= 0.5;
    return c;
}

double clenshaw(const std::vector<double>& c, double t)
{
    double b1 = 0.0, b2 = 0.0;
    for (int j = static_cast<int>(c.size()) - 1; j >= 1; --j) {
        double b0 = 2.0 * t * b1 - b2 + c[j];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + c[0];
}

// Derivative coefficients on [-1,1].
std::vector<double> deriv_coeffs(const std::vector<double>& c)
{
    const int n = static_cast<int>(c.size()) - 1;
    if (n <= 0) return {0.0};
    std::vector<double> d(n + 1, 0.0);
    for (int k = n; k >= 1; --k)
        d[k - 1] = (k + 1 <= n ? d[k + 1] : 0.0) + 2.0 * k * c[k];
    d[0] *= 0.5;
    d.resize(n);  // degree drops by one
    if (d.empty()) d.push_back(0.0);
    return d;
}

} // namespace

std::vector<double> cheb_nodes(Interval dom, int n)
{
    std::vector<double> x(n + 1);
    for (int k = 0; k <= n; ++k) {
        double t = std::cos(M_PI * (k + 0.5) / (n + 1));
        x[n - k] = dom.mid() + dom.half() * t;
    }
    return x;
}

ChebFun1 ChebFun1::fit(const std::function<double(double)>& f, Interval dom, int n)
{
    if (!(dom.lo < dom.hi) || !std::isfinite(dom.lo) || !std::isfinite(dom.hi))
        throw ConfigError("ChebFun1::fit: invalid interval");
    const int m = n + 1;
    std::vector<double> vals(m);
    for (int k = 0; k < m; ++k) {
        double t = std::cos(M_PI * (k + 0.5) / m);
        double v = f(dom.mid() + dom.half() * t);
        if (!std::isfinite(v))
            throw PrecisionError("ChebFun1::fit: non-finite sample");
        vals[k] = v;
    }
    ChebFun1 g(dom, transform(vals));
    g.trunc_ = g.tail_estimate();
    return g;
}

ChebFun1 ChebFun1::constant(double v, Interval dom) { return ChebFun1(dom, {v}); }

ChebFun1 ChebFun1::identity(Interval dom)
{
    return ChebFun1(dom, {dom.mid(), dom.half()});
}

void ChebFun1::check_domain(double x) const
{
    double m = kExtrapolationMargin * dom_.width();
    if (x < dom_.lo - m || x > dom_.hi + m)
        throw PrecisionError("ChebFun1: evaluation at x=" + std::to_string(x) +
                             " beyond margin of [" + std::to_string(dom_.lo) + "," +
                             std::to_string(dom_.hi) + "]");
}

double ChebFun1::eval(double x) const
{
    check_domain(x);
    return eval_unchecked(x);
}

double ChebFun1::eval_unchecked(double x) const
{
    double t = (x - dom_.mid()) / dom_.half();
    return clenshaw(c_, t);
}

ChebFun1 ChebFun1::derivative(int order) const
{
    if (order < 1 || order > 3)
        throw ConfigError("ChebFun1::derivative: order must be 1..3");
    std::vector<double> d = c_;
    for (int i = 0; i < order; ++i) {
        d = deriv_coeffs(d);
        for (double& v : d) v /= dom_.half();
    }
    return ChebFun1(dom_, std::move(d), trunc_);
}

double ChebFun1::deriv_at(double x, int order) const { return derivative(order).eval(x); }

ChebFun1 ChebFun1::rescaled(double s) const
{
    if (s == 0.0) throw ConfigError("ChebFun1::rescaled: s must be nonzero");
    Interval nd = Interval::hull(dom_.lo / s, dom_.hi / s);
    // s^{-1} f(s x): a Chebyshev series again; refit on nodes of the new domain.
    const ChebFun1& self = *this;
    ChebFun1 g = fit([&](double x) { return self.eval_unchecked(s * x) / s; }, nd,
                     std::max(degree(), 1));
    g.trunc_ = std::abs(trunc_ / s) + g.tail_estimate();
    return g;
}

ChebFun1 ChebFun1::trimmed(double tol) const
{
    double mx = max_abs_coeff();
    int last = static_cast<int>(c_.size()) - 1;
    double dropped = 0.0;
    while (last > 0 && std::abs(c_[last]) < tol * mx) {
        dropped += std::abs(c_[last]);
        --last;
    }
    std::vector<double> nc(c_.begin(), c_.begin() + last + 1);
    return ChebFun1(dom_, std::move(nc), trunc_ + dropped);
}

ChebFun1 ChebFun1::refit(Interval dom, int n) const
{
    const ChebFun1& self = *this;
    ChebFun1 g = fit([&](double x) { return self.eval(x); }, dom, n);
    g.trunc_ += trunc_;
    return g;
}

double ChebFun1::max_abs_coeff() const
{
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

double ChebFun1::tail_estimate(int ntail) const
{
    double s = 0.0;
    int n = static_cast<int>(c_.size());
    for (int j = std::max(1, n - ntail); j < n; ++j) s += std::abs(c_[j]);
    return s;
}

ChebFun1 compose(const ChebFun1& f, const ChebFun1& g, Interval target, int n)
{
    if (n < 0) n = std::max(f.degree(), g.degree());
    n = std::min(n, 2 * kNmaxDefault);
    double lip = 0.0;
    {
        ChebFun1 fp = f.derivative(1);
        for (double x : cheb_nodes(f.domain(), 16))
            lip = std::max(lip, std::abs(fp.eval_unchecked(x)));
    }
    ChebFun1 h = ChebFun1::fit(
        [&](double x) {
            double gx = g.eval(x);
            double m = kExtrapolationMargin * f.domain().width();
            if (gx < f.domain().lo - m || gx > f.domain().hi + m)
                throw PrecisionError("compose: range escape at node x=" + std::to_string(x) +
                                     ", g(x)=" + std::to_string(gx));
            return f.eval_unchecked(gx);
        },
        target, n);
    h.set_trunc_err(f.trunc_err() + g.trunc_err() * lip + h.tail_estimate());
    return h;
}

ChebFun1 compose(const ChebFun1& f, const ChebFun1& g, int n)
{
    if (n < 0) {
        // polynomial composition has degree deg(f) deg(g); cap at the budget
        long prod = static_cast<long>(std::max(f.degree(), 1)) * std::max(g.degree(), 1);
        n = static_cast<int>(std::min<long>(prod, kNmaxDefault));
        n = std::max({n, f.degree(), g.degree()});
    }
    return compose(f, g, g.domain(), n);
}

double invert_point(const std::function<double(double)>& f, double y,
                    double ulo, double uhi, double tol, int max_iter)
{
    double flo = f(ulo) - y, fhi = f(uhi) - y;
    if (flo == 0.0) return ulo;
    if (fhi == 0.0) return uhi;
    if (flo * fhi > 0.0)
        throw PrecisionError("invert_point: root not bracketed");
    double u = 0.5 * (ulo + uhi);
    for (int it = 0; it < max_iter; ++it) {
        double fu = f(u) - y;
        if (std::abs(fu) == 0.0) return u;
        if (fu * flo > 0.0) { ulo = u; flo = fu; }
        else { uhi = u; fhi = fu; }
        // Secant/Newton-style step from the bracket values, bisection fallback.
        double du = fu * (uhi - ulo) / (fhi - flo);
        double un = u - du;
        if (!(un > std::min(ulo, uhi) && un < std::max(ulo, uhi)))
            un = 0.5 * (ulo + uhi);
        if (std::abs(un - u) < tol) return un;
        u = un;
    }
    if (std::abs(f(u) - y) > 1e3 * tol)
        throw ConvergenceError("invert_point: no convergence, residual=" +
                               std::to_string(std::abs(f(u) - y)));
    return u;
}

ChebFun1 invert_on(const ChebFun1& f, Interval target, int n, double tol_factor, int max_iter)
{
    if (n < 0) n = std::max(f.degree(), 8);
    // Monotonicity check on the nodes of f's domain.
    ChebFun1 fp = f.derivative(1);
    double sgn = 0.0;
    for (double x : cheb_nodes(f.domain(), std::max(f.degree(), 16))) {
        double d = fp.eval_unchecked(x);
        if (sgn == 0.0) sgn = d > 0 ? 1.0 : -1.0;
        if (d * sgn <= 0.0)
            throw PrecisionError("invert_on: f not strictly monotone on its domain");
    }
    double tol = tol_factor * f.domain().width();
    Interval fd = f.domain().widened(kExtrapolationMargin);
    ChebFun1 g = ChebFun1::fit(
        [&](double y) {
            return invert_point([&](double u) { return f.eval_unchecked(u); }, y,
                                fd.lo, fd.hi, tol, max_iter);
        },
        target, n);
    g.set_trunc_err(f.trunc_err() + g.tail_estimate());
    return g;
}

// ---------------------------------------------------------------- ChebFun2

ChebFun2 ChebFun2::fit(const std::function<double(double, double)>& f,
                       Interval dx, Interval dy, int nx, int ny)
{
    const int mx = nx + 1, my = ny + 1;
    std::vector<std::vector<double>> vals(mx, std::vector<double>(my));
    for (int k = 0; k < mx; ++k) {
        double tx = std::cos(M_PI * (k + 0.5) / mx);
        double x = dx.mid() + dx.half() * tx;
        for (int l = 0; l < my; ++l) {
            double ty = std::cos(M_PI * (l + 0.5) / my);
            double y = dy.mid() + dy.half() * ty;
            double v = f(x, y);
            if (!std::isfinite(v)) throw PrecisionError("ChebFun2::fit: non-finite sample");
            vals[k][l] = v;
        }
    }
    // Transform along y then along x.
    std::vector<std::vector<double>> cy(mx);
    for (int k = 0; k < mx; ++k) cy[k] = transform(vals[k]);
    std::vector<std::vector<double>> c(mx, std::vector<double>(my));
    std::vector<double> col(mx);
    for (int j = 0; j < my; ++j) {
        for (int k = 0; k < mx; ++k) col[k] = cy[k][j];
        std::vector<double> cx = transform(col);
        for (int i = 0; i < mx; ++i) c[i][j] = cx[i];
    }
    ChebFun2 g(dx, dy, std::move(c));
    double tail = 0.0;
    for (int i = 0; i < mx; ++i)
        for (int j = 0; j < my; ++j)
            if (i >= mx - 2 || j >= my - 2) tail += std::abs(g.c_[i][j]);
    g.trunc_ = tail;
    return g;
}

ChebFun2 ChebFun2::from_1d(const ChebFun1& f, Interval dy, int ny)
{
    std::vector<std::vector<double>> c(f.coeffs().size(), std::vector<double>(ny + 1, 0.0));
    for (size_t i = 0; i < f.coeffs().size(); ++i) c[i][0] = f.coeffs()[i];
    return ChebFun2(f.domain(), dy, std::move(c), f.trunc_err());
}

ChebFun2 ChebFun2::constant(double v, Interval dx, Interval dy)
{
    return ChebFun2(dx, dy, {{v}});
}

double ChebFun2::eval(double x, double y) const
{
    double mx = kExtrapolationMargin * dx_.width();
    double my = kExtrapolationMargin * dy_.width();
    if (x < dx_.lo - mx || x > dx_.hi + mx || y < dy_.lo - my || y > dy_.hi + my)
        throw PrecisionError("ChebFun2: evaluation outside rectangle, x=" +
                             std::to_string(x) + " y=" + std::to_string(y));
    return eval_unchecked(x, y);
}

double ChebFun2::eval_unchecked(double x, double y) const
{
    double ty = (y - dy_.mid()) / dy_.half();
    std::vector<double> row(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) row[i] = clenshaw(c_[i], ty);
    double tx = (x - dx_.mid()) / dx_.half();
    return clenshaw(row, tx);
}

ChebFun2 ChebFun2::partial_x() const
{
    const int mx = static_cast<int>(c_.size());
    const int my = static_cast<int>(c_[0].size());
    std::vector<std::vector<double>> d(std::max(mx - 1, 1), std::vector<double>(my, 0.0));
    std::vector<double> col(mx);
    for (int j = 0; j < my; ++j) {
        for (int i = 0; i < mx; ++i) col[i] = c_[i][j];
        std::vector<double> dc = deriv_coeffs(col);
        for (size_t i = 0; i < dc.size(); ++i) d[i][j] = dc[i] / dx_.half();
    }
    return ChebFun2(dx_, dy_, std::move(d), trunc_);
}

ChebFun2 ChebFun2::partial_y() const
{
    const int mx = static_cast<int>(c_.size());
    std::vector<std::vector<double>> d(mx);
    for (int i = 0; i < mx; ++i) {
        std::vector<double> dc = deriv_coeffs(c_[i]);
        for (double& v : dc) v /= dy_.half();
        d[i] = std::move(dc);
    }
    return ChebFun2(dx_, dy_, std::move(d), trunc_);
}

ChebFun1 ChebFun2::slice_y(double y0, int n) const
{
    double ty = (y0 - dy_.mid()) / dy_.half();
    std::vector<double> row(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) row[i] = clenshaw(c_[i], ty);
    ChebFun1 g(dx_, std::move(row), trunc_);
    if (n >= 0) g = g.refit(dx_, n);
    return g;
}

double ChebFun2::sup_abs(int gx, int gy) const
{
    double m = 0.0;
    for (double x : cheb_nodes(dx_, gx - 1))
        for (double y : cheb_nodes(dy_, gy - 1))
            m = std::max(m, std::abs(eval_unchecked(x, y)));
    return m;
}

double ChebFun2::sup_abs_dy(int gx, int gy) const { return partial_y().sup_abs(gx, gy); }

ChebFun2 compose2(const ChebFun2& f, const ChebFun2& gx, const ChebFun2& gy, int nx, int ny)
{
    if (nx < 0) nx = std::max(f.degree_x(), gx.degree_x());
    if (ny < 0) ny = std::max(f.degree_y(), gx.degree_y());
    return ChebFun2::fit(
        [&](double x, double y) { return f.eval(gx.eval_unchecked(x, y), gy.eval_unchecked(x, y)); },
        gx.domain_x(), gx.domain_y(), nx, ny);
}

} // namespace renormlab
