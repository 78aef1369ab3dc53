#include "renormlab/pair1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace renormlab {

Pair1D Pair1D::rigid(double rho, int n)
{
    if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("Pair1D::rigid: rho must be in (0,1)");
    Interval De = Interval{0.0, 1.0}.widened(kPairDomainMargin);
    Interval Dx = Interval{-rho, 0.0}.widened(kPairDomainMargin);
    ChebFun1 eta = ChebFun1::fit([&](double x) { return x - rho; }, De, n);
    ChebFun1 xi = ChebFun1::fit([&](double x) { return x + 1.0; }, Dx, n);
    return {eta, xi};
}

std::vector<double> jets_at(const ChebFun1& f, double x0, int order)
{
    // Exact coefficient-space differentiation of the representation. Trailing
    // coefficients at the roundoff floor are trimmed first: differentiation
    // amplifies mode j by j^order, so noise-level tail modes would dominate
    // third derivatives.
    std::vector<double> out;
    ChebFun1 g = f.trimmed(3e-14);
    out.push_back(g.eval_unchecked(x0));
    for (int k = 1; k <= order; ++k) {
        g = g.derivative(1);
        out.push_back(g.eval_unchecked(x0));
    }
    return out;
}

PairDefects check_pair(const Pair1D& z)
{
    PairDefects d;
    d.xi0_dev = std::abs(z.xi0() - 1.0);
    auto je = jets_at(z.eta, 0.0, 3);
    auto jx = jets_at(z.xi, 0.0, 3);
    d.eta_crit = std::max(std::abs(je[1]), std::abs(je[2]));
    d.xi_crit = std::max(std::abs(jx[1]), std::abs(jx[2]));
    d.eta_third = je[3];
    d.xi_third = jx[3];
    d.jets = commutator_jets(z);

    ChebFun1 etp = z.eta.derivative(1), xtp = z.xi.derivative(1);
    Interval Ie = z.nominal_eta(), Ix = z.nominal_xi();
    for (double x : cheb_nodes(Ie, 40))
        if (std::abs(x) > 0.05 * Ie.width() && etp.eval_unchecked(x) <= 0.0) d.monotone = false;
    for (double x : cheb_nodes(Ix, 40))
        if (std::abs(x) > 0.05 * Ix.width() && xtp.eval_unchecked(x) <= 0.0) d.monotone = false;
    return d;
}

Height height(const Pair1D& z, double tie_tol)
{
    double x = z.xi0();
    if (!(x > 0.0)) throw CombinatoricsError("height: xi(0) must be positive");
    double tol = tie_tol * z.nominal_eta().width();
    const int max_iter = 1000000;
    double prev = x;
    for (int j = 1; j <= max_iter; ++j) {
        double nx = z.eta.eval(prev);
        if (std::abs(nx) <= tol)
            throw CombinatoricsError("height: orbit point within tie tolerance of 0 at step " +
                                     std::to_string(j));
        if (nx <= 0.0) {
            if (j == 1)
                throw CombinatoricsError("height: eta(xi(0)) <= 0, pair not renormalizable");
            return {j - 1, false};
        }
        if (nx >= prev - tol) return {0, true};  // stalled: fixed point ahead
        prev = nx;
    }
    throw ConvergenceError("height: no crossing after max iterations");
}

namespace {

// Relative fitting margin actually available on the stored representations.
double available_margin(const Pair1D& z)
{
    Interval Ie = z.nominal_eta(), Ix = z.nominal_xi();
    double me = std::min(z.eta.domain().hi - Ie.hi, Ie.lo - z.eta.domain().lo) / Ie.width();
    double mx = std::min(z.xi.domain().hi - Ix.hi, Ix.lo - z.xi.domain().lo) / Ix.width();
    return std::max(0.0, std::min(me, mx));
}

} // namespace

PreRenorm prerenormalize(const Pair1D& z)
{
    Height h = height(z);
    if (h.infinite) throw CombinatoricsError("prerenormalize: infinite height");
    const int r = h.r;
    const int n = z.fit_degree();
    double m = 0.9 * available_margin(z);

    // eta_new = eta^r o xi on I_xi, xi_new = eta on [0, eta^r(xi(0))].
    // Sampled through the original maps so no intermediate truncation or
    // edge extrapolation enters.
    Interval Ix = z.nominal_xi();
    ChebFun1 eta_new = ChebFun1::fit(
        [&](double x) {
            double v = z.xi.eval(x);
            for (int j = 0; j < r; ++j) v = z.eta.eval(v);
            return v;
        },
        Ix.widened(m), n);

    double end = z.xi0();
    for (int j = 0; j < r; ++j) end = z.eta.eval(end);
    ChebFun1 xi_new = ChebFun1::fit([&](double x) { return z.eta.eval(x); },
                                    Interval::hull(0.0, end).widened(m), n);
    return {{eta_new, xi_new}, r};
}

RenormStep renormalize(const Pair1D& z)
{
    Height h = height(z);
    if (h.infinite) throw CombinatoricsError("renormalize: infinite height");
    const int r = h.r;
    const int n = z.fit_degree();
    double s = z.eta0();  // = xi(0) of the pre-renormalized pair
    // The cumulative rescaling must contract, but a single transient step may
    // have |s| slightly above 1 for pairs with |eta(0)| > 1 (still inside the
    // 2 C0 normalization bounds); reject only clearly non-contracting steps.
    if (std::abs(s) >= 2.0)
        throw CombinatoricsError("renormalize: rescaling factor |s| >= 2");
    if (s == 0.0) throw CombinatoricsError("renormalize: degenerate rescaling factor");

    double end = z.xi0();
    for (int j = 0; j < r; ++j) end = z.eta.eval(end);
    double eta0_new = end / s;

    // Rescaled maps sampled directly through the original pair; the output
    // inherits the input's relative margin, so chains of renormalizations
    // never extrapolate. Transient geometries can push marginal nodes out of
    // range, in which case the margin is narrowed and the fit retried.
    auto eta_word = [&](double u) {
        double v = z.xi.eval(u);
        for (int j = 0; j < r; ++j) v = z.eta.eval(v);
        return v;
    };
    double m = 0.9 * available_margin(z);
    for (int attempt = 0;; ++attempt) {
        try {
            ChebFun1 eta_t = ChebFun1::fit([&](double x) { return eta_word(s * x) / s; },
                                           Interval{0.0, 1.0}.widened(m), n);
            ChebFun1 xi_t = ChebFun1::fit([&](double x) { return z.eta.eval(s * x) / s; },
                                          Interval::hull(eta0_new, 0.0).widened(m), n);
            return {{eta_t, xi_t}, s, r};
        } catch (const PrecisionError&) {
            if (attempt >= 4) throw;
            m *= 0.6;
        }
    }
}

RotationDigits rotation_digits(const Pair1D& z, int depth)
{
    if (depth < 1) throw ConfigError("rotation_digits: depth must be >= 1");
    RotationDigits out;
    Pair1D cur = z;
    for (int i = 0; i < depth; ++i) {
        Height h = height(cur);
        if (h.infinite) {
            out.rational = true;
            return out;
        }
        RenormStep st = renormalize(cur);
        out.digits.push_back(st.r);
        cur = st.pair;
    }
    return out;
}

namespace {

// 4-jet of f o g from the 4-jet of f at g(0) and of g (Faa di Bruno).
std::array<double, 4> compose_jets4(const std::vector<double>& f, const std::array<double, 4>& g)
{
    std::array<double, 4> j{};
    j[0] = f[0];
    j[1] = f[1] * g[1];
    j[2] = f[2] * g[1] * g[1] + f[1] * g[2];
    j[3] = f[3] * g[1] * g[1] * g[1] + 3.0 * f[2] * g[1] * g[2] + f[1] * g[3];
    return j;
}

// 4-jet of the word applied after an initial jet (transport along the orbit).
std::array<double, 4> transport_word_jets(const Pair1D& z, const Word1D& w,
                                          std::array<double, 4> jet)
{
    for (std::uint8_t l : w) {
        const ChebFun1& f = (l == 0) ? z.eta : z.xi;
        jet = compose_jets4(jets_at(f, jet[0], 3), jet);
    }
    return jet;
}

} // namespace

std::array<double, 4> renormalized_commutator_jets(const Pair1D& base,
                                                   const std::vector<int>& heights, int k)
{
    // Commutator jets of the level-k renormalized pair, evaluated by exact
    // jet transport along the return words of the base pair. Base-map jet
    // errors enter damped by lambda^2 powers, so this tracks the true
    // renormalized pair far better than jets of refit chains.
    ReturnWords rw = return_words(heights, k);
    double lam = apply_word(base, rw.t, 0.0);  // xi_k(0), the cumulative rescale

    auto word_pair_jets = [&](const Word1D& inner, const Word1D& outer) {
        std::array<double, 4> id{0.0, 1.0, 0.0, 0.0};
        std::array<double, 4> j = transport_word_jets(base, inner, id);
        j = transport_word_jets(base, outer, j);
        // jets of lam^{-1} (outer o inner)(lam x) at 0
        return std::array<double, 4>{j[0] / lam, j[1], j[2] * lam, j[3] * lam * lam};
    };
    // renormalized eta_k = lam^{-1} W_s(lam x), xi_k = lam^{-1} W_t(lam x);
    // the inner word acts first in each composition
    std::array<double, 4> ab = word_pair_jets(rw.t, rw.s);  // eta_k o xi_k
    std::array<double, 4> ba = word_pair_jets(rw.s, rw.t);  // xi_k o eta_k
    return {ab[0] - ba[0], ab[1] - ba[1], ab[2] - ba[2], ab[3] - ba[3]};
}

std::array<double, 4> commutator_jets(const Pair1D& z)
{
    // Faa di Bruno on window-refit jets; differencing the composed jets at 0
    // keeps the amplification of fit noise at interior-point levels.
    auto jxi0 = jets_at(z.xi, 0.0, 3);
    auto jeta0 = jets_at(z.eta, 0.0, 3);
    auto jeta_at_xi0 = jets_at(z.eta, jxi0[0], 3);
    auto jxi_at_eta0 = jets_at(z.xi, jeta0[0], 3);

    auto compose_jets = [](const std::vector<double>& f, const std::vector<double>& g) {
        // jets of f o g at the base point; f given at g(0), g at 0
        std::array<double, 4> j{};
        j[0] = f[0];
        j[1] = f[1] * g[1];
        j[2] = f[2] * g[1] * g[1] + f[1] * g[2];
        j[3] = f[3] * g[1] * g[1] * g[1] + 3.0 * f[2] * g[1] * g[2] + f[1] * g[3];
        return j;
    };
    std::array<double, 4> ab = compose_jets(jeta_at_xi0, jxi0);
    std::array<double, 4> ba = compose_jets(jxi_at_eta0, jeta0);
    return {ab[0] - ba[0], ab[1] - ba[1], ab[2] - ba[2], ab[3] - ba[3]};
}

// ---------------------------------------------------------------- circle maps

double CircleLift::iterate(double x, std::int64_t n) const
{
    for (std::int64_t i = 0; i < n; ++i) x = f(x);
    return x;
}

CircleLift arnold_lift(double omega, double second_harmonic)
{
    const double c2 = second_harmonic;
    return {[omega, c2](double x) {
        double s = std::sin(2.0 * M_PI * x);
        double c = std::cos(2.0 * M_PI * x);
        return x + omega - s / (2.0 * M_PI) + c2 * (1.0 - c) * (1.0 - c);
    }};
}

Pair1D pair_from_circle_map(const CircleLift& lift, const RotationNumber& rho, int m, int n)
{
    if (m < 0 || m % 2 != 0)
        throw ConfigError("pair_from_circle_map: m must be even (orientation)");
    Convergent cm = convergent(rho, m), cm1 = convergent(rho, m + 1);
    double am = lift.iterate(0.0, cm.q) - static_cast<double>(cm.p);
    double am1 = lift.iterate(0.0, cm1.q) - static_cast<double>(cm1.p);
    if (!(am > 0.0 && am1 < 0.0))
        throw CombinatoricsError("pair_from_circle_map: closest returns have wrong signs "
                                 "(is the family tuned to rho?)");
    // Normalized directly from the lift (s = xi(0) > 0); the lift is globally
    // analytic so the margin costs nothing.
    double s = am;
    double e0 = am1 / s;
    ChebFun1 eta_n = ChebFun1::fit(
        [&](double x) { return (lift.iterate(s * x, cm1.q) - static_cast<double>(cm1.p)) / s; },
        Interval{0.0, 1.0}.widened(kPairDomainMargin), n);
    ChebFun1 xi_n = ChebFun1::fit(
        [&](double x) { return (lift.iterate(s * x, cm.q) - static_cast<double>(cm.p)) / s; },
        Interval::hull(e0, 0.0).widened(kPairDomainMargin), n);
    return {eta_n, xi_n};
}

double PiecewiseCircleMap::step(double x, int& wraps) const
{
    // Applying the left branch carries the point once around the glued
    // circle, so the wrap count is the left-branch usage count.
    double v;
    if (x < 0.0) {
        v = left.eval(x);
        ++wraps;
    } else {
        v = right.eval(x);
    }
    return std::clamp(v, lo, hi);
}

std::vector<int> PiecewiseCircleMap::rotation_cf(int depth, std::int64_t max_iter) const
{
    // Rotation number from the asymptotic wrap frequency, then its CF digits.
    double x = 0.37 * hi;  // generic start
    int wraps = 0;
    std::int64_t N = max_iter;
    for (std::int64_t i = 0; i < N; ++i) x = step(x, wraps);
    double rho = static_cast<double>(wraps) / static_cast<double>(N);
    std::vector<int> cf;
    double v = rho;
    for (int i = 0; i < depth; ++i) {
        if (v < 1e-9) break;
        double inv = 1.0 / v;
        cf.push_back(static_cast<int>(std::floor(inv + 1e-7)));
        v = inv - std::floor(inv + 1e-7);
    }
    return cf;
}

PiecewiseCircleMap circle_map_from_pair(const Pair1D& z, double tol_geom)
{
    auto jets = commutator_jets(z);
    if (std::abs(jets[0]) > 1e3 * kTolComm)
        throw CombinatoricsError("circle_map_from_pair: pair does not commute at 0");
    PiecewiseCircleMap f;
    double e0 = z.eta0();
    double xe0 = z.xi.eval(e0);
    f.lo = e0;
    f.hi = xe0;
    const int n = z.fit_degree();
    f.left = ChebFun1::fit([&](double x) { return z.eta.eval(z.xi.eval(x)); },
                           Interval{e0, 0.0}.widened(0.04), n);
    f.right = ChebFun1::fit([&](double x) { return z.eta.eval(x); },
                            Interval{0.0, xe0}.widened(0.04), n);
    // On the circle the branch switch at 0 is continuous iff the left limit
    // eta(xi(0)) and the right value eta(0) differ by exactly the
    // circumference xi(eta(0)) - eta(0), i.e. iff the pair commutes at 0.
    f.glue_residual = std::abs(z.eta.eval(z.xi0()) - xe0);
    if (f.glue_residual > tol_geom)
        throw CombinatoricsError("circle_map_from_pair: glue mismatch " +
                                 std::to_string(f.glue_residual));
    return f;
}

// ---------------------------------------------------------------- partitions

ReturnWords return_words(const std::vector<int>& heights, int k)
{
    if (k < 1 || k > static_cast<int>(heights.size()))
        throw ConfigError("return_words: need heights for every level up to k");
    Word1D s{0}, t{1};  // level-0 maps: eta, xi
    for (int i = 0; i < k; ++i) {
        Word1D ns = t;
        for (int j = 0; j < heights[i]; ++j) ns.insert(ns.end(), s.begin(), s.end());
        t = s;
        s = std::move(ns);
    }
    return {s, t};
}

std::vector<int> word_multi_index(const Word1D& w)
{
    // Application order eta^{a1} xi^{b1} eta^{a2} ... -> (a1,b1,a2,b2,...).
    std::vector<int> mi;
    size_t i = 0;
    while (i < w.size()) {
        int a = 0, b = 0;
        while (i < w.size() && w[i] == 0) { ++a; ++i; }
        while (i < w.size() && w[i] == 1) { ++b; ++i; }
        mi.push_back(a);
        mi.push_back(b);
    }
    if (mi.empty()) { mi.push_back(0); mi.push_back(0); }
    return mi;
}

bool multi_index_prec(const std::vector<int>& t, const std::vector<int>& s)
{
    // t = (a1,b1,...,am,bm,c,d) with a proper prefix match against s and
    // either c < a_{m+1}, d = 0 or c = a_{m+1}, d < b_{m+1}. A complete-run
    // prefix is the same index padded with a (0,0) pair.
    auto check = [&](const std::vector<int>& tt) {
        if (tt.size() > s.size() || tt.size() < 2 || tt.size() % 2 != 0) return false;
        size_t m2 = tt.size();
        for (size_t i = 0; i + 2 < m2; ++i)
            if (tt[i] != s[i]) return false;
        int c = tt[m2 - 2], d = tt[m2 - 1];
        int am = s[m2 - 2], bm = s[m2 - 1];
        return (c < am && d == 0) || (c == am && d < bm);
    };
    if (t == s) return false;
    if (check(t)) return true;
    if (t.size() + 2 <= s.size()) {
        std::vector<int> padded = t;
        padded.push_back(0);
        padded.push_back(0);
        return check(padded);
    }
    return false;
}

double apply_word(const Pair1D& z, const Word1D& w, double x)
{
    for (std::uint8_t l : w) x = (l == 0) ? z.eta.eval(x) : z.xi.eval(x);
    return x;
}

PartitionLevel dynamical_partition(const Pair1D& z, int k, double tol_geom)
{
    RotationDigits rd = rotation_digits(z, k);
    if (rd.rational)
        throw CombinatoricsError("dynamical_partition: pair is not k-times renormalizable");
    ReturnWords rw = return_words(rd.digits, k);

    // central interval endpoints: I_k = [0, xi_k(0)], J_k = [0, eta_k(0)]
    double xik0 = apply_word(z, rw.t, 0.0);
    double etak0 = apply_word(z, rw.s, 0.0);

    PartitionLevel out;
    out.level = k;
    auto add_orbit = [&](const Word1D& full, double end, bool isJ) {
        // prefixes of `full` applied to hull(0, end)
        double a = 0.0, b = end;
        Word1D prefix;
        for (size_t j = 0; j < full.size(); ++j) {
            PartitionElement el;
            el.word = prefix;
            el.multi_index = word_multi_index(prefix);
            el.iv = Interval::hull(a, b);
            el.is_J = isJ;
            out.elements.push_back(std::move(el));
            a = (full[j] == 0) ? z.eta.eval(a) : z.xi.eval(a);
            b = (full[j] == 0) ? z.eta.eval(b) : z.xi.eval(b);
            prefix.push_back(full[j]);
        }
    };
    add_orbit(rw.s, xik0, false);
    add_orbit(rw.t, etak0, true);

    std::sort(out.elements.begin(), out.elements.end(),
              [](const PartitionElement& a, const PartitionElement& b) { return a.iv.lo < b.iv.lo; });
    double gap = 0.0, overlap = 0.0, diam = 0.0;
    double rmin = 1.0, rmax = 1.0;
    for (size_t i = 0; i < out.elements.size(); ++i) {
        diam = std::max(diam, out.elements[i].iv.width());
        if (i + 1 < out.elements.size()) {
            double d = out.elements[i + 1].iv.lo - out.elements[i].iv.hi;
            gap = std::max(gap, d);
            overlap = std::max(overlap, -d);
            double ratio = out.elements[i + 1].iv.width() / out.elements[i].iv.width();
            rmin = std::min(rmin, ratio);
            rmax = std::max(rmax, ratio);
        }
    }
    out.max_gap = gap;
    out.max_overlap = overlap;
    out.max_diameter = diam;
    out.min_adjacent_ratio = rmin;
    out.max_adjacent_ratio = rmax;
    if (gap > tol_geom || overlap > tol_geom)
        throw PrecisionError("dynamical_partition: covering/disjointness defect " +
                             std::to_string(std::max(gap, overlap)));
    return out;
}

double pair_distance(const Pair1D& a, const Pair1D& b, int probes)
{
    double m = 0.0;
    Interval Ie{0.0, std::min(a.xi0(), b.xi0())};
    Interval Ix{std::max(a.eta0(), b.eta0()), 0.0};
    for (double x : cheb_nodes(Ie, probes - 1))
        m = std::max(m, std::abs(a.eta.eval(x) - b.eta.eval(x)));
    for (double x : cheb_nodes(Ix, probes - 1))
        m = std::max(m, std::abs(a.xi.eval(x) - b.xi.eval(x)));
    return m;
}

// ---------------------------------------------------------------- tuning

int compare_cf_prefix(const RotationDigits& measured, const RotationNumber& target, int depth)
{
    for (int i = 0; i < depth; ++i) {
        bool meas_inf = measured.rational && i >= static_cast<int>(measured.digits.size());
        int tgt = target.digit(i);
        if (meas_inf) {
            // infinite digit: value smaller at even index, larger at odd
            return (i % 2 == 0) ? -1 : +1;
        }
        int mi = measured.digits[i];
        if (mi != tgt) {
            bool larger_digit = mi > tgt;
            bool value_smaller = (i % 2 == 0) ? larger_digit : !larger_digit;
            return value_smaller ? -1 : +1;
        }
    }
    return 0;
}

RotationDigits lift_digits(const CircleLift& lift, int depth, std::int64_t max_q)
{
    // Record minima of dist(f^n(0), Z) happen exactly at the convergent
    // denominators; digits follow from q_{m+1} = r_m q_m + q_{m-1}. When
    // rho > 1/2 the n=1 record is already q_1 (= q_0 = 1, r_0 = 1), detected
    // by the sign of the first closest-return error.
    std::vector<std::int64_t> qs;
    bool first_negative = false;
    bool periodic = false;
    double best = 2.0, x = 0.0;
    int need = depth + 1;
    for (std::int64_t n = 1; n <= max_q && static_cast<int>(qs.size()) < need; ++n) {
        x = lift.f(x);
        double e = x - std::nearbyint(x);
        double d = std::abs(e);
        if (d < best) {
            if (n == 1) first_negative = (e < 0.0);
            if (d < 1e-13) { periodic = true; break; }
            best = d;
            qs.push_back(n);
        }
    }
    RotationDigits out;
    out.rational = periodic || static_cast<int>(qs.size()) < need;
    if (qs.empty()) return out;
    if (first_negative) {
        // qs = [q_1, q_2, ...] with hidden q_0 = 1
        out.digits.push_back(1);
        for (size_t i = 1; i < qs.size(); ++i) {
            std::int64_t qm1 = (i >= 2) ? qs[i - 2] : 1;
            out.digits.push_back(static_cast<int>((qs[i] - qm1) / qs[i - 1]));
        }
    } else {
        // qs = [q_0, q_1, ...] with q_{-1} = 0
        for (size_t i = 1; i < qs.size(); ++i) {
            std::int64_t qm1 = (i >= 2) ? qs[i - 2] : 0;
            out.digits.push_back(static_cast<int>((qs[i] - qm1) / qs[i - 1]));
        }
    }
    return out;
}

int lift_convergent_signs(const CircleLift& lift, const RotationNumber& target, int depth)
{
    // e_k = f^{q_k}(0) - p_k at the target's convergents must alternate in
    // sign (+ for even k). The first violation tells which side of the target
    // cylinder the lift's rotation number lies on.
    for (int k = 0; k <= depth; ++k) {
        Convergent c = convergent(target, k);
        double e = lift.iterate(0.0, c.q) - static_cast<double>(c.p);
        bool expect_pos = (k % 2 == 0);
        if (expect_pos && e <= 0.0) return -1;  // rho(f) <= p_k/q_k < rho*
        if (!expect_pos && e >= 0.0) return +1; // rho(f) >= p_k/q_k > rho*
    }
    return 0;
}

double tune_lift(const std::function<CircleLift(double)>& family,
                 double omega_lo, double omega_hi,
                 const RotationNumber& target, int depth, int max_iter)
{
    auto classify = [&](double w) -> int {
        return lift_convergent_signs(family(w), target, depth);
    };
    int clo = classify(omega_lo), chi = classify(omega_hi);
    if (clo == 0) return omega_lo;
    if (chi == 0) return omega_hi;
    if (clo == chi)
        throw ConvergenceError("tune_lift: bracket does not straddle the target");
    double lo = omega_lo, hi = omega_hi;
    for (int it = 0; it < max_iter; ++it) {
        double mid = 0.5 * (lo + hi);
        int c = classify(mid);
        if (c == 0) return mid;
        if (c == clo) lo = mid; else hi = mid;
        if (hi - lo < 1e-15 * std::max(1.0, std::abs(hi))) break;
    }
    double mid = 0.5 * (lo + hi);
    if (classify(mid) != 0)
        throw ConvergenceError("tune_lift: bracket exhausted without digit match");
    return mid;
}

} // namespace renormlab
