#include "renormlab/rotation.hpp"

#include <algorithm>
#include <cmath>

namespace renormlab {

void RotationNumber::validate() const
{
    for (int r : preperiod)
        if (r < 1) throw ConfigError("RotationNumber: partial quotients must be >= 1");
    for (int r : period)
        if (r < 1) throw ConfigError("RotationNumber: partial quotients must be >= 1");
    if (preperiod.empty() && period.empty())
        throw ConfigError("RotationNumber: empty expansion");
}

int RotationNumber::digit(int i) const
{
    if (i < static_cast<int>(preperiod.size())) return preperiod[i];
    if (period.empty())
        throw ConfigError("RotationNumber::digit: index past a finite expansion");
    return period[(i - preperiod.size()) % period.size()];
}

double RotationNumber::value() const
{
    validate();
    double v = is_periodic() ? theta_tail(*this, static_cast<int>(preperiod.size())) : 0.0;
    for (int i = static_cast<int>(preperiod.size()) - 1; i >= 0; --i)
        v = 1.0 / (preperiod[i] + v);
    if (preperiod.empty()) v = theta_tail(*this, 0);
    return v;
}

Convergent convergent(const RotationNumber& rho, int m)
{
    rho.validate();
    if (m < 0) throw ConfigError("convergent: m must be >= 0");
    std::int64_t pm1 = 1, qm1 = 0, p = 0, q = 1;  // p_{-1}/q_{-1}, p_0/q_0
    for (int i = 0; i < m; ++i) {
        std::int64_t r = rho.digit(i);
        __int128 pn = static_cast<__int128>(r) * p + pm1;
        __int128 qn = static_cast<__int128>(r) * q + qm1;
        if (pn > INT64_MAX / 4 || qn > INT64_MAX / 4)
            throw ConfigError("convergent: q_m exceeds the overflow-safe range");
        pm1 = p; qm1 = q;
        p = static_cast<std::int64_t>(pn);
        q = static_cast<std::int64_t>(qn);
    }
    return {p, q, m};
}

ReturnTimes return_times(const RotationNumber& rho, int m)
{
    if (m < 1) throw ConfigError("return_times: m must be >= 1");
    Convergent cm = convergent(rho, m);
    Convergent cm1 = convergent(rho, m - 1);
    return {cm.p + cm.q, cm1.p + cm1.q, m};
}

double theta_tail(const RotationNumber& rho, int i)
{
    rho.validate();
    if (!rho.is_periodic()) throw ConfigError("theta_tail: rho must be periodic");
    if (i < 0) throw ConfigError("theta_tail: i must be >= 0");
    const int pre = static_cast<int>(rho.preperiod.size());
    if (i < pre) {
        double v = theta_tail(rho, pre);
        for (int j = pre - 1; j >= i; --j) v = 1.0 / (rho.digit(j) + v);
        return v;
    }
    // Purely periodic tail: Moebius fixed point of the period word.
    const int n = static_cast<int>(rho.period.size());
    const int start = (i - pre) % n;
    // x = 1/(d_0 + 1/(d_1 + ... + 1/(d_{n-1} + x))), matrices [[0,1],[1,d]].
    long double a = 1, b = 0, c = 0, d = 1;
    for (int j = 0; j < n; ++j) {
        // multiply on the right by [[0,1],[1,r]]
        long double r = rho.period[(start + j) % n];
        long double na = b, nb = a + b * r;
        long double nc = d, nd = c + d * r;
        a = na; b = nb; c = nc; d = nd;
    }
    // fixed point of (a x + b)/(c x + d), positive root
    long double A = c, B = d - a, C = -b;
    long double disc = B * B - 4 * A * C;
    long double x = (-B + std::sqrt(static_cast<double>(disc))) / (2 * A);
    // one Newton polish on A x^2 + B x + C = 0
    x -= (A * x * x + B * x + C) / (2 * A * x + B);
    return static_cast<double>(x);
}

double lambda_rotation(const RotationNumber& rho, int k, int n)
{
    rho.validate();
    if (!rho.is_periodic() || !rho.preperiod.empty())
        throw ConfigError("lambda_rotation: rho must be purely periodic");
    if (k < 1) throw ConfigError("lambda_rotation: k must be >= 1");
    const int np = static_cast<int>(rho.period.size());
    if (n % np != 0) throw ConfigError("lambda_rotation: n must be a multiple of the period");
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= theta_tail(rho, i);
    double mag = std::pow(prod, k);
    return (k * n) % 2 == 0 ? mag : -mag;
}

double central_interval_length(const RotationNumber& rho, int m)
{
    if (m < 1) throw ConfigError("central_interval_length: m must be >= 1");
    if (rho.is_periodic()) {
        // |I_m| = |q_{m-1} rho - p_{m-1}| = theta_0 ... theta_{m-1} exactly;
        // the difference |p - rho q| cancels catastrophically at deep levels.
        double prod = 1.0;
        for (int i = 0; i < m; ++i) prod *= theta_tail(rho, i);
        return prod;
    }
    Convergent c = convergent(rho, m - 1);
    return std::abs(static_cast<double>(c.p) - rho.value() * static_cast<double>(c.q));
}

double alpha_constant()
{
    double theta = (std::sqrt(5.0) - 1.0) / 2.0;
    return std::sqrt((1.0 + theta) / 2.0);
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const size_t n = x.size();
    if (n < 2 || y.size() != n) throw ConfigError("fit_slope: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i]; sy += y[i]; sxx += x[i] * x[i]; sxy += x[i] * y[i];
    }
    double den = n * sxx - sx * sx;
    return (n * sxy - sx * sy) / den;
}

UlambdaReport ulambda_check(const RotationNumber& rho, int m, int k_max)
{
    rho.validate();
    if (!rho.is_periodic() || !rho.preperiod.empty())
        throw ConfigError("ulambda_check: rho must be purely periodic");
    UlambdaReport rep;
    if (k_max <= 0) { rep.pass = true; return rep; }
    const int n = static_cast<int>(rho.period.size());
    const double alpha = alpha_constant();
    for (int k = 1; k <= k_max; ++k) {
        ReturnTimes rt = return_times(rho, (k + m) * n);
        double lam2 = std::pow(lambda_rotation(rho, k, n), 2);
        double value = static_cast<double>(rt.u) * lam2 / std::pow(alpha, k * n);
        rep.running_max = std::max(rep.running_max, value);
        rep.rows.push_back({k, value, rep.running_max});
    }
    // No growth trend over the last half of the range.
    std::vector<double> xs, ys;
    for (size_t i = rep.rows.size() / 2; i < rep.rows.size(); ++i) {
        xs.push_back(rep.rows[i].k);
        ys.push_back(rep.rows[i].value);
    }
    double slope = xs.size() >= 2 ? fit_slope(xs, ys) : 0.0;
    rep.pass = slope <= 1e-3 * std::max(1.0, rep.running_max);
    return rep;
}

namespace {

double frac(double x) { return x - std::floor(x); }

// Exact extreme discrepancy of a point set in [0,1): D = D+ + D-.
double extreme_discrepancy(std::vector<double> pts)
{
    std::sort(pts.begin(), pts.end());
    const int N = static_cast<int>(pts.size());
    double dp = 0.0, dm = 0.0;
    for (int i = 1; i <= N; ++i) {
        dp = std::max(dp, static_cast<double>(i) / N - pts[i - 1]);
        dm = std::max(dm, pts[i - 1] - static_cast<double>(i - 1) / N);
    }
    return dp + dm;
}

// Total length of the circle-arc (start,len) intersected with [a0, a0+la).
double arc_intersect(double start, double len, double a0, double la)
{
    start = frac(start);
    double total = 0.0;
    // split the moving arc at the wrap point
    for (int piece = 0; piece < 2; ++piece) {
        double s, l;
        if (piece == 0) { s = start; l = std::min(len, 1.0 - start); }
        else { s = 0.0; l = len - (1.0 - start); }
        if (l <= 0) continue;
        // intersect [s, s+l) with [a0, a0+la) (both non-wrapping now if la fits)
        for (int p2 = 0; p2 < 2; ++p2) {
            double b, lb;
            if (p2 == 0) { b = frac(a0); lb = std::min(la, 1.0 - frac(a0)); }
            else { b = 0.0; lb = la - (1.0 - frac(a0)); }
            if (lb <= 0) continue;
            double lo = std::max(s, b), hi = std::min(s + l, b + lb);
            if (hi > lo) total += hi - lo;
        }
    }
    return total;
}

} // namespace

DiscrepancyReport discrepancy_bound(const RotationNumber& rho, int m)
{
    rho.validate();
    if (!rho.is_periodic())
        throw ConfigError("discrepancy_bound: rho must be of bounded (periodic) type");
    DiscrepancyReport rep;
    rep.u = (m < 1) ? 1 : return_times(rho, m).u;  // q_0 + p_0 = 1
    const double r = rho.value();
    if (rep.u <= 1) {
        rep.bound = 1.0;  // vacuous: a single point has discrepancy 1
        rep.c_estimate = frac(r);
        rep.measured = 1.0;
        return rep;
    }
    double c = 1e300;
    for (std::int64_t k = 1; k <= rep.u; ++k)
        c = std::min(c, static_cast<double>(k) * frac(static_cast<double>(k) * r));
    rep.c_estimate = c;
    double K = std::sqrt(static_cast<double>(rep.u));
    rep.bound = std::log(2.0) / (M_PI * K) + K / (M_PI * static_cast<double>(rep.u) * c);
    std::vector<double> pts(rep.u);
    for (std::int64_t j = 0; j < rep.u; ++j) pts[j] = frac(static_cast<double>(j) * r);
    rep.measured = extreme_discrepancy(std::move(pts));
    return rep;
}

ProportionReport proportion_limit(const RotationNumber& rho, int l_max)
{
    rho.validate();
    if (!rho.is_periodic() || !rho.preperiod.empty())
        throw ConfigError("proportion_limit: rho must be purely periodic");
    const int n = static_cast<int>(rho.period.size());
    const double r = rho.value();
    ProportionReport rep;

    {
        std::vector<double> raw;
        for (int k = 1; k <= l_max; ++k) {
            ReturnTimes rt = return_times(rho, k * n);
            raw.push_back(central_interval_length(rho, k * n) *
                          static_cast<double>(rt.u) / (1.0 + r));
        }
        // Aitken-accelerated running estimates (raw sequence converges like
        // theta^{2kn}, the accelerated one like theta^{4kn}).
        for (size_t k = 0; k < raw.size(); ++k) {
            if (k < 2) { rep.d_sequence.push_back(raw[k]); continue; }
            double d1 = raw[k] - raw[k - 1], d2 = raw[k] - 2 * raw[k - 1] + raw[k - 2];
            rep.d_sequence.push_back(std::abs(d2) > 1e-300 ? raw[k] - d1 * d1 / d2 : raw[k]);
        }
        rep.d = rep.d_sequence.back();
    }

    // Brute-force relative measures: the orbit of the central interval I_{ln}
    // inside L = I_n. The rotation pair glues to a circle of circumference
    // 1 + rho on which every step advances by 1; rescaled to the unit circle
    // the step is om = 1/(1+rho) and the central interval I_m has signed
    // endpoint (p_{m-1} - q_{m-1} rho)/(1+rho).
    const double om = 1.0 / (1.0 + r);
    auto central_arc = [&](int m) {
        Convergent c = convergent(rho, m - 1);
        double e = (static_cast<double>(c.p) - static_cast<double>(c.q) * r) / (1.0 + r);
        return e >= 0 ? std::pair<double, double>(0.0, e)
                      : std::pair<double, double>(frac(e), -e);
    };
    auto [L0, Llen] = central_arc(n);
    std::vector<double> resid_l, resid_log;
    for (int l = 1; l <= l_max; ++l) {
        auto [s0, len] = central_arc(l * n);
        ReturnTimes rt = return_times(rho, l * n);
        double total = 0.0;
        for (std::int64_t j = 0; j < rt.u; ++j)
            total += arc_intersect(s0 + static_cast<double>(j) * om, len, L0, Llen);
        double value = total / Llen;
        if (value < -1e-12 || value > 1.0 + 1e-12)
            throw PrecisionError("proportion_limit: relative measure outside [0,1]");
        rep.rows.push_back({l, value, std::abs(value - rep.d)});
        if (l >= 2 && std::abs(value - rep.d) > 1e-14) {
            resid_l.push_back(l);
            resid_log.push_back(std::log(std::abs(value - rep.d)));
        }
    }
    if (resid_l.size() >= 3) {
        double slope = fit_slope(resid_l, resid_log);
        rep.fit_rate = std::exp(slope);
        rep.pass = slope < 0.0;
    } else {
        rep.fit_rate = 0.0;
        rep.pass = true;  // residuals at noise floor throughout
    }
    return rep;
}

} // namespace renormlab
