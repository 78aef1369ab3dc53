#pragma once

// Continued-fraction arithmetic for (eventually) periodic rotation numbers:
// convergents, return times, shifted tails, scaling ratios, and the
// quantitative bounded-type estimates used by the renormalization checks.

#include <cstdint>
#include <vector>

#include "renormlab/errors.hpp"

namespace renormlab {

struct RotationNumber {
    std::vector<int> preperiod;  // may be empty
    std::vector<int> period;     // nonempty for periodic-type formulas

    // digit i of the full expansion [r_0, r_1, ...]
    int digit(int i) const;
    bool is_periodic() const { return !period.empty(); }
    double value() const;  // numeric value in (0,1)

    static RotationNumber golden() { return {{}, {1}}; }
    static RotationNumber periodic(std::vector<int> p) { return {{}, std::move(p)}; }

    void validate() const;
};

struct Convergent {
    std::int64_t p = 0, q = 1;
    int m = 0;
};

struct ReturnTimes {
    std::int64_t u = 0;  // q_m + p_m
    std::int64_t v = 0;  // q_{m-1} + p_{m-1}
    int m = 0;
};

// p_m/q_m = [r_0,...,r_{m-1}] with p_{-1}=1,q_{-1}=0, p_0=0, q_0=1.
// Throws ConfigError past the 64-bit overflow-safe range.
Convergent convergent(const RotationNumber& rho, int m);

ReturnTimes return_times(const RotationNumber& rho, int m);

// theta_i = [r_i, r_{i+1}, ...] for periodic rho, via the Moebius fixed point.
double theta_tail(const RotationNumber& rho, int i);

// |lambda_{kn}| = (prod_i theta_i)^k with sign (-1)^{kn}; n = period length.
double lambda_rotation(const RotationNumber& rho, int k, int n);

// |I_m| = |p_{m-1} - rho q_{m-1}| for the rigid rotation.
double central_interval_length(const RotationNumber& rho, int m);

// alpha = sqrt((1+theta)/2), theta the inverse golden mean.
double alpha_constant();

struct BoundReportRow {
    int k = 0;
    double value = 0.0;
    double bound = 0.0;
};

struct UlambdaReport {
    std::vector<BoundReportRow> rows;  // value = |u_{(k+m)n}| lambda_{kn}^2 / alpha^{kn}
    double running_max = 0.0;          // empirical A_{m,n}
    bool pass = false;                 // no growth trend on the last half
};

UlambdaReport ulambda_check(const RotationNumber& rho, int m, int k_max);

struct DiscrepancyReport {
    double bound = 0.0;     // log2/(pi K) + K/(pi |u| c) at K = sqrt(|u|)
    double c_estimate = 0.0;
    double measured = 0.0;  // extreme discrepancy of the orbit {j rho}, j < |u|
    std::int64_t u = 0;
};

DiscrepancyReport discrepancy_bound(const RotationNumber& rho, int m);

struct ProportionReport {
    double d = 0.0;                      // limit of B_{kn}/(1+rho)
    std::vector<double> d_sequence;      // B_{kn}/(1+rho) for k = 1..l_max
    std::vector<BoundReportRow> rows;    // value = relative measure, bound = |value-d|
    double fit_rate = 0.0;               // fitted geometric decay rate of residuals
    bool pass = false;
};

// B_{kn} = |I_{kn}| (q_{kn}+p_{kn}); relative measures of the level-ln orbit
// of the central interval inside level-n elements, by brute-force rotation orbits.
ProportionReport proportion_limit(const RotationNumber& rho, int l_max);

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace renormlab
