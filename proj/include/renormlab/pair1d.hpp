#pragma once

// One-dimensional (almost-)commuting pairs: construction from circle maps,
// heights, renormalization, rotation numbers, dynamical partitions.
//
// Orientation convention throughout: xi(0) = 1 (after normalization) and
// eta(0) < 0, so the pair acts on [eta(0), xi(0)]. The rigid rotation pair
// with number rho is (x - rho on [0,1], x + 1 on [-rho, 0]).

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "renormlab/cheb.hpp"
#include "renormlab/rotation.hpp"

namespace renormlab {

// Fit domains are widened by this fraction beyond the nominal intervals.
inline constexpr double kPairDomainMargin = 0.15;
inline constexpr double kTolComm = 1e-9;

struct Pair1D {
    ChebFun1 eta;  // on a neighborhood of I_eta = [0, xi(0)]
    ChebFun1 xi;   // on a neighborhood of I_xi = [eta(0), 0]

    double eta0() const { return eta.eval_unchecked(0.0); }
    double xi0() const { return xi.eval_unchecked(0.0); }
    Interval nominal_eta() const { return Interval::hull(0.0, xi0()); }
    Interval nominal_xi() const { return Interval::hull(eta0(), 0.0); }
    int fit_degree() const { return std::max(eta.degree(), xi.degree()); }

    // The rigid rotation pair for rho: (x - rho on [0,1], x + 1 on [-rho,0]).
    static Pair1D rigid(double rho, int n = 8);
};

struct PairDefects {
    double xi0_dev = 0.0;              // |xi(0) - 1|
    double eta_crit = 0.0, xi_crit = 0.0;  // max of |f'(0)|, |f''(0)|
    double eta_third = 0.0, xi_third = 0.0;  // f'''(0), should be nonzero
    std::array<double, 4> jets{};      // commutator jets at 0
    bool monotone = true;              // increasing away from 0 on nominal domains
};

PairDefects check_pair(const Pair1D& z);

struct Height {
    int r = 0;
    bool infinite = false;
};

// Smallest r >= 1 with 0 in [eta^{r+1}(xi(0)), eta^r(xi(0))]; infinite if the
// eta-orbit of xi(0) stalls before crossing zero.
Height height(const Pair1D& z, double tie_tol = 1e-12);

struct PreRenorm {
    Pair1D pair;  // (eta^r o xi on I_xi, eta on [0, eta^r(xi(0))]), unscaled
    int r = 0;
};

PreRenorm prerenormalize(const Pair1D& z);

struct RenormStep {
    Pair1D pair;
    double lambda = 0.0;  // rescaling factor (= eta(0) of the input pair)
    int r = 0;            // height consumed
};

RenormStep renormalize(const Pair1D& z);

struct RotationDigits {
    std::vector<int> digits;
    bool rational = false;  // an infinite height was reached
};

RotationDigits rotation_digits(const Pair1D& z, int depth);

// Commutator jets of the level-k renormalized pair via exact jet transport
// along the return words of the base pair.
std::array<double, 4> renormalized_commutator_jets(const Pair1D& base,
                                                   const std::vector<int>& heights, int k);

// Jets (value, d1, d2, d3) of eta o xi - xi o eta at 0.
std::array<double, 4> commutator_jets(const Pair1D& z);

// Derivatives f^{(k)}(x0), k = 0..order, of the representation.
std::vector<double> jets_at(const ChebFun1& f, double x0, int order);

// ---------------------------------------------------------------- circle maps

// A lift of a circle homeomorphism: callable on all of R, f(x+1) = f(x)+1.
struct CircleLift {
    std::function<double(double)> f;
    double operator()(double x) const { return f(x); }
    double iterate(double x, std::int64_t n) const;
};

// Arnold-type critical lift x + omega - sin(2 pi x)/(2 pi) + c2 (1-cos(2 pi x))^2.
CircleLift arnold_lift(double omega, double second_harmonic = 0.0);

// The commuting pair (t^{-p_{m+1}} f^{q_{m+1}}, t^{-p_m} f^{q_m}) on the
// closest-return intervals, normalized to xi(0) = 1. m must be even so the
// orientation matches. rho supplies the convergents.
Pair1D pair_from_circle_map(const CircleLift& lift, const RotationNumber& rho,
                            int m, int n = 48);

struct PiecewiseCircleMap {
    ChebFun1 left;   // eta o xi on [eta(0), 0]
    ChebFun1 right;  // eta on [0, xi(eta(0))]
    double lo = 0.0, hi = 0.0;  // I = [eta(0), xi o eta(0)], endpoints glued
    double glue_residual = 0.0;

    double circumference() const { return hi - lo; }
    // Lift value: x in [lo, hi) advanced once; wraps across the glue.
    double step(double x, int& wraps) const;
    // Leading continued-fraction digits of the rotation number.
    std::vector<int> rotation_cf(int depth, std::int64_t max_iter = 2000000) const;
};

PiecewiseCircleMap circle_map_from_pair(const Pair1D& z, double tol_geom = 1e-9);

// ---------------------------------------------------------------- partitions

// Composition words in application order; 0 = eta, 1 = xi.
using Word1D = std::vector<std::uint8_t>;

struct ReturnWords {
    Word1D s;  // word of the level-k first map (eta_k)
    Word1D t;  // word of the level-k second map (xi_k)
};

// Level-k return words from the first k heights.
ReturnWords return_words(const std::vector<int>& heights, int k);

// Multi-index (a1,b1,...,ak,bk) of an application-order prefix.
std::vector<int> word_multi_index(const Word1D& w);

// Ordering "prec" on multi-indices.
bool multi_index_prec(const std::vector<int>& t, const std::vector<int>& s);

struct PartitionElement {
    Word1D word;               // application-order prefix
    std::vector<int> multi_index;
    Interval iv;
    bool is_J = false;         // J-type (orbit of the xi_k-side central interval)
};

struct PartitionLevel {
    int level = 0;
    std::vector<PartitionElement> elements;  // sorted by position
    double max_gap = 0.0;      // covering defect
    double max_overlap = 0.0;  // disjointness defect
    double max_diameter = 0.0;
    double min_adjacent_ratio = 1.0;  // commensurability of adjacent elements
    double max_adjacent_ratio = 1.0;
};

PartitionLevel dynamical_partition(const Pair1D& z, int k, double tol_geom = 1e-7);

// Apply the word to a point (pointwise orbit).
double apply_word(const Pair1D& z, const Word1D& w, double x);

// sup distance between two pairs on the intersection of nominal domains.
double pair_distance(const Pair1D& a, const Pair1D& b, int probes = 61);

// ---------------------------------------------------------------- tuning

// Lexicographic continued-fraction comparison of measured digits vs target:
// -1 if rho(measured) < rho(target), +1 if >, 0 if equal to `depth` digits.
int compare_cf_prefix(const RotationDigits& measured, const RotationNumber& target, int depth);

// Continued-fraction digits of the lift's rotation number, read off the
// closest returns of the orbit of 0 (record minima occur at the convergent
// denominators).
RotationDigits lift_digits(const CircleLift& lift, int depth,
                           std::int64_t max_q = 2000000);

// Sign of the first violated convergent alternation: -1/0/+1 for rho(f)
// below/inside/above the depth-d cylinder of the target.
int lift_convergent_signs(const CircleLift& lift, const RotationNumber& target, int depth);

// Bisection on omega until the lift matches the target cylinder to depth.
double tune_lift(const std::function<CircleLift(double)>& family,
                 double omega_lo, double omega_hi,
                 const RotationNumber& target, int depth, int max_iter = 200);

} // namespace renormlab
