#pragma once

// Newton solution of the renormalization fixed-point equation R^p(zeta) =
// zeta over Chebyshev coefficients on fixed domains, and the spectrum of the
// finite-difference linearization restricted to the tangent space of the
// normalized almost-commuting pairs.

#include <complex>
#include <vector>

#include "renormlab/pair1d.hpp"

namespace renormlab {

struct NewtonOptions {
    double tol = 1e-11;          // coefficient-residual infinity norm
    int max_iter = 30;
    double fd_step = 1e-6;       // relative finite-difference step
    int backtrack_max = 20;
    int degree = 56;             // solver degree per map
};

struct FixedPointResult {
    Pair1D pair;
    double lambda = 0.0;              // rescaling factor of one R-step at the fixed point
    double residual = 0.0;            // coefficient residual (infinity norm)
    double sup_residual = 0.0;        // sup |R^p zeta - zeta| on probe grids
    std::vector<double> history;      // residual per Newton iteration
    int iterations = 0;
};

// Solves R^{p} zeta = zeta, p = period of rho, from the given seed. The
// heights consumed during every evaluation are checked against rho's digits.
FixedPointResult newton_fixed_point(const Pair1D& seed, const RotationNumber& rho,
                                    const NewtonOptions& opts = {});

struct SpectrumResult {
    std::vector<std::complex<double>> eigenvalues;  // sorted by modulus, descending
    int unstable_count = 0;                         // |mu| > 1 among the leading modes
    double condition_number = 0.0;
    bool ill_conditioned = false;                   // condition number > 1e12
};

// Linearization of R^p at the fixed point, restricted to perturbations that
// keep xi(0) = 1, both critical points cubic, and the commutator jets zero
// (all to first order).
SpectrumResult renorm_spectrum(const Pair1D& zeta_star, const RotationNumber& rho,
                               int n_modes = 10, const NewtonOptions& opts = {});

} // namespace renormlab
