#include "renormlab/newton1d.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace renormlab {

namespace {

// Coefficient coordinates for the solver: both maps refit on fixed domains.
struct SolveSpace {
    Interval Deta, Dxi;
    int n;

    int dim() const { return 2 * (n + 1); }

    Eigen::VectorXd pack(const Pair1D& z) const
    {
        ChebFun1 e = ChebFun1::fit([&](double x) { return z.eta.eval(x); }, Deta, n);
        ChebFun1 x = ChebFun1::fit([&](double y) { return z.xi.eval(y); }, Dxi, n);
        Eigen::VectorXd v(dim());
        for (int j = 0; j <= n; ++j) {
            v[j] = e.coeffs()[j];
            v[n + 1 + j] = x.coeffs()[j];
        }
        return v;
    }

    Pair1D unpack(const Eigen::VectorXd& v) const
    {
        std::vector<double> ce(v.data(), v.data() + n + 1);
        std::vector<double> cx(v.data() + n + 1, v.data() + 2 * (n + 1));
        return {ChebFun1(Deta, std::move(ce)), ChebFun1(Dxi, std::move(cx))};
    }
};

// One application of R^p with the heights pinned to rho's digits.
Pair1D renorm_p(const Pair1D& z, const RotationNumber& rho, int p, int digit_offset)
{
    Pair1D cur = z;
    for (int i = 0; i < p; ++i) {
        RenormStep st = renormalize(cur);
        if (st.r != rho.digit(digit_offset + i))
            throw CombinatoricsError("newton: height changed during iteration (got " +
                                     std::to_string(st.r) + ")");
        cur = st.pair;
    }
    return cur;
}

} // namespace

FixedPointResult newton_fixed_point(const Pair1D& seed, const RotationNumber& rho,
                                    const NewtonOptions& opts)
{
    rho.validate();
    if (!rho.is_periodic() || !rho.preperiod.empty())
        throw ConfigError("newton_fixed_point: rho must be purely periodic");
    const int p = static_cast<int>(rho.period.size());

    SolveSpace S;
    S.n = opts.degree;
    S.Deta = Interval{0.0, 1.0}.widened(0.08);
    double e0 = seed.eta0();
    S.Dxi = Interval{e0 - 0.05 * std::abs(e0), 0.05 * std::abs(e0)};

    auto G = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
        Pair1D z = S.unpack(v);
        Pair1D rz = renorm_p(z, rho, p, 0);
        return S.pack(rz) - v;
    };

    Eigen::VectorXd v = S.pack(seed);
    FixedPointResult res;
    Eigen::VectorXd g = G(v);
    double gn = g.lpNorm<Eigen::Infinity>();
    res.history.push_back(gn);

    for (int it = 0; it < opts.max_iter && gn > opts.tol; ++it) {
        const int dim = S.dim();
        Eigen::MatrixXd J(dim, dim);
        for (int j = 0; j < dim; ++j) {
            double h = opts.fd_step * std::max(1e-3, std::abs(v[j]));
            Eigen::VectorXd vp = v, vm = v;
            vp[j] += h;
            vm[j] -= h;
            J.col(j) = (G(vp) - G(vm)) / (2.0 * h);
        }
        Eigen::VectorXd delta = J.partialPivLu().solve(g);
        double t = 1.0;
        Eigen::VectorXd vn, gnew;
        double gnn = 0.0;
        int bt = 0;
        for (; bt <= opts.backtrack_max; ++bt) {
            vn = v - t * delta;
            try {
                gnew = G(vn);
                gnn = gnew.lpNorm<Eigen::Infinity>();
                if (gnn < gn) break;
            } catch (const Error&) {
                // step left the renormalizable region; shorten it
            }
            t *= 0.5;
        }
        if (bt > opts.backtrack_max)
            throw ConvergenceError("newton_fixed_point: backtracking failed at residual " +
                                   std::to_string(gn));
        v = vn;
        g = gnew;
        gn = gnn;
        res.history.push_back(gn);
        res.iterations = it + 1;
    }
    if (gn > opts.tol)
        throw ConvergenceError("newton_fixed_point: no convergence, residual " +
                               std::to_string(gn));

    res.pair = S.unpack(v);
    res.residual = gn;
    res.lambda = renormalize(res.pair).lambda;

    // sup-norm residual of R^p zeta - zeta on probe grids
    Pair1D rz = renorm_p(res.pair, rho, p, 0);
    double sup = 0.0;
    for (double x : cheb_nodes(res.pair.nominal_eta(), 80))
        sup = std::max(sup, std::abs(rz.eta.eval(x) - res.pair.eta.eval(x)));
    for (double x : cheb_nodes(res.pair.nominal_xi(), 80))
        sup = std::max(sup, std::abs(rz.xi.eval(x) - res.pair.xi.eval(x)));
    res.sup_residual = sup;
    return res;
}

SpectrumResult renorm_spectrum(const Pair1D& zeta_star, const RotationNumber& rho,
                               int n_modes, const NewtonOptions& opts)
{
    const int p = static_cast<int>(rho.period.size());
    SolveSpace S;
    S.n = opts.degree;
    S.Deta = Interval{0.0, 1.0}.widened(0.08);
    double e0 = zeta_star.eta0();
    S.Dxi = Interval{e0 - 0.05 * std::abs(e0), 0.05 * std::abs(e0)};
    const int dim = S.dim();

    auto Rp = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
        return S.pack(renorm_p(S.unpack(v), rho, p, 0));
    };
    // Constraint functionals cutting out the normalized almost-commuting
    // pairs: commutator jets 0..3, xi(0) = 1, and both cubic critical points.
    auto C = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
        Pair1D z = S.unpack(v);
        auto jets = commutator_jets(z);
        auto je = jets_at(z.eta, 0.0, 2);
        auto jx = jets_at(z.xi, 0.0, 2);
        Eigen::VectorXd c(9);
        c << jets[0], jets[1], jets[2], jets[3], jx[0] - 1.0, je[1], je[2], jx[1], jx[2];
        return c;
    };

    Eigen::VectorXd v0 = S.pack(zeta_star);
    Eigen::MatrixXd M(dim, dim);
    Eigen::MatrixXd DC(9, dim);
    for (int j = 0; j < dim; ++j) {
        double h = opts.fd_step * std::max(1e-3, std::abs(v0[j]));
        Eigen::VectorXd vp = v0, vm = v0;
        vp[j] += h;
        vm[j] -= h;
        M.col(j) = (Rp(vp) - Rp(vm)) / (2.0 * h);
        DC.col(j) = (C(vp) - C(vm)) / (2.0 * h);
    }

    SpectrumResult out;
    {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
        double smin = svd.singularValues()(svd.singularValues().size() - 1);
        out.condition_number = svd.singularValues()(0) / std::max(smin, 1e-300);
        out.ill_conditioned = out.condition_number > 1e12;
    }

    // Orthonormal basis of the tangent space ker(DC).
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(DC, Eigen::ComputeFullV);
    Eigen::MatrixXd Q = svd.matrixV().rightCols(dim - DC.rows());
    Eigen::MatrixXd E = Q.transpose() * M * Q;

    Eigen::EigenSolver<Eigen::MatrixXd> es(E);
    std::vector<std::complex<double>> ev(es.eigenvalues().data(),
                                         es.eigenvalues().data() + E.rows());
    std::sort(ev.begin(), ev.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  return std::abs(a) > std::abs(b);
              });
    if (static_cast<int>(ev.size()) > n_modes) ev.resize(n_modes);
    out.eigenvalues = ev;
    for (const auto& m : out.eigenvalues)
        if (std::abs(m) > 1.0) ++out.unstable_count;
    return out;
}

} // namespace renormlab
