#include "coslab/resolvent.hpp"

#include <cmath>
#include <complex>

#include "coslab/error.hpp"

namespace coslab {

namespace {

// Grid lower bound of sup_{t in [0, hi]} ||C(t)|| (endpoints included).
template <typename Family>
double grid_sup_norm(const Family& fam, double hi, int samples) {
    double best = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = hi * static_cast<double>(i) / (samples - 1);
        best = std::max(best, op_norm(fam.at(t)));
    }
    return best;
}

}  // namespace

ComplexMatrix s_operator(const CosineFamily& fam, Complex lambda, double s,
                         const QuadratureRule& q) {
    if (s == 0.0) return ComplexMatrix::Zero(fam.generator().dim(), fam.generator().dim());
    return integrate(q, s, [&](double t) -> ComplexMatrix {
        return std::sinh(lambda * (s - t)) * fam.at(t);
    });
}

SOperatorResult s_operator_checked(const CosineFamily& fam, Complex lambda, double s,
                                   const QuadratureRule& q, double tol) {
    SOperatorResult out;
    const ComplexMatrix coarse = s_operator(fam, lambda, s, q);
    out.value = s_operator(fam, lambda, s, q.refined());
    out.refinement_delta = op_norm(out.value - coarse);
    out.converged = out.refinement_delta <= tol;
    return out;
}

NormBoundCheck s_norm_bound_check(const CosineFamily& fam, Complex lambda, double s,
                                  const QuadratureRule& q, int sup_grid) {
    if (lambda.real() <= 0.0) throw invalid_input("s_norm_bound_check: requires Re lambda > 0");
    NormBoundCheck out;
    out.lhs = op_norm(s_operator(fam, lambda, s, q));
    const double sup_c = grid_sup_norm(fam, std::abs(s), sup_grid);
    out.rhs = sup_c * std::sinh(std::abs(s) * lambda.real()) / lambda.real();
    return out;
}

CosineIdentityCheck resolvent_identity_residual(const CosineFamily& fam, Complex lambda,
                                                double s, const QuadratureRule& q) {
    const Eigen::Index n = fam.generator().dim();
    const ComplexMatrix& a = fam.generator().matrix();
    const ComplexMatrix sm = s_operator(fam, lambda, s, q);
    const ComplexMatrix cs = fam.at(s);
    const ComplexMatrix lhs = (lambda * lambda) * sm - a * sm;
    const ComplexMatrix rhs = lambda * (std::cosh(lambda * s) * identity(n) - cs);
    CosineIdentityCheck out;
    out.identity = op_norm(lhs - rhs);
    out.commute_family = op_norm(sm * cs - cs * sm);
    out.commute_generator = op_norm(sm * a - a * sm);
    return out;
}

ResolventReport resolvent_via_s(const CosineFamily& fam, Complex lambda, double s,
                                const QuadratureRule& q) {
    if (lambda == Complex(0.0, 0.0)) throw invalid_input("resolvent_via_s: lambda must be nonzero");
    const Eigen::Index n = fam.generator().dim();
    ResolventReport out;
    out.lambda = lambda;
    out.s = s;

    SOperatorResult sres = s_operator_checked(fam, lambda, s, q);
    out.s_matrix = sres.value;
    out.quadrature_delta = sres.refinement_delta;
    out.quadrature_converged = sres.converged;

    const ComplexMatrix cs = fam.at(s);
    const ComplexMatrix pencil = std::cosh(lambda * s) * identity(n) - cs;
    // R(cosh(lambda s), C(s)) must exist; reject a numerically singular pencil.
    {
        Eigen::JacobiSVD<ComplexMatrix> svd(pencil);
        const double smin = svd.singularValues()(svd.singularValues().size() - 1);
        if (smin <= 1e-10 * std::max(1.0, op_norm(pencil)))
            throw not_in_resolvent_set("resolvent_via_s: cosh(lambda s) is in the spectrum of C(s)");
    }
    const ComplexMatrix pencil_inv = solve(pencil, identity(n));
    out.resolvent = (1.0 / lambda) * (out.s_matrix * pencil_inv);

    const ComplexMatrix& a = fam.generator().matrix();
    out.identity_residual =
        op_norm((lambda * lambda) * out.resolvent - a * out.resolvent - identity(n));

    const double sup_c = grid_sup_norm(fam, std::abs(s), 256);
    const double bound = sup_c * 2.0 * std::abs(s) *
                         std::exp(std::abs(s * lambda.real())) / std::abs(lambda) *
                         op_norm(pencil_inv);
    out.bound_slack = bound - op_norm(out.resolvent);
    return out;
}

double laplace_horizon_for(const GrowthBound& gb, Complex lambda, double tail_tol) {
    const double gap = lambda.real() - gb.omega;
    if (gap <= 0.0) throw invalid_input("laplace_horizon_for: requires Re lambda > omega");
    // M e^{-gap h} / gap <= tol/2  <=>  h >= log(2M / (gap tol)) / gap; the
    // factor 2 keeps the later tail comparison clear of rounding at the
    // boundary.
    const double h = std::log(2.0 * gb.m_const / (gap * tail_tol)) / gap;
    return std::max(h, 1.0);
}

ComplexMatrix laplace_resolvent(const Semigroup& sg, Complex lambda, double horizon,
                                const QuadratureRule& q, double tail_tol) {
    const GrowthBound gb = growth_bound_estimate(sg);
    const double gap = lambda.real() - gb.omega;
    if (gap <= 0.0) throw invalid_input("laplace_resolvent: requires Re lambda > fitted omega");
    const double tail = gb.m_const * std::exp(-gap * horizon) / gap;
    if (tail > tail_tol)
        throw invalid_input("laplace_resolvent: horizon too small for the requested tail bound");
    return integrate(q, horizon, [&](double t) -> ComplexMatrix {
        return std::exp(-lambda * t) * sg.at(t);
    });
}

CesaroCheck cesaro_check(const Semigroup& sg, double t, const QuadratureRule& q,
                         double sup_horizon, int sup_samples) {
    if (t <= 0.0) throw invalid_input("cesaro_check: requires t > 0");
    const Eigen::Index n = sg.generator().dim();
    const ComplexMatrix& a = sg.generator().matrix();
    const ComplexMatrix bt = integrate(q, t, [&](double u) -> ComplexMatrix { return sg.at(u); });

    CesaroCheck out;
    out.identity_residual = op_norm(sg.at(t) - identity(n) - a * bt);

    double r = 0.0;
    for (int i = 0; i < sup_samples; ++i) {
        const double u = sup_horizon * static_cast<double>(i) / (sup_samples - 1);
        r = std::max(r, op_norm(sg.at(u) - identity(n)));
    }
    out.sup_distance = r;
    out.inv_norm = op_norm(solve(bt, identity(n)));
    out.bound_applicable = r < 1.0;
    if (out.bound_applicable) out.bound = 1.0 / (t * (1.0 - r));
    return out;
}

}  // namespace coslab
