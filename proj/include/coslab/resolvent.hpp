#pragma once

#include "coslab/family.hpp"
#include "coslab/matrix.hpp"
#include "coslab/quadrature.hpp"

namespace coslab {

/// Quadrature approximation of S(lambda,s) = int_0^s sinh(lambda(s-t)) C(t) dt.
ComplexMatrix s_operator(const CosineFamily& fam, Complex lambda, double s,
                         const QuadratureRule& q);

/// S(lambda,s) at doubled panel count, with the refinement delta against the
/// base rule. `converged` reflects the delta against `tol`.
struct SOperatorResult {
    ComplexMatrix value;
    double refinement_delta = 0.0;
    bool converged = true;
};
SOperatorResult s_operator_checked(const CosineFamily& fam, Complex lambda, double s,
                                   const QuadratureRule& q, double tol = 1e-9);

/// lhs = ||S(lambda,s)||, rhs = sup_{t in [0,|s|]} ||C(t)|| * sinh(|s| Re
/// lambda) / Re lambda, the sup taken over a dense grid (lower bound of the
/// true sup). Requires Re lambda > 0.
struct NormBoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};
NormBoundCheck s_norm_bound_check(const CosineFamily& fam, Complex lambda, double s,
                                  const QuadratureRule& q, int sup_grid = 256);

/// Residual of (lambda^2 I - A) S = lambda (cosh(lambda s) I - C(s)) plus the
/// two commutation defects of the same construction.
struct CosineIdentityCheck {
    double identity = 0.0;           // main identity residual
    double commute_family = 0.0;     // ||S C(s) - C(s) S||
    double commute_generator = 0.0;  // ||S A - A S||
};
CosineIdentityCheck resolvent_identity_residual(const CosineFamily& fam, Complex lambda,
                                                double s, const QuadratureRule& q);

/// Resolvent R(lambda^2, A) built from S(lambda,s) and R(cosh(lambda s), C(s)),
/// with the residual of (lambda^2 I - A) R = I and the slack of the norm bound
/// sup||C|| * 2|s|e^{|s Re lambda|}/|lambda| * ||R(cosh(lambda s), C(s))||.
struct ResolventReport {
    Complex lambda;
    double s = 0.0;
    ComplexMatrix s_matrix;
    ComplexMatrix resolvent;
    double identity_residual = 0.0;
    double bound_slack = 0.0;
    double quadrature_delta = 0.0;
    bool quadrature_converged = true;
};
ResolventReport resolvent_via_s(const CosineFamily& fam, Complex lambda, double s,
                                const QuadratureRule& q);

/// Truncated Laplace transform int_0^horizon e^{-lambda t} T(t) dt. The growth
/// pair is fitted internally; requires Re lambda > omega and a horizon large
/// enough that the analytic tail bound M e^{(omega - Re lambda) horizon} /
/// (Re lambda - omega) is <= tail_tol.
ComplexMatrix laplace_resolvent(const Semigroup& sg, Complex lambda, double horizon,
                                const QuadratureRule& q, double tail_tol = 1e-10);

/// Horizon sufficient for the tail bound above.
double laplace_horizon_for(const GrowthBound& gb, Complex lambda, double tail_tol = 1e-10);

/// Checks T(t) - I = A B_t with B_t = int_0^t T(s) ds, and the inverse norm
/// bound ||B_t^{-1}|| <= 1/(t(1-r)) with r the grid sup of ||T(s) - I|| over
/// [0, sup_horizon]. The bound part only applies when r < 1.
struct CesaroCheck {
    double identity_residual = 0.0;
    double inv_norm = 0.0;
    double sup_distance = 0.0;  // r, a grid lower bound of sup ||T(s)-I||
    double bound = 0.0;         // 1/(t(1-r)) when applicable
    bool bound_applicable = false;
};
CesaroCheck cesaro_check(const Semigroup& sg, double t, const QuadratureRule& q,
                         double sup_horizon = 50.0, int sup_samples = 2001);

}  // namespace coslab
