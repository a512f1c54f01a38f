#pragma once

#include <utility>

#include "coslab/matrix.hpp"

namespace coslab {

/// The matrix generator A. Validated once at construction; the operator norm
/// is cached because every evaluation consults it for scaling.
class Generator {
public:
    explicit Generator(ComplexMatrix a);

    const ComplexMatrix& matrix() const { return a_; }
    Eigen::Index dim() const { return a_.rows(); }
    double norm() const { return norm_; }

private:
    ComplexMatrix a_;
    double norm_;
};

/// Series truncation and argument-scaling controls shared by both families.
struct EvalOptions {
    int taylor_terms = 20;
    double scaling_threshold = 1.0;
    int max_scaling_depth = 40;
};

/// Cosine family C(t) generated by A, evaluated by argument scaling, a
/// truncated even power series, and the double-angle identity
/// C(2t) = 2 C(t)^2 - I. Even in t by construction; C(0) is the identity
/// exactly.
class CosineFamily {
public:
    explicit CosineFamily(Generator gen, EvalOptions opt = {});

    const Generator& generator() const { return gen_; }
    const EvalOptions& options() const { return opt_; }
    Eigen::Index dim() const { return gen_.dim(); }

    ComplexMatrix at(double t) const;

private:
    Generator gen_;
    EvalOptions opt_;
};

/// Semigroup T(t) = e^{tA} for t >= 0, evaluated by scaling and squaring.
class Semigroup {
public:
    explicit Semigroup(Generator gen, EvalOptions opt = {});

    const Generator& generator() const { return gen_; }
    const EvalOptions& options() const { return opt_; }
    Eigen::Index dim() const { return gen_.dim(); }

    /// Throws invalid_input for t < 0.
    ComplexMatrix at(double t) const;

private:
    Generator gen_;
    EvalOptions opt_;
};

/// Exponential envelope ||C(t)|| <= m_const * exp(omega * t) on a fitted grid.
struct GrowthBound {
    double m_const = 1.0;  // >= 1
    double omega = 0.0;    // >= 0
};

ComplexMatrix cosine_at(const CosineFamily& fam, double t);
ComplexMatrix semigroup_at(const Semigroup& sg, double t);

/// || 2 C(t) C(s) - C(t+s) - C(t-s) ||.
double dalembert_residual(const CosineFamily& fam, double t, double s);

/// Second-difference generator recovery 2 (C(h) - I) / h^2; error is O(h^2).
/// Requires 0 < h <= 1.
ComplexMatrix generator_recover(const CosineFamily& fam, double h);

/// Fits (M, omega) on a uniform grid over [0, horizon]: the slope of
/// log||C(t)|| over the tail half of the grid gives omega (clamped to >= 0),
/// then M is raised until the envelope holds on a 3x refined grid (so M >= 1
/// and the defining inequality holds at every sample point).
GrowthBound growth_bound_estimate(const CosineFamily& fam, double horizon = 10.0,
                                  int samples = 400);
GrowthBound growth_bound_estimate(const Semigroup& sg, double horizon = 10.0, int samples = 400);

}  // namespace coslab
