#include "coslab/family.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "coslab/error.hpp"

namespace coslab {

Generator::Generator(ComplexMatrix a) : a_(std::move(a)), norm_(0.0) {
    require_valid(a_, "Generator");
    norm_ = op_norm(a_);
}

CosineFamily::CosineFamily(Generator gen, EvalOptions opt) : gen_(std::move(gen)), opt_(opt) {
    if (opt_.taylor_terms < 1 || opt_.scaling_threshold <= 0.0 || opt_.max_scaling_depth < 0)
        throw invalid_input("CosineFamily: taylor_terms >= 1, scaling_threshold > 0 required");
}

Semigroup::Semigroup(Generator gen, EvalOptions opt) : gen_(std::move(gen)), opt_(opt) {
    if (opt_.taylor_terms < 1 || opt_.scaling_threshold <= 0.0 || opt_.max_scaling_depth < 0)
        throw invalid_input("Semigroup: taylor_terms >= 1, scaling_threshold > 0 required");
}

namespace {

int scaling_depth(double arg_scale, const EvalOptions& opt, const char* what) {
    int depth = 0;
    double scaled = arg_scale;
    while (scaled > opt.scaling_threshold) {
        scaled /= 4.0;
        if (++depth > opt.max_scaling_depth)
            throw range_overflow(std::string(what) +
                                 ": argument needs scaling depth > " +
                                 std::to_string(opt.max_scaling_depth) +
                                 "; raise max_scaling_depth or reduce |t|");
    }
    return depth;
}

void require_finite_result(const ComplexMatrix& m, const char* what) {
    if (!all_finite(m))
        throw range_overflow(std::string(what) + ": result overflowed double precision");
}

}  // namespace

ComplexMatrix CosineFamily::at(double t) const {
    const Eigen::Index n = dim();
    if (t == 0.0) return identity(n);
    const double u = std::abs(t);  // the series is even in t

    // ||A|| u^2 scaled by 4 per halving of the argument.
    const int depth = scaling_depth(gen_.norm() * u * u, opt_, "cosine_at");
    const double ts = std::ldexp(u, -depth);

    // C(ts) = sum_n A^n ts^{2n} / (2n)!  (formally cosh(ts sqrt(A)))
    const ComplexMatrix& a = gen_.matrix();
    ComplexMatrix term = identity(n);
    ComplexMatrix sum = term;
    const double ts2 = ts * ts;
    for (int k = 1; k < opt_.taylor_terms; ++k) {
        const double coeff = ts2 / ((2.0 * k - 1.0) * (2.0 * k));
        term = (term * a) * coeff;
        sum += term;
    }

    for (int d = 0; d < depth; ++d) sum = 2.0 * (sum * sum) - identity(n);
    require_finite_result(sum, "cosine_at");
    return sum;
}

ComplexMatrix Semigroup::at(double t) const {
    if (t < 0.0) throw invalid_input("semigroup_at: t must be >= 0");
    const Eigen::Index n = dim();
    if (t == 0.0) return identity(n);

    // ||A|| t halves per squaring step.
    int depth = 0;
    double scaled = gen_.norm() * t;
    while (scaled > opt_.scaling_threshold) {
        scaled /= 2.0;
        if (++depth > opt_.max_scaling_depth)
            throw range_overflow("semigroup_at: argument needs scaling depth > " +
                                 std::to_string(opt_.max_scaling_depth) +
                                 "; raise max_scaling_depth or reduce t");
    }
    const double ts = std::ldexp(t, -depth);

    const ComplexMatrix& a = gen_.matrix();
    ComplexMatrix term = identity(n);
    ComplexMatrix sum = term;
    for (int k = 1; k < opt_.taylor_terms; ++k) {
        term = (term * a) * (ts / k);
        sum += term;
    }

    for (int d = 0; d < depth; ++d) sum = sum * sum;
    require_finite_result(sum, "semigroup_at");
    return sum;
}

ComplexMatrix cosine_at(const CosineFamily& fam, double t) { return fam.at(t); }
ComplexMatrix semigroup_at(const Semigroup& sg, double t) { return sg.at(t); }

double dalembert_residual(const CosineFamily& fam, double t, double s) {
    if (!std::isfinite(t) || !std::isfinite(s))
        throw invalid_input("dalembert_residual: t and s must be finite");
    return op_norm(2.0 * (fam.at(t) * fam.at(s)) - fam.at(t + s) - fam.at(t - s));
}

ComplexMatrix generator_recover(const CosineFamily& fam, double h) {
    if (!(h > 0.0) || h > 1.0) throw invalid_input("generator_recover: need 0 < h <= 1");
    return 2.0 * (fam.at(h) - identity(fam.dim())) / (h * h);
}

namespace {

template <typename Fam>
GrowthBound growth_bound_fit(const Fam& fam, double horizon, int samples, const char* what) {
    if (!(horizon > 0.0)) throw invalid_input(std::string(what) + ": horizon must be > 0");
    if (samples < 2) throw invalid_input(std::string(what) + ": samples must be >= 2");

    std::vector<double> ts(static_cast<std::size_t>(samples));
    std::vector<double> norms(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        ts[static_cast<std::size_t>(i)] = horizon * i / (samples - 1);
        norms[static_cast<std::size_t>(i)] = op_norm(fam.at(ts[static_cast<std::size_t>(i)]));
    }

    // Least-squares slope of log||C(t)|| over the tail half of the grid; the
    // asymptotic regime is what the envelope exponent should track. Deep
    // oscillation dips (norms far below the tail maximum) are excluded, the
    // envelope follows the upper hull.
    std::vector<int> tail;
    for (int i = 0; i < samples; ++i)
        if (ts[static_cast<std::size_t>(i)] >= horizon / 2.0 || i >= samples - 2) tail.push_back(i);
    double tail_max = 0.0;
    for (int i : tail) tail_max = std::max(tail_max, norms[static_cast<std::size_t>(i)]);

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (int i : tail) {
        const double nv = norms[static_cast<std::size_t>(i)];
        if (nv < 1e-3 * tail_max || nv <= 0.0) continue;
        const double y = std::log(nv);
        sx += ts[static_cast<std::size_t>(i)];
        sy += y;
        sxx += ts[static_cast<std::size_t>(i)] * ts[static_cast<std::size_t>(i)];
        sxy += ts[static_cast<std::size_t>(i)] * y;
        ++count;
    }
    double slope = 0.0;
    const double denom = count * sxx - sx * sx;
    if (count >= 2 && denom > 0.0) slope = (count * sxy - sx * sy) / denom;

    GrowthBound gb;
    gb.omega = std::max(0.0, slope);

    // Round M up to validity on a 3x refined grid, so small excursions between
    // the fit samples are covered as well.
    const int fine = 3 * (samples - 1);
    double m = 1.0;
    for (int i = 0; i <= fine; ++i) {
        const double t = horizon * i / fine;
        const double ratio = op_norm(fam.at(t)) * std::exp(-gb.omega * t);
        m = std::max(m, ratio);
    }
    gb.m_const = m;
    return gb;
}

}  // namespace

GrowthBound growth_bound_estimate(const CosineFamily& fam, double horizon, int samples) {
    return growth_bound_fit(fam, horizon, samples, "growth_bound_estimate");
}

GrowthBound growth_bound_estimate(const Semigroup& sg, double horizon, int samples) {
    return growth_bound_fit(sg, horizon, samples, "growth_bound_estimate");
}

}  // namespace coslab
