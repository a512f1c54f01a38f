#include "coslab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "coslab/error.hpp"

namespace coslab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Largest distance |cosh(i pi + r e^{i theta}) + 1| over a dense boundary grid.
double cosh_ball_image_max(double r, int samples) {
    double best = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double theta = 2.0 * kPi * static_cast<double>(i) / samples;
        const Complex w(r * std::cos(theta), kPi + r * std::sin(theta));
        best = std::max(best, std::abs(std::cosh(w) + 1.0));
    }
    return best;
}

}  // namespace

bool parabola_contains(const ParabolaRegion& region, Complex mu) {
    if (region.omega == 0.0)
        throw degenerate_region("parabola_contains: omega = 0 degenerates to the real ray");
    const double w2 = region.omega * region.omega;
    return mu.real() < w2 - mu.imag() * mu.imag() / (4.0 * w2);
}

RTildeCertificate find_r_tilde(double c, double tol, int boundary_samples) {
    if (!(c > 0.0 && c < 2.0)) throw invalid_input("find_r_tilde: requires 0 < c < 2");
    RTildeCertificate out;
    out.threshold = (2.0 - c) / 2.0;
    // cosh_ball_image_max is increasing in r and 0 at r = 0; bisect for the
    // largest radius still below the threshold.
    double lo = 0.0;
    double hi = kPi;
    if (cosh_ball_image_max(hi, boundary_samples) < out.threshold) {
        lo = hi;
    } else {
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (cosh_ball_image_max(mid, boundary_samples) < out.threshold)
                lo = mid;
            else
                hi = mid;
        }
    }
    out.r_tilde = lo;
    out.boundary_max = cosh_ball_image_max(lo, boundary_samples);
    return out;
}

SpectralRegionParams region_params(double c, double t0) {
    if (!(c > 0.0 && c < 2.0)) throw invalid_input("region_params: requires 0 < c < 2");
    if (!(t0 > 0.0)) throw invalid_input("region_params: requires t0 > 0");
    SpectralRegionParams p;
    p.c = c;
    p.t0 = t0;
    p.r_tilde = find_r_tilde(c).r_tilde;
    // The probe lambda s_lambda sits at distance pi cos(arg lambda) from i pi;
    // phi_c keeps that distance strictly inside the certified ball.
    p.phi_c = std::acos(std::min(0.99 * p.r_tilde / kPi, 0.99));
    p.r_c = 1.01 * kPi / t0;
    p.m_c = 4.0 * kPi * std::exp(kPi) / (2.0 - c);
    return p;
}

double s_lambda(Complex lambda) {
    if (lambda == Complex(0.0, 0.0)) throw invalid_input("s_lambda: lambda must be nonzero");
    return kPi * std::sin(std::arg(lambda)) / std::abs(lambda);
}

bool in_region_rc(const SpectralRegionParams& params, Complex mu) {
    const Complex lambda = std::sqrt(mu);  // principal branch: |arg lambda| <= pi/2
    if (lambda == Complex(0.0, 0.0)) return false;
    return std::abs(lambda) > params.r_c && std::abs(std::arg(lambda)) > params.phi_c;
}

RegionVerification verify_region_bound(const CosineFamily& fam,
                                       const SpectralRegionParams& params,
                                       const std::vector<Complex>& mus) {
    const Eigen::Index n = fam.generator().dim();
    const ComplexMatrix& a = fam.generator().matrix();
    RegionVerification out;
    out.params = params;

    // Grid check of the hypothesis ||C(t) - I|| < c on [0, t0), plus the sup
    // factor of the bound over the closed interval.
    constexpr int kGrid = 256;
    for (int i = 0; i < kGrid; ++i) {
        const double t = params.t0 * static_cast<double>(i) / kGrid;
        if (op_norm(fam.at(t) - identity(n)) >= params.c)
            throw precondition_violation("verify_region_bound: ||C(t)-I|| < c fails on [0,t0)");
    }
    for (int i = 0; i <= kGrid; ++i) {
        const double t = params.t0 * static_cast<double>(i) / kGrid;
        out.sup_c = std::max(out.sup_c, op_norm(fam.at(t)));
    }

    out.all_pass = true;
    for (Complex mu : mus) {
        if (!in_region_rc(params, mu))
            throw invalid_input("verify_region_bound: sample mu outside the region");
        RegionSample smp;
        smp.mu = mu;
        smp.lambda = std::sqrt(mu);
        smp.s = s_lambda(smp.lambda);
        smp.probe_distance = std::abs(smp.lambda * smp.s - Complex(0.0, kPi));

        const ComplexMatrix cs = fam.at(smp.s);
        const Complex shift = std::cosh(smp.lambda * smp.s);
        const ComplexMatrix pencil_inv = solve(shift * identity(n) - cs, identity(n));
        smp.pencil_inv_norm = op_norm(pencil_inv);
        const double delta = std::abs(shift + 1.0);
        const double neumann = op_norm(solve(cs + identity(n), identity(n)));

        const ComplexMatrix res = solve(mu * identity(n) - a, identity(n));
        smp.resolvent_norm = op_norm(res);
        smp.bound = params.m_c * out.sup_c / std::abs(mu);

        smp.pass = smp.probe_distance < params.r_tilde && std::abs(smp.s) < params.t0 &&
                   delta < (2.0 - params.c) / 2.0 && delta * neumann <= 0.5 &&
                   smp.pencil_inv_norm <= 2.0 / (2.0 - params.c) + 1e-6 &&
                   smp.resolvent_norm <= smp.bound;
        out.all_pass = out.all_pass && smp.pass;
        out.samples.push_back(smp);
    }
    return out;
}

std::vector<CircleDiagnostic> boundedness_diagnostic(const Generator& gen,
                                                     const std::vector<double>& radii,
                                                     int angles) {
    const Eigen::Index n = gen.dim();
    const ComplexMatrix& a = gen.matrix();
    const double rho = spectral_radius(a);
    const double cutoff = std::max({1.0, 2.0 * rho, gen.norm()});

    std::vector<CircleDiagnostic> out;
    for (double r : radii) {
        CircleDiagnostic d;
        d.radius = r;
        d.applicable = r > cutoff;
        if (d.applicable) {
            d.bound = r / (r - gen.norm()) + 1e-6;
            for (int i = 0; i < angles; ++i) {
                const double theta = 2.0 * kPi * static_cast<double>(i) / angles;
                const Complex mu = r * Complex(std::cos(theta), std::sin(theta));
                const double v = std::abs(mu) * op_norm(solve(mu * identity(n) - a, identity(n)));
                d.sup_value = std::max(d.sup_value, v);
            }
        }
        out.push_back(d);
    }
    return out;
}

}  // namespace coslab
