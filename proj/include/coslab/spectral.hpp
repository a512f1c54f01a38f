#pragma once

#include <vector>

#include "coslab/family.hpp"
#include "coslab/matrix.hpp"

namespace coslab {

/// Open parabolic region { lambda^2 : Re lambda = omega } interior:
/// x + iy is inside iff x < omega^2 - y^2 / (4 omega^2).
struct ParabolaRegion {
    double omega = 0.0;
};
bool parabola_contains(const ParabolaRegion& region, Complex mu);

/// Largest radius r (up to `tol`) such that the image of the closed ball
/// B(i pi, r) under cosh stays within distance (2-c)/2 of -1. Certified by a
/// dense boundary scan: `boundary_max` is the largest observed distance at the
/// returned radius.
struct RTildeCertificate {
    double r_tilde = 0.0;
    double boundary_max = 0.0;
    double threshold = 0.0;  // (2-c)/2
};
RTildeCertificate find_r_tilde(double c, double tol = 1e-6, int boundary_samples = 2048);

/// Parameters of the region { lambda^2 : |lambda| > r_c, phi_c < |arg lambda|
/// <= pi/2 } on which the resolvent construction applies, given ||C(t)-I|| < c
/// on [0, t0).
struct SpectralRegionParams {
    double c = 0.0;
    double t0 = 0.0;
    double r_tilde = 0.0;
    double phi_c = 0.0;
    double r_c = 0.0;
    double m_c = 0.0;  // family-free factor 4 pi e^pi / (2-c)
};
SpectralRegionParams region_params(double c, double t0);

/// s_lambda = pi sin(arg lambda) / |lambda|, the probe time that places
/// lambda * s_lambda within distance pi cos(arg lambda) of i pi.
double s_lambda(Complex lambda);

/// Whether mu = lambda^2 (principal square root) lies in the region.
bool in_region_rc(const SpectralRegionParams& params, Complex mu);

/// Per-sample verification of the region machinery on a concrete family.
struct RegionSample {
    Complex mu;
    Complex lambda;
    double s = 0.0;
    double probe_distance = 0.0;   // |lambda s - i pi|
    double pencil_inv_norm = 0.0;  // ||R(cosh(lambda s), C(s))||
    double resolvent_norm = 0.0;   // ||R(mu, A)||
    double bound = 0.0;            // m_c * sup||C|| / |mu|
    bool pass = false;
};
struct RegionVerification {
    SpectralRegionParams params;
    double sup_c = 0.0;  // grid sup of ||C|| over [0, t0]
    std::vector<RegionSample> samples;
    bool all_pass = false;
};
RegionVerification verify_region_bound(const CosineFamily& fam,
                                       const SpectralRegionParams& params,
                                       const std::vector<Complex>& mus);

/// Sup of ||(mu - A)^{-1} mu|| over circles |mu| = r that enclose the spectrum
/// with margin. Circles with r <= max(2 rho(A), ||A||, 1) are skipped; on the
/// rest the Neumann bound r/(r - ||A||) applies.
struct CircleDiagnostic {
    double radius = 0.0;
    double sup_value = 0.0;
    double bound = 0.0;
    bool applicable = false;
};
std::vector<CircleDiagnostic> boundedness_diagnostic(const Generator& gen,
                                                     const std::vector<double>& radii,
                                                     int angles = 256);

}  // namespace coslab
