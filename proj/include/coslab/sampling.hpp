#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "coslab/matrix.hpp"
#include "coslab/spectral.hpp"

namespace coslab {

std::mt19937_64 seeded_engine(std::uint64_t seed);

/// Uniform double in [0,1) drawn directly from the engine's bits; avoids
/// std::uniform_real_distribution, whose output is implementation-defined.
double uniform01(std::mt19937_64& rng);

/// Dense complex Gaussian matrix rescaled so that its operator norm is
/// norm_bound * u with u uniform in [0.25, 1).
ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index dim, double norm_bound);

/// Points mu = lambda^2 sampled strictly inside the region: |lambda| uniform
/// in (r_c, radius_cap], |arg lambda| uniform in (phi_c, pi/2], random sign.
std::vector<Complex> sample_region_mu(std::mt19937_64& rng, const SpectralRegionParams& params,
                                      int count, double radius_cap);

}  // namespace coslab
