#include "coslab/sampling.hpp"

#include <cmath>

#include "coslab/error.hpp"

namespace coslab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::mt19937_64 seeded_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index dim, double norm_bound) {
    if (dim < 1) throw invalid_input("random_matrix: requires dim >= 1");
    if (!(norm_bound > 0.0)) throw invalid_input("random_matrix: requires norm_bound > 0");
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            // Box-Muller from raw engine bits keeps the stream portable.
            const double u1 = std::max(uniform01(rng), 1e-300);
            const double u2 = uniform01(rng);
            const double r = std::sqrt(-2.0 * std::log(u1));
            m(i, j) = Complex(r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2));
        }
    }
    const double target = norm_bound * (0.25 + 0.75 * uniform01(rng));
    const double norm = op_norm(m);
    if (norm == 0.0) throw convergence_error("random_matrix: degenerate draw");
    return (target / norm) * m;
}

std::vector<Complex> sample_region_mu(std::mt19937_64& rng, const SpectralRegionParams& params,
                                      int count, double radius_cap) {
    if (count < 1) throw invalid_input("sample_region_mu: requires count >= 1");
    if (!(radius_cap > params.r_c))
        throw invalid_input("sample_region_mu: radius_cap must exceed r_c");
    // Margins keep every sample strictly inside after the principal-root
    // round trip.
    const double angle_lo = params.phi_c + 1e-3 * (kPi / 2.0 - params.phi_c);
    const double radius_lo = params.r_c * (1.0 + 1e-6) + 1e-9;
    std::vector<Complex> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double rho = radius_lo + (radius_cap - radius_lo) * uniform01(rng);
        const double theta = angle_lo + (kPi / 2.0 - angle_lo) * uniform01(rng);
        const double sign = (uniform01(rng) < 0.5) ? -1.0 : 1.0;
        const Complex lambda = rho * Complex(std::cos(theta), sign * std::sin(theta));
        out.push_back(lambda * lambda);
    }
    return out;
}

}  // namespace coslab
