#include "coslab/quadrature.hpp"

#include <map>
#include <mutex>
#include <numbers>

namespace coslab {

namespace {

// Newton iteration on the Legendre recurrence; standard construction.
GaussLegendre build_rule(int n) {
    GaussLegendre gl;
    gl.nodes.resize(static_cast<std::size_t>(n));
    gl.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        gl.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        gl.weights[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
    if (n < 1) throw invalid_input("gauss_legendre: order must be >= 1");
    static std::mutex mu;
    static std::map<int, GaussLegendre> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

}  // namespace coslab
