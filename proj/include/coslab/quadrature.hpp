#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include "coslab/error.hpp"
#include "coslab/matrix.hpp"

namespace coslab {

/// Composite Gauss-Legendre specification for the operator-valued integrals.
struct QuadratureRule {
    int panels = 16;
    int nodes_per_panel = 8;

    /// Default policy: panel count grows with the oscillation/growth scale of
    /// the integrand sinh(lambda(s-t))C(t).
    static QuadratureRule for_interval(double s, Complex lambda) {
        QuadratureRule q;
        const double suggested = 4.0 * std::abs(s) * (1.0 + std::abs(lambda));
        q.panels = std::max(16, static_cast<int>(std::ceil(suggested)));
        return q;
    }

    QuadratureRule refined(int factor = 2) const { return {panels * factor, nodes_per_panel}; }
};

/// Nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Rule of the given order, cached per order. Throws invalid_input for n < 1.
const GaussLegendre& gauss_legendre(int n);

/// Directed integral over [0, s] of a matrix- or scalar-valued integrand.
/// s < 0 integrates backwards (the result carries the sign).
template <typename F>
auto integrate(const QuadratureRule& q, double s, F&& f) -> decltype(f(0.0)) {
    if (q.panels < 1 || q.nodes_per_panel < 1)
        throw invalid_input("integrate: quadrature rule needs panels >= 1 and nodes >= 1");
    const GaussLegendre& gl = gauss_legendre(q.nodes_per_panel);
    using Value = decltype(f(0.0));
    Value acc{};
    bool first = true;
    const double h = s / q.panels;
    for (int p = 0; p < q.panels; ++p) {
        const double a = h * p;
        for (int k = 0; k < q.nodes_per_panel; ++k) {
            const double t = a + 0.5 * h * (gl.nodes[static_cast<std::size_t>(k)] + 1.0);
            const double w = 0.5 * h * gl.weights[static_cast<std::size_t>(k)];
            if (first) {
                acc = w * f(t);
                first = false;
            } else {
                acc += w * f(t);
            }
        }
    }
    return acc;
}

}  // namespace coslab
