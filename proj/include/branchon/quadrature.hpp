// Gauss-Legendre quadrature: reference nodes/weights on [-1, 1] computed by
// Newton iteration on the Legendre polynomial, and affine remapping to a
// finite interval.
#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "branchon/errors.hpp"

namespace branchon {

struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;

    Eigen::Index size() const { return nodes.size(); }

    template <typename Fn>
    double integrate(Fn&& f) const {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

// n-point Gauss-Legendre rule on [-1, 1].  Nodes are the roots of P_n found
// by Newton iteration from the Chebyshev-based initial guess; weights are
// 2 / ((1 - x^2) P_n'(x)^2).
inline QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("quadrature rule needs at least one node");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // evaluate P_n and P_n' by the Legendre recurrence
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

// Affine image of a reference rule on [a, b].
inline QuadratureRule mapped_to(const QuadratureRule& reference, double a, double b) {
    if (!(b > a)) throw DomainError("quadrature interval needs b > a");
    QuadratureRule rule;
    const double mid = (a + b) / 2.0, half = (b - a) / 2.0;
    rule.nodes = (half * reference.nodes.array() + mid).matrix();
    rule.weights = half * reference.weights;
    return rule;
}

}  // namespace branchon
