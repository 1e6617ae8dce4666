// Finite-difference stencils on non-uniform grids.  Weights come from solving
// the local Vandermonde system in scaled coordinates, which is exact for the
// polynomial degree the stencil supports.
#pragma once

#include <Eigen/Dense>

#include "branchon/errors.hpp"

namespace branchon {

// Weights w such that sum_j w_j y(t_j) approximates y''(t_c) on the given
// nodes (any count >= 3).  Nodes are shifted/scaled around t_c before the
// solve to keep the system well conditioned on nearly uniform grids.
inline Eigen::VectorXd second_derivative_weights(const Eigen::VectorXd& nodes, double t_c) {
    const Eigen::Index n = nodes.size();
    if (n < 3) throw DomainError("second-derivative stencil needs at least 3 nodes");
    const double scale = (nodes[n - 1] - nodes[0]) / 2.0;
    if (!(scale > 0)) throw DomainError("stencil nodes must span a positive interval");

    Eigen::MatrixXd vand(n, n);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs[2] = 2.0;  // d^2/dtau^2 tau^m at 0 is 2 for m = 2, else 0
    for (Eigen::Index j = 0; j < n; ++j) {
        const double tau = (nodes[j] - t_c) / scale;
        double power = 1.0;
        for (Eigen::Index m = 0; m < n; ++m) {
            vand(m, j) = power;
            power *= tau;
        }
    }
    Eigen::VectorXd w = vand.fullPivLu().solve(rhs);
    return w / (scale * scale);
}

// Second derivative of samples y(t) on a strictly increasing grid, using a
// centred 5-point stencil.  The two samples at each end have no centred
// stencil; their slots are filled with quiet NaN.
inline Eigen::VectorXd second_derivative_5pt(const Eigen::VectorXd& t, const Eigen::VectorXd& y) {
    const Eigen::Index n = t.size();
    if (n != y.size()) throw DomainError("grid and sample arrays must have equal length");
    if (n < 5) throw DomainError("5-point differencing needs at least 5 samples");

    Eigen::VectorXd out =
        Eigen::VectorXd::Constant(n, std::numeric_limits<double>::quiet_NaN());
    for (Eigen::Index i = 2; i + 2 < n; ++i) {
        const Eigen::VectorXd nodes = t.segment(i - 2, 5);
        const Eigen::VectorXd w = second_derivative_weights(nodes, t[i]);
        out[i] = w.dot(y.segment(i - 2, 5));
    }
    return out;
}

}  // namespace branchon
