// Nonlocal map that straightens the cubic oscillator into a harmonic one:
//   U(t) = x(t) * exp( (k/3) * integral_0^t x(t') dt' ).
// The running integral uses composite trapezoid on the trajectory's own
// sample grid, with a coarse/fine Richardson comparison as an error estimate.
#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "branchon/stencil.hpp"
#include "branchon/trajectory.hpp"
#include "branchon/types.hpp"

namespace branchon {

struct TransformSeries {
    Eigen::VectorXd t;
    Eigen::VectorXd x;
    Eigen::VectorXd v;
    Eigen::VectorXd integral;  // running integral of x
    Eigen::VectorXd u;         // x * exp((k/3) integral)
    double quadrature_error_estimate = 0.0;
};

namespace detail {

// Cumulative trapezoid of samples y on grid t, starting at zero.
inline Eigen::VectorXd cumulative_trapezoid(const Eigen::VectorXd& t, const Eigen::VectorXd& y) {
    Eigen::VectorXd out(t.size());
    out[0] = 0.0;
    for (Eigen::Index i = 1; i < t.size(); ++i) {
        out[i] = out[i - 1] + 0.5 * (t[i] - t[i - 1]) * (y[i] + y[i - 1]);
    }
    return out;
}

}  // namespace detail

// Build the transformed series along a trajectory.  The construction
// guarantees u[i] == x[i] * exp((k/3) * integral[i]) exactly.
inline TransformSeries nonlocal_transform(const Trajectory& traj, const LienardParamsd& osc) {
    traj.validate();

    TransformSeries out;
    out.t = traj.t;
    out.x = traj.x;
    out.v = traj.v;
    out.integral = detail::cumulative_trapezoid(traj.t, traj.x);

    // Richardson-style estimate: redo the quadrature on every second sample
    // and compare where both grids coincide.  Trapezoid error scales ~ h^2,
    // so (coarse - fine)/3 estimates the fine-grid error.
    double worst = 0.0;
    if (traj.t.size() >= 3) {
        double coarse = 0.0;
        for (Eigen::Index i = 2; i < traj.t.size(); i += 2) {
            coarse += 0.5 * (traj.t[i] - traj.t[i - 2]) * (traj.x[i] + traj.x[i - 2]);
            worst = std::max(worst, std::abs(coarse - out.integral[i]) / 3.0);
        }
    }
    out.quadrature_error_estimate = worst;

    out.u = (traj.x.array() * ((osc.k / 3.0) * out.integral.array()).exp()).matrix();
    return out;
}

// Largest interior violation of the harmonic law  u'' + lambda u = 0,
// normalised by the series amplitude:  max |u'' + lambda u| / max |u|.
// The second derivative comes from the centred 5-point stencil, so the two
// samples at each end are excluded.
inline double harmonic_residual(const TransformSeries& series, const LienardParamsd& osc) {
    if (series.t.size() < 5) throw DomainError("residual check needs at least 5 samples");
    const Eigen::VectorXd ddu = second_derivative_5pt(series.t, series.u);
    const double amplitude = series.u.array().abs().maxCoeff();
    if (!(amplitude > 0)) return 0.0;  // identically zero series satisfies the law
    double worst = 0.0;
    for (Eigen::Index i = 2; i + 2 < series.t.size(); ++i) {
        worst = std::max(worst, std::abs(ddu[i] + osc.lambda * series.u[i]));
    }
    return worst / amplitude;
}

}  // namespace branchon
