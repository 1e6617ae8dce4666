// Time integration of the cubic oscillator: right-hand side, sampled
// trajectory container, and the adaptive driver with its sampling-density
// guarantee (at least 200 samples per harmonic period).
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <vector>

#include "branchon/ode.hpp"
#include "branchon/types.hpp"

namespace branchon {

// Acceleration of  x'' + k x x' + (k^2/9) x^3 + lambda x = 0.
inline double lienard_acceleration(const LienardParamsd& osc, double x, double v) {
    return -osc.k * x * v - osc.k * osc.k / 9.0 * x * x * x - osc.lambda * x;
}

inline Eigen::Vector2d lienard_rhs(const LienardParamsd& osc, double /*t*/,
                                   const Eigen::Vector2d& y) {
    return {y[1], lienard_acceleration(osc, y[0], y[1])};
}

// Sampled solution on the integrator's accepted-step grid.
struct Trajectory {
    Eigen::VectorXd t;  // strictly increasing sample times
    Eigen::VectorXd x;
    Eigen::VectorXd v;

    Eigen::Index size() const { return t.size(); }
    StatePointd state(Eigen::Index i) const { return {x[i], v[i]}; }

    void validate() const {
        if (t.size() < 2) throw DomainError("trajectory needs at least two samples");
        if (t.size() != x.size() || t.size() != v.size()) {
            throw DomainError("trajectory arrays must have equal length");
        }
        for (Eigen::Index i = 0; i + 1 < t.size(); ++i) {
            if (!(t[i + 1] > t[i])) throw DomainError("trajectory times must strictly increase");
        }
        if (!t.allFinite() || !x.allFinite() || !v.allFinite()) {
            throw DomainError("trajectory contains non-finite samples");
        }
    }
};

struct IntegrateOptions {
    double tol = 1e-10;          // relative and absolute tolerance
    double max_step = 0.0;       // 0 -> harmonic_period / 200 (density guarantee)
    double blowup_bound = 1e9;
};

// Integrate from (x0, v0) over [0, t_end] and record every accepted step.
// The step cap keeps at least 200 samples per harmonic period 2 pi / sqrt(lambda)
// so downstream quadrature and finite differencing stay well resolved.
inline Trajectory integrate(const LienardParamsd& osc, const StatePointd& initial, double t_end,
                            const IntegrateOptions& opt = {}) {
    if (!(t_end > 0) || !std::isfinite(t_end)) {
        throw DomainError("t_end must be positive and finite");
    }
    if (!(opt.tol >= 1e-13 && opt.tol <= 1e-3)) {
        std::ostringstream msg;
        msg << "tolerance must lie in [1e-13, 1e-3], got " << opt.tol;
        throw DomainError(msg.str());
    }
    if (!std::isfinite(initial.x) || !std::isfinite(initial.v)) {
        throw DomainError("initial state must be finite");
    }
    if (!(opt.blowup_bound > 0)) throw DomainError("blow-up bound must be positive");

    const double density_cap = osc.harmonic_period() / 200.0;
    OdeOptions ode;
    ode.rel_tol = opt.tol;
    ode.abs_tol = opt.tol;
    ode.max_step = opt.max_step > 0 ? std::min(opt.max_step, density_cap) : density_cap;
    ode.blowup_bound = opt.blowup_bound;

    std::vector<double> ts;
    std::vector<double> xs;
    std::vector<double> vs;
    ts.reserve(static_cast<std::size_t>(t_end / ode.max_step) + 16);
    const auto rhs = [&osc](double t, const Eigen::Vector2d& y) { return lienard_rhs(osc, t, y); };
    integrate_adaptive(
        rhs, Eigen::Vector2d{initial.x, initial.v}, 0.0, t_end, ode,
        [&](double t, const Eigen::Vector2d& y) {
            ts.push_back(t);
            xs.push_back(y[0]);
            vs.push_back(y[1]);
        });

    Trajectory out;
    out.t = Eigen::Map<const Eigen::VectorXd>(ts.data(), static_cast<Eigen::Index>(ts.size()));
    out.x = Eigen::Map<const Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
    out.v = Eigen::Map<const Eigen::VectorXd>(vs.data(), static_cast<Eigen::Index>(vs.size()));
    out.validate();
    return out;
}

// Closed-form solution of the k = 0 (harmonic) limit, for accuracy checks.
inline StatePointd harmonic_reference(const LienardParamsd& osc, const StatePointd& initial,
                                      double t) {
    const double w = osc.angular_frequency();
    return {initial.x * std::cos(w * t) + initial.v / w * std::sin(w * t),
            -initial.x * w * std::sin(w * t) + initial.v * std::cos(w * t)};
}

}  // namespace branchon
