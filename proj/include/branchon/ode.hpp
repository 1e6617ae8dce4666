// Explicit Runge-Kutta machinery: a Dormand-Prince 5(4) adaptive driver with
// PI step-size control, plus fixed-grid drivers (both the 5th-order stage and
// classic RK4) used for step-halving self-tests.
//
// The right-hand side is any callable  Vec f(double t, const Vec& y)  with Vec
// a fixed-size Eigen vector.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "branchon/errors.hpp"

namespace branchon {

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-10;
    double max_step = std::numeric_limits<double>::infinity();
    double blowup_bound = 1e9;   // throw BlowUp when any |y_i| exceeds this
    long max_steps = 50'000'000;
};

namespace detail {

// Dormand-Prince 5(4) tableau.
struct Dp54 {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // 5th-order minus embedded 4th-order weights (error estimator).
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
};

}  // namespace detail

// One 5(4) step from (t, y) with slope k1 = f(t, y) already evaluated.
// On return: y_new, err (5th-4th difference), k_last = f(t + h, y_new)
// (FSAL slope, reusable as the next step's k1).
template <typename Vec, typename Rhs>
void dp54_step(Rhs&& f, double t, const Vec& y, const Vec& k1, double h, Vec& y_new, Vec& err,
               Vec& k_last) {
    using T = detail::Dp54;
    const Vec k2 = f(t + T::c2 * h, Vec(y + h * (T::a21 * k1)));
    const Vec k3 = f(t + T::c3 * h, Vec(y + h * (T::a31 * k1 + T::a32 * k2)));
    const Vec k4 = f(t + T::c4 * h, Vec(y + h * (T::a41 * k1 + T::a42 * k2 + T::a43 * k3)));
    const Vec k5 =
        f(t + T::c5 * h, Vec(y + h * (T::a51 * k1 + T::a52 * k2 + T::a53 * k3 + T::a54 * k4)));
    const Vec k6 = f(t + h, Vec(y + h * (T::a61 * k1 + T::a62 * k2 + T::a63 * k3 + T::a64 * k4 +
                                         T::a65 * k5)));
    y_new = y + h * (T::b1 * k1 + T::b3 * k3 + T::b4 * k4 + T::b5 * k5 + T::b6 * k6);
    k_last = f(t + h, y_new);
    err = h * (T::e1 * k1 + T::e3 * k3 + T::e4 * k4 + T::e5 * k5 + T::e6 * k6 + T::e7 * k_last);
}

// Classic RK4 step.
template <typename Vec, typename Rhs>
Vec rk4_step(Rhs&& f, double t, const Vec& y, double h) {
    const Vec k1 = f(t, y);
    const Vec k2 = f(t + h / 2, Vec(y + h / 2 * k1));
    const Vec k3 = f(t + h / 2, Vec(y + h / 2 * k2));
    const Vec k4 = f(t + h, Vec(y + h * k3));
    return y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
}

namespace detail {

template <typename Vec>
void check_blowup(const Vec& y, double t, double bound) {
    if (y.array().abs().maxCoeff() > bound || !y.array().isFinite().all()) {
        std::ostringstream msg;
        msg << "solution exceeded the blow-up bound " << bound << " at t = " << t;
        throw BlowUp(msg.str(), t);
    }
}

}  // namespace detail

// Adaptive 5(4) integration from t0 to t1 > t0.  The observer is called as
// observer(t, y) at t0 and after every accepted step (the final call is at
// exactly t1).  Returns the number of accepted steps.
template <typename Vec, typename Rhs, typename Observer>
long integrate_adaptive(Rhs&& f, Vec y, double t0, double t1, const OdeOptions& opt,
                        Observer&& observer) {
    if (!(t1 > t0)) throw DomainError("integration needs t1 > t0");

    const double span = t1 - t0;
    double t = t0;
    Vec k1 = f(t, y);
    observer(t, y);

    // initial step: conservative fraction of the span, capped
    double h = std::min({opt.max_step, span / 100.0, 1.0});
    double err_prev = 1.0;  // PI controller memory
    long accepted = 0;

    Vec y_new, err, k_last;
    for (long attempts = 0; t < t1; ++attempts) {
        if (attempts > opt.max_steps) {
            throw NotConverged("step limit exhausted before reaching the end time");
        }
        bool last = false;
        if (t + h >= t1) {
            h = t1 - t;
            last = true;
        }

        dp54_step(f, t, y, k1, h, y_new, err, k_last);

        // scaled RMS error norm
        double acc = 0.0;
        for (int i = 0; i < y.size(); ++i) {
            const double scale =
                opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            const double r = err[i] / scale;
            acc += r * r;
        }
        double err_norm = std::sqrt(acc / y.size());
        if (!std::isfinite(err_norm)) err_norm = 1e10;

        if (err_norm <= 1.0) {
            t = last ? t1 : t + h;
            y = y_new;
            k1 = k_last;  // FSAL
            detail::check_blowup(y, t, opt.blowup_bound);
            observer(t, y);
            ++accepted;
            // PI controller (order-5 exponent with a small integral term)
            const double fac = 0.9 * std::pow(std::max(err_norm, 1e-16), -0.17) *
                               std::pow(err_prev, 0.04);
            h *= std::clamp(fac, 0.2, 5.0);
            err_prev = std::max(err_norm, 1e-16);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err_norm, -0.2));
        }
        h = std::min(h, opt.max_step);
        if (!(h > 0) || t + h == t) {
            throw NotConverged("step size underflow during adaptive integration");
        }
    }
    return accepted;
}

// Drive the 5th-order stage (no rejection) through an explicit time grid.
// Used to replay an accepted-step sequence with each step split in half.
template <typename Vec, typename Rhs, typename Observer>
void integrate_on_grid(Rhs&& f, Vec y, const std::vector<double>& times, Observer&& observer) {
    if (times.size() < 2) throw DomainError("time grid needs at least two points");
    Vec k1 = f(times.front(), y);
    observer(times.front(), y);
    Vec y_new, err, k_last;
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        const double h = times[i + 1] - times[i];
        if (!(h > 0)) throw DomainError("time grid must be strictly increasing");
        dp54_step(f, times[i], y, k1, h, y_new, err, k_last);
        y = y_new;
        k1 = k_last;
        observer(times[i + 1], y);
    }
}

// Fixed-step RK4 over n equal steps; returns the final state.
template <typename Vec, typename Rhs>
Vec integrate_rk4(Rhs&& f, Vec y, double t0, double t1, long n) {
    if (n < 1) throw DomainError("need at least one step");
    const double h = (t1 - t0) / static_cast<double>(n);
    for (long i = 0; i < n; ++i) {
        y = rk4_step(f, t0 + i * h, y, h);
    }
    return y;
}

}  // namespace branchon
