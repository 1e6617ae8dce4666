// Branch algebra of the inverse-first-power family: Lagrangian, momentum map,
// the two velocity branches over a momentum value, and the branched
// Hamiltonians  H_pm = (s/3) x^2 p + (3/s) lambda p pm (2/s) sqrt(s p).
#pragma once

#include <cmath>
#include <sstream>

#include "branchon/type1.hpp"  // VelocityPair
#include "branchon/types.hpp"

namespace branchon {

namespace detail {

template <typename Scalar>
[[noreturn]] void throw_type2_pole(Scalar x, Scalar v) {
    std::ostringstream msg;
    msg << "B(x) - v = 0 at (x, v) = (" << x << ", " << v
        << "): Lagrangian pole, momentum map undefined";
    throw SingularInput(msg.str());
}

template <typename Scalar>
Scalar type2_sp_or_throw(Scalar s, Scalar p) {
    const Scalar sp = s * p;
    if (!(sp > Scalar(0))) {
        std::ostringstream msg;
        msg << "s * p must be positive for the inverse-power family, got s = " << s
            << ", p = " << p;
        throw DomainError(msg.str());
    }
    return sp;
}

}  // namespace detail

// L(x, v) = (1/s) (B(x) - v)^(-1).
template <typename Scalar>
Scalar type2_lagrangian(const StatePoint<Scalar>& state, const TypeIIModel<Scalar>& model) {
    const Scalar w = model.shift(state.x) - state.v;
    if (w == Scalar(0)) detail::throw_type2_pole(state.x, state.v);
    return Scalar(1) / (model.s * w);
}

// p(x, v) = dL/dv = (1/s) (B(x) - v)^(-2); always the same sign as s.
template <typename Scalar>
Scalar type2_momentum(const StatePoint<Scalar>& state, const TypeIIModel<Scalar>& model) {
    const Scalar w = model.shift(state.x) - state.v;
    if (w == Scalar(0)) detail::throw_type2_pole(state.x, state.v);
    return Scalar(1) / (model.s * w * w);
}

// v_pm = B(x) pm 1 / sqrt(s p),  requires s p > 0.
template <typename Scalar>
VelocityPair<Scalar> type2_velocity_branches(Scalar x, Scalar p, const TypeIIModel<Scalar>& model) {
    using std::sqrt;
    const Scalar sp = detail::type2_sp_or_throw(model.s, p);
    const Scalar half_gap = Scalar(1) / sqrt(sp);
    const Scalar b = model.shift(x);
    return {b + half_gap, b - half_gap};
}

// H_pm(x, p) = (s/3) x^2 p + (3/s) lambda p pm (2/s) sqrt(s p).
// The labels follow the Legendre construction: Plus is the image of the
// v = B + 1/sqrt(sp) velocity branch.
template <typename Scalar>
Scalar type2_hamiltonian(const PhasePoint<Scalar>& point, Branch branch,
                         const TypeIIModel<Scalar>& model) {
    using std::sqrt;
    const Scalar sp = detail::type2_sp_or_throw(model.s, point.p);
    return model.shift(point.x) * point.p +
           Scalar(as_real(branch)) * Scalar(2) * sqrt(sp) / model.s;
}

}  // namespace branchon
