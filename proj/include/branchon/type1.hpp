// Branch algebra of the fractional-power family: Lagrangian evaluation, the
// velocity -> momentum map, its two inverse branches, and the branched
// Hamiltonians, together with the compact single-branch oscillator form that
// the m = 0 member collapses to after a momentum shift.
//
// All fractional powers of signed quantities use the odd-root convention
//   z^q := sign(z) |z|^q,
// which is the continuation that keeps the Lagrangian real on both sides of
// the pole.
#pragma once

#include <cmath>
#include <limits>
#include <sstream>

#include "branchon/types.hpp"

namespace branchon {

// Odd-root power: sign(z) * |z|^q.  Continuous and odd in z for every real q.
template <typename Scalar>
Scalar signed_pow(Scalar z, Scalar q) {
    using std::abs;
    using std::copysign;
    using std::pow;
    if (z == Scalar(0)) return Scalar(0);
    return copysign(pow(abs(z), q), z);
}

// Both inverse images of a two-valued velocity inversion.
template <typename Scalar>
struct VelocityPair {
    Scalar plus{};
    Scalar minus{};

    Scalar operator[](Branch b) const { return b == Branch::Plus ? plus : minus; }
};

using VelocityPaird = VelocityPair<double>;

namespace detail {

template <typename Scalar>
[[noreturn]] void throw_pole(Scalar x, Scalar v) {
    std::ostringstream msg;
    msg << "v + f(x) = 0 at (x, v) = (" << x << ", " << v
        << "): Lagrangian pole, momentum map undefined";
    throw SingularInput(msg.str());
}

}  // namespace detail

// L(x, v) = C (v + f(x))^((2m+1)/(2m-1)) - delta, odd-root convention.
template <typename Scalar>
Scalar type1_lagrangian(const StatePoint<Scalar>& state, const TypeIModel<Scalar>& model) {
    const Scalar u = state.v + model.f(state.x);
    if (u == Scalar(0)) detail::throw_pole(state.x, state.v);
    const Scalar q = (Scalar(2) * model.m + Scalar(1)) / (Scalar(2) * model.m - Scalar(1));
    return model.prefactor() * signed_pow(u, q) - model.delta;
}

// p(x, v) = dL/dv = -delta^(2/(1-2m)) |v + f(x)|^(2/(2m-1)).
// The even power of the absolute value makes p strictly negative everywhere
// away from the pole, for both signs of v + f(x).
template <typename Scalar>
Scalar type1_momentum(const StatePoint<Scalar>& state, const TypeIModel<Scalar>& model) {
    using std::abs;
    using std::pow;
    const Scalar u = state.v + model.f(state.x);
    if (u == Scalar(0)) detail::throw_pole(state.x, state.v);
    const Scalar one = Scalar(1), two = Scalar(2);
    return -pow(model.delta, two / (one - two * model.m)) *
           pow(abs(u), two / (two * model.m - one));
}

// The two velocity branches over a momentum value:
//   v_pm = -f(x) + delta (pm sqrt(-p))^(2m-1),   p < 0.
template <typename Scalar>
VelocityPair<Scalar> type1_velocity_branches(Scalar x, Scalar p, const TypeIModel<Scalar>& model) {
    using std::sqrt;
    if (!(p < Scalar(0))) {
        std::ostringstream msg;
        msg << "momentum must be negative for the fractional-power family, got p = " << p;
        throw DomainError(msg.str());
    }
    const Scalar root = sqrt(-p);
    const Scalar q = Scalar(2) * model.m - Scalar(1);
    const Scalar fx = model.f(x);
    return {-fx + model.delta * signed_pow(root, q),
            -fx + model.delta * signed_pow(-root, q)};
}

// Branched Hamiltonian
//   H_pm(x, p) = (-p) f(x) - (2 delta / (2m+1)) (pm sqrt(-p))^(2m+1) + delta.
template <typename Scalar>
Scalar type1_hamiltonian(const PhasePoint<Scalar>& point, Branch branch,
                         const TypeIModel<Scalar>& model) {
    using std::sqrt;
    if (!(point.p < Scalar(0))) {
        std::ostringstream msg;
        msg << "momentum must be negative for the fractional-power family, got p = " << point.p;
        throw DomainError(msg.str());
    }
    const Scalar w = Scalar(as_real(branch)) * sqrt(-point.p);
    const Scalar q = Scalar(2) * model.m + Scalar(1);
    return (-point.p) * model.f(point.x) -
           Scalar(2) * model.delta / q * signed_pow(w, q) + model.delta;
}

// ---------------------------------------------------------------------------
// Oscillator specialisation (m = 0 member after the shift p -> (2k/3lambda) p - 1)

// Momentum value where the two oscillator branches merge: p* = 3 lambda / (2k).
template <typename Scalar>
Scalar oscillator_branch_point(const LienardParams<Scalar>& osc) {
    if (osc.k == Scalar(0)) {
        throw DegenerateParameter("branch point needs k != 0");
    }
    return Scalar(3) * osc.lambda / (Scalar(2) * osc.k);
}

namespace detail {

// sqrt(1 - 2 k p / (3 lambda)) with a snap-to-zero guard: a radicand within a
// few ulps of zero is treated as exactly the branch point, so both branches
// coincide bitwise there instead of picking up O(sqrt(eps)) separation from
// the rounding of p*.
template <typename Scalar>
Scalar oscillator_branch_root(Scalar p, const LienardParams<Scalar>& osc) {
    using std::abs;
    using std::sqrt;
    const Scalar ratio = Scalar(2) * osc.k * p / (Scalar(3) * osc.lambda);
    Scalar radicand = Scalar(1) - ratio;
    const Scalar snap = Scalar(8) * std::numeric_limits<Scalar>::epsilon() *
                        (Scalar(1) + abs(ratio));
    if (abs(radicand) <= snap) radicand = Scalar(0);
    if (radicand < Scalar(0)) {
        std::ostringstream msg;
        msg << "momentum p = " << p << " lies beyond the branch point p* = "
            << oscillator_branch_point(osc) << "; no real velocity exists there";
        throw DomainError(msg.str());
    }
    return sqrt(radicand);
}

}  // namespace detail

// Branched oscillator Hamiltonian in shifted momentum:
//   H_pm(x, p) = (9 lambda^2 / 2k^2) [ R^2 (1 + k^2 x^2 / 9 lambda) -+ 2 R + ... ]
// written here directly as  (1/2) lambda x^2 R^2 + (9 lambda^2 / 2 k^2)(1 -+ R)^2
// with R = sqrt(1 - 2 k p / 3 lambda).  The Plus branch, expanded, is the
// compact single-branch form below.
template <typename Scalar>
Scalar oscillator_hamiltonian(const PhasePoint<Scalar>& point, Branch branch,
                              const LienardParams<Scalar>& osc) {
    if (osc.k == Scalar(0)) {
        throw DegenerateParameter("branched oscillator Hamiltonian needs k != 0");
    }
    const Scalar r = detail::oscillator_branch_root(point.p, osc);
    const Scalar a = Scalar(9) * osc.lambda * osc.lambda / (Scalar(2) * osc.k * osc.k);
    const Scalar one_mp = Scalar(1) - Scalar(as_real(branch)) * r;
    return osc.lambda / Scalar(2) * point.x * point.x * r * r + a * one_mp * one_mp;
}

// Compact single-branch form; identical to the Plus branch above.
template <typename Scalar>
Scalar compact_hamiltonian(const PhasePoint<Scalar>& point, const LienardParams<Scalar>& osc) {
    return oscillator_hamiltonian(point, Branch::Plus, osc);
}

// Splitting of the compact form into a momentum-dependent stiffness and a
// pure-momentum potential:  H = (1/2) stiffness(p) x^2 + offset(p).
template <typename Scalar>
struct CompactSplit {
    Scalar stiffness{};  // lambda (1 - 2 k p / 3 lambda)
    Scalar offset{};     // (9 lambda^2 / 2 k^2) (sqrt(1 - 2 k p / 3 lambda) - 1)^2
};

template <typename Scalar>
CompactSplit<Scalar> compact_split(Scalar p, const LienardParams<Scalar>& osc) {
    if (osc.k == Scalar(0)) {
        throw DegenerateParameter("compact split needs k != 0");
    }
    const Scalar r = detail::oscillator_branch_root(p, osc);
    const Scalar a = Scalar(9) * osc.lambda * osc.lambda / (Scalar(2) * osc.k * osc.k);
    return {osc.lambda * r * r, a * (r - Scalar(1)) * (r - Scalar(1))};
}

// Denominator of the conserving momentum map; its sign selects the branch and
// its zero marks the map's pole.
template <typename Scalar>
Scalar oscillator_inversion_argument(const StatePoint<Scalar>& state,
                                     const LienardParams<Scalar>& osc) {
    return osc.k * state.v + osc.k * osc.k * state.x * state.x / Scalar(3) +
           Scalar(3) * osc.lambda;
}

// Conserving momentum map of the branched oscillator Hamiltonian:
//   p(x, v) = 3 lambda / 2k - (27 lambda^3 / 2k) / D^2,
//   D = k v + k^2 x^2 / 3 + 3 lambda.
// D > 0 is the Plus-branch sheet.  This map, not the raw m = 0 family map with
// oscillator parameters, is the one constant along oscillator trajectories.
template <typename Scalar>
Scalar oscillator_momentum(const StatePoint<Scalar>& state, const LienardParams<Scalar>& osc) {
    if (osc.k == Scalar(0)) {
        throw DegenerateParameter("oscillator momentum map needs k != 0");
    }
    const Scalar d = oscillator_inversion_argument(state, osc);
    if (d == Scalar(0)) {
        std::ostringstream msg;
        msg << "momentum-map pole at (x, v) = (" << state.x << ", " << state.v << ")";
        throw SingularInput(msg.str());
    }
    const Scalar lam3 = osc.lambda * osc.lambda * osc.lambda;
    return Scalar(3) * osc.lambda / (Scalar(2) * osc.k) -
           Scalar(27) * lam3 / (Scalar(2) * osc.k) / (d * d);
}

// Shift linking the raw m = 0 family momentum to the oscillator momentum:
// p_family = (2k / 3 lambda) p_oscillator - 1.
template <typename Scalar>
Scalar oscillator_to_family_momentum(Scalar p, const LienardParams<Scalar>& osc) {
    if (osc.k == Scalar(0)) {
        throw DegenerateParameter("momentum shift needs k != 0");
    }
    return Scalar(2) * osc.k * p / (Scalar(3) * osc.lambda) - Scalar(1);
}

}  // namespace branchon
