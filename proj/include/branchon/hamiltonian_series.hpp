// Evaluate momentum and branched Hamiltonian along a sampled trajectory.
// The branch policy either pins one branch or picks it per sample from the
// sign of the momentum map's inversion argument; samples within eps of that
// argument's zero raise PoleCrossing, since the velocity -> momentum
// inversion degenerates there.
#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "branchon/trajectory.hpp"
#include "branchon/type1.hpp"
#include "branchon/type2.hpp"
#include "branchon/types.hpp"

namespace branchon {

struct HamiltonianSample {
    double t;
    double p;
    double value;   // H on the selected branch
    Branch branch;  // branch actually used at this sample
};

// nullopt -> select per sample from the inversion argument's sign.
using BranchPolicy = std::optional<Branch>;

inline constexpr double kDefaultPoleEps = 1e-8;

namespace detail {

template <typename ArgFn, typename EvalFn>
std::vector<HamiltonianSample> hamiltonian_series_impl(const Trajectory& traj, BranchPolicy policy,
                                                       double pole_eps, ArgFn&& inversion_argument,
                                                       EvalFn&& evaluate, bool plus_when_positive) {
    traj.validate();
    if (!(pole_eps >= 0)) throw DomainError("pole tolerance must be nonnegative");

    std::vector<HamiltonianSample> out;
    out.reserve(static_cast<std::size_t>(traj.size()));
    for (Eigen::Index i = 0; i < traj.size(); ++i) {
        const StatePointd s = traj.state(i);
        const double arg = inversion_argument(s);
        if (std::abs(arg) <= pole_eps) {
            std::ostringstream msg;
            msg << "sample at t = " << traj.t[i]
                << " lies within " << pole_eps << " of the momentum-map pole";
            throw PoleCrossing(msg.str(), traj.t[i]);
        }
        Branch b;
        if (policy) {
            b = *policy;
        } else {
            b = ((arg > 0) == plus_when_positive) ? Branch::Plus : Branch::Minus;
        }
        const auto [p, h] = evaluate(s, b);
        out.push_back({traj.t[i], p, h, b});
    }
    return out;
}

}  // namespace detail

// General fractional-power family.  The inversion argument is u = v + f(x);
// u > 0 corresponds to the Plus velocity branch.
inline std::vector<HamiltonianSample> hamiltonian_series(const Trajectory& traj,
                                                         const TypeIModeld& model,
                                                         BranchPolicy policy = std::nullopt,
                                                         double pole_eps = kDefaultPoleEps) {
    return detail::hamiltonian_series_impl(
        traj, policy, pole_eps,
        [&](const StatePointd& s) { return s.v + model.f(s.x); },
        [&](const StatePointd& s, Branch b) {
            const double p = type1_momentum(s, model);
            return std::pair{p, type1_hamiltonian(PhasePointd{s.x, p}, b, model)};
        },
        /*plus_when_positive=*/true);
}

// Inverse-first-power family.  The inversion argument is B(x) - v; the
// Plus velocity branch sits above the shift, so it has a negative argument.
inline std::vector<HamiltonianSample> hamiltonian_series(const Trajectory& traj,
                                                         const TypeIIModeld& model,
                                                         BranchPolicy policy = std::nullopt,
                                                         double pole_eps = kDefaultPoleEps) {
    return detail::hamiltonian_series_impl(
        traj, policy, pole_eps,
        [&](const StatePointd& s) { return model.shift(s.x) - s.v; },
        [&](const StatePointd& s, Branch b) {
            const double p = type2_momentum(s, model);
            return std::pair{p, type2_hamiltonian(PhasePointd{s.x, p}, b, model)};
        },
        /*plus_when_positive=*/false);
}

// Branched oscillator Hamiltonian with its conserving momentum map.  The
// inversion argument is D = k v + k^2 x^2 / 3 + 3 lambda; D > 0 is the
// Plus sheet.
inline std::vector<HamiltonianSample> hamiltonian_series(const Trajectory& traj,
                                                         const LienardParamsd& osc,
                                                         BranchPolicy policy = std::nullopt,
                                                         double pole_eps = kDefaultPoleEps) {
    if (osc.k == 0.0) {
        throw DegenerateParameter("branched oscillator Hamiltonian needs k != 0");
    }
    return detail::hamiltonian_series_impl(
        traj, policy, pole_eps,
        [&](const StatePointd& s) { return oscillator_inversion_argument(s, osc); },
        [&](const StatePointd& s, Branch b) {
            const double p = oscillator_momentum(s, osc);
            return std::pair{p, oscillator_hamiltonian(PhasePointd{s.x, p}, b, osc)};
        },
        /*plus_when_positive=*/true);
}

// max |H_i - H_0| / max(|H_0|, floor): conservation figure of merit.
inline double relative_drift(const std::vector<HamiltonianSample>& series) {
    if (series.empty()) throw DomainError("drift of an empty series is undefined");
    const double h0 = series.front().value;
    double worst = 0.0;
    for (const auto& s : series) worst = std::max(worst, std::abs(s.value - h0));
    return worst / std::max(std::abs(h0), 1e-300);
}

}  // namespace branchon
