// Rayleigh-Schroedinger perturbation series for the branch-splitting linear
// term, expanded around the exactly solvable oscillator part.  Coefficients
// are organised in powers of the branch coupling g = s^(-3/2): the operator
// split is
//
//   H = H0 + g W,   H0 = -d^2/dr^2 + ell(ell+1)/r^2 + (36 lambda/s^2) r^2,
//                   W  = -branch * 24 r,
//
// so the m-th coefficient carries the full matrix-element content and the
// branch enters only through the sign of W.  Consequently the Minus-branch
// coefficients are the Plus-branch ones with alternating sign, and partial
// sums of the two branches mirror each other around the even-order part.
//
// Coefficients are computed in a truncated oscillator basis that is enlarged
// until they stop moving; the sum-over-states recursion below uses
// intermediate normalisation (the n-th component of every correction vector
// beyond zeroth order is zero).
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <sstream>

#include "branchon/radial.hpp"
#include "branchon/spectral.hpp"

namespace branchon {

struct PerturbationSeries {
    int level = 0;                  // unperturbed level index n
    Branch branch = Branch::Plus;
    double coupling = 0.0;          // g = s^(-3/2)
    double eta_scale = 0.0;         // s / 12
    Eigen::VectorXd coefficients;   // E_m, m = 0..order
    Eigen::VectorXd partial_sums;   // sum_{l<=m} g^l E_l
    Eigen::VectorXd eta_partial;    // eta_scale * partial_sums
    int basis_size_used = 0;
    std::optional<double> radius_estimate;  // crude convergence-radius guess

    int order() const { return static_cast<int>(coefficients.size()) - 1; }
    double eta(int m) const {
        if (m < 0 || m > order()) throw DomainError("partial-sum order out of range");
        return eta_partial[m];
    }
};

struct RsptOptions {
    int max_basis = 1024;          // enlargement ceiling before BasisTooSmall
    double stability_tol = 1e-8;   // relative coefficient movement considered converged
};

namespace detail {

// Sum-over-states recursion in a fixed orthonormal eigenbasis of H0.
// eps holds the unperturbed levels, w the perturbation matrix.  Returns
// E_0..E_M for level n.
inline Eigen::VectorXd rspt_recursion(const Eigen::VectorXd& eps, const Eigen::MatrixXd& w, int n,
                                      int order) {
    const Eigen::Index b = eps.size();
    Eigen::VectorXd coeffs(order + 1);
    coeffs[0] = eps[n];
    if (order == 0) return coeffs;

    // corrections[m] is the m-th order state correction; component n fixed to
    // zero for m >= 1 (intermediate normalisation)
    std::vector<Eigen::VectorXd> corrections(order + 1, Eigen::VectorXd::Zero(b));
    corrections[0][n] = 1.0;

    for (int m = 1; m <= order; ++m) {
        const Eigen::VectorXd w_prev = w * corrections[m - 1];
        coeffs[m] = w_prev[n];

        if (m == order) break;  // last energy needs no further state correction
        Eigen::VectorXd resid = -w_prev;
        for (int l = 1; l < m; ++l) {
            resid += coeffs[l] * corrections[m - l];
        }
        Eigen::VectorXd& next = corrections[m];
        for (Eigen::Index j = 0; j < b; ++j) {
            if (j == n) continue;
            const double gap = eps[j] - eps[n];
            if (std::abs(gap) < 1e-12 * std::max(1.0, std::abs(eps[n]))) {
                throw NumericalError("degenerate unperturbed levels in perturbation recursion");
            }
            next[j] = resid[j] / gap;
        }
    }
    return coeffs;
}

}  // namespace detail

// Crude convergence-radius estimate from the tail of a coefficient sequence:
// reciprocal of the largest ratio |E_{m+1}/E_m| over the trailing half of the
// consecutive nonzero pairs.  Returns nothing when fewer than four nonzero
// coefficients or fewer than three usable ratios exist (pattern too short to
// call).
inline std::optional<double> estimate_radius(const Eigen::VectorXd& coefficients) {
    int nonzero = 0;
    for (Eigen::Index m = 0; m < coefficients.size(); ++m) {
        if (coefficients[m] != 0.0) ++nonzero;
    }
    if (nonzero < 4) return std::nullopt;

    std::vector<double> ratios;
    for (Eigen::Index m = 0; m + 1 < coefficients.size(); ++m) {
        if (coefficients[m] != 0.0 && coefficients[m + 1] != 0.0) {
            ratios.push_back(std::abs(coefficients[m + 1] / coefficients[m]));
        }
    }
    if (ratios.size() < 3) return std::nullopt;

    const std::size_t tail_start = ratios.size() / 2;
    double largest = 0.0;
    for (std::size_t i = tail_start; i < ratios.size(); ++i) {
        largest = std::max(largest, ratios[i]);
    }
    if (!(largest > 0.0)) return std::nullopt;
    return 1.0 / largest;
}

// Perturbation series for level n of the problem's branch, to the given
// order (at most 8).  The truncated basis starts at 4 (n + order) functions
// and doubles until every coefficient is stable; failure to stabilise below
// options.max_basis raises BasisTooSmall.
inline PerturbationSeries perturbation_series(const RadialProblem& problem, int n, int order,
                                              const RsptOptions& options = {}) {
    problem.validate();
    if (n < 0) throw DomainError("level index must be nonnegative");
    if (order < 0 || order > 8) throw DomainError("perturbation order must lie in [0, 8]");
    if (const auto* basis = std::get_if<BasisSpec>(&problem.discretisation)) {
        if (basis->omega != 0.0 && basis->omega != problem.matched_omega()) {
            throw DomainError("perturbation expansion requires the matched basis frequency");
        }
    }

    const double s = problem.model.s;
    PerturbationSeries out;
    out.level = n;
    out.branch = problem.branch;
    out.coupling = 1.0 / (s * std::sqrt(s));
    out.eta_scale = problem.eta_scale();

    const double w_strength = problem.include_linear ? -as_real(problem.branch) * 24.0 : 0.0;

    int size = std::max(24, 4 * (n + order));
    Eigen::VectorXd previous;
    bool stable = false;
    for (; size <= options.max_basis; size *= 2) {
        RadialProblem basis_problem = problem;
        basis_problem.discretisation = BasisSpec{std::max(size, 10), 0.0};

        Eigen::VectorXd eps(size);
        for (int i = 0; i < size; ++i) eps[i] = basis_level(i, basis_problem);
        Eigen::MatrixXd w;
        if (w_strength != 0.0) {
            w = w_strength * basis_moment_matrix(basis_problem, size, 1);
        } else {
            w = Eigen::MatrixXd::Zero(size, size);
        }

        Eigen::VectorXd coeffs = detail::rspt_recursion(eps, w, n, order);
        if (previous.size() == coeffs.size()) {
            double movement = 0.0;
            for (Eigen::Index m = 0; m < coeffs.size(); ++m) {
                movement = std::max(movement, std::abs(coeffs[m] - previous[m]) /
                                                  std::max(1.0, std::abs(coeffs[m])));
            }
            if (movement <= options.stability_tol) {
                out.coefficients = coeffs;
                out.basis_size_used = size;
                stable = true;
                break;
            }
        }
        previous = coeffs;
    }
    if (!stable) {
        std::ostringstream msg;
        msg << "perturbation coefficients still moving at basis size " << options.max_basis;
        throw BasisTooSmall(msg.str());
    }

    out.partial_sums.resize(order + 1);
    out.eta_partial.resize(order + 1);
    double sum = 0.0, power = 1.0;
    for (int m = 0; m <= order; ++m) {
        sum += power * out.coefficients[m];
        out.partial_sums[m] = sum;
        out.eta_partial[m] = out.eta_scale * sum;
        power *= out.coupling;
    }
    out.radius_estimate = estimate_radius(out.coefficients);
    return out;
}

// eta value of level n summed to the given order.
inline double eta_series(const RadialProblem& problem, int n, int order,
                         const RsptOptions& options = {}) {
    return perturbation_series(problem, n, order, options).eta(order);
}

}  // namespace branchon
