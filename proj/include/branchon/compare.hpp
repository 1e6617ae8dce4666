// Cross-validation of the perturbative eta values against direct
// diagonalisation, plus the mirror decomposition that splits a branch pair
// into the shared even-order shift and the sign-flipping odd-order part.
#pragma once

#include <cmath>

#include "branchon/radial.hpp"
#include "branchon/rspt.hpp"
#include "branchon/spectral.hpp"

namespace branchon {

struct EtaReport {
    int level = 0;
    Branch branch = Branch::Plus;
    int order_used = 0;
    double eta_series = 0.0;
    double eta_diagonalisation = 0.0;
    double abs_diff = 0.0;
};

namespace detail {

// The diagonalisation side always runs on a grid, so the two routes stay
// independent even when the input problem is basis-discretised.
inline RadialProblem with_grid(const RadialProblem& problem) {
    RadialProblem out = problem;
    if (!std::holds_alternative<GridSpec>(out.discretisation)) {
        out.discretisation = GridSpec{};
    }
    return out;
}

}  // namespace detail

// eta of level n from the truncated perturbation series next to the same eta
// from direct diagonalisation of the problem.
inline EtaReport compare_with_diagonalization(const RadialProblem& problem, int n, int order,
                                              const RsptOptions& options = {}) {
    if (n < 0 || n > 19) throw DomainError("level must lie in [0, 19]");

    EtaReport report;
    report.level = n;
    report.branch = problem.branch;
    report.order_used = order;
    report.eta_series = eta_series(problem, n, order, options);

    const Spectrum direct = eigenvalues(detail::with_grid(problem), n + 1);
    report.eta_diagonalisation = direct.eta[n];
    report.abs_diff = std::abs(report.eta_series - report.eta_diagonalisation);
    return report;
}

// Both branches of a level decomposed around the unperturbed value:
//   eta_pm = base + even_shift -+ odd_part
// (series side), next to the same even shift extracted from the two
// diagonalised branches.  The odd part cancels in the branch average, so
// average(eta_plus, eta_minus) - base isolates the even shift on both routes.
struct MirrorDecomposition {
    double base = 0.0;               // unperturbed eta
    double odd_part_series = 0.0;    // half the branch gap, series route
    double even_shift_series = 0.0;  // branch-average shift, series route
    double even_shift_diag = 0.0;    // branch-average shift, diagonalisation route
};

inline MirrorDecomposition mirror_decomposition(const RadialProblem& problem, int n, int order,
                                                const RsptOptions& options = {}) {
    RadialProblem plus = problem;
    plus.branch = Branch::Plus;
    RadialProblem minus = problem;
    minus.branch = Branch::Minus;

    const PerturbationSeries series_plus = perturbation_series(plus, n, order, options);
    const PerturbationSeries series_minus = perturbation_series(minus, n, order, options);
    const Spectrum diag_plus = eigenvalues(detail::with_grid(plus), n + 1);
    const Spectrum diag_minus = eigenvalues(detail::with_grid(minus), n + 1);

    MirrorDecomposition out;
    out.base = series_plus.eta_scale * series_plus.coefficients[0];
    const double eta_p = series_plus.eta(order);
    const double eta_m = series_minus.eta(order);
    out.even_shift_series = 0.5 * (eta_p + eta_m) - out.base;
    out.odd_part_series = 0.5 * (eta_m - eta_p);
    out.even_shift_diag = 0.5 * (diag_plus.eta[n] + diag_minus.eta[n]) - out.base;
    return out;
}

}  // namespace branchon
