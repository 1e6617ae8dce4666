// Two independent routes to the radial spectrum:
//
//  * grid: second-order finite differences on a uniform Dirichlet grid,
//    eigenvalues by Sturm bisection, one grid halving for a Richardson
//    extrapolation and a convergence estimate;
//
//  * basis: dense Hamiltonian in the truncated oscillator eigenbasis
//    (matrix elements by Gauss-Legendre quadrature with a node-doubling
//    check), eigenvalues from Eigen's SelfAdjointEigenSolver, one basis
//    enlargement for the convergence estimate.
//
// The routes share no discretisation machinery, so their agreement is a
// meaningful cross-check.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <string>

#include "branchon/laguerre.hpp"
#include "branchon/quadrature.hpp"
#include "branchon/radial.hpp"
#include "branchon/tridiagonal.hpp"

namespace branchon {

struct Spectrum {
    Eigen::VectorXd energies;     // radial eigenvalues E_n, ascending
    Eigen::VectorXd eta;          // (s/12) E_n
    Eigen::VectorXd convergence;  // per-level refinement shift (absolute, on E)
    Branch branch = Branch::Plus;
    std::string method;           // "grid" or "basis"
};

// Sampled function of the radial coordinate.
struct RadialFunction {
    Eigen::VectorXd r;
    Eigen::VectorXd values;
};

// Sampled function of the momentum variable p = r^rho.
struct MomentumFunction {
    Eigen::VectorXd p;
    Eigen::VectorXd values;
};

// ---------------------------------------------------------------------------
// grid route

// Discretise -chi'' + V chi on the interior of (0, r_max) with n uniform
// points and Dirichlet walls.
inline SymTridiagonal build_radial_operator(const RadialProblem& problem, int n_points,
                                            double r_max) {
    if (n_points < 100) {
        std::ostringstream msg;
        msg << "grid needs at least 100 interior points, got " << n_points;
        throw GridTooCoarse(msg.str());
    }
    if (!(r_max > 0)) throw DomainError("grid r_max must be positive");

    const double h = r_max / (n_points + 1);
    SymTridiagonal m;
    m.diag.resize(n_points);
    m.off = Eigen::VectorXd::Constant(n_points - 1, -1.0 / (h * h));
    for (int i = 0; i < n_points; ++i) {
        const double r = (i + 1) * h;
        m.diag[i] = 2.0 / (h * h) + problem.potential(r);
    }
    return m;
}

namespace detail {

struct GridSolve {
    Eigen::VectorXd energies;
    int n_points;
    double r_max;
};

inline GridSolve grid_solve(const RadialProblem& problem, int n_points, double r_max, int count) {
    const SymTridiagonal m = build_radial_operator(problem, n_points, r_max);
    return {smallest_eigenvalues(m, count), n_points, r_max};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// basis route

// Normalised oscillator eigenfunction of the radial problem:
//   chi_n(r) = N_n r^(ell+1) exp(-w r^2 / 2) L_n^(ell+1/2)(w r^2),
// an eigenfunction of the linear-term-free operator with eigenvalue
// w (4n + 2 ell + 3).
inline double basis_normalisation(int n, double ell, double omega) {
    const double alpha = ell + 0.5;
    return std::sqrt(2.0 * std::pow(omega, ell + 1.5) *
                     std::exp(std::lgamma(n + 1.0) - std::lgamma(n + alpha + 1.0)));
}

inline double basis_function(int n, const RadialProblem& problem, double r) {
    if (n < 0) throw DomainError("basis index must be nonnegative");
    if (!(r >= 0)) throw DomainError("radius must be nonnegative");
    const double w = problem.basis_omega();
    const double ell = problem.transform.ell;
    const double t = w * r * r;
    const auto weighted = laguerre_weighted_all(n, ell + 0.5, t);
    return basis_normalisation(n, ell, w) * std::pow(r, ell + 1.0) * weighted[n];
}

// Unperturbed level of basis function n: w (4n + 2 ell + 3).
inline double basis_level(int n, const RadialProblem& problem) {
    return problem.basis_omega() * (4.0 * n + 2.0 * problem.transform.ell + 3.0);
}

// Matrix of <chi_i | r^power | chi_j> for i, j < size, by Gauss-Legendre
// quadrature on [0, R] with R past the last basis function's turning point.
// With nodes = 0 the node count is chosen automatically and the result is
// validated by node doubling (QuadratureNotConverged on disagreement).
inline Eigen::MatrixXd basis_moment_matrix(const RadialProblem& problem, int size, int power,
                                           int nodes = 0) {
    if (size < 1) throw DomainError("basis size must be positive");
    if (power < 0) throw DomainError("moment power must be nonnegative");
    const double w = problem.basis_omega();
    const double ell = problem.transform.ell;
    const double alpha = ell + 0.5;
    const double r_max = std::sqrt((8.0 * size + 60.0) / w);

    const auto evaluate = [&](int n_nodes) {
        const QuadratureRule rule = mapped_to(gauss_legendre(n_nodes), 0.0, r_max);
        Eigen::MatrixXd columns(n_nodes, size);  // chi_j at each node
        Eigen::VectorXd node_weight(n_nodes);
        for (int q = 0; q < n_nodes; ++q) {
            const double r = rule.nodes[q];
            const auto weighted = laguerre_weighted_all(size - 1, alpha, w * r * r);
            const double envelope = std::pow(r, ell + 1.0);
            for (int j = 0; j < size; ++j) {
                columns(q, j) = basis_normalisation(j, ell, w) * envelope * weighted[j];
            }
            node_weight[q] = rule.weights[q] * std::pow(r, power);
        }
        return Eigen::MatrixXd(columns.transpose() * node_weight.asDiagonal() * columns);
    };

    if (nodes > 0) return evaluate(nodes);

    const int base = std::max(240, 6 * size);
    const Eigen::MatrixXd coarse = evaluate(base);
    const Eigen::MatrixXd fine = evaluate(2 * base);
    const double shift = (coarse - fine).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, fine.cwiseAbs().maxCoeff());
    if (shift > 1e-10 * scale) {
        std::ostringstream msg;
        msg << "moment-matrix quadrature moved by " << shift << " under node doubling";
        throw QuadratureNotConverged(msg.str());
    }
    return fine;
}

// Dense Hamiltonian in the truncated basis.  With the matched basis frequency
// the oscillator part is diagonal; an unmatched frequency adds the residual
// harmonic term through the r^2 moment matrix (still variationally exact in
// the basis limit).
inline Eigen::MatrixXd basis_hamiltonian(const RadialProblem& problem, int size) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(size, size);
    for (int i = 0; i < size; ++i) h(i, i) = basis_level(i, problem);

    const double w = problem.basis_omega();
    const double residual_harmonic = problem.harmonic_coefficient() - w * w;
    if (residual_harmonic != 0.0) {
        h += residual_harmonic * basis_moment_matrix(problem, size, 2);
    }
    const double linear = problem.linear_coefficient();
    if (linear != 0.0) {
        h += linear * basis_moment_matrix(problem, size, 1);
    }
    return h;
}

namespace detail {

inline Eigen::VectorXd basis_solve(const RadialProblem& problem, int size, int count,
                                   Eigen::MatrixXd* vectors = nullptr) {
    if (count > size) throw DomainError("requested more levels than basis functions");
    const Eigen::MatrixXd h = basis_hamiltonian(problem, size);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.compute(h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("dense eigensolver failed on the basis Hamiltonian");
    }
    if (vectors) *vectors = solver.eigenvectors().leftCols(count);
    return solver.eigenvalues().head(count);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// spectrum driver

// Lowest `count` levels through the problem's chosen discretisation, each
// with a refinement-based convergence estimate.  Refinement shifts beyond
// 1e-4 relative raise NotConverged instead of returning doubtful numbers.
inline Spectrum eigenvalues(const RadialProblem& problem, int count) {
    if (count < 1 || count > 20) {
        throw DomainError("level count must lie in [1, 20]");
    }
    problem.validate();

    Spectrum out;
    out.branch = problem.branch;

    Eigen::VectorXd first, second;
    if (const auto* grid = std::get_if<GridSpec>(&problem.discretisation)) {
        out.method = "grid";
        const double r_max = grid->r_max > 0 ? grid->r_max : problem.default_r_max(count);
        // n -> 2n+1 interior points halves the spacing exactly
        first = detail::grid_solve(problem, grid->n_points, r_max, count).energies;
        second = detail::grid_solve(problem, 2 * grid->n_points + 1, r_max, count).energies;
    } else {
        out.method = "basis";
        const auto& basis = std::get<BasisSpec>(problem.discretisation);
        first = detail::basis_solve(problem, basis.size + 16, count);
        second = detail::basis_solve(problem, basis.size, count);
        // `second` (the requested size) is reported; `first` only cross-checks
    }

    for (int i = 0; i < count; ++i) {
        const double shift = std::abs(second[i] - first[i]);
        if (shift > 1e-4 * std::max(1.0, std::abs(second[i]))) {
            std::ostringstream msg;
            msg << out.method << " refinement moved level " << i << " by " << shift
                << " (from " << first[i] << " to " << second[i] << ")";
            throw NotConverged(msg.str());
        }
    }

    if (out.method == "grid") {
        // second-order scheme: Richardson-extrapolate the halved grid
        out.energies = (4.0 * second - first) / 3.0;
        out.convergence = (second - first).cwiseAbs() / 3.0;
    } else {
        out.energies = second;
        out.convergence = (second - first).cwiseAbs();
    }
    out.eta = problem.eta_scale() * out.energies;
    return out;
}

// Grid-route eigenfunction of one level, sampled on the refined grid and
// normalised to unit L2 norm in r.
inline RadialFunction grid_eigenfunction(const RadialProblem& problem, int level) {
    const auto* grid = std::get_if<GridSpec>(&problem.discretisation);
    if (!grid) throw DomainError("grid eigenfunction requested on a basis discretisation");
    if (level < 0 || level > 19) throw DomainError("level must lie in [0, 19]");

    const double r_max = grid->r_max > 0 ? grid->r_max : problem.default_r_max(level + 1);
    const int n = 2 * grid->n_points + 1;
    const SymTridiagonal m = build_radial_operator(problem, n, r_max);
    const Eigen::VectorXd values = smallest_eigenvalues(m, level + 1);
    Eigen::VectorXd vec = tridiagonal_eigenvector(m, values[level]);

    const double h = r_max / (n + 1);
    RadialFunction out;
    out.r = Eigen::VectorXd::LinSpaced(n, h, n * h);
    out.values = vec / std::sqrt(h);  // unit-L2 in the continuum sense
    return out;
}

// ---------------------------------------------------------------------------
// momentum-space reconstruction

// Push a radial eigenfunction back through the substitution chain:
// psi(p) = r^(xi - rho) chi(r) at p = r^rho.
inline MomentumFunction reconstruct(const RadialFunction& chi, const TransformSpec& transform) {
    transform.validate();
    if (chi.r.size() != chi.values.size()) {
        throw DomainError("radial function arrays must have equal length");
    }
    MomentumFunction out;
    out.p.resize(chi.r.size());
    out.values.resize(chi.r.size());
    for (Eigen::Index i = 0; i < chi.r.size(); ++i) {
        if (!(chi.r[i] > 0)) throw DomainError("reconstruction needs positive radii");
        out.p[i] = std::pow(chi.r[i], transform.rho);
        out.values[i] = std::pow(chi.r[i], transform.xi - transform.rho) * chi.values[i];
    }
    return out;
}

// Weight making the momentum-space norm match the radial one:
// integral |psi(p)|^2 w(p) dp = integral |chi(r)|^2 dr.
inline double reconstruction_norm_weight(const TransformSpec& transform, double p) {
    if (!(p > 0)) throw DomainError("norm weight is defined for p > 0");
    const double r = std::pow(p, 1.0 / transform.rho);
    return 1.0 / (transform.rho * std::pow(r, 2.0 * (transform.xi - transform.rho) +
                                                  transform.rho - 1.0));
}

}  // namespace branchon
