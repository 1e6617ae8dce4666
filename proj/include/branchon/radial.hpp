// Description of the quantised inverse-power-family branch problem after the
// momentum-space substitution p = r^rho, psi = r^(xi - rho) chi.  With the
// default exponents (rho = 2, xi = 5/2, effective angular index ell = 1/2)
// the eigenvalue problem becomes a half-line radial Schroedinger equation
//
//   -chi'' + [ ell(ell+1)/r^2 + (36 lambda / s^2) r^2
//              -+ (24 / s^(3/2)) r ] chi  =  (12/s) eta chi,
//
// where the upper sign (attractive linear well, lower eta) is labelled Plus.
// Note the quantum branch labels follow the spectral ordering, which is the
// reverse of the classical Legendre labelling of the same family.
#pragma once

#include <cmath>
#include <sstream>
#include <variant>

#include "branchon/errors.hpp"
#include "branchon/types.hpp"

namespace branchon {

// Exponents of the substitution chain; defaults give the standard problem.
struct TransformSpec {
    double rho = 2.0;   // momentum = r^rho
    double xi = 2.5;    // psi = r^(xi - rho) chi
    double ell = 0.5;   // effective angular index

    double centrifugal() const { return ell * (ell + 1.0); }

    void validate() const {
        if (!(rho > 0) || !std::isfinite(rho)) throw DomainError("rho must be positive");
        if (!std::isfinite(xi)) throw DomainError("xi must be finite");
        if (!(ell > -0.5) || !std::isfinite(ell)) {
            throw DomainError("angular index must exceed -1/2 for a normalisable origin");
        }
    }
};

// Uniform Dirichlet grid on (0, r_max).
struct GridSpec {
    int n_points = 2000;   // interior points
    double r_max = 0.0;    // 0 -> choose from the harmonic length scale
};

// Truncated oscillator eigenbasis.
struct BasisSpec {
    int size = 60;
    double omega = 0.0;    // basis frequency; 0 -> matched value 6 sqrt(lambda) / s
};

// Full problem description: model, branch, discretisation choice, and the
// switch that drops the branch-splitting linear term (leaving the exactly
// solvable oscillator part).
struct RadialProblem {
    TypeIIModeld model;
    Branch branch = Branch::Plus;
    std::variant<GridSpec, BasisSpec> discretisation = GridSpec{};
    bool include_linear = true;
    TransformSpec transform{};

    explicit RadialProblem(TypeIIModeld m) : model(m) { validate(); }
    RadialProblem(TypeIIModeld m, Branch b, std::variant<GridSpec, BasisSpec> d,
                  bool linear = true, TransformSpec tr = {})
        : model(m), branch(b), discretisation(std::move(d)), include_linear(linear),
          transform(tr) {
        validate();
    }

    void validate() const {
        if (!(model.s > 0)) {
            throw DomainError("quantised branch problem requires s > 0");
        }
        transform.validate();
        if (const auto* grid = std::get_if<GridSpec>(&discretisation)) {
            if (grid->r_max != 0.0 && !(grid->r_max > 0)) {
                throw DomainError("grid r_max must be positive (or 0 for automatic)");
            }
        } else {
            const auto& basis = std::get<BasisSpec>(discretisation);
            if (basis.size < 10) throw DomainError("basis size must be at least 10");
            if (basis.omega != 0.0 && !(basis.omega > 0)) {
                throw DomainError("basis omega must be positive (or 0 for matched)");
            }
        }
    }

    // Frequency of the oscillator part of the radial operator.
    double matched_omega() const { return 6.0 * std::sqrt(model.lambda) / model.s; }

    double basis_omega() const {
        if (const auto* basis = std::get_if<BasisSpec>(&discretisation)) {
            if (basis->omega != 0.0) return basis->omega;
        }
        return matched_omega();
    }

    // Coefficient of r^2: 36 lambda / s^2 (the square of matched_omega).
    double harmonic_coefficient() const {
        return 36.0 * model.lambda / (model.s * model.s);
    }

    // Coefficient of r: -branch * 24 / s^(3/2), or 0 with the linear term off.
    double linear_coefficient() const {
        if (!include_linear) return 0.0;
        return -as_real(branch) * 24.0 / (model.s * std::sqrt(model.s));
    }

    // Radial potential ell(ell+1)/r^2 + harmonic * r^2 + linear * r.
    double potential(double r) const {
        if (!(r > 0)) throw DomainError("radial potential is defined for r > 0");
        return transform.centrifugal() / (r * r) + harmonic_coefficient() * r * r +
               linear_coefficient() * r;
    }

    // eta = (s/12) * E maps radial eigenvalues to branch spectral values.
    double eta_scale() const { return model.s / 12.0; }

    // Box size covering the first `count` levels with room for the decaying
    // tail: classical turning point of the highest level plus a safety margin,
    // in units of the oscillator length.
    double default_r_max(int count) const {
        const double w = matched_omega();
        return std::sqrt((8.0 * count + 60.0) / w);
    }

    // Dimensionless strength of the linear term relative to the oscillator
    // spacing; grows as lambda falls.
    double coupling() const {
        return 24.0 / (std::pow(matched_omega(), 1.5) * model.s * std::sqrt(model.s));
    }
};

}  // namespace branchon
