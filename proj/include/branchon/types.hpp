// Core value types: branch labels, phase-space points, and the three model
// parameter bundles (oscillator, general two-branch family, inverse-square
// family).  Everything is a small scalar-templated aggregate with validation
// at construction; the *d aliases fix Scalar = double.
#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "branchon/errors.hpp"

namespace branchon {

// ---------------------------------------------------------------------------
// Branch label

enum class Branch : int { Plus = +1, Minus = -1 };

constexpr int sign_of(Branch b) { return static_cast<int>(b); }

// Signed unit as a floating-point factor.
constexpr double as_real(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

constexpr Branch opposite(Branch b) {
    return b == Branch::Plus ? Branch::Minus : Branch::Plus;
}

inline std::string to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

inline Branch parse_branch(const std::string& s) {
    if (s == "plus" || s == "+") return Branch::Plus;
    if (s == "minus" || s == "-") return Branch::Minus;
    throw ConfigError("branch must be 'plus' or 'minus', got '" + s + "'");
}

namespace detail {

template <typename Scalar>
void require_finite(Scalar value, const char* name) {
    if (!std::isfinite(static_cast<double>(value))) {
        std::ostringstream msg;
        msg << name << " must be finite, got " << static_cast<double>(value);
        throw DomainError(msg.str());
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Phase-space points

// Configuration-space point (position, velocity).
template <typename Scalar>
struct StatePoint {
    Scalar x{};
    Scalar v{};
};

// Canonical point (position, momentum).
template <typename Scalar>
struct PhasePoint {
    Scalar x{};
    Scalar p{};
};

using StatePointd = StatePoint<double>;
using PhasePointd = PhasePoint<double>;

// ---------------------------------------------------------------------------
// Oscillator parameters

// Parameters of the cubic oscillator  x'' + k x x' + (k^2/9) x^3 + lambda x = 0.
// k = 0 degenerates gracefully to the harmonic oscillator; lambda must stay
// positive (oscillatory regime).
template <typename Scalar>
struct LienardParams {
    Scalar k{};
    Scalar lambda{};

    LienardParams(Scalar k_, Scalar lambda_) : k(k_), lambda(lambda_) {
        detail::require_finite(k, "k");
        detail::require_finite(lambda, "lambda");
        if (!(lambda > Scalar(0))) {
            throw DomainError("lambda must be positive for the oscillatory regime");
        }
    }

    // Angular frequency of the small-amplitude (harmonic) limit.
    Scalar angular_frequency() const {
        using std::sqrt;
        return sqrt(lambda);
    }

    // Period of the harmonic limit; used as the natural time scale.
    Scalar harmonic_period() const {
        return Scalar(2) * Scalar(M_PI) / angular_frequency();
    }
};

using LienardParamsd = LienardParams<double>;

// ---------------------------------------------------------------------------
// Two-branch family with fractional-power Lagrangian

// Quadratic profile  f(x) = a x^2 + b  entering the velocity shift.
template <typename Scalar>
struct QuadraticFn {
    Scalar a{};
    Scalar b{};

    Scalar operator()(Scalar x) const { return a * x * x + b; }
};

using QuadraticFnd = QuadraticFn<double>;

// Family with Lagrangian  C (v + f(x))^((2m+1)/(2m-1)) - delta,
// C = ((1-2m)/(1+2m)) delta^(2/(1-2m)).  The exponent is interpreted with
// the odd-root convention (see signed_pow in type1.hpp), so the family is
// defined for all real v + f(x) except the pole at zero.
template <typename Scalar>
struct TypeIModel {
    Scalar m{};            // exponent parameter, 0 <= m < 1/2
    Scalar delta{};        // energy offset, > 0
    QuadraticFn<Scalar> f{};

    TypeIModel(Scalar m_, Scalar delta_, QuadraticFn<Scalar> f_) : m(m_), delta(delta_), f(f_) {
        detail::require_finite(m, "m");
        detail::require_finite(delta, "delta");
        detail::require_finite(f.a, "f.a");
        detail::require_finite(f.b, "f.b");
        if (!(m >= Scalar(0) && m < Scalar(0.5))) {
            throw DomainError("exponent parameter m must satisfy 0 <= m < 1/2");
        }
        if (!(delta > Scalar(0))) {
            throw DomainError("offset delta must be positive");
        }
    }

    // Lagrangian prefactor C.
    Scalar prefactor() const {
        using std::pow;
        const Scalar one = Scalar(1), two = Scalar(2);
        return (one - two * m) / (one + two * m) * pow(delta, two / (one - two * m));
    }

    // Member of the family whose m = 0 representative reproduces the compact
    // single-branch oscillator Hamiltonian after the momentum shift
    // p -> (2k/3lambda) p - 1.
    static TypeIModel for_oscillator(const LienardParams<Scalar>& osc) {
        if (osc.k == Scalar(0)) {
            throw DegenerateParameter("oscillator specialisation needs k != 0");
        }
        const Scalar d = Scalar(9) * osc.lambda * osc.lambda / (Scalar(2) * osc.k * osc.k);
        return TypeIModel(Scalar(0), d, QuadraticFn<Scalar>{osc.lambda / Scalar(2), d});
    }

    // Member whose Euler-Lagrange flow coincides with the cubic oscillator
    // for every (k, lambda); useful for conservation checks on the general
    // family itself.
    static TypeIModel matched_to(const LienardParams<Scalar>& osc) {
        if (osc.k == Scalar(0)) {
            throw DegenerateParameter("matched family needs k != 0");
        }
        const Scalar d = Scalar(3) * osc.lambda / osc.k;
        return TypeIModel(Scalar(0), d, QuadraticFn<Scalar>{osc.k / Scalar(3), d});
    }
};

using TypeIModeld = TypeIModel<double>;

// ---------------------------------------------------------------------------
// Two-branch family with inverse-first-power Lagrangian

// Family with Lagrangian  (1/s) (B(x) - v)^(-1),  B(x) = (s/3) x^2 + (3/s) lambda.
// Its Euler-Lagrange flow reproduces the cubic oscillator at s = -k; the
// quantised problem requires s > 0.
template <typename Scalar>
struct TypeIIModel {
    Scalar s{};
    Scalar lambda{};

    TypeIIModel(Scalar s_, Scalar lambda_) : s(s_), lambda(lambda_) {
        detail::require_finite(s, "s");
        detail::require_finite(lambda, "lambda");
        if (s == Scalar(0)) {
            throw DegenerateParameter("scale s must be nonzero");
        }
        if (!(lambda > Scalar(0))) {
            throw DomainError("lambda must be positive");
        }
    }

    // Velocity shift  B(x) = (s/3) x^2 + (3/s) lambda.
    Scalar shift(Scalar x) const {
        return s / Scalar(3) * x * x + Scalar(3) / s * lambda;
    }

    // Member matched to the oscillator flow (s = -k).
    static TypeIIModel matched_to(const LienardParams<Scalar>& osc) {
        if (osc.k == Scalar(0)) {
            throw DegenerateParameter("matched family needs k != 0");
        }
        return TypeIIModel(-osc.k, osc.lambda);
    }
};

using TypeIIModeld = TypeIIModel<double>;

}  // namespace branchon
