// Symmetric tridiagonal eigenvalue tools built on the Sturm-sequence count:
// bisection for the lowest eigenvalues (each to nearly machine precision) and
// shifted inverse iteration for the corresponding eigenvectors.  This keeps
// the grid discretisation path independent of the dense-matrix path, which
// uses Eigen's SelfAdjointEigenSolver instead.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "branchon/errors.hpp"

namespace branchon {

struct SymTridiagonal {
    Eigen::VectorXd diag;  // n entries
    Eigen::VectorXd off;   // n - 1 entries

    Eigen::Index size() const { return diag.size(); }

    void validate() const {
        if (diag.size() < 2) throw DomainError("tridiagonal matrix needs dimension >= 2");
        if (off.size() != diag.size() - 1) {
            throw DomainError("off-diagonal length must be dimension - 1");
        }
        if (!diag.allFinite() || !off.allFinite()) {
            throw DomainError("tridiagonal entries must be finite");
        }
    }

    Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
        const Eigen::Index n = diag.size();
        Eigen::VectorXd y = diag.cwiseProduct(x);
        y.head(n - 1) += off.cwiseProduct(x.tail(n - 1));
        y.tail(n - 1) += off.cwiseProduct(x.head(n - 1));
        return y;
    }
};

// Number of eigenvalues strictly below x (Sturm sequence with the usual
// safeguarded pivot).
inline Eigen::Index count_eigenvalues_below(const SymTridiagonal& m, double x) {
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    Eigen::Index count = 0;
    double q = m.diag[0] - x;
    if (q < 0) ++count;
    for (Eigen::Index i = 1; i < m.size(); ++i) {
        if (q == 0.0) q = tiny;
        q = m.diag[i] - x - m.off[i - 1] * m.off[i - 1] / q;
        if (q < 0) ++count;
    }
    return count;
}

// The k smallest eigenvalues by bisection inside the Gershgorin enclosure.
inline Eigen::VectorXd smallest_eigenvalues(const SymTridiagonal& m, Eigen::Index k) {
    m.validate();
    if (k < 1 || k > m.size()) throw DomainError("eigenvalue count out of range");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const double left = i > 0 ? std::abs(m.off[i - 1]) : 0.0;
        const double right = i + 1 < m.size() ? std::abs(m.off[i]) : 0.0;
        lo = std::min(lo, m.diag[i] - left - right);
        hi = std::max(hi, m.diag[i] + left + right);
    }

    const double eps = std::numeric_limits<double>::epsilon();
    Eigen::VectorXd values(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        double a = lo, b = hi;
        // invariant: count(a) <= j < count(b)
        while (b - a > 2.0 * eps * std::max(std::abs(a), std::abs(b)) + 1e-300) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            if (count_eigenvalues_below(m, mid) > j) {
                b = mid;
            } else {
                a = mid;
            }
        }
        values[j] = 0.5 * (a + b);
        lo = values[j];  // eigenvalues are ordered; restart above the last one
    }
    return values;
}

// Eigenvector for an isolated eigenvalue by two rounds of shifted inverse
// iteration; the tridiagonal solve uses partial pivoting (three-band upper
// factor).  Result is normalised to unit Euclidean length with a positive
// first significant component.
inline Eigen::VectorXd tridiagonal_eigenvector(const SymTridiagonal& m, double eigenvalue) {
    m.validate();
    const Eigen::Index n = m.size();
    const double scale = m.diag.cwiseAbs().maxCoeff() + m.off.cwiseAbs().maxCoeff();
    // keep the shifted matrix safely nonsingular
    const double shift = eigenvalue + 16.0 * std::numeric_limits<double>::epsilon() * scale;

    // factor (M - shift I) = L U once, with partial pivoting
    Eigen::VectorXd du0(n), du1(n), du2(n);
    Eigen::VectorXd mult(n);
    Eigen::Matrix<bool, Eigen::Dynamic, 1> swapped(n);
    {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(n);  // sub
        Eigen::VectorXd b = m.diag.array() - shift;    // main
        Eigen::VectorXd c = Eigen::VectorXd::Zero(n);  // super
        a.tail(n - 1) = m.off;
        c.head(n - 1) = m.off;
        for (Eigen::Index i = 0; i < n - 1; ++i) {
            if (std::abs(a[i + 1]) > std::abs(b[i])) {
                swapped[i] = true;
                std::swap(b[i], a[i + 1]);
                const double tmp_c = c[i];
                c[i] = b[i + 1];
                b[i + 1] = tmp_c;
                du2[i] = i + 2 < n ? c[i + 1] : 0.0;
                if (i + 2 < n) c[i + 1] = 0.0;
            } else {
                swapped[i] = false;
                du2[i] = 0.0;
            }
            if (b[i] == 0.0) b[i] = 1e-300;
            const double l = a[i + 1] / b[i];
            mult[i] = l;
            b[i + 1] -= l * c[i];
            if (i + 2 < n && du2[i] != 0.0) c[i + 1] -= l * du2[i];
            du0[i] = b[i];
            du1[i] = c[i];
        }
        if (b[n - 1] == 0.0) b[n - 1] = 1e-300;
        du0[n - 1] = b[n - 1];
        du1[n - 1] = 0.0;
        du2[n - 1] = 0.0;
        swapped[n - 1] = false;
    }

    const auto solve = [&](Eigen::VectorXd rhs) {
        for (Eigen::Index i = 0; i < n - 1; ++i) {
            if (swapped[i]) std::swap(rhs[i], rhs[i + 1]);
            rhs[i + 1] -= mult[i] * rhs[i];
        }
        Eigen::VectorXd y(n);
        y[n - 1] = rhs[n - 1] / du0[n - 1];
        if (n >= 2) y[n - 2] = (rhs[n - 2] - du1[n - 2] * y[n - 1]) / du0[n - 2];
        for (Eigen::Index i = n - 3; i >= 0; --i) {
            y[i] = (rhs[i] - du1[i] * y[i + 1] - du2[i] * y[i + 2]) / du0[i];
        }
        return y;
    };

    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    for (Eigen::Index i = 0; i < n; i += 2) v[i] = -v[i];  // break symmetry cheaply
    v.normalize();
    for (int round = 0; round < 3; ++round) {
        v = solve(v);
        const double norm = v.norm();
        if (!(norm > 0) || !std::isfinite(norm)) {
            throw NumericalError("inverse iteration collapsed; eigenvalue may be defective");
        }
        v /= norm;
    }
    // sign convention: first component of nontrivial size is positive
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(v[i]) > 1e-8) {
            if (v[i] < 0) v = -v;
            break;
        }
    }
    return v;
}

}  // namespace branchon
