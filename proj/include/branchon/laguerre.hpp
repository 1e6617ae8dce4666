// Generalised Laguerre polynomials via the stable three-term recurrence
//   (n+1) L_{n+1} = (2n + 1 + alpha - x) L_n - (n + alpha) L_{n-1},
// plus an exponentially weighted variant e^{-x/2} L_n(x) that stays bounded
// for large x and n (the recurrence is linear, so the weight factors through).
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "branchon/errors.hpp"

namespace branchon {

namespace detail {

template <typename Scalar>
void laguerre_recurrence(int n_max, Scalar alpha, Scalar x, Scalar seed, Scalar* out) {
    out[0] = seed;
    if (n_max == 0) return;
    out[1] = (Scalar(1) + alpha - x) * seed;
    for (int n = 1; n < n_max; ++n) {
        out[n + 1] = ((Scalar(2 * n + 1) + alpha - x) * out[n] -
                      (Scalar(n) + alpha) * out[n - 1]) /
                     Scalar(n + 1);
    }
}

}  // namespace detail

// L_n^(alpha)(x).
template <typename Scalar>
Scalar laguerre(int n, Scalar alpha, Scalar x) {
    if (n < 0) throw DomainError("Laguerre degree must be nonnegative");
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values(n + 1);
    detail::laguerre_recurrence(n, alpha, x, Scalar(1), values.data());
    return values[n];
}

// e^{-x/2} L_n^(alpha)(x) for all degrees 0..n_max at once.  Seeding the
// recurrence with e^{-x/2} would underflow once x/2 leaves the exponent
// range, even though the weighted values at large n are still representable
// (the oscillatory region reaches x ~ 4n).  The polynomial recurrence
// therefore runs with a running binary shift, and the weight -- including
// the shift -- is folded back in as each degree is emitted.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> laguerre_weighted_all(int n_max, Scalar alpha, Scalar x) {
    using std::abs;
    using std::exp;
    using std::ldexp;
    using std::log;
    if (n_max < 0) throw DomainError("Laguerre degree must be nonnegative");
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values(n_max + 1);

    const int step = std::numeric_limits<Scalar>::max_exponent / 2;
    const Scalar ceiling = ldexp(Scalar(1), step);
    const Scalar squeeze = ldexp(Scalar(1), -step);

    long shift = 0;                       // scaled L_n = true L_n * 2^{-shift}
    Scalar weight = exp(-x / Scalar(2));  // e^{-x/2} * 2^{shift}, refreshed on rescale

    Scalar prev = 0;
    Scalar cur = 1;  // L_0
    values[0] = cur * weight;
    if (n_max >= 1) {
        prev = cur;
        cur = Scalar(1) + alpha - x;
        values[1] = cur * weight;
    }
    for (int n = 1; n < n_max; ++n) {
        const Scalar next = ((Scalar(2 * n + 1) + alpha - x) * cur -
                             (Scalar(n) + alpha) * prev) /
                            Scalar(n + 1);
        prev = cur;
        cur = next;
        if (abs(cur) > ceiling) {
            cur *= squeeze;
            prev *= squeeze;
            shift += step;
            weight = exp(Scalar(shift) * log(Scalar(2)) - x / Scalar(2));
        }
        values[n + 1] = cur * weight;
    }
    return values;
}

}  // namespace branchon
