#ifndef EXTREMAL_ZEROS_POWER_SUMS_HPP
#define EXTREMAL_ZEROS_POWER_SUMS_HPP

#include <type_traits>
#include <vector>

#include "extremal_zeros/poly_core.hpp"

namespace extremal_zeros {

/// Power sums p_k = sum of k-th powers of a monic polynomial's zeros,
/// values[k] = p_k for k = 0..K, with p_0 = degree.
template <class S>
struct PowerSums {
    int degree = 0;
    std::vector<S> values;
};

/// p_1..p_K from the coefficients via the Newton identity
///   p_r + sum_{i=1}^{min(r-1,n)} (-1)^i p_{r-i} c_i + (-1)^r r c_r = 0,
/// with c_r = 0 for r > n.  Exact when the coefficients are exact; the float
/// path uses compensated accumulation since the terms alternate in sign.
template <class S>
PowerSums<S> newton_power_sums(const TransformedPoly<S>& P, int K) {
    if (K < 1) throw DomainError("newton_power_sums: K must be >= 1");
    PowerSums<S> out;
    out.degree = P.n;
    out.values.reserve(K + 1);
    out.values.push_back(S(P.n));
    for (int r = 1; r <= K; ++r) {
        S sum(0);
        [[maybe_unused]] S comp(0);  // Kahan carry, float path only
        const int imax = std::min(r - 1, P.n);
        for (int i = 1; i <= imax; ++i) {
            S term = out.values[r - i] * P.coeffs[i - 1];
            if (i % 2 != 0) term = -term;
            if constexpr (std::is_floating_point_v<S>) {
                const S y = term - comp;
                const S t = sum + y;
                comp = (t - sum) - y;
                sum = t;
            } else {
                sum += term;
            }
        }
        if (r <= P.n) {
            S tail = S(r) * P.coeffs[r - 1];
            if (r % 2 != 0) tail = -tail;
            sum += tail;
        }
        out.values.push_back(-sum);
    }
    return out;
}

/// Closed forms for p_r, r = 1..4, in terms of a = alpha+1, b = beta+1,
/// t = n(n+alpha+beta+1).  Valid for degree n >= r.
template <class S>
S closed_form_p(int r, const S& a, const S& b, const S& t) {
    if (!(a > S(0) && b > S(0) && t > S(0)))
        throw DomainError("closed_form_p: requires a, b, t > 0");
    switch (r) {
        case 1:
            return t / a;
        case 2:
            return t * (t + a * (a + b)) / (a * a * (a + 1));
        case 3: {
            const S q2 = 2 * t * t + a * (2 * a + 3 * b) * t + a * a * (a + b) * (a + b + 1);
            return t * q2 / (a * a * a * (a + 1) * (a + 2));
        }
        case 4: {
            const S q3 = (5 * a + 6) * t * t * t +
                         2 * a * (3 * a * a + 5 * a * b + 4 * a + 6 * b) * t * t +
                         a * a *
                             (3 * a * a * a + 9 * a * a * b + 6 * a * b * b + 6 * a * a +
                              15 * a * b + 7 * b * b + 2 * a + 4 * b) *
                             t +
                         a * a * a * (a + 1) * (a + b) * (a + b + 1) * (a + b + 2);
            return t * q3 / (a * a * a * a * (a + 1) * (a + 1) * (a + 2) * (a + 3));
        }
        default:
            throw DomainError("closed_form_p: r must be in 1..4");
    }
}

/// p_r, r = 1..4, straight from the leading coefficients (degree n >= r):
///   p_1 = c_1;  p_2 = c_1^2 - 2 c_2;  p_3 = c_1^3 - 3 c_1 c_2 + 3 c_3;
///   p_4 = c_1^4 - 4 c_1^2 c_2 + 2 c_2^2 + 4 c_1 c_3 - 4 c_4.
template <class S>
S lemma1_power_sum(int r, const std::vector<S>& c) {
    if (r < 1 || r > 4) throw DomainError("lemma1_power_sum: r must be in 1..4");
    if (static_cast<int>(c.size()) < r)
        throw DomainError("lemma1_power_sum: needs degree >= r coefficients");
    const S& c1 = c[0];
    switch (r) {
        case 1:
            return c1;
        case 2:
            return c1 * c1 - 2 * c[1];
        case 3:
            return c1 * c1 * c1 - 3 * c1 * c[1] + 3 * c[2];
        default:
            return c1 * c1 * c1 * c1 - 4 * c1 * c1 * c[1] + 2 * c[1] * c[1] + 4 * c1 * c[2] -
                   4 * c[3];
    }
}

}  // namespace extremal_zeros

#endif
