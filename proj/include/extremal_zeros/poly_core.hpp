#ifndef EXTREMAL_ZEROS_POLY_CORE_HPP
#define EXTREMAL_ZEROS_POLY_CORE_HPP

#include <cmath>
#include <vector>

#include "extremal_zeros/numeric.hpp"

namespace extremal_zeros {

/// Jacobi weight parameters (alpha, beta > -1) and the polynomial degree.
template <class S>
struct JacobiParams {
    S alpha;
    S beta;
    int n;

    JacobiParams(S alpha_, S beta_, int n_)
        : alpha(std::move(alpha_)), beta(std::move(beta_)), n(n_) {
        if (n < 1) throw DomainError("jacobi: degree must be >= 1");
        if (!(alpha > S(-1)) || !(beta > S(-1)))
            throw DomainError("jacobi: weight exponents must exceed -1");
    }
};

template <class S>
struct GegenbauerParams {
    S lambda;
    int n;

    GegenbauerParams(S lambda_, int n_) : lambda(std::move(lambda_)), n(n_) {
        if (n < 1) throw DomainError("gegenbauer: degree must be >= 1");
        if (!(2 * lambda > S(-1)))
            throw DomainError("gegenbauer: lambda must exceed -1/2");
    }
};

template <class S>
struct LaguerreParams {
    S alpha;
    int n;

    LaguerreParams(S alpha_, int n_) : alpha(std::move(alpha_)), n(n_) {
        if (n < 1) throw DomainError("laguerre: degree must be >= 1");
        if (!(alpha > S(-1))) throw DomainError("laguerre: alpha must exceed -1");
    }
};

/// Monic polynomial in the shifted variable z = 2/(1-x), written
///   z^n - c_1 z^(n-1) + c_2 z^(n-2) - ... + (-1)^n c_n,
/// whose zeros are z_i = 2/(1 - x_i) with x_i the Jacobi zeros.  All c_i are
/// positive, so the z-zeros are real and positive.  Also carries the shorthand
/// a = alpha+1, b = beta+1, t = n(n+alpha+beta+1) used by the closed forms.
template <class S>
struct TransformedPoly {
    int n = 0;
    std::vector<S> coeffs;  // c_1..c_n
    S a{}, b{}, t{};
};

/// Coefficients c_i = C(n,i) * (n+alpha+beta+1)_i / (alpha+1)_i, built by
/// iterative multiplication (exact in the rational path).  The float path
/// rejects alpha within 1e-8 of -1, where later a^4 denominators make
/// double evaluation meaningless.
template <class S>
TransformedPoly<S> transformed_coeffs(const JacobiParams<S>& p) {
    if constexpr (std::is_floating_point_v<S>) {
        if (p.alpha < S(-1) + S(1e-8))
            throw DomainError("transformed_coeffs: alpha too close to -1 for the float path");
    }
    TransformedPoly<S> out;
    out.n = p.n;
    out.a = p.alpha + 1;
    out.b = p.beta + 1;
    out.t = S(p.n) * (S(p.n) + p.alpha + p.beta + 1);
    out.coeffs.reserve(p.n);
    S c(1);
    const S rise = S(p.n) + p.alpha + p.beta;  // (n+alpha+beta+1)_i factor base - 1
    for (int i = 1; i <= p.n; ++i) {
        c *= S(p.n - i + 1);
        c /= S(i);
        c *= rise + S(i);        // n+alpha+beta+i
        c /= p.alpha + S(i);     // alpha+i
        if (!(c > S(0))) throw InternalError("transformed_coeffs: nonpositive coefficient");
        out.coeffs.push_back(c);
    }
    return out;
}

/// Value of the degree-n Jacobi polynomial by the standard three-term
/// recurrence.  F is a floating type; used directly by the zero oracle.
template <class F>
F jacobi_eval_rec(int n, F al, F be, F x) {
    if (n == 0) return F(1);
    F pm1 = F(1);
    F p = (al + be + 2) * x / 2 + (al - be) / 2;
    for (int k = 2; k <= n; ++k) {
        const F k2 = 2 * F(k) + al + be;
        const F denom = 2 * F(k) * (F(k) + al + be) * (k2 - 2);
        const F a1 = (k2 - 1) * k2 * (k2 - 2) / denom;
        const F a2 = (k2 - 1) * (al * al - be * be) / denom;
        const F a3 = 2 * (F(k) + al - 1) * (F(k) + be - 1) * k2 / denom;
        const F next = (a1 * x + a2) * p - a3 * pm1;
        pm1 = p;
        p = next;
    }
    return p;
}

inline double jacobi_eval_recurrence(const JacobiParams<double>& p, double x) {
    return jacobi_eval_rec<double>(p.n, p.alpha, p.beta, x);
}

/// Value and first `order` derivatives at x, by differentiating the
/// recurrence (forward mode); out[j] = d^j/dx^j P_n.
template <class F>
std::vector<F> jacobi_derivatives(int n, F al, F be, F x, int order) {
    std::vector<F> pm1(order + 1, F(0)), p(order + 1, F(0)), next(order + 1);
    pm1[0] = F(1);
    if (n == 0) return pm1;
    p[0] = (al + be + 2) * x / 2 + (al - be) / 2;
    if (order >= 1) p[1] = (al + be + 2) / 2;
    for (int k = 2; k <= n; ++k) {
        const F k2 = 2 * F(k) + al + be;
        const F denom = 2 * F(k) * (F(k) + al + be) * (k2 - 2);
        const F a1 = (k2 - 1) * k2 * (k2 - 2) / denom;
        const F a2 = (k2 - 1) * (al * al - be * be) / denom;
        const F a3 = 2 * (F(k) + al - 1) * (F(k) + be - 1) * k2 / denom;
        for (int j = 0; j <= order; ++j) {
            next[j] = (a1 * x + a2) * p[j] - a3 * pm1[j];
            if (j > 0) next[j] += F(j) * a1 * p[j - 1];
        }
        std::swap(pm1, p);
        std::swap(p, next);
    }
    return p;
}

/// Terminating hypergeometric form: (alpha+1)_n / n! times the series in
/// (1-x)/2, which stops after n+1 terms.  Accepts n = 0 (empty series).
inline double jacobi_eval_hyp(int n, double al, double be, double x) {
    const double u = (1.0 - x) / 2.0;
    double prefactor = 1.0;
    for (int j = 1; j <= n; ++j) prefactor *= (al + j) / j;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= n; ++k) {
        term *= static_cast<double>(-(n - k + 1)) * (n + al + be + k) / ((al + k) * k) * u;
        sum += term;
    }
    return prefactor * sum;
}

inline double jacobi_eval_hypergeometric(const JacobiParams<double>& p, double x) {
    return jacobi_eval_hyp(p.n, p.alpha, p.beta, x);
}

/// Inverse of the zero map: z = 2/(1-x)  =>  x = 1 - 2/z, strictly
/// increasing on z > 0.
inline double map_zero_back(double z) {
    if (!(z > 0)) throw DomainError("map_zero_back: requires z > 0");
    return 1.0 - 2.0 / z;
}

/// The Gegenbauer polynomial is a positive multiple of the symmetric Jacobi
/// polynomial with alpha = beta = lambda - 1/2; zeros coincide.
template <class S>
JacobiParams<S> gegenbauer_as_jacobi(const GegenbauerParams<S>& g) {
    S al = g.lambda - S(1) / S(2);
    return JacobiParams<S>(al, al, g.n);
}

}  // namespace extremal_zeros

#endif
