#ifndef EXTREMAL_ZEROS_EULER_RAYLEIGH_HPP
#define EXTREMAL_ZEROS_EULER_RAYLEIGH_HPP

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "extremal_zeros/power_sums.hpp"

namespace extremal_zeros {

/// Largest double <= v.
inline double double_at_most(const Rational& v) {
    double d = v.convert_to<double>();
    if (!std::isfinite(d)) return d;
    while (Rational(d) > v) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
    for (;;) {
        const double up = std::nextafter(d, std::numeric_limits<double>::infinity());
        if (std::isfinite(up) && Rational(up) <= v)
            d = up;
        else
            break;
    }
    return d;
}

/// Smallest double >= v.
inline double double_at_least(const Rational& v) {
    double d = v.convert_to<double>();
    if (!std::isfinite(d)) return d;
    while (Rational(d) < v) d = std::nextafter(d, std::numeric_limits<double>::infinity());
    for (;;) {
        const double down = std::nextafter(d, -std::numeric_limits<double>::infinity());
        if (Rational(down) >= v)
            d = down;
        else
            break;
    }
    return d;
}

/// Tightest double u with u^k >= p, for p > 0.  The k-th root is taken in
/// 30-digit floating arithmetic, then certified upward in exact arithmetic,
/// so the result is a true upper value for the k-th root of p.
inline double kth_root_upper(const Rational& p, int k) {
    if (!(p > 0) || k < 1) throw DomainError("kth_root_upper: requires p > 0, k >= 1");
    const HighFloat hf = pow(HighFloat(p), HighFloat(1) / k);
    double d = hf.convert_to<double>();
    while (!(pow_int(Rational(d), k) >= p))
        d = std::nextafter(d, std::numeric_limits<double>::infinity());
    for (;;) {
        const double down = std::nextafter(d, 0.0);
        if (down > 0 && pow_int(Rational(down), k) >= p)
            d = down;
        else
            break;
    }
    return d;
}

/// Two-sided bracketing data for the largest zero z_n of a positive-rooted
/// monic polynomial: lower_seq[k-1] = p_k / p_{k-1} increases to z_n and
/// upper_seq[k-1] = p_k^(1/k) decreases to z_n.  The derived enclosure of
/// 1 - x_nn is [lower_1mx, upper_1mx] = [2/u_K, 2 p_K / p_(K+1)], with the
/// float ends rounded outward.
template <class S>
struct RayleighBracket {
    std::vector<S> lower_seq;       // l_1..l_K, exact in the rational path
    std::vector<double> upper_seq;  // u_1..u_K, certified upper values
    int k_used = 0;
    double lower_1mx = 0.0;  // rounded down
    S upper_1mx{};           // exact in the rational path
};

template <class S>
RayleighBracket<S> rayleigh_sequences(const TransformedPoly<S>& P, int K) {
    if (K < 1) throw DomainError("rayleigh_sequences: K must be >= 1");
    const PowerSums<S> ps = newton_power_sums(P, K + 1);
    for (int k = 0; k <= K + 1; ++k)
        if (!(ps.values[k] > S(0)))
            throw InternalError("rayleigh_sequences: nonpositive power sum (invalid input polynomial)");

    RayleighBracket<S> out;
    out.k_used = K;
    out.lower_seq.reserve(K);
    out.upper_seq.reserve(K);
    for (int k = 1; k <= K; ++k) {
        out.lower_seq.push_back(ps.values[k] / ps.values[k - 1]);
        if constexpr (std::is_floating_point_v<S>) {
            double u = std::pow(static_cast<double>(ps.values[k]), 1.0 / k);
            u = std::nextafter(std::nextafter(u, HUGE_VAL), HUGE_VAL);  // nudge upward
            out.upper_seq.push_back(u);
        } else {
            out.upper_seq.push_back(kth_root_upper(ps.values[k], k));
        }
    }
    out.upper_1mx = 2 * ps.values[K] / ps.values[K + 1];
    if constexpr (std::is_floating_point_v<S>) {
        double l = 2.0 / out.upper_seq.back();
        out.lower_1mx = std::nextafter(std::nextafter(l, 0.0), 0.0);
    } else {
        out.lower_1mx = double_at_most(Rational(2) / Rational(out.upper_seq.back()));
    }
    return out;
}

/// Open interval certified to contain 1 - x_nn(alpha, beta), from the
/// order-k ratio and root of the power sums; both ends rounded outward.
template <class S>
std::pair<double, double> extreme_zero_bracket(const JacobiParams<S>& p, int k) {
    const auto bracket = rayleigh_sequences(transformed_coeffs(p), k);
    double hi;
    if constexpr (std::is_floating_point_v<S>)
        hi = std::nextafter(std::nextafter(bracket.upper_1mx, HUGE_VAL), HUGE_VAL);
    else
        hi = double_at_least(bracket.upper_1mx);
    return {bracket.lower_1mx, hi};
}

}  // namespace extremal_zeros

#endif
