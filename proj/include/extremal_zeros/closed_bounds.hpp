#ifndef EXTREMAL_ZEROS_CLOSED_BOUNDS_HPP
#define EXTREMAL_ZEROS_CLOSED_BOUNDS_HPP

#include <string>

#include "extremal_zeros/poly_core.hpp"

namespace extremal_zeros {

enum class Quantity { OneMinusXnn, OnePlusX1n, OneMinusXnnSq, SmallestLaguerreZero };
enum class Direction { Upper, Lower };

/// Identifiers for the implemented bound catalog; see the README table for
/// the formula behind each code.
enum class BoundSource {
    Thm1E1,
    Thm1E2,
    Thm2E1,
    Thm2E2,
    Thm3,
    Cor1,
    ThmA,
    CorA,
    ThmB,
    ThmC,
    GuptaMuldoon,
    DriverJordaan,
    K2Bound,
};

const char* to_string(Quantity q);
const char* to_string(Direction d);
const char* to_string(BoundSource s);

/// One evaluated bound.  `applicable` records whether the bound is claimed
/// for these parameters; the value is still computed so grids can report
/// coverage instead of throwing.
template <class S>
struct BoundValue {
    S value{};
    Quantity quantity = Quantity::OneMinusXnn;
    Direction direction = Direction::Upper;
    BoundSource source = BoundSource::Thm1E1;
    bool applicable = true;
    std::string reason;  // why not applicable / boundary-case notes
};

/// Upper bound on 1 - x_nn(alpha, beta):
///   4(alpha+1)(alpha+2)(alpha+4) / [(5 alpha+11)(n(n+alpha+beta+1) + (alpha+1)(beta+1)/3)],
/// claimed for n >= 4.
template <class S>
BoundValue<S> thm1_e1(const JacobiParams<S>& p) {
    BoundValue<S> out;
    out.quantity = Quantity::OneMinusXnn;
    out.direction = Direction::Upper;
    out.source = BoundSource::Thm1E1;
    const S a = p.alpha + 1, b = p.beta + 1;
    const S t = S(p.n) * (S(p.n) + p.alpha + p.beta + 1);
    out.value = 4 * a * (a + 1) * (a + 3) / ((5 * a + 6) * (t + a * b / 3));
    if (p.n < 4) {
        out.applicable = false;
        out.reason = "requires n >= 4";
    }
    return out;
}

/// Sharper variant with (alpha+1)(beta+1)/2 in the denominator, claimed when
/// n >= max(4, alpha+beta+3) or beta <= 4 alpha + 7.
template <class S>
BoundValue<S> thm1_e2(const JacobiParams<S>& p) {
    BoundValue<S> out;
    out.quantity = Quantity::OneMinusXnn;
    out.direction = Direction::Upper;
    out.source = BoundSource::Thm1E2;
    const S a = p.alpha + 1, b = p.beta + 1;
    const S t = S(p.n) * (S(p.n) + p.alpha + p.beta + 1);
    out.value = 4 * a * (a + 1) * (a + 3) / ((5 * a + 6) * (t + a * b / 2));
    const bool degree_ok = p.n >= 4 && S(p.n) >= p.alpha + p.beta + 3;
    const bool skew_ok = p.beta <= 4 * p.alpha + 7;
    if (p.n < 4) {
        out.applicable = false;
        out.reason = "requires n >= 4";
    } else if (!degree_ok && !skew_ok) {
        out.applicable = false;
        out.reason = "requires n >= max(4, alpha+beta+3) or beta <= 4 alpha + 7";
    }
    return out;
}

namespace detail {
template <class S>
JacobiParams<S> swapped(const JacobiParams<S>& p) {
    return JacobiParams<S>(p.beta, p.alpha, p.n);
}
template <class S>
BoundValue<S> as_smallest_zero_bound(BoundValue<S> b, BoundSource src) {
    b.quantity = Quantity::OnePlusX1n;
    b.source = src;
    return b;
}
}  // namespace detail

/// Mirror bounds on 1 + x_1n(alpha, beta), obtained from the reflection
/// x_1n(alpha, beta) = -x_nn(beta, alpha) by swapping the parameters.
template <class S>
BoundValue<S> thm2_e1(const JacobiParams<S>& p) {
    return detail::as_smallest_zero_bound(thm1_e1(detail::swapped(p)), BoundSource::Thm2E1);
}

template <class S>
BoundValue<S> thm2_e2(const JacobiParams<S>& p) {
    return detail::as_smallest_zero_bound(thm1_e2(detail::swapped(p)), BoundSource::Thm2E2);
}

/// Upper bound on 1 - x_nn(lambda) for the Gegenbauer polynomial:
///   (2L+1)(2L+3)(2L+7) / [(10L+17)(n(n+2L) + (2L+1)^2/8)],
/// the symmetric specialization of thm1_e2 (exact identity, tested).
template <class S>
BoundValue<S> thm3(const GegenbauerParams<S>& g) {
    BoundValue<S> out;
    out.quantity = Quantity::OneMinusXnn;
    out.direction = Direction::Upper;
    out.source = BoundSource::Thm3;
    const S L2 = 2 * g.lambda;
    const S nn = S(g.n) * (S(g.n) + L2);
    out.value = (L2 + 1) * (L2 + 3) * (L2 + 7) / ((5 * L2 + 17) * (nn + (L2 + 1) * (L2 + 1) / 8));
    if (g.n < 4) {
        out.applicable = false;
        out.reason = "requires n >= 4";
    }
    return out;
}

/// Upper bound on 1 - x_nn(lambda)^2: exactly twice thm3, via
/// 1 - x^2 < 2(1 - x) on (-1, 1).
template <class S>
BoundValue<S> cor1(const GegenbauerParams<S>& g) {
    BoundValue<S> out = thm3(g);
    out.quantity = Quantity::OneMinusXnnSq;
    out.source = BoundSource::Cor1;
    out.value = 2 * out.value;
    return out;
}

/// Earlier upper bound on 1 - x_nn(alpha, beta), claimed for n >= 3:
///   2(alpha+1)(alpha+3) / {(n+alpha+1)(n+alpha+beta+1) [2 - (alpha+1)(2n+beta-1) /
///   ((n+alpha+1)(n+alpha+beta+1) - (alpha+1)(alpha+2))]}.
template <class S>
BoundValue<S> thm_a(const JacobiParams<S>& p) {
    BoundValue<S> out;
    out.quantity = Quantity::OneMinusXnn;
    out.direction = Direction::Upper;
    out.source = BoundSource::ThmA;
    const S a1 = p.alpha + 1;
    const S big = (S(p.n) + p.alpha + 1) * (S(p.n) + p.alpha + p.beta + 1);
    out.value = 2 * a1 * (a1 + 2) /
                (big * (2 - a1 * (2 * S(p.n) + p.beta - 1) / (big - a1 * (a1 + 1))));
    if (p.n < 3) {
        out.applicable = false;
        out.reason = "requires n >= 3";
    }
    return out;
}

/// Symmetric case of thm_a for the Gegenbauer polynomial, n >= 3:
///   (2L+1)(2L+5) / {(n+2L)(2n+2L+1) [2 - (2L+1)(4n+2L-3) /
///   (2(n+2L)(2n+2L+1) - (2L+1)(2L+3))]}.
template <class S>
BoundValue<S> cor_a(const GegenbauerParams<S>& g) {
    BoundValue<S> out;
    out.quantity = Quantity::OneMinusXnn;
    out.direction = Direction::Upper;
    out.source = BoundSource::CorA;
    const S L2 = 2 * g.lambda;
    const S big = (S(g.n) + L2) * (2 * S(g.n) + L2 + 1);
    out.value = (L2 + 1) * (L2 + 5) /
                (big * (2 - (L2 + 1) * (4 * S(g.n) + L2 - 3) / (2 * big - (L2 + 1) * (L2 + 3))));
    if (g.n < 3) {
        out.applicable = false;
        out.reason = "requires n >= 3";
    }
    return out;
}

/// Upper bound on 1 - x_nn(lambda)^2, claimed for n >= 3:
///   (2L+1)(2L+5) / [2n(n+2L) + 2L+1 + 2(L+1)(2L+1)^2(2L+3)/(n(n+2L) + 2(2L+1)(2L+3))].
template <class S>
BoundValue<S> thm_b(const GegenbauerParams<S>& g) {
    BoundValue<S> out;
    out.quantity = Quantity::OneMinusXnnSq;
    out.direction = Direction::Upper;
    out.source = BoundSource::ThmB;
    const S L2 = 2 * g.lambda;
    const S nn = S(g.n) * (S(g.n) + L2);
    out.value = (L2 + 1) * (L2 + 5) /
                (2 * nn + L2 + 1 +
                 (L2 + 2) * (L2 + 1) * (L2 + 1) * (L2 + 3) / (nn + 2 * (L2 + 1) * (L2 + 3)));
    if (g.n < 3) {
        out.applicable = false;
        out.reason = "requires n >= 3";
    }
    return out;
}

/// Lower bound on 1 - x_nn(lambda)^2 (equivalently an upper bound on the
/// zero itself):  (2L+1)(2L+9) / [4n(n+2L) + (2L+1)(2L+5)].
/// At n = 1 the bound is attained (both sides equal 1).
template <class S>
BoundValue<S> thm_c(const GegenbauerParams<S>& g) {
    BoundValue<S> out;
    out.quantity = Quantity::OneMinusXnnSq;
    out.direction = Direction::Lower;
    out.source = BoundSource::ThmC;
    const S L2 = 2 * g.lambda;
    out.value = (L2 + 1) * (L2 + 9) / (4 * S(g.n) * (S(g.n) + L2) + (L2 + 1) * (L2 + 5));
    if (g.n == 1) out.reason = "n=1 boundary: bound attained, not strict";
    return out;
}

/// Upper bound on the smallest Laguerre zero x_1n(alpha):
///   (alpha+1)(alpha+2)(alpha+4)(2n+alpha+1) / [(5 alpha+11) n(n+alpha+1) + (alpha+1)^2(alpha+2)].
/// At n = 1, alpha = 0 the bound equals the zero exactly (boundary case).
template <class S>
BoundValue<S> gupta_muldoon(const LaguerreParams<S>& l) {
    BoundValue<S> out;
    out.quantity = Quantity::SmallestLaguerreZero;
    out.direction = Direction::Upper;
    out.source = BoundSource::GuptaMuldoon;
    const S a = l.alpha + 1;
    out.value = a * (a + 1) * (a + 3) * (2 * S(l.n) + a) /
                ((5 * a + 6) * S(l.n) * (S(l.n) + a) + a * a * (a + 1));
    if (l.n == 1) out.reason = "n=1 boundary: bound may be attained";
    return out;
}

/// Upper bound 2(alpha+1)(alpha+3) / [2n(n+alpha+beta+1) + (alpha+1)(alpha+beta+2)], n >= 3.
template <class S>
BoundValue<S> driver_jordaan(const JacobiParams<S>& p) {
    BoundValue<S> out;
    out.quantity = Quantity::OneMinusXnn;
    out.direction = Direction::Upper;
    out.source = BoundSource::DriverJordaan;
    const S a1 = p.alpha + 1;
    const S t = S(p.n) * (S(p.n) + p.alpha + p.beta + 1);
    out.value = 2 * a1 * (a1 + 2) / (2 * t + a1 * (p.alpha + p.beta + 2));
    if (p.n < 3) {
        out.applicable = false;
        out.reason = "requires n >= 3";
    }
    return out;
}

/// The weaker order-2 estimate 2(alpha+1)(alpha+3) / [2n(n+alpha+beta+1) + (alpha+1)(beta+1)].
template <class S>
BoundValue<S> k2_bound(const JacobiParams<S>& p) {
    BoundValue<S> out;
    out.quantity = Quantity::OneMinusXnn;
    out.direction = Direction::Upper;
    out.source = BoundSource::K2Bound;
    const S a1 = p.alpha + 1;
    const S t = S(p.n) * (S(p.n) + p.alpha + p.beta + 1);
    out.value = 2 * a1 * (a1 + 2) / (2 * t + a1 * (p.beta + 1));
    if (p.n < 3) {
        out.applicable = false;
        out.reason = "requires n >= 3";
    }
    return out;
}

/// Factorization of the ratio cor1 / thm_c as rho(lambda) * phi(lambda, n):
///   rho = 8(2L+3)(2L+7) / [(2L+9)(10L+17)]   (increases from 1 toward 1.6),
///   phi = [n(n+2L) + (2L+1)(2L+5)/4] / [n(n+2L) + (2L+1)^2/8]  (-> 1 as n grows).
template <class S>
struct RatioDecomposition {
    S rho{};
    S phi{};
    S r{};
};

template <class S>
RatioDecomposition<S> ratio_decomposition(const GegenbauerParams<S>& g) {
    RatioDecomposition<S> out;
    const S L2 = 2 * g.lambda;
    const S nn = S(g.n) * (S(g.n) + L2);
    out.rho = 8 * (L2 + 3) * (L2 + 7) / ((L2 + 9) * (5 * L2 + 17));
    out.phi = (nn + (L2 + 1) * (L2 + 5) / 4) / (nn + (L2 + 1) * (L2 + 1) / 8);
    out.r = out.rho * out.phi;
    return out;
}

}  // namespace extremal_zeros

#endif
