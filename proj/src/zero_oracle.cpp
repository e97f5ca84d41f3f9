#include "extremal_zeros/zero_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace extremal_zeros {

const char* to_string(Family f) {
    switch (f) {
        case Family::Jacobi: return "jacobi";
        case Family::Gegenbauer: return "gegenbauer";
        case Family::Laguerre: return "laguerre";
    }
    return "?";
}

namespace {

constexpr int kMaxDegree = 200;
constexpr double kCertifiedError = 1e-13;

struct Tridiag {
    std::vector<double> diag;  // size n
    std::vector<double> sub;   // size n-1, squared off-diagonal entries
};

// Recurrence matrix for the monic Jacobi polynomials.  sub[k-1] holds the
// monic recurrence coefficient b_k (the square of the symmetrized
// off-diagonal), written in the cancelled k = 1 form so alpha + beta = -1
// stays finite.
Tridiag jacobi_matrix(int n, double al, double be) {
    Tridiag m;
    m.diag.resize(n);
    m.sub.resize(n > 1 ? n - 1 : 0);
    const double s = al + be;
    m.diag[0] = (be - al) / (s + 2);
    for (int k = 1; k < n; ++k) {
        const double d = (2 * k + s) * (2 * k + s + 2);
        m.diag[k] = (be - al) * (be + al) / d;
    }
    if (n > 1) m.sub[0] = 4 * (1 + al) * (1 + be) / ((2 + s) * (2 + s) * (3 + s));
    for (int k = 2; k < n; ++k) {
        const double c = 2 * k + s;
        m.sub[k - 1] = 4.0 * k * (k + al) * (k + be) * (k + s) / (c * c * (c + 1) * (c - 1));
    }
    return m;
}

Tridiag laguerre_matrix(int n, double al) {
    Tridiag m;
    m.diag.resize(n);
    m.sub.resize(n > 1 ? n - 1 : 0);
    for (int k = 0; k < n; ++k) m.diag[k] = 2.0 * k + al + 1;
    for (int k = 1; k < n; ++k) m.sub[k - 1] = k * (k + al);
    return m;
}

// Number of eigenvalues strictly below x (LDL^T pivot sign count).
int count_below(const Tridiag& m, double x) {
    constexpr double pivmin = 1e-300;
    int count = 0;
    double q = m.diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < m.diag.size(); ++i) {
        q = (m.diag[i] - x) - m.sub[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0) ++count;
    }
    return count;
}

// Bisect for the eigenvalue of index idx (0-based, ascending) to width tol.
double bisect_eigenvalue(const Tridiag& m, int idx, double lo, double hi, double tol) {
    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(m, mid) >= idx + 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> gershgorin_interval(const Tridiag& m) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    const std::size_t n = m.diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0;
        if (i > 0) r += std::sqrt(m.sub[i - 1]);
        if (i + 1 < n) r += std::sqrt(m.sub[i]);
        lo = std::min(lo, m.diag[i] - r);
        hi = std::max(hi, m.diag[i] + r);
    }
    const double pad = 1e-8 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    return {lo - pad, hi + pad};
}

template <class Eval>
double newton_polish(double x, double lo, double hi, const Eval& f_and_df) {
    long double z = x;
    for (int it = 0; it < 8; ++it) {
        const auto [f, df] = f_and_df(z);
        if (df == 0.0L) break;
        const long double step = f / df;
        const long double next = z - step;
        if (!(next >= lo - (hi - lo) && next <= hi + (hi - lo))) break;
        z = next;
        if (std::abs(step) <= 1e-20L * std::max<long double>(1.0L, std::abs(z))) break;
    }
    return static_cast<double>(z);
}

std::pair<long double, long double> laguerre_value_deriv(int n, long double al, long double x) {
    long double pm1 = 1.0L, dm1 = 0.0L;
    if (n == 0) return {pm1, dm1};
    long double p = al + 1 - x, dp = -1.0L;
    for (int k = 1; k < n; ++k) {
        const long double a = 2 * k + al + 1 - x;
        const long double next = (a * p - (k + al) * pm1) / (k + 1);
        const long double dnext = (a * dp - p - (k + al) * dm1) / (k + 1);
        pm1 = p;
        dm1 = dp;
        p = next;
        dp = dnext;
    }
    return {p, dp};
}

enum class Kind { Jac, Lag };

long double eval_poly_ld(Kind kind, int n, long double p1, long double p2, long double x) {
    if (kind == Kind::Jac) return jacobi_eval_rec<long double>(n, p1, p2, x);
    return laguerre_value_deriv(n, p1, x).first;
}

// Shared driver: bisection, Newton polish, then the sign-change certificate.
std::vector<double> certified_zeros(Kind kind, const Tridiag& m, int n, double p1, double p2,
                                    const std::string& label) {
    const auto [glo, ghi] = gershgorin_interval(m);
    const double tol = 1e-14 * std::max(1.0, std::max(std::abs(glo), std::abs(ghi)));
    std::vector<double> zs(n);
    for (int i = 0; i < n; ++i) {
        const double est = bisect_eigenvalue(m, i, glo, ghi, tol);
        zs[i] = newton_polish(est, glo, ghi, [&](long double z) {
            if (kind == Kind::Jac) {
                const auto d = jacobi_derivatives<long double>(n, p1, p2, z, 1);
                return std::pair<long double, long double>(d[0], d[1]);
            }
            return laguerre_value_deriv(n, p1, z);
        });
    }
    std::sort(zs.begin(), zs.end());
    for (int i = 0; i < n; ++i) {
        const long double lo = eval_poly_ld(kind, n, p1, p2, zs[i] - kCertifiedError);
        const long double hi = eval_poly_ld(kind, n, p1, p2, zs[i] + kCertifiedError);
        if (!(lo * hi < 0.0L))
            throw CertificationError(label + ": sign-change certificate failed at zero " +
                                     std::to_string(i + 1) + " of " + std::to_string(n));
        if (i > 0 && !(zs[i] - zs[i - 1] > 2 * kCertifiedError))
            throw CertificationError(label + ": zeros " + std::to_string(i) + "," +
                                     std::to_string(i + 1) + " not separated");
    }
    return zs;
}

void check_degree_cap(int n) {
    if (n > kMaxDegree) throw DomainError("zero oracle: degree capped at 200");
}

}  // namespace

ZeroSet jacobi_zeros(const JacobiParams<double>& p) {
    check_degree_cap(p.n);
    ZeroSet out;
    out.family = Family::Jacobi;
    out.n = p.n;
    out.param1 = p.alpha;
    out.param2 = p.beta;
    out.certified_abs_error = kCertifiedError;
    out.zeros = certified_zeros(Kind::Jac, jacobi_matrix(p.n, p.alpha, p.beta), p.n, p.alpha,
                                p.beta, "jacobi_zeros");
    return out;
}

ZeroSet gegenbauer_zeros(const GegenbauerParams<double>& g) {
    ZeroSet out = jacobi_zeros(gegenbauer_as_jacobi(g));
    out.family = Family::Gegenbauer;
    out.param1 = g.lambda;
    out.param2 = 0.0;
    return out;
}

ZeroSet laguerre_zeros(const LaguerreParams<double>& l) {
    check_degree_cap(l.n);
    ZeroSet out;
    out.family = Family::Laguerre;
    out.n = l.n;
    out.param1 = l.alpha;
    out.certified_abs_error = kCertifiedError;
    out.zeros = certified_zeros(Kind::Lag, laguerre_matrix(l.n, l.alpha), l.n, l.alpha, 0.0,
                                "laguerre_zeros");
    return out;
}

double largest_transformed_zero(const JacobiParams<double>& p) {
    check_degree_cap(p.n);
    // Largest eigenvalue only, then Newton in the shifted variable.
    const Tridiag m = jacobi_matrix(p.n, p.alpha, p.beta);
    const auto [glo, ghi] = gershgorin_interval(m);
    const double tol = 1e-14 * std::max(1.0, std::max(std::abs(glo), std::abs(ghi)));
    double x = bisect_eigenvalue(m, p.n - 1, glo, ghi, tol);
    x = newton_polish(x, glo, ghi, [&](long double z) {
        const auto d = jacobi_derivatives<long double>(p.n, p.alpha, p.beta, z, 1);
        return std::pair<long double, long double>(d[0], d[1]);
    });

    const auto tp = transformed_coeffs(
        JacobiParams<long double>(p.alpha, p.beta, p.n));
    auto horner = [&](long double z) {
        long double v = 1.0L, dv = 0.0L;
        for (int i = 1; i <= p.n; ++i) {
            dv = dv * z + v;
            v = v * z + (i % 2 != 0 ? -tp.coeffs[i - 1] : tp.coeffs[i - 1]);
        }
        return std::pair<long double, long double>(v, dv);
    };
    long double z = 2.0L / (1.0L - static_cast<long double>(x));
    for (int it = 0; it < 12; ++it) {
        const auto [v, dv] = horner(z);
        if (dv == 0.0L) break;
        const long double step = v / dv;
        z -= step;
        if (std::abs(step) <= 1e-20L * std::abs(z)) break;
    }
    const double zd = static_cast<double>(z);
    if (!(zd > 0) || !std::isfinite(zd))
        throw CertificationError("largest_transformed_zero: refinement left the positive axis");
    return zd;
}

}  // namespace extremal_zeros
