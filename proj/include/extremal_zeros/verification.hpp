#ifndef EXTREMAL_ZEROS_VERIFICATION_HPP
#define EXTREMAL_ZEROS_VERIFICATION_HPP

#include <string>
#include <vector>

#include "extremal_zeros/closed_bounds.hpp"
#include "extremal_zeros/report.hpp"
#include "extremal_zeros/zero_oracle.hpp"

namespace extremal_zeros {

/// Dense polynomial in t with exact rational coefficients, ascending powers.
using RatPoly = std::vector<Rational>;

Rational eval_poly(const RatPoly& c, const Rational& t);
RatPoly poly_add(const RatPoly& x, const RatPoly& y);
RatPoly poly_sub(const RatPoly& x, const RatPoly& y);
RatPoly poly_mul(const RatPoly& x, const RatPoly& y);
RatPoly poly_scale(const RatPoly& x, const Rational& c);

/// The quadratic/cubic factors of the order-3 and order-4 power sums:
///   q2(t) = 2t^2 + a(2a+3b)t + a^2(a+b)(a+b+1)
///   q3(t) = (5a+6)t^3 + ... (cubic)
/// and the auxiliary quadratics r2, s2 appearing in the reduction of
/// 2 q3 - (5a+6)(t + ab/3) q2 and 2 q3 - (5a+6)(t + ab/2) q2.
RatPoly q2_poly(const Rational& a, const Rational& b);
RatPoly q3_poly(const Rational& a, const Rational& b);
RatPoly r2_poly(const Rational& a, const Rational& b);
RatPoly s2_poly(const Rational& a, const Rational& b);

enum class IdentityKind { R2, S2 };

/// Outcome of one exact identity check: the residual polynomial (must vanish
/// coefficient-wise) and the minimum of the auxiliary quadratic over the
/// tested t-range (must be positive where claimed).
struct ProofIdentityReport {
    IdentityKind identity = IdentityKind::R2;
    Rational a, b;
    RatPoly residual_coeffs;
    Rational positivity_witness;
};

/// Checks 2 q3 - (5a+6)(t + ab/3) q2 == (a/3) r2 exactly, and r2 > 0 on
/// t = n(n+a+b-1) for n = 4..40.  Throws IdentityError on any violation.
ProofIdentityReport verify_identity_r2(const Rational& a, const Rational& b);

/// Checks 2 q3 - (5a+6)(t + ab/2) q2 == (a^2 (a+2)/2) s2 exactly, and s2 > 0
/// under each of its two hypotheses:
///   (i)  b <= 4a+4 with t >= 4(a+b+3);
///   (ii) t >= 2(a+b)(a+b+1).
ProofIdentityReport verify_identity_s2(const Rational& a, const Rational& b);

/// Derivative inequality at the largest Gegenbauer zero x0:
///   3(n-2) f''(x0)^2 - 4(n-1) f'(x0) f'''(x0) >= 0
/// for the real-rooted f = P_n(lambda).  `normalized` divides by the larger
/// term magnitude; `ok` allows -1e-9 slack.
struct DerivativeInequalityResult {
    double lhs = 0.0;
    double normalized = 0.0;
    bool ok = false;
};

DerivativeInequalityResult laguerre_inequality_check(const GegenbauerParams<double>& g);

/// The order-m nonnegative derivative sum for a real-rooted polynomial f:
///   sum_{j=0}^{2m} (-1)^(m+j) C(2m,j) (n-j)!(n-2m+j)! / [(n-m)!(n-2m)!]
///   f^(j)(x) f^(2m-j)(x)  >= 0  for all real x, 0 <= 2m <= n.
/// m = 2 reduces to the inequality above (times 2(n-3)) at zeros of f.
DerivativeInequalityResult foster_krasikov_check(const JacobiParams<double>& p, int m, double x);

/// Convergence of beta/z_n toward the smallest Laguerre zero x_1n(alpha)
/// along increasing beta values (z_n from the cancellation-free oracle path).
struct LimitCheckRow {
    double beta = 0.0;
    double approx = 0.0;  // beta / z_n
    double abs_err = 0.0;
};

struct LimitCheckReport {
    std::vector<LimitCheckRow> rows;
    std::vector<double> error_ratios;  // err_i / err_(i+1)
    double final_rel_err = 0.0;
    bool monotone = false;
    bool ok = false;  // monotone and final relative error < 1%
};

LimitCheckReport laguerre_limit_check(const LaguerreParams<double>& l,
                                      const std::vector<double>& beta_values);

/// Exact evaluation of the large-beta limit identity behind the smallest
/// Laguerre zero bound: b q2(t)/q3(t) at b = beta+1 against its closed-form
/// limit (2n+a) / [(5a+6) n(n+a) + a^2(a+1)].
struct LimitIdentityResult {
    Rational lhs;  // b q2(t)/q3(t)
    Rational rhs;  // closed-form limit
    double rel_err = 0.0;
};

LimitIdentityResult remark3_limit_identity(int n, const Rational& alpha, const Rational& beta);

/// One grid entry; param values keep their input spelling for reports.
struct GridInstance {
    Family family = Family::Jacobi;
    int n = 0;
    Scalar p1;  // alpha / lambda / alpha
    Scalar p2;  // beta (Jacobi only)
};

struct GridSpec {
    std::vector<GridInstance> instances;
    int k_max = 3;             // bracket orders 1..k_max
    bool with_checks = true;   // append identity / inequality / limit checks
    int identity_samples = 100;
};

struct GridReport {
    std::vector<OutputRecord> rows;
    int pass_count = 0;
    int fail_count = 0;
    int skip_count = 0;
    bool all_pass = true;
};

/// Evaluates every applicable bound and the order-k enclosures on each
/// instance against the oracle.  Instances may be processed concurrently
/// (EXTREMAL_ZEROS_THREADS caps the workers, 0 = auto); row order is
/// deterministic regardless.
GridReport run_grid(const GridSpec& spec);

/// run_grid plus the canonical identity / derivative-inequality / limit
/// checks, as the `verify` command runs them.
GridReport verify_suite(const GridSpec& spec);

/// Built-in grids: "default", "jacobi", "gegenbauer", "laguerre", "empty".
/// Throws DomainError for unknown names.
GridSpec builtin_grid(const std::string& name);
bool is_builtin_grid(const std::string& name);

/// Load a JSON grid description (see README for the schema).
GridSpec load_grid_file(const std::string& path);

}  // namespace extremal_zeros

#endif
