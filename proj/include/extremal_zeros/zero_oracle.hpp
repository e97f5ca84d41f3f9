#ifndef EXTREMAL_ZEROS_ZERO_ORACLE_HPP
#define EXTREMAL_ZEROS_ZERO_ORACLE_HPP

#include <vector>

#include "extremal_zeros/poly_core.hpp"

namespace extremal_zeros {

enum class Family { Jacobi, Gegenbauer, Laguerre };

const char* to_string(Family f);

/// All zeros of a classical orthogonal polynomial, ascending, each certified
/// by a sign change of the recurrence-evaluated polynomial across
/// zero +/- certified_abs_error.
struct ZeroSet {
    Family family = Family::Jacobi;
    int n = 0;
    double param1 = 0.0;  // alpha / lambda / alpha
    double param2 = 0.0;  // beta (Jacobi only)
    std::vector<double> zeros;
    double certified_abs_error = 0.0;
};

/// Ground-truth zeros via deterministic bisection on Sturm sign counts of the
/// symmetric tridiagonal recurrence matrix, polished by Newton steps on the
/// recurrence-evaluated polynomial.  Degree capped at 200.
ZeroSet jacobi_zeros(const JacobiParams<double>& p);
ZeroSet gegenbauer_zeros(const GegenbauerParams<double>& g);
ZeroSet laguerre_zeros(const LaguerreParams<double>& l);

/// z_n = 2/(1 - x_nn), computed without forming 1 - x_nn by subtraction:
/// the eigenvalue estimate seeds Newton iteration on the monic transformed
/// polynomial directly in the shifted variable.
double largest_transformed_zero(const JacobiParams<double>& p);

}  // namespace extremal_zeros

#endif
