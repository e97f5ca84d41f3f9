#ifndef EXTREMAL_ZEROS_FORMAT_HPP
#define EXTREMAL_ZEROS_FORMAT_HPP

#include <string>

#include "extremal_zeros/numeric.hpp"

namespace extremal_zeros {

/// Decimal rounding mode for rendering.  Down/Up are directed toward
/// -infinity/+infinity so rendered interval endpoints stay valid enclosures.
enum class Rounding { NearestEven, Down, Up };

/// Render an exact rational with the given number of significant digits.
/// Fixed notation for decimal exponents in [-4, digits), scientific otherwise.
/// Deterministic: same input, same string, on every platform.
std::string to_decimal(const Rational& value, int sig_digits,
                       Rounding mode = Rounding::NearestEven);

/// Same, routing the double through its exact binary value.
std::string to_decimal(double value, int sig_digits,
                       Rounding mode = Rounding::NearestEven);

std::string to_decimal(const Numeric& value, int sig_digits,
                       Rounding mode = Rounding::NearestEven);

}  // namespace extremal_zeros

#endif
