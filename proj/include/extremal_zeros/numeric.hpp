#ifndef EXTREMAL_ZEROS_NUMERIC_HPP
#define EXTREMAL_ZEROS_NUMERIC_HPP

#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "extremal_zeros/errors.hpp"

namespace extremal_zeros {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 30-significant-digit binary float, used where exact k-th roots do not exist.
using HighFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<30>>;

/// Rising factorial x(x+1)...(x+k-1) by repeated multiplication.
/// Exact for Rational, and free of gamma-function poles for any scalar type.
template <class S>
S pochhammer(S x, int k) {
    S acc(1);
    for (int j = 0; j < k; ++j) {
        acc *= x;
        x += 1;
    }
    return acc;
}

template <class S>
S pow_int(const S& x, int k) {
    if (k < 0) throw DomainError("pow_int: negative exponent");
    S acc(1);
    for (int j = 0; j < k; ++j) acc *= x;
    return acc;
}

BigInt binomial(int n, int k);

/// A parsed numeric parameter.  "p/q" strings and bare integers select the
/// exact rational path; decimal or exponent notation selects the float path.
struct Scalar {
    bool exact = true;
    Rational value;   // meaningful when exact
    double approx = 0.0;  // always usable
    std::string text;  // the input spelling, kept for reports

    static Scalar from_rational(Rational q);
    static Scalar from_double(double d);

    double as_double() const { return approx; }
};

/// Parse per the rule above.  Throws DomainError on malformed input.
Scalar parse_scalar(const std::string& text);

/// A report-level value: exact rational result or float result, preserving
/// which path produced it so rendering can stay faithful.
struct Numeric {
    bool exact = false;
    Rational q;
    double d = 0.0;

    Numeric() = default;
    explicit Numeric(Rational v) : exact(true), q(std::move(v)) { d = q.convert_to<double>(); }
    explicit Numeric(double v) : exact(false), d(v) {}

    double as_double() const { return d; }
};

inline bool rational_exactly_representable(const Scalar& s) { return s.exact; }

}  // namespace extremal_zeros

#endif
