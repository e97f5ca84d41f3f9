#include "extremal_zeros/format.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace extremal_zeros {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (int j = 1; j <= k; ++j) {
        acc *= (n - k + j);
        acc /= j;
    }
    return acc;
}

Scalar Scalar::from_rational(Rational q) {
    Scalar s;
    s.exact = true;
    s.value = std::move(q);
    s.approx = s.value.convert_to<double>();
    s.text = s.value.str();
    return s;
}

Scalar Scalar::from_double(double d) {
    Scalar s;
    s.exact = false;
    s.approx = d;
    s.text = to_decimal(d, 17);
    return s;
}

namespace {

bool is_integer_literal(const std::string& t) {
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    if (text.empty()) throw DomainError("empty numeric parameter");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty() || !is_integer_literal(num) || !is_integer_literal(den))
            throw DomainError("malformed rational '" + text + "'");
        BigInt d(den);
        if (d == 0) throw DomainError("zero denominator in '" + text + "'");
        Scalar s = Scalar::from_rational(Rational(BigInt(num), d));
        s.text = text;
        return s;
    }
    if (is_integer_literal(text)) {
        Scalar s = Scalar::from_rational(Rational(BigInt(text)));
        s.text = text;
        return s;
    }
    // Decimal or exponent notation: float path.
    char* end = nullptr;
    const double d = std::strtod(text.c_str(), &end);
    if (end == nullptr || *end != '\0' || !std::isfinite(d))
        throw DomainError("malformed numeric parameter '" + text + "'");
    Scalar s = Scalar::from_double(d);
    s.text = text;
    return s;
}

namespace {

BigInt pow10_int(int e) {
    BigInt p = 1;
    for (int i = 0; i < e; ++i) p *= 10;
    return p;
}

// Largest E with 10^E <= w, for w > 0.
int floor_log10(const Rational& w) {
    const BigInt num = boost::multiprecision::numerator(w);
    const BigInt den = boost::multiprecision::denominator(w);
    int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
    // The digit-count estimate is off by at most one; fix up exactly.
    auto at_least = [&](int k) {
        // 10^k <= num/den ?
        return k >= 0 ? num >= den * pow10_int(k) : num * pow10_int(-k) >= den;
    };
    while (!at_least(e)) --e;
    while (at_least(e + 1)) ++e;
    return e;
}

std::string digits_of(const BigInt& v, int width) {
    std::string s = v.str();
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

}  // namespace

std::string to_decimal(const Rational& value, int sig_digits, Rounding mode) {
    if (sig_digits < 1) throw DomainError("sig_digits must be >= 1");
    if (value == 0) return "0";

    const bool negative = value < 0;
    const Rational w = negative ? Rational(-value) : value;
    int e = floor_log10(w);

    // Scale so that the significant digits form an integer: w * 10^(sig-1-e).
    const int shift = sig_digits - 1 - e;
    BigInt num = boost::multiprecision::numerator(w);
    BigInt den = boost::multiprecision::denominator(w);
    if (shift >= 0)
        num *= pow10_int(shift);
    else
        den *= pow10_int(-shift);

    BigInt q = num / den;
    const BigInt r = num - q * den;
    bool round_away = false;
    if (r != 0) {
        switch (mode) {
            case Rounding::NearestEven: {
                const BigInt twice = r * 2;
                if (twice > den)
                    round_away = true;
                else if (twice == den)
                    round_away = (q % 2) != 0;
                break;
            }
            case Rounding::Down:
                round_away = negative;  // toward -infinity
                break;
            case Rounding::Up:
                round_away = !negative;  // toward +infinity
                break;
        }
    }
    if (round_away) ++q;
    if (q == pow10_int(sig_digits)) {  // carry spilled into a new leading digit
        q /= 10;
        ++e;
    }

    std::string digits = digits_of(q, sig_digits);
    std::string body;
    if (e >= -4 && e < sig_digits) {
        if (e >= 0) {
            body = digits.substr(0, e + 1);
            if (e + 1 < sig_digits) body += "." + digits.substr(e + 1);
        } else {
            body = "0." + std::string(-e - 1, '0') + digits;
        }
    } else {
        body = digits.substr(0, 1);
        if (sig_digits > 1) body += "." + digits.substr(1);
        const int ae = e < 0 ? -e : e;
        std::string es = std::to_string(ae);
        if (es.size() < 2) es.insert(es.begin(), '0');
        body += (e < 0 ? "e-" : "e+") + es;
    }
    return negative ? "-" + body : body;
}

std::string to_decimal(double value, int sig_digits, Rounding mode) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return to_decimal(Rational(value), sig_digits, mode);
}

std::string to_decimal(const Numeric& value, int sig_digits, Rounding mode) {
    return value.exact ? to_decimal(value.q, sig_digits, mode)
                       : to_decimal(value.d, sig_digits, mode);
}

}  // namespace extremal_zeros
