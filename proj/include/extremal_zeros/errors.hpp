#ifndef EXTREMAL_ZEROS_ERRORS_HPP
#define EXTREMAL_ZEROS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace extremal_zeros {

/// Parameter outside its admissible range (bad degree, weight exponent, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A computed result failed its certification check (sign change, enclosure).
struct CertificationError : std::runtime_error {
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact polynomial identity left a nonzero residual.
struct IdentityError : std::runtime_error {
    explicit IdentityError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant violated (signals a bug or inconsistent input object).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace extremal_zeros

#endif
