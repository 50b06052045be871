#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arclift {

enum class ErrorKind {
    invalid_descriptor,
    mixed_rings,
    not_a_unit,
    non_local_ring,
    indeterminate,
    insufficient_precision,
    precision_exhausted,
    no_divide,
    arity_mismatch,
    degenerate_xi,
    not_in_n1,
    residual_nonzero,
    mixed_families,
    invalid_argument,
    parse_error,
    internal,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure raised by the library. `witness` carries the offending
/// value in text form when there is one (a remainder, a component index...).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string witness = {})
        : std::runtime_error(std::string(error_name(kind)) + ": " + message),
          kind_(kind),
          witness_(std::move(witness)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::string witness_;
};

inline std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_descriptor: return "InvalidDescriptor";
        case ErrorKind::mixed_rings: return "MixedRings";
        case ErrorKind::not_a_unit: return "NotAUnit";
        case ErrorKind::non_local_ring: return "NonLocalRing";
        case ErrorKind::indeterminate: return "Indeterminate";
        case ErrorKind::insufficient_precision: return "InsufficientPrecision";
        case ErrorKind::precision_exhausted: return "PrecisionExhausted";
        case ErrorKind::no_divide: return "NoDivide";
        case ErrorKind::arity_mismatch: return "ArityMismatch";
        case ErrorKind::degenerate_xi: return "DegenerateXi";
        case ErrorKind::not_in_n1: return "NotInN1";
        case ErrorKind::residual_nonzero: return "ResidualNonzero";
        case ErrorKind::mixed_families: return "MixedFamilies";
        case ErrorKind::invalid_argument: return "InvalidArgument";
        case ErrorKind::parse_error: return "ParseError";
        case ErrorKind::internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace arclift
