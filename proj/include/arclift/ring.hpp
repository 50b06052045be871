#pragma once

// Exact commutative coefficient rings: prime fields, the rationals, Z/n and
// truncated polynomial algebras base[s1..sm]/(monomials of degree >= e).
// These are the test rings every other module is parameterised by.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arclift/error.hpp"

namespace arclift {

enum class RingKind { prime_field, rationals, modular_ints, artinian_local };

/// Closed family of coefficient rings.
///
/// For `artinian_local` the base field is `Fp(modulus)`, or `Q` when
/// `modulus == 0`, and the ring is base[generators]/(m^truncation_order).
struct RingDescriptor {
    RingKind kind = RingKind::rationals;
    std::int64_t modulus = 0;
    std::vector<std::string> generators;
    int truncation_order = 1;

    static RingDescriptor prime_field(std::int64_t p);
    static RingDescriptor rationals();
    static RingDescriptor modular_ints(std::int64_t n);
    static RingDescriptor artinian(const RingDescriptor& base,
                                   std::vector<std::string> generators, int truncation_order);

    bool operator==(const RingDescriptor&) const = default;
};

using Exponents = std::vector<std::uint32_t>;

class RingElement;

namespace detail {
struct RingData;
}

/// Shared, immutable handle to a ring. Copies are cheap.
class Ring {
public:
    Ring() = default;
    /// Validates the descriptor (InvalidDescriptor on failure).
    explicit Ring(const RingDescriptor& descriptor);

    const RingDescriptor& descriptor() const;
    RingKind kind() const { return descriptor().kind; }

    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(std::int64_t value) const;
    RingElement from_integer(const mpz_class& value) const;
    /// Numerator times the inverse of the denominator; NotAUnit when the
    /// denominator is not invertible in the ring.
    RingElement from_rational(const mpq_class& value) const;
    RingElement generator(std::size_t index) const;
    std::optional<std::size_t> generator_index(const std::string& name) const;
    std::size_t generator_count() const { return descriptor().generators.size(); }

    bool is_field() const;
    bool is_local() const;
    /// Smallest e with m^e = 0. NonLocalRing for non-local Z/n.
    int nilpotency_index() const;
    /// R/m. NonLocalRing for non-local Z/n.
    Ring residue_field() const;
    /// Characteristic of the residue field (0 for Q-based rings).
    std::int64_t residue_characteristic() const;
    /// Number of elements, or nullopt when infinite.
    std::optional<mpz_class> cardinality() const;

    /// Basis monomials of an Artinian ring in degree-then-lex order; a single
    /// empty exponent vector otherwise.
    const std::vector<Exponents>& basis() const;

    bool valid() const { return static_cast<bool>(data_); }
    std::string to_string() const;

    friend bool operator==(const Ring& a, const Ring& b);

private:
    friend class RingElement;
    friend RingElement invert(const RingElement& a);
    friend RingElement residue(const RingElement& a);
    friend bool is_unit(const RingElement& a);
    friend std::string to_string(const RingElement& a);
    std::shared_ptr<const detail::RingData> data_;
};

inline Ring make_ring(const RingDescriptor& d) { return Ring(d); }

/// Value-semantics ring element in canonical form, so equality is
/// representational. A default-constructed element has no ring and is only a
/// placeholder for containers.
class RingElement {
public:
    RingElement() = default;

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    /// Coefficient of basis monomial `index` as an element of the base field
    /// (for non-Artinian rings index 0 returns the element itself).
    RingElement basis_coefficient(std::size_t index) const;

    /// Sign of the leading coefficient for printing (Q-based rings only).
    bool prints_negative() const;

    RingElement& operator+=(const RingElement& b);
    RingElement& operator-=(const RingElement& b);
    RingElement& operator*=(const RingElement& b);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    friend RingElement operator-(const RingElement& a);
    friend bool operator==(const RingElement& a, const RingElement& b);

    friend class Ring;
    friend RingElement invert(const RingElement& a);
    friend RingElement residue(const RingElement& a);
    friend bool is_unit(const RingElement& a);
    friend std::string to_string(const RingElement& a);

private:
    void check_same_ring(const RingElement& b) const;

    Ring ring_;
    std::vector<std::int64_t> fin_;  // residues, finite base
    std::vector<mpq_class> rat_;     // rational base
};

bool is_unit(const RingElement& a);
/// NotAUnit when `a` is not invertible.
RingElement invert(const RingElement& a);
/// Image in the residue field R/m. NonLocalRing for non-local Z/n.
RingElement residue(const RingElement& a);
bool is_nilpotent(const RingElement& a);
RingElement pow(const RingElement& a, std::uint64_t exponent);
std::string to_string(const RingElement& a);

}  // namespace arclift
