#pragma once

// Concrete models of the counterexample rings:
//   V1 = colim k[q0, x_n]/(q0^(n+1) x_n)   (infinite nilradical)
//   R1 = colim k[q0, x_n]                  (the sawed plane)
// with transitions x_n -> -q0 x_(n+1), the completion of Z[t]/(t - p) and
// the xy = 0 arc over V1.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arclift/ring.hpp"

namespace arclift {

enum class Family { V1, R1 };

std::string to_string(Family f);

/// An element of V1 or R1 stored at a finite level n as a polynomial in
/// q0 and x_n. Terms are keyed by (exponent of q0, exponent of x_n).
class ColimitElement {
public:
    using Monomial = std::pair<std::uint32_t, std::uint32_t>;
    using TermMap = std::map<Monomial, RingElement>;

    ColimitElement() = default;
    ColimitElement(Family family, Ring field, std::size_t level, TermMap terms = {});

    static ColimitElement constant(Family family, const RingElement& c);
    static ColimitElement q0(Family family, const Ring& field);
    /// x_n, created at level n.
    static ColimitElement x(Family family, const Ring& field, std::size_t n);
    /// a0 = -q0 x0 (R1 only).
    static ColimitElement a0(const Ring& field);

    Family family() const { return family_; }
    const Ring& field() const { return field_; }
    std::size_t level() const { return level_; }
    const TermMap& terms() const { return terms_; }

    /// Image under the transition maps at level >= level().
    ColimitElement raised(std::size_t level) const;
    /// Smallest level at which every term that vanishes in the colimit has
    /// been killed by the relation q0^(n+1) x_n = 0 (level() for R1).
    std::size_t settling_level() const;
    bool is_zero() const;

    friend ColimitElement operator+(const ColimitElement& a, const ColimitElement& b);
    friend ColimitElement operator-(const ColimitElement& a, const ColimitElement& b);
    friend ColimitElement operator*(const ColimitElement& a, const ColimitElement& b);
    friend ColimitElement operator-(const ColimitElement& a);
    /// Equality in the colimit. MixedFamilies across V1 and R1.
    friend bool operator==(const ColimitElement& a, const ColimitElement& b);

private:
    void canonicalize();

    Family family_ = Family::V1;
    Ring field_;
    std::size_t level_ = 0;
    TermMap terms_;
};

std::string to_string(const ColimitElement& a);

/// Level at which a == b is decided, and the verdict.
struct Decision {
    std::size_t level = 0;
    bool holds = false;
};
Decision decide_equal(const ColimitElement& a, const ColimitElement& b);

struct IdentityRow {
    std::string identity;
    std::size_t level = 0;
    bool holds = false;
};

/// Over V1: x_m x_n = 0 and x_m = (-1)^k q0^k x_(m+k) for m, n, m+k up to
/// `bound`, x_n != 0, and x_n = 0 once q0 is specialised to the unit c.
std::vector<IdentityRow> check_identities(const Ring& field, std::size_t bound, const RingElement& c);

struct GeneratorWitness {
    std::string name;               // a0, x0, x1, ...
    ColimitElement factorization;   // sign * q0^n * x_(j+n)
    bool verified = false;          // equals the generator in R1
};

/// R1 / p0^n with p0 = (q0, a0, x0, x1, ...).
struct SawedCompletion {
    std::size_t n = 0;
    std::vector<GeneratorWitness> generators;  // a0, x0 .. x_(n+2)
    std::vector<std::string> basis;            // 1, q0, ..., q0^(n-1)
    std::size_t dimension = 0;                 // rank of the image in k[q0]/q0^n
};

SawedCompletion sawed_completion(const Ring& field, std::size_t n);

/// Z[t]/(t - p, t^n) = Z/p^n with t -> p.
struct BizzardCompletion {
    std::int64_t p = 0;
    std::size_t n = 0;
    std::int64_t modulus = 0;  // p^n
    std::int64_t t_image = 0;  // p mod p^n
    bool kills_t_minus_p = false;
    bool kills_t_power = false;
};

BizzardCompletion bizzard_completion(std::int64_t p, std::size_t n);

/// q = q0 + t and x = x_0 + x_1 t + ... + x_(N-1) t^(N-1) over V1.
struct XyCounterexample {
    std::size_t precision = 0;
    std::vector<ColimitElement> q;        // coefficients of q
    std::vector<ColimitElement> x;        // coefficients of x
    std::vector<ColimitElement> product;  // q x mod t^N
    bool product_zero = false;
    bool x_nonzero = false;
    bool q_nondegenerate = false;  // some coefficient of q is a unit of k
};

XyCounterexample xy_arc_counterexample(const Ring& field, std::size_t precision);

}  // namespace arclift
