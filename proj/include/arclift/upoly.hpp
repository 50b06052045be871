#pragma once

// Univariate polynomials in t: monic ones (Q_d) and those of bounded
// degree (A_d), with Euclidean division by a monic divisor.

#include <span>
#include <vector>

#include "arclift/ring.hpp"

namespace arclift {

/// t^d + q_{d-1} t^{d-1} + ... + q_0; the leading 1 is implicit.
class MonicPoly {
public:
    MonicPoly() = default;
    MonicPoly(Ring ring, std::vector<RingElement> low_coeffs);
    /// t^d.
    static MonicPoly power_of_t(const Ring& ring, std::size_t d);

    const Ring& ring() const { return ring_; }
    std::size_t degree() const { return low_.size(); }
    const std::vector<RingElement>& low_coeffs() const { return low_; }
    /// All d+1 coefficients, constant term first.
    std::vector<RingElement> coefficients() const;

    /// Every low coefficient is nilpotent, i.e. q = t^d mod Nil(R).
    bool is_strict() const;
    /// Multiplicity of t (number of leading zero low coefficients).
    std::size_t t_multiplicity() const;

    friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

private:
    Ring ring_;
    std::vector<RingElement> low_;
};

/// a_0 + ... + a_{d-1} t^{d-1}.
class LowPoly {
public:
    LowPoly() = default;
    /// Zero polynomial with the given bound.
    LowPoly(Ring ring, std::size_t bound);
    /// bound = coeffs.size().
    LowPoly(Ring ring, std::vector<RingElement> coeffs);

    const Ring& ring() const { return ring_; }
    std::size_t bound() const { return coeffs_.size(); }
    const std::vector<RingElement>& coefficients() const { return coeffs_; }
    bool is_zero() const;

    friend bool operator==(const LowPoly&, const LowPoly&) = default;

private:
    Ring ring_;
    std::vector<RingElement> coeffs_;
};

struct PolyDivision {
    std::vector<RingElement> quotient;   // size max(0, len(f) - d)
    std::vector<RingElement> remainder;  // size d
};

/// f = q * quotient + remainder for a polynomial f (constant term first).
PolyDivision divide_by_monic(std::span<const RingElement> f, const MonicPoly& q);

/// Product of two coefficient vectors, optionally truncated to `limit` terms.
std::vector<RingElement> poly_multiply(std::span<const RingElement> a, std::span<const RingElement> b,
                                       std::size_t limit = static_cast<std::size_t>(-1));

/// Drops trailing zeros (keeps at least one coefficient).
std::vector<RingElement> poly_trim(std::vector<RingElement> p);

}  // namespace arclift
