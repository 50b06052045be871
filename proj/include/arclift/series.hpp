#pragma once

// Truncated power series R[[t]] mod t^N and Laurent series over the test
// rings. Precision is part of the value: every operation states the number
// of coefficients it certifies.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arclift/ring.hpp"

namespace arclift {

/// c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N), N >= 1.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    /// Zero series at the given precision.
    TruncatedSeries(Ring ring, std::size_t precision);
    /// Precision is coeffs.size().
    TruncatedSeries(Ring ring, std::vector<RingElement> coeffs);

    /// Polynomial coefficients padded with zeros (or cut) to `precision`.
    static TruncatedSeries from_polynomial(const Ring& ring, std::span<const RingElement> coeffs,
                                           std::size_t precision);
    static TruncatedSeries constant(const RingElement& c, std::size_t precision);
    /// t^k at the given precision.
    static TruncatedSeries monomial(const Ring& ring, std::size_t k, std::size_t precision);

    const Ring& ring() const { return ring_; }
    std::size_t precision() const { return coeffs_.size(); }
    const RingElement& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<RingElement>& coefficients() const { return coeffs_; }
    void set(std::size_t i, RingElement value);

    TruncatedSeries truncated(std::size_t precision) const;
    /// Multiplication by t^k; certifies k more coefficients.
    TruncatedSeries shifted(std::size_t k) const;
    /// Exact division by t^k of a series whose first k coefficients vanish.
    TruncatedSeries unshifted(std::size_t k) const;

    bool is_zero() const;
    /// Index of the first nonzero coefficient within precision.
    std::optional<std::size_t> valuation() const;

    TruncatedSeries& operator+=(const TruncatedSeries& b);
    TruncatedSeries& operator-=(const TruncatedSeries& b);
    TruncatedSeries& operator*=(const RingElement& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const RingElement& c) { return a *= c; }
    friend TruncatedSeries operator-(const TruncatedSeries& a);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    Ring ring_;
    std::vector<RingElement> coeffs_;
};

/// Coefficients below `n` agree (n must not exceed either precision).
bool agree_below(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n);

/// Multiplicative inverse mod t^N. NotAUnit when c_0 is not a unit.
TruncatedSeries series_invert(const TruncatedSeries& x);

enum class Nondegeneracy { nondegenerate, indeterminate };

/// Over a local ring: nondegenerate iff the residue series is nonzero mod t^N.
/// NonLocalRing otherwise.
Nondegeneracy classify_nondegeneracy(const TruncatedSeries& x);
/// true, or throws Indeterminate when the residue series vanishes mod t^N.
bool is_nondegenerate(const TruncatedSeries& x);
/// Smallest d with residue(c_d) != 0.
std::size_t reduced_order(const TruncatedSeries& x);

/// t^offset * body. Coefficients are known for exponents below
/// offset + body.precision().
struct LaurentSeries {
    long offset = 0;
    TruncatedSeries body;

    long absolute_precision() const { return offset + static_cast<long>(body.precision()); }
    /// Coefficient of t^k (k below absolute_precision()).
    RingElement coefficient(long k) const;
    /// Strips known-zero leading coefficients into the offset, keeping at
    /// least one body coefficient.
    LaurentSeries normalized() const;
    /// Lowest exponent with a nonzero coefficient, if any is known.
    std::optional<long> valuation() const;
    /// No nonzero coefficient at a negative exponent.
    bool in_power_series() const;
    /// Requires in_power_series() and absolute_precision() >= 1.
    TruncatedSeries to_power_series() const;
};

/// a / b in R((t)) for b nondegenerate over a local ring. b is factored as
/// u * q (strict Weierstrass), 1/q = q' t^-n with q q' = t^n, and the
/// result is t^-n * a * u^-1 * q'. The recorded precision only covers
/// coefficients independent of the unknown tails of a and b.
/// PrecisionExhausted when nothing is left.
LaurentSeries laurent_divide(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace arclift
