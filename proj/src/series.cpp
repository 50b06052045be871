#include "arclift/series.hpp"

#include <algorithm>

namespace arclift {

namespace {

void check_same_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.ring() == b.ring()))
        throw Error(ErrorKind::mixed_rings, "series over different rings",
                    a.ring().to_string() + " vs " + b.ring().to_string());
}

}  // namespace

TruncatedSeries::TruncatedSeries(Ring ring, std::size_t precision)
    : ring_(std::move(ring)), coeffs_(precision, ring_.zero()) {
    if (precision == 0) throw Error(ErrorKind::invalid_argument, "series precision must be >= 1");
}

TruncatedSeries::TruncatedSeries(Ring ring, std::vector<RingElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorKind::invalid_argument, "series precision must be >= 1");
    for (const auto& c : coeffs_)
        if (!(c.ring() == ring_))
            throw Error(ErrorKind::mixed_rings, "coefficient from another ring", to_string(c));
}

TruncatedSeries TruncatedSeries::from_polynomial(const Ring& ring, std::span<const RingElement> coeffs,
                                                 std::size_t precision) {
    TruncatedSeries s(ring, precision);
    for (std::size_t i = 0; i < std::min(precision, coeffs.size()); ++i) s.set(i, coeffs[i]);
    return s;
}

TruncatedSeries TruncatedSeries::constant(const RingElement& c, std::size_t precision) {
    TruncatedSeries s(c.ring(), precision);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Ring& ring, std::size_t k, std::size_t precision) {
    TruncatedSeries s(ring, precision);
    if (k < precision) s.coeffs_[k] = ring.one();
    return s;
}

void TruncatedSeries::set(std::size_t i, RingElement value) {
    if (!(value.ring() == ring_))
        throw Error(ErrorKind::mixed_rings, "coefficient from another ring", to_string(value));
    coeffs_.at(i) = std::move(value);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
    if (precision > coeffs_.size())
        throw Error(ErrorKind::insufficient_precision,
                    "cannot raise precision from " + std::to_string(coeffs_.size()) + " to " +
                        std::to_string(precision));
    return TruncatedSeries(ring_, std::vector<RingElement>(coeffs_.begin(),
                                                           coeffs_.begin() + static_cast<long>(precision)));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
    std::vector<RingElement> c(k, ring_.zero());
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(ring_, std::move(c));
}

TruncatedSeries TruncatedSeries::unshifted(std::size_t k) const {
    if (k >= coeffs_.size())
        throw Error(ErrorKind::precision_exhausted, "shift consumes the whole precision");
    for (std::size_t i = 0; i < k; ++i)
        if (!coeffs_[i].is_zero())
            throw Error(ErrorKind::invalid_argument, "series is not divisible by t^" + std::to_string(k));
    return TruncatedSeries(ring_, std::vector<RingElement>(coeffs_.begin() + static_cast<long>(k),
                                                           coeffs_.end()));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

std::optional<std::size_t> TruncatedSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return i;
    return std::nullopt;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& b) {
    check_same_ring(*this, b);
    if (b.precision() < precision()) coeffs_.resize(b.precision());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& b) {
    check_same_ring(*this, b);
    if (b.precision() < precision()) coeffs_.resize(b.precision());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const RingElement& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_ring(a, b);
    const std::size_t n = std::min(a.precision(), b.precision());
    TruncatedSeries out(a.ring(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool agree_below(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n) {
    if (n > a.precision() || n > b.precision())
        throw Error(ErrorKind::insufficient_precision, "comparison beyond known precision");
    for (std::size_t i = 0; i < n; ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

TruncatedSeries series_invert(const TruncatedSeries& x) {
    if (!is_unit(x[0]))
        throw Error(ErrorKind::not_a_unit, "constant coefficient is not a unit", to_string(x[0]));
    const std::size_t n = x.precision();
    const RingElement c0_inv = invert(x[0]);
    std::vector<RingElement> y(n, x.ring().zero());
    y[0] = c0_inv;
    for (std::size_t k = 1; k < n; ++k) {
        RingElement acc = x.ring().zero();
        for (std::size_t i = 1; i <= k; ++i)
            if (!x[i].is_zero()) acc += x[i] * y[k - i];
        y[k] = -(c0_inv * acc);
    }
    return TruncatedSeries(x.ring(), std::move(y));
}

Nondegeneracy classify_nondegeneracy(const TruncatedSeries& x) {
    if (!x.ring().is_local())
        throw Error(ErrorKind::non_local_ring, "non-degeneracy needs a local ring", x.ring().to_string());
    for (const auto& c : x.coefficients())
        if (!is_nilpotent(c)) return Nondegeneracy::nondegenerate;
    return Nondegeneracy::indeterminate;
}

bool is_nondegenerate(const TruncatedSeries& x) {
    if (classify_nondegeneracy(x) == Nondegeneracy::indeterminate)
        throw Error(ErrorKind::indeterminate,
                    "residue series vanishes mod t^" + std::to_string(x.precision()));
    return true;
}

std::size_t reduced_order(const TruncatedSeries& x) {
    is_nondegenerate(x);
    for (std::size_t i = 0; i < x.precision(); ++i)
        if (!is_nilpotent(x[i])) return i;
    throw Error(ErrorKind::internal, "unreachable");
}

// ---------------------------------------------------------------- Laurent

RingElement LaurentSeries::coefficient(long k) const {
    if (k >= absolute_precision())
        throw Error(ErrorKind::insufficient_precision, "coefficient beyond known precision");
    if (k < offset) return body.ring().zero();
    return body[static_cast<std::size_t>(k - offset)];
}

LaurentSeries LaurentSeries::normalized() const {
    std::size_t lead = 0;
    while (lead + 1 < body.precision() && body[lead].is_zero()) ++lead;
    if (lead == 0) return *this;
    return LaurentSeries{offset + static_cast<long>(lead), body.unshifted(lead)};
}

std::optional<long> LaurentSeries::valuation() const {
    if (auto v = body.valuation()) return offset + static_cast<long>(*v);
    return std::nullopt;
}

bool LaurentSeries::in_power_series() const {
    auto v = valuation();
    return !v || *v >= 0;
}

TruncatedSeries LaurentSeries::to_power_series() const {
    if (!in_power_series())
        throw Error(ErrorKind::invalid_argument, "Laurent series has a polar part");
    if (absolute_precision() < 1)
        throw Error(ErrorKind::precision_exhausted, "no nonnegative coefficient is known");
    std::vector<RingElement> c;
    c.reserve(static_cast<std::size_t>(absolute_precision()));
    for (long k = 0; k < absolute_precision(); ++k) c.push_back(coefficient(k));
    return TruncatedSeries(body.ring(), std::move(c));
}

}  // namespace arclift
