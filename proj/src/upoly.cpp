#include "arclift/upoly.hpp"

#include <algorithm>

namespace arclift {

MonicPoly::MonicPoly(Ring ring, std::vector<RingElement> low_coeffs)
    : ring_(std::move(ring)), low_(std::move(low_coeffs)) {
    for (const auto& c : low_)
        if (!(c.ring() == ring_))
            throw Error(ErrorKind::mixed_rings, "coefficient from another ring", to_string(c));
}

MonicPoly MonicPoly::power_of_t(const Ring& ring, std::size_t d) {
    return MonicPoly(ring, std::vector<RingElement>(d, ring.zero()));
}

std::vector<RingElement> MonicPoly::coefficients() const {
    std::vector<RingElement> c = low_;
    c.push_back(ring_.one());
    return c;
}

bool MonicPoly::is_strict() const {
    return std::all_of(low_.begin(), low_.end(), [](const auto& c) { return is_nilpotent(c); });
}

std::size_t MonicPoly::t_multiplicity() const {
    std::size_t e = 0;
    while (e < low_.size() && low_[e].is_zero()) ++e;
    return e;
}

LowPoly::LowPoly(Ring ring, std::size_t bound) : ring_(std::move(ring)), coeffs_(bound, ring_.zero()) {}

LowPoly::LowPoly(Ring ring, std::vector<RingElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!(c.ring() == ring_))
            throw Error(ErrorKind::mixed_rings, "coefficient from another ring", to_string(c));
}

bool LowPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

PolyDivision divide_by_monic(std::span<const RingElement> f, const MonicPoly& q) {
    const std::size_t d = q.degree();
    const Ring& ring = q.ring();
    std::vector<RingElement> r(f.begin(), f.end());
    if (r.size() < d) r.resize(d, ring.zero());
    PolyDivision out;
    out.quotient.assign(r.size() - d, ring.zero());
    const auto& low = q.low_coeffs();
    for (std::size_t k = r.size(); k-- > d;) {
        const RingElement lead = r[k];
        if (lead.is_zero()) continue;
        const std::size_t shift = k - d;
        out.quotient[shift] = lead;
        r[k] = ring.zero();
        for (std::size_t i = 0; i < d; ++i)
            if (!low[i].is_zero()) r[shift + i] -= lead * low[i];
    }
    r.resize(d);
    out.remainder = std::move(r);
    return out;
}

std::vector<RingElement> poly_multiply(std::span<const RingElement> a, std::span<const RingElement> b,
                                       std::size_t limit) {
    if (a.empty() || b.empty()) return {};
    const Ring& ring = a[0].ring();
    const std::size_t n = std::min(limit, a.size() + b.size() - 1);
    std::vector<RingElement> out(n, ring.zero());
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<RingElement> poly_trim(std::vector<RingElement> p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    return p;
}

}  // namespace arclift
