#include "arclift/jets.hpp"

#include <algorithm>

namespace arclift {

namespace {

// Element of R[t]/(q) in reduced form.
struct QuotientElement {
    const MonicPoly* q;
    std::vector<RingElement> c;

    friend QuotientElement operator+(QuotientElement a, const QuotientElement& b) {
        for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
        return a;
    }
    friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
        auto prod = poly_multiply(a.c, b.c);
        return QuotientElement{a.q, divide_by_monic(prod, *a.q).remainder};
    }
};

QuotientElement lift_constant(const MonicPoly& q, const RingElement& c) {
    std::vector<RingElement> v{c};
    return QuotientElement{&q, divide_by_monic(v, q).remainder};
}

}  // namespace

MonicPoly times_t(const MonicPoly& q) {
    std::vector<RingElement> low{q.ring().zero()};
    low.insert(low.end(), q.low_coeffs().begin(), q.low_coeffs().end());
    return MonicPoly(q.ring(), std::move(low));
}

ModQReduction mod_q_reduce(const TruncatedSeries& x, const MonicPoly& q) {
    if (!(x.ring() == q.ring())) throw Error(ErrorKind::mixed_rings, "series and q over different rings");
    const std::size_t d = q.degree();
    if (x.precision() < d)
        throw Error(ErrorKind::insufficient_precision,
                    "need N >= deg q = " + std::to_string(d) + ", have " + std::to_string(x.precision()));
    PolyDivision div = divide_by_monic(x.coefficients(), q);
    bool exact = false;
    if (x.ring().is_local() && q.is_strict()) {
        const auto e = static_cast<std::size_t>(x.ring().nilpotency_index());
        exact = x.precision() >= d * (e + 1);
    }
    return ModQReduction{LowPoly(x.ring(), std::move(div.remainder)), exact};
}

ModQVector map_on_Qd(const PolyMap& f, const ModQVector& xbar) {
    if (xbar.comps.size() != f.source_dim())
        throw Error(ErrorKind::arity_mismatch, "map expects " + std::to_string(f.source_dim()) +
                                                   " components, got " + std::to_string(xbar.comps.size()));
    const MonicPoly& q = xbar.q;
    std::vector<QuotientElement> point;
    point.reserve(xbar.comps.size());
    for (const auto& c : xbar.comps) {
        if (c.bound() != q.degree())
            throw Error(ErrorKind::arity_mismatch, "component bound differs from deg q");
        point.push_back(QuotientElement{&q, c.coefficients()});
    }
    ModQVector out{q, {}};
    for (const auto& eq : f.eqs) {
        auto v = eq.evaluate<QuotientElement>(point, [&](const RingElement& c) { return lift_constant(q, c); });
        out.comps.emplace_back(q.ring(), std::move(v.c));
    }
    return out;
}

Expansion expand_around(const PolyMap& g, const ModQVector& xbar,
                        const std::vector<TruncatedSeries>& xprime) {
    const std::size_t m = g.source_dim();
    if (xbar.comps.size() != m || xprime.size() != m)
        throw Error(ErrorKind::arity_mismatch, "expansion point has the wrong number of components");
    const MonicPoly& q = xbar.q;
    const Ring& ring = q.ring();
    const std::size_t d = q.degree();
    std::size_t n = static_cast<std::size_t>(-1);
    for (const auto& s : xprime) n = std::min(n, s.precision());
    if (m == 0) n = d + 2;
    if (n < d + 2)
        throw Error(ErrorKind::insufficient_precision,
                    "need N >= deg q + 2 = " + std::to_string(d + 2) + ", have " + std::to_string(n));

    const MonicPoly tq = times_t(q);
    const auto tqc = tq.coefficients();
    const TruncatedSeries tq_series = TruncatedSeries::from_polynomial(ring, tqc, n);
    std::vector<TruncatedSeries> point;
    for (std::size_t j = 0; j < m; ++j) {
        TruncatedSeries base = TruncatedSeries::from_polynomial(ring, xbar.comps[j].coefficients(), n);
        point.push_back(base + tq_series * xprime[j].truncated(n));
    }
    Expansion out{ModQVector{tq, {}}, {}};
    for (const auto& eq : g.eqs) {
        TruncatedSeries w = eq.evaluate<TruncatedSeries>(
            point, [n](const RingElement& c) { return TruncatedSeries::constant(c, n); });
        PolyDivision div = divide_by_monic(w.coefficients(), tq);
        out.gbar.comps.emplace_back(ring, std::move(div.remainder));
        out.gprime.emplace_back(ring, std::move(div.quotient));
    }
    return out;
}

}  // namespace arclift
