#include "arclift/weierstrass.hpp"

#include <algorithm>

namespace arclift {

namespace {

bool all_zero(const std::vector<RingElement>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.is_zero(); });
}

void require_precision(std::size_t n, std::size_t d, int e) {
    const std::size_t need = d * static_cast<std::size_t>(e + 1);
    if (n < need)
        throw Error(ErrorKind::insufficient_precision,
                    "need N >= d(e+1) = " + std::to_string(need) + ", have " + std::to_string(n));
}

}  // namespace

StrictFactorization strict_prepare(const TruncatedSeries& x) {
    const Ring& ring = x.ring();
    if (!ring.is_local())
        throw Error(ErrorKind::non_local_ring, "strict preparation needs a local ring", ring.to_string());
    const std::size_t d = reduced_order(x);
    const int e = ring.nilpotency_index();
    const std::size_t n_prec = x.precision();
    require_precision(n_prec, d, e);

    const std::vector<RingElement>& coeffs = x.coefficients();
    const std::size_t cert = d * static_cast<std::size_t>(e);
    std::vector<RingElement> low(d, ring.zero());
    MonicPoly q(ring, low);
    PolyDivision div = divide_by_monic(coeffs, q);
    int rounds = 0;
    while (!all_zero(div.remainder)) {
        if (++rounds > 64) throw Error(ErrorKind::internal, "strict preparation did not converge");
        // t^cert lies in (q), so u^-1 r mod q only needs u^-1 mod t^cert.
        TruncatedSeries u_head = TruncatedSeries::from_polynomial(ring, div.quotient, cert);
        TruncatedSeries u_inv = series_invert(u_head);
        auto corr = poly_multiply(u_inv.coefficients(), div.remainder, cert);
        auto step = divide_by_monic(corr, q).remainder;
        for (std::size_t i = 0; i < d; ++i) low[i] += step[i];
        q = MonicPoly(ring, low);
        div = divide_by_monic(coeffs, q);
    }
    StrictFactorization out;
    out.u = TruncatedSeries::from_polynomial(ring, div.quotient, n_prec);
    out.q = std::move(q);
    out.certificate = cert;
    out.precision = n_prec;
    out.certified_precision = n_prec - cert;
    out.rounds = rounds;
    return out;
}

WeierstrassDivision weierstrass_divide(const TruncatedSeries& f, const MonicPoly& q) {
    if (!(f.ring() == q.ring()))
        throw Error(ErrorKind::mixed_rings, "series and divisor over different rings");
    const std::size_t d = q.degree();
    require_precision(f.precision(), d, f.ring().nilpotency_index());
    PolyDivision div = divide_by_monic(f.coefficients(), q);
    return WeierstrassDivision{TruncatedSeries(f.ring(), std::move(div.quotient)),
                               LowPoly(f.ring(), std::move(div.remainder)), q.is_strict()};
}

std::variant<MonicPoly, NoDivide> divides_power_of_t(const MonicPoly& q, std::size_t n) {
    const std::size_t d = q.degree();
    if (n < d)
        throw Error(ErrorKind::invalid_argument,
                    "t^" + std::to_string(n) + " has lower degree than q");
    const Ring& ring = q.ring();
    std::vector<RingElement> tn(n + 1, ring.zero());
    tn[n] = ring.one();
    PolyDivision div = divide_by_monic(tn, q);
    if (!all_zero(div.remainder)) return NoDivide{LowPoly(ring, std::move(div.remainder))};
    div.quotient.pop_back();  // leading 1
    return MonicPoly(ring, std::move(div.quotient));
}

TruncatedSeries alpha_eval(const MonicPoly& q, const LowPoly& a, const TruncatedSeries& v) {
    if (!(q.ring() == v.ring()) || !(a.ring() == v.ring()))
        throw Error(ErrorKind::mixed_rings, "alpha arguments over different rings");
    const std::size_t n = v.precision();
    const auto qc = q.coefficients();
    return TruncatedSeries::from_polynomial(v.ring(), qc, n) * v +
           TruncatedSeries::from_polynomial(v.ring(), a.coefficients(), n);
}

TruncatedSeries beta_eval(const MonicPoly& q, const TruncatedSeries& u) {
    if (!(q.ring() == u.ring())) throw Error(ErrorKind::mixed_rings, "beta arguments over different rings");
    if (!is_unit(u[0])) throw Error(ErrorKind::not_a_unit, "u is not a unit series", to_string(u[0]));
    const auto qc = q.coefficients();
    return u * TruncatedSeries::from_polynomial(u.ring(), qc, u.precision());
}

std::vector<FiberVector> s_fiber_basis(const MonicPoly& q, std::size_t precision) {
    const Ring& k = q.ring();
    if (!k.is_field()) throw Error(ErrorKind::invalid_argument, "fibre basis needs a field", k.to_string());
    if (precision == 0) throw Error(ErrorKind::invalid_argument, "precision must be >= 1");
    const std::size_t d = q.degree();
    const std::size_t e = q.t_multiplicity();
    // t^i / q is known to precision P - e when both sides are given to P.
    const std::size_t p = std::max(precision + e, 2 * e + 1);
    const auto qc = q.coefficients();
    const TruncatedSeries q_series = TruncatedSeries::from_polynomial(k, qc, p);
    std::vector<FiberVector> out;
    for (std::size_t i = e; i < d; ++i) {
        LowPoly a(k, d);
        std::vector<RingElement> ac(d, k.zero());
        ac[i] = -k.one();
        TruncatedSeries ti = TruncatedSeries::monomial(k, i, p);
        TruncatedSeries v = laurent_divide(ti, q_series).to_power_series().truncated(precision);
        out.push_back(FiberVector{LowPoly(k, std::move(ac)), std::move(v)});
    }
    return out;
}

std::optional<std::size_t> ord_at_point(std::span<const MPoly> coefficients,
                                        std::span<const RingElement> point) {
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        if (!coefficients[i].evaluate_at(point).is_zero()) return i;
    return std::nullopt;
}

// Declared in series.hpp; needs the factorization above.
LaurentSeries laurent_divide(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.ring() == b.ring())) throw Error(ErrorKind::mixed_rings, "division across rings");
    const StrictFactorization f = strict_prepare(b);
    const std::size_t d = f.q.degree();
    const std::size_t n = f.certificate;
    auto cofactor = divides_power_of_t(f.q, n);
    if (!std::holds_alternative<MonicPoly>(cofactor))
        throw Error(ErrorKind::internal, "strict factor does not divide its certificate power");
    const auto qp = std::get<MonicPoly>(cofactor).coefficients();

    TruncatedSeries body = a * series_invert(f.u);
    body = body * TruncatedSeries::from_polynomial(a.ring(), qp, body.precision());

    // Unknown a_i (i >= N_a) reach exponents >= N_a - n; unknown b_i reach
    // exponents >= N_b - d - n shifted by the valuation of a.
    const long na = static_cast<long>(a.precision());
    const long nb = static_cast<long>(b.precision());
    const long ln = static_cast<long>(n);
    long prec = na - ln;
    if (auto va = a.valuation()) prec = std::min(prec, nb - static_cast<long>(d) - ln + static_cast<long>(*va));
    prec = std::min(prec, static_cast<long>(body.precision()) - ln);
    if (prec < 1)
        throw Error(ErrorKind::precision_exhausted,
                    "quotient has no certified coefficient (precision " + std::to_string(prec) + ")");
    LaurentSeries out{-ln, body.truncated(static_cast<std::size_t>(prec + ln))};
    return out.normalized();
}

}  // namespace arclift
