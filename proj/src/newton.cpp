#include "arclift/newton.hpp"

#include <algorithm>

namespace arclift {

namespace {

MPoly determinant(const PolyMatrix& m, const Ring& ring, std::size_t nvars) {
    const std::size_t n = m.size();
    if (n == 0) return MPoly::constant(ring.one(), nvars);
    if (n == 1) return m[0][0];
    MPoly det(ring, nvars);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<MPoly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        MPoly term = m[0][col] * determinant(minor, ring, nvars);
        if (col % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const Ring& ring, std::size_t nvars) {
    const std::size_t n = a.size();
    PolyMatrix out(n, std::vector<MPoly>(n, MPoly(ring, nvars)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

bool is_scalar(const PolyMatrix& m, const MPoly& s) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j ? !(m[i][j] == s) : !m[i][j].is_zero()) return false;
        }
    return true;
}

TruncatedSeries eval_along(const MPoly& p, std::span<const TruncatedSeries> x, std::size_t n) {
    return p.evaluate<TruncatedSeries>(x, [n](const RingElement& c) { return TruncatedSeries::constant(c, n); })
        .truncated(n);
}

std::int64_t binomial(std::uint32_t n, std::uint32_t k) {
    std::int64_t r = 1;
    for (std::uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::size_t min_precision(const std::vector<TruncatedSeries>& v) {
    std::size_t n = static_cast<std::size_t>(-1);
    for (const auto& s : v) n = std::min(n, s.precision());
    return n;
}

}  // namespace

JacobianData jacobian_data(const PolyMap& f) {
    const std::size_t m = f.source_dim();
    const std::size_t n = f.target_dim();
    if (n == 0 || n > m)
        throw Error(ErrorKind::arity_mismatch, "need 1 <= n <= m equations, got n = " + std::to_string(n) +
                                                   ", m = " + std::to_string(m));
    if (f.split != m - n)
        throw Error(ErrorKind::arity_mismatch, "the x-block must have m - n = " + std::to_string(m - n) +
                                                   " variables, split is " + std::to_string(f.split));
    JacobianData out;
    out.b.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.b[i].push_back(f.eqs[i].derivative(f.split + j));
    out.xi = determinant(out.b, f.ring, m);
    if (out.xi.is_zero()) throw Error(ErrorKind::degenerate_xi, "det of the y-Jacobian is zero");

    out.b_hat.assign(n, std::vector<MPoly>(n, MPoly(f.ring, m)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Cofactor of entry (j, i).
            PolyMatrix minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<MPoly> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(out.b[r][c]);
                minor.push_back(std::move(row));
            }
            MPoly cof = determinant(minor, f.ring, m);
            out.b_hat[i][j] = (i + j) % 2 == 0 ? cof : -cof;
        }
    }
    if (!is_scalar(multiply(out.b, out.b_hat, f.ring, m), out.xi) ||
        !is_scalar(multiply(out.b_hat, out.b, f.ring, m), out.xi))
        throw Error(ErrorKind::internal, "adjugate fails the Cramer identity");
    return out;
}

SeriesPoly::SeriesPoly(Ring ring, std::size_t nvars, std::size_t precision)
    : ring_(std::move(ring)), nvars_(nvars), precision_(precision) {}

bool SeriesPoly::is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

long SeriesPoly::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_)
        if (!c.is_zero()) d = std::max(d, static_cast<long>(total_degree(e)));
    return d;
}

void SeriesPoly::add_term(const Exponents& e, const TruncatedSeries& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::arity_mismatch, "exponent vector of the wrong length");
    auto it = terms_.find(e);
    if (it == terms_.end())
        terms_.emplace(e, c.truncated(std::min(precision_, c.precision())));
    else
        it->second = (it->second + c).truncated(precision_);
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& b) {
    if (b.nvars_ != nvars_) throw Error(ErrorKind::arity_mismatch, "adding polynomials in different variables");
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

SeriesPoly SeriesPoly::scaled(const TruncatedSeries& s) const {
    SeriesPoly out(ring_, nvars_, std::min(precision_, s.precision()));
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
}

SeriesPoly SeriesPoly::truncated(std::size_t precision) const {
    SeriesPoly out(ring_, nvars_, std::min(precision, precision_));
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
}

TruncatedSeries SeriesPoly::evaluate(std::span<const TruncatedSeries> v) const {
    if (v.size() != nvars_)
        throw Error(ErrorKind::arity_mismatch, "expected " + std::to_string(nvars_) + " arguments");
    std::size_t n = precision_;
    for (const auto& s : v) n = std::min(n, s.precision());
    std::vector<std::vector<TruncatedSeries>> powers(nvars_);
    TruncatedSeries acc(ring_, n);
    for (const auto& [e, c] : terms_) {
        TruncatedSeries term = c.truncated(n);
        for (std::size_t j = 0; j < nvars_; ++j) {
            if (e[j] == 0) continue;
            auto& pw = powers[j];
            if (pw.empty()) pw.push_back(v[j].truncated(n));
            while (pw.size() < e[j]) pw.push_back(pw.back() * pw.front());
            term = term * pw[e[j] - 1];
        }
        acc += term;
    }
    return acc;
}

std::vector<TruncatedSeries> evaluate(const SeriesPolyMap& h, std::span<const TruncatedSeries> v) {
    std::vector<TruncatedSeries> out;
    out.reserve(h.size());
    for (const auto& p : h) out.push_back(p.evaluate(v));
    return out;
}

ArcPoint::ArcPoint(const PolyMap& f, const JacobianData& jac, std::vector<TruncatedSeries> x)
    : x_(std::move(x)) {
    if (x_.size() != f.source_dim())
        throw Error(ErrorKind::arity_mismatch, "arc has " + std::to_string(x_.size()) + " components, map needs " +
                                                   std::to_string(f.source_dim()));
    for (const auto& c : x_)
        if (!(c.ring() == f.ring)) throw Error(ErrorKind::mixed_rings, "arc and map over different rings");
    precision_ = x_.empty() ? 1 : min_precision(x_);
    const std::size_t n = f.target_dim();
    for (const auto& eq : f.eqs) fx_.push_back(eval_along(eq, x_, precision_));
    bx_.assign(n, {});
    bhx_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bx_[i].push_back(eval_along(jac.b[i][j], x_, precision_));
            bhx_[i].push_back(eval_along(jac.b_hat[i][j], x_, precision_));
        }
    xix_ = eval_along(jac.xi, x_, precision_);
}

std::vector<std::map<std::size_t, SeriesPoly>> taylor_pieces(const PolyMap& f, const ArcPoint& x) {
    const std::size_t m = f.source_dim();
    const std::size_t n = f.target_dim();
    const std::size_t split = f.split;
    const std::size_t prec = x.precision();
    const Ring& ring = f.ring;

    std::vector<std::vector<TruncatedSeries>> powers(m);
    auto power = [&](std::size_t i, std::uint32_t k) {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(TruncatedSeries::constant(ring.one(), prec));
        while (pw.size() <= k) pw.push_back(pw.back() * x.x()[i].truncated(prec));
        return pw[k];
    };

    std::vector<std::map<std::size_t, SeriesPoly>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [e, c] : f.eqs[i].terms()) {
            TruncatedSeries base = TruncatedSeries::constant(c, prec);
            for (std::size_t v = 0; v < split; ++v)
                if (e[v] != 0) base = base * power(v, e[v]);
            // Expand prod_j (y_j + w_j)^beta_j over all gamma <= beta.
            Exponents gamma(n, 0);
            while (true) {
                TruncatedSeries coeff = base;
                std::int64_t binom = 1;
                std::size_t k = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    const std::uint32_t beta = e[split + j];
                    binom *= binomial(beta, gamma[j]);
                    if (beta > gamma[j]) coeff = coeff * power(split + j, beta - gamma[j]);
                    k += gamma[j];
                }
                coeff *= ring.from_int(binom);
                auto it = out[i].try_emplace(k, ring, n, prec).first;
                it->second.add_term(gamma, coeff);

                std::size_t j = 0;
                while (j < n && gamma[j] == e[split + j]) gamma[j++] = 0;
                if (j == n) break;
                ++gamma[j];
            }
        }
    }
    return out;
}

SeriesPolyMap taylor_H(const PolyMap& f, const ArcPoint& x) {
    const std::size_t n = f.target_dim();
    const std::size_t prec = x.precision();
    const TruncatedSeries t_xi = x.xi().shifted(1).truncated(prec);
    auto pieces = taylor_pieces(f, x);
    SeriesPolyMap out;
    for (std::size_t i = 0; i < n; ++i) {
        SeriesPoly h(f.ring, n, prec);
        TruncatedSeries weight = TruncatedSeries::constant(f.ring.one(), prec);
        std::size_t at = 2;
        for (const auto& [k, piece] : pieces[i]) {
            if (k < 2) continue;
            while (at < k) {
                weight = weight * t_xi;
                ++at;
            }
            h += piece.scaled(weight);
        }
        out.push_back(std::move(h));
    }
    return out;
}

SeriesPolyMap lifting_map(const PolyMap& f, const ArcPoint& x) {
    const std::size_t n = f.target_dim();
    SeriesPolyMap hh = taylor_H(f, x);
    SeriesPolyMap out;
    for (std::size_t i = 0; i < n; ++i) {
        SeriesPoly h(f.ring, n, x.precision());
        for (std::size_t j = 0; j < n; ++j) h += hh[j].scaled(x.b_hat()[i][j]);
        out.push_back(std::move(h));
    }
    return out;
}

std::variant<std::vector<TruncatedSeries>, NotInN1> check_congruence(const PolyMap& f, const ArcPoint& x) {
    const std::size_t n = f.target_dim();
    const TruncatedSeries denom = (x.xi() * x.xi()).shifted(1);
    std::vector<TruncatedSeries> v1;
    for (std::size_t i = 0; i < n; ++i) {
        TruncatedSeries a(f.ring, x.precision());
        for (std::size_t j = 0; j < n; ++j) a += x.b_hat()[i][j] * x.f()[j];
        LaurentSeries q = laurent_divide(a, denom);
        if (!q.in_power_series()) return NotInN1{i, *q.valuation()};
        v1.push_back(-q.to_power_series());
    }
    const std::size_t prec = min_precision(v1);
    for (auto& v : v1) v = v.truncated(prec);
    return v1;
}

FixedPoint fixed_point_solve(const SeriesPolyMap& h, const std::vector<TruncatedSeries>& v1,
                             std::size_t precision) {
    const std::size_t n = v1.size();
    if (h.size() != n) throw Error(ErrorKind::arity_mismatch, "h and v1 have different lengths");
    for (const auto& p : h)
        if (p.nvars() != n) throw Error(ErrorKind::arity_mismatch, "h is not a self-map");
    if (precision == 0) throw Error(ErrorKind::invalid_argument, "precision must be >= 1");
    std::vector<TruncatedSeries> target;
    for (const auto& v : v1) {
        if (v.precision() < precision)
            throw Error(ErrorKind::insufficient_precision, "v1 is known to fewer than N coefficients");
        target.push_back(v.truncated(precision));
    }
    for (const auto& p : h)
        if (p.precision() < precision)
            throw Error(ErrorKind::insufficient_precision, "h is known to fewer than N coefficients");

    std::vector<TruncatedSeries> v = target;
    for (std::size_t j = 0; j <= precision; ++j) {
        auto hv = evaluate(h, v);
        std::vector<TruncatedSeries> next;
        bool stable = true;
        for (std::size_t i = 0; i < n; ++i) {
            next.push_back((target[i] - hv[i].shifted(1)).truncated(precision));
            if (!agree_below(v[i], next[i], std::min(j + 1, precision)))
                throw Error(ErrorKind::internal, "fixed-point iteration is not contracting");
            stable = stable && next[i] == v[i];
        }
        if (stable) return FixedPoint{std::move(next), j + 1};
        v = std::move(next);
    }
    throw Error(ErrorKind::internal, "fixed-point iteration did not stabilise");
}

std::vector<TruncatedSeries> nu0_forward(const PolyMap& f, const ArcPoint& x,
                                         const std::vector<TruncatedSeries>& v0) {
    SeriesPolyMap h = lifting_map(f, x);
    auto hv = evaluate(h, v0);
    std::vector<TruncatedSeries> out;
    for (std::size_t i = 0; i < v0.size(); ++i) {
        const std::size_t prec = std::min(v0[i].precision(), x.precision());
        out.push_back((v0[i].truncated(prec) + hv[i].shifted(1)).truncated(prec));
    }
    return out;
}

ArcLift arc_lift(const PolyMap& f, const std::vector<TruncatedSeries>& x) {
    const JacobianData jac = jacobian_data(f);
    const ArcPoint point(f, jac, x);
    auto congruence = check_congruence(f, point);
    if (auto* bad = std::get_if<NotInN1>(&congruence))
        throw Error(ErrorKind::not_in_n1,
                    "Bhat f / (t xi^2) has a pole in component " + std::to_string(bad->component),
                    "component " + std::to_string(bad->component) + ", valuation " + std::to_string(bad->valuation));
    ArcLift out;
    out.v1 = std::get<std::vector<TruncatedSeries>>(std::move(congruence));
    out.precision = out.v1.front().precision();
    const std::size_t prec = out.precision;

    SeriesPolyMap h = lifting_map(f, point);
    for (auto& p : h) p = p.truncated(prec);
    out.v0 = fixed_point_solve(h, out.v1, prec).v0;

    const TruncatedSeries t_xi = point.xi().shifted(1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        TruncatedSeries c = x[i].truncated(prec);
        if (i >= f.split) c = (c + t_xi * out.v0[i - f.split]).truncated(prec);
        out.x_new.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < f.target_dim(); ++i) {
        TruncatedSeries r = eval_along(f.eqs[i], out.x_new, prec);
        if (!r.is_zero())
            throw Error(ErrorKind::residual_nonzero, "lifted arc is not a solution in component " + std::to_string(i),
                        "order " + std::to_string(*r.valuation()));
    }
    out.residual_order = prec;
    return out;
}

}  // namespace arclift
