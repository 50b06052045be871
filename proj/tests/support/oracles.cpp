#include "oracles.hpp"

#include <algorithm>

#include "arclift/mpoly.hpp"

namespace oracle {

using namespace arclift;

namespace {

RingElement monomial(const Ring& r, const Exponents& e) {
    RingElement m = r.one();
    for (std::size_t i = 0; i < e.size(); ++i) m *= pow(r.generator(i), e[i]);
    return m;
}

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

RingElement random_base(const RingDescriptor& d, const Ring& r, Rng& rng) {
    const bool rational = d.kind == RingKind::rationals || (d.kind == RingKind::artinian_local && d.modulus == 0);
    if (rational) return r.from_rational(mpq_class(uniform(rng, -9, 9), uniform(rng, 1, 5)));
    return r.from_int(uniform(rng, 0, d.modulus - 1));
}

}  // namespace

RingElement random_element(const Ring& r, Rng& rng) {
    const auto& d = r.descriptor();
    if (d.kind != RingKind::artinian_local) return random_base(d, r, rng);
    RingElement out = r.zero();
    for (const auto& e : r.basis()) out += random_base(d, r, rng) * monomial(r, e);
    return out;
}

RingElement random_unit(const Ring& r, Rng& rng) {
    while (true) {
        RingElement a = random_element(r, rng);
        if (is_unit(a)) return a;
    }
}

RingElement random_nilpotent(const Ring& r, Rng& rng) {
    const auto& d = r.descriptor();
    switch (d.kind) {
        case RingKind::prime_field:
        case RingKind::rationals: return r.zero();
        case RingKind::modular_ints: {
            std::int64_t p = 2;
            while (d.modulus % p != 0) ++p;
            return r.from_int(p * uniform(rng, 0, d.modulus / p - 1));
        }
        case RingKind::artinian_local: {
            RingElement out = r.zero();
            for (const auto& e : r.basis())
                if (total_degree(e) > 0) out += random_base(d, r, rng) * monomial(r, e);
            return out;
        }
    }
    return r.zero();
}

TruncatedSeries random_nondegenerate(const Ring& r, std::size_t d, std::size_t n, Rng& rng) {
    std::vector<RingElement> c;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < d)
            c.push_back(random_nilpotent(r, rng));
        else if (i == d)
            c.push_back(random_unit(r, rng));
        else
            c.push_back(random_element(r, rng));
    }
    return TruncatedSeries(r, std::move(c));
}

TruncatedSeries random_series(const Ring& r, std::size_t n, Rng& rng) {
    std::vector<RingElement> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(random_element(r, rng));
    return TruncatedSeries(r, std::move(c));
}

std::vector<RingElement> convolve(const std::vector<RingElement>& a, const std::vector<RingElement>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<RingElement> out(a.size() + b.size() - 1, a.front().ring().zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::optional<std::vector<RingElement>> solve_local(std::vector<std::vector<RingElement>> a,
                                                    std::vector<RingElement> b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !is_unit(a[p][c])) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        const RingElement inv = invert(a[c][c]);
        for (std::size_t k = c; k < n; ++k) a[c][k] *= inv;
        b[c] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            const RingElement f = a[i][c];
            for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
            b[i] -= f * b[c];
        }
    }
    return b;
}

std::size_t rank(std::vector<std::vector<RingElement>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const RingElement inv = invert(rows[r][c]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const RingElement f = rows[i][c] * inv;
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

std::optional<Factorization> factor_by_newton(const std::vector<RingElement>& x, std::size_t d) {
    const std::size_t n = x.size();
    const Ring& r = x.front().ring();
    const std::size_t nu = n - d;
    Factorization f;
    f.low.assign(d, r.zero());
    f.u.assign(x.begin() + static_cast<long>(d), x.end());

    for (int iter = 0; iter < 32; ++iter) {
        std::vector<RingElement> q = f.low;
        q.push_back(r.one());
        auto prod = convolve(f.u, q);
        std::vector<RingElement> residual(n, r.zero());
        bool zero = true;
        for (std::size_t k = 0; k < n; ++k) {
            residual[k] = -(prod[k] - x[k]);
            zero = zero && residual[k].is_zero();
        }
        if (zero) return f;
        // Unknowns: du_0..du_{nu-1}, dq_0..dq_{d-1}.
        std::vector<std::vector<RingElement>> jac(n, std::vector<RingElement>(n, r.zero()));
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < nu; ++j)
                if (k >= j && k - j <= d) jac[k][j] = q[k - j];
            for (std::size_t i = 0; i < d; ++i)
                if (k >= i && k - i < nu) jac[k][nu + i] = f.u[k - i];
        }
        auto step = solve_local(std::move(jac), std::move(residual));
        if (!step) return std::nullopt;
        for (std::size_t j = 0; j < nu; ++j) f.u[j] += (*step)[j];
        for (std::size_t i = 0; i < d; ++i) f.low[i] += (*step)[nu + i];
    }
    return std::nullopt;
}

std::vector<std::int64_t> catalan(std::size_t n) {
    std::vector<std::int64_t> c;
    if (n == 0) return c;
    c.push_back(1);
    while (c.size() < n) {
        std::int64_t next = 0;
        const std::size_t k = c.size() - 1;
        for (std::size_t i = 0; i <= k; ++i) next += c[i] * c[k - i];
        c.push_back(next);
    }
    return c;
}

std::vector<Ring> test_rings() {
    const auto f2 = RingDescriptor::prime_field(2);
    const auto f5 = RingDescriptor::prime_field(5);
    return {
        Ring(f5),
        Ring(RingDescriptor::rationals()),
        Ring(RingDescriptor::modular_ints(9)),
        Ring(RingDescriptor::modular_ints(27)),
        Ring(RingDescriptor::artinian(f5, {"eps"}, 2)),
        Ring(RingDescriptor::artinian(f2, {"s1", "s2"}, 3)),
    };
}

}  // namespace oracle
