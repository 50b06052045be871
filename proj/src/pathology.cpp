#include "arclift/pathology.hpp"

#include <algorithm>

namespace arclift {

namespace {

void require_field(const Ring& k) {
    if (!k.is_field()) throw Error(ErrorKind::invalid_argument, "base must be a field", k.to_string());
}

void require_compatible(const ColimitElement& a, const ColimitElement& b) {
    if (a.family() != b.family())
        throw Error(ErrorKind::mixed_families, "cannot combine " + to_string(a.family()) + " and " +
                                                   to_string(b.family()) + " elements");
    if (!(a.field() == b.field())) throw Error(ErrorKind::mixed_rings, "colimit elements over different fields");
}

std::string monomial_string(std::uint32_t i, std::uint32_t j, std::size_t level) {
    std::string s;
    if (i > 0) s += i == 1 ? "q0" : "q0^" + std::to_string(i);
    if (j > 0) {
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(level);
        if (j > 1) s += "^" + std::to_string(j);
    }
    return s;
}

std::size_t rank(std::vector<std::vector<RingElement>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const RingElement inv = invert(rows[r][c]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const RingElement factor = rows[i][c] * inv;
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
        }
        ++r;
    }
    return r;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

std::string to_string(Family f) { return f == Family::V1 ? "V1" : "R1"; }

ColimitElement::ColimitElement(Family family, Ring field, std::size_t level, TermMap terms)
    : family_(family), field_(std::move(field)), level_(level), terms_(std::move(terms)) {
    require_field(field_);
    canonicalize();
}

ColimitElement ColimitElement::constant(Family family, const RingElement& c) {
    return ColimitElement(family, c.ring(), 0, {{{0, 0}, c}});
}

ColimitElement ColimitElement::q0(Family family, const Ring& field) {
    return ColimitElement(family, field, 0, {{{1, 0}, field.one()}});
}

ColimitElement ColimitElement::x(Family family, const Ring& field, std::size_t n) {
    return ColimitElement(family, field, n, {{{0, 1}, field.one()}});
}

ColimitElement ColimitElement::a0(const Ring& field) {
    return -(q0(Family::R1, field) * x(Family::R1, field, 0));
}

void ColimitElement::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        const auto [i, j] = it->first;
        const bool killed = family_ == Family::V1 && j >= 1 && i >= level_ + 1;
        if (killed || it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

ColimitElement ColimitElement::raised(std::size_t level) const {
    if (level < level_) throw Error(ErrorKind::invalid_argument, "cannot lower the level of an element");
    const auto k = static_cast<std::uint32_t>(level - level_);
    TermMap out;
    for (const auto& [mono, c] : terms_) {
        const auto [i, j] = mono;
        out.emplace(Monomial{i + j * k, j}, (j * k) % 2 == 0 ? c : -c);
    }
    return ColimitElement(family_, field_, level, std::move(out));
}

std::size_t ColimitElement::settling_level() const {
    if (family_ == Family::R1) return level_;
    // q0^i x_n^j becomes +-q0^(i+jK) x_(n+K)^j, which dies once
    // i + jK >= n + K + 1.
    std::size_t extra = 0;
    for (const auto& [mono, c] : terms_) {
        const auto [i, j] = mono;
        if (j < 2 || i >= level_ + 1) continue;
        const std::size_t gap = level_ + 1 - i;
        extra = std::max(extra, (gap + j - 2) / (j - 1));
    }
    return level_ + extra;
}

bool ColimitElement::is_zero() const { return raised(settling_level()).terms_.empty(); }

ColimitElement operator+(const ColimitElement& a, const ColimitElement& b) {
    require_compatible(a, b);
    const std::size_t level = std::max(a.level_, b.level_);
    ColimitElement out = a.raised(level);
    for (const auto& [mono, c] : b.raised(level).terms_) {
        auto it = out.terms_.find(mono);
        if (it == out.terms_.end())
            out.terms_.emplace(mono, c);
        else
            it->second += c;
    }
    out.canonicalize();
    return out;
}

ColimitElement operator-(const ColimitElement& a) {
    ColimitElement out = a;
    for (auto& [mono, c] : out.terms_) c = -c;
    return out;
}

ColimitElement operator-(const ColimitElement& a, const ColimitElement& b) { return a + (-b); }

ColimitElement operator*(const ColimitElement& a, const ColimitElement& b) {
    require_compatible(a, b);
    const std::size_t level = std::max(a.level_, b.level_);
    const ColimitElement ra = a.raised(level);
    const ColimitElement rb = b.raised(level);
    ColimitElement::TermMap out;
    for (const auto& [ma, ca] : ra.terms_)
        for (const auto& [mb, cb] : rb.terms_) {
            const ColimitElement::Monomial m{ma.first + mb.first, ma.second + mb.second};
            auto it = out.find(m);
            if (it == out.end())
                out.emplace(m, ca * cb);
            else
                it->second += ca * cb;
        }
    return ColimitElement(a.family_, a.field_, level, std::move(out));
}

bool operator==(const ColimitElement& a, const ColimitElement& b) { return decide_equal(a, b).holds; }

Decision decide_equal(const ColimitElement& a, const ColimitElement& b) {
    const ColimitElement d = a - b;
    const std::size_t level = d.settling_level();
    return Decision{level, d.raised(level).terms().empty()};
}

std::string to_string(const ColimitElement& a) {
    std::vector<std::pair<ColimitElement::Monomial, RingElement>> terms(a.terms().begin(), a.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        const auto dl = l.first.first + l.first.second;
        const auto dr = r.first.first + r.first.second;
        if (dl != dr) return dl > dr;
        return l.first.second > r.first.second;
    });
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms) {
        const bool negative = c.prints_negative();
        const RingElement mag = negative ? -c : c;
        const std::string m = monomial_string(mono.first, mono.second, a.level());
        std::string body;
        if (m.empty())
            body = to_string(mag);
        else if (mag.is_one())
            body = m;
        else
            body = to_string(mag) + "*" + m;
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

std::vector<IdentityRow> check_identities(const Ring& field, std::size_t bound, const RingElement& c) {
    require_field(field);
    if (!(c.ring() == field)) throw Error(ErrorKind::mixed_rings, "specialisation value from another ring");
    const auto v1 = Family::V1;
    const ColimitElement zero(v1, field, 0);
    const ColimitElement q0 = ColimitElement::q0(v1, field);
    std::vector<IdentityRow> rows;

    for (std::size_t m = 0; m <= bound; ++m)
        for (std::size_t n = m; n <= bound; ++n) {
            const ColimitElement prod = ColimitElement::x(v1, field, m) * ColimitElement::x(v1, field, n);
            const Decision d = decide_equal(prod, zero);
            rows.push_back({"x" + std::to_string(m) + "*x" + std::to_string(n) + " = 0", d.level, d.holds});
        }

    for (std::size_t m = 0; m <= bound; ++m)
        for (std::size_t k = 1; m + k <= bound; ++k) {
            ColimitElement rhs = ColimitElement::x(v1, field, m + k);
            for (std::size_t i = 0; i < k; ++i) rhs = rhs * q0;
            if (k % 2 == 1) rhs = -rhs;
            const Decision d = decide_equal(ColimitElement::x(v1, field, m), rhs);
            rows.push_back({"x" + std::to_string(m) + " = " + to_string(rhs), d.level, d.holds});
        }

    for (std::size_t n = 0; n <= bound; ++n) {
        const Decision d = decide_equal(ColimitElement::x(v1, field, n), zero);
        rows.push_back({"x" + std::to_string(n) + " != 0", d.level, !d.holds});
    }

    // With q0 specialised to c the level-n relation reads c^(n+1) x_n = 0.
    for (std::size_t n = 0; n <= bound; ++n) {
        const RingElement scale = pow(c, n + 1);
        rows.push_back({"x" + std::to_string(n) + " = 0 at q0 = " + to_string(c), n, is_unit(scale)});
    }
    return rows;
}

SawedCompletion sawed_completion(const Ring& field, std::size_t n) {
    require_field(field);
    if (n == 0) throw Error(ErrorKind::invalid_argument, "n must be >= 1");
    const auto r1 = Family::R1;
    const ColimitElement q0 = ColimitElement::q0(r1, field);
    ColimitElement q0n = ColimitElement::constant(r1, field.one());
    for (std::size_t i = 0; i < n; ++i) q0n = q0n * q0;
    const auto sign = [&](const ColimitElement& e) { return n % 2 == 0 ? e : -e; };

    SawedCompletion out;
    out.n = n;
    {
        // a0 = -q0 x0 = (-1)^n q0^n x_(n-1)
        ColimitElement f = sign(q0n * ColimitElement::x(r1, field, n - 1));
        const bool ok = f == ColimitElement::a0(field);
        out.generators.push_back({"a0", std::move(f), ok});
    }
    for (std::size_t j = 0; j <= n + 2; ++j) {
        // x_j = (-1)^n q0^n x_(j+n)
        ColimitElement f = sign(q0n * ColimitElement::x(r1, field, j + n));
        const bool ok = f == ColimitElement::x(r1, field, j);
        out.generators.push_back({"x" + std::to_string(j), std::move(f), ok});
    }

    // Quotient map to k[q0]/q0^n: x-terms go to 0, q0^i survives for i < n.
    auto image = [&](const ColimitElement& e) {
        std::vector<RingElement> v(n, field.zero());
        for (const auto& [mono, c] : e.terms())
            if (mono.second == 0 && mono.first < n) v[mono.first] += c;
        return v;
    };
    std::vector<std::vector<RingElement>> rows;
    ColimitElement power = ColimitElement::constant(r1, field.one());
    for (std::size_t i = 0; i <= n; ++i) {
        rows.push_back(image(power));
        if (i < n) out.basis.push_back(i == 0 ? "1" : to_string(power));
        power = power * q0;
    }
    for (const auto& g : out.generators) rows.push_back(image(g.factorization));
    out.dimension = rank(std::move(rows));
    return out;
}

BizzardCompletion bizzard_completion(std::int64_t p, std::size_t n) {
    if (!is_prime(p)) throw Error(ErrorKind::invalid_argument, "p must be prime", std::to_string(p));
    if (n == 0) throw Error(ErrorKind::invalid_argument, "n must be >= 1");
    // Synthetic division of t^n by t - p: the remainder is the value at p.
    __int128 rem = 1;
    for (std::size_t i = 0; i < n; ++i) {
        rem *= p;
        if (rem > INT64_MAX) throw Error(ErrorKind::invalid_argument, "p^n does not fit in 64 bits");
    }
    BizzardCompletion out;
    out.p = p;
    out.n = n;
    out.modulus = static_cast<std::int64_t>(rem);
    out.t_image = p % out.modulus;
    out.kills_t_minus_p = (out.t_image - p) % out.modulus == 0;
    __int128 tn = 1;
    for (std::size_t i = 0; i < n; ++i) tn = tn * out.t_image % out.modulus;
    out.kills_t_power = tn == 0;
    return out;
}

XyCounterexample xy_arc_counterexample(const Ring& field, std::size_t precision) {
    require_field(field);
    if (precision == 0) throw Error(ErrorKind::invalid_argument, "precision must be >= 1");
    const auto v1 = Family::V1;
    XyCounterexample out;
    out.precision = precision;
    out.q.push_back(ColimitElement::q0(v1, field));
    if (precision > 1) out.q.push_back(ColimitElement::constant(v1, field.one()));
    for (std::size_t k = 0; k < precision; ++k) out.x.push_back(ColimitElement::x(v1, field, k));
    for (std::size_t k = 0; k < precision; ++k) {
        ColimitElement c(v1, field, 0);
        for (std::size_t i = 0; i < out.q.size() && i <= k; ++i) c = c + out.q[i] * out.x[k - i];
        out.product.push_back(std::move(c));
    }
    out.product_zero = std::all_of(out.product.begin(), out.product.end(), [](const auto& c) { return c.is_zero(); });
    out.x_nonzero = std::any_of(out.x.begin(), out.x.end(), [](const auto& c) { return !c.is_zero(); });
    // Modulo the nilradical (x_0, x_1, ...) a coefficient is a polynomial
    // in q0; a nonzero constant survives every evaluation q0 -> c.
    out.q_nondegenerate = std::any_of(out.q.begin(), out.q.end(), [](const ColimitElement& c) {
        bool unit = false;
        for (const auto& [mono, coef] : c.terms()) {
            if (mono.second != 0) continue;
            if (mono.first != 0) return false;
            unit = true;
        }
        return unit;
    });
    return out;
}

}  // namespace arclift
