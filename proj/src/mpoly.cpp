#include "arclift/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace arclift {

std::size_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

bool DegLexDescending::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

MPoly::MPoly(Ring ring, std::size_t nvars) : ring_(std::move(ring)), nvars_(nvars) {}

MPoly MPoly::constant(const RingElement& c, std::size_t nvars) {
    MPoly p(c.ring(), nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(const Ring& ring, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw Error(ErrorKind::arity_mismatch, "variable index out of range");
    MPoly p(ring, nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, ring.one());
    return p;
}

long MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(arclift::total_degree(terms_.begin()->first));
}

std::uint32_t MPoly::degree_in(std::size_t i) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(i));
    return d;
}

RingElement MPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
}

void MPoly::add_term(const Exponents& e, const RingElement& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::arity_mismatch, "exponent vector of wrong length");
    if (!(c.ring() == ring_))
        throw Error(ErrorKind::mixed_rings, "coefficient from another ring", to_string(c));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MPoly::check_arity(std::size_t n) const {
    if (n != nvars_)
        throw Error(ErrorKind::arity_mismatch,
                    "expected " + std::to_string(nvars_) + " values, got " + std::to_string(n));
}

MPoly& MPoly::operator+=(const MPoly& b) {
    check_arity(b.nvars_);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& b) {
    check_arity(b.nvars_);
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_arity(b.nvars_);
    MPoly out(a.ring_, a.nvars_);
    Exponents s(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = ea[i] + eb[i];
            out.add_term(s, ca * cb);
        }
    return out;
}

MPoly operator*(MPoly a, const RingElement& c) {
    MPoly out(a.ring_, a.nvars_);
    for (const auto& [e, x] : a.terms_) out.add_term(e, x * c);
    return out;
}

MPoly operator-(const MPoly& a) {
    MPoly out(a.ring_, a.nvars_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, -c);
    return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_.size() == b.terms_.size() &&
           std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                      [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

MPoly MPoly::derivative(std::size_t var) const {
    if (var >= nvars_) throw Error(ErrorKind::arity_mismatch, "variable index out of range");
    MPoly out(ring_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        out.add_term(d, c * ring_.from_int(e[var]));
    }
    return out;
}

RingElement MPoly::evaluate_at(std::span<const RingElement> point) const {
    return evaluate<RingElement>(point, [](const RingElement& c) { return c; });
}

MPoly MPoly::substitute(std::span<const MPoly> images) const {
    check_arity(images.size());
    if (images.empty()) return *this;
    const std::size_t target = images[0].nvars();
    return evaluate<MPoly>(images, [target](const RingElement& c) { return MPoly::constant(c, target); });
}

MPoly pow(const MPoly& p, std::uint32_t k) {
    MPoly result = MPoly::constant(p.ring().one(), p.nvars());
    MPoly base = p;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

}  // namespace arclift
