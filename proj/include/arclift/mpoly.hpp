#pragma once

// Sparse multivariate polynomials over a test ring, used for the equations
// of a polynomial map and for series coefficients that depend on parameters.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "arclift/ring.hpp"

namespace arclift {

/// Degree-then-lex, higher monomials first (the printing order).
struct DegLexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

std::size_t total_degree(const Exponents& e);

class MPoly {
public:
    using TermMap = std::map<Exponents, RingElement, DegLexDescending>;

    MPoly() = default;
    MPoly(Ring ring, std::size_t nvars);

    static MPoly constant(const RingElement& c, std::size_t nvars);
    static MPoly variable(const Ring& ring, std::size_t nvars, std::size_t index);

    const Ring& ring() const { return ring_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    long total_degree() const;
    /// Largest exponent of variable i.
    std::uint32_t degree_in(std::size_t i) const;
    RingElement coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const RingElement& c);

    MPoly& operator+=(const MPoly& b);
    MPoly& operator-=(const MPoly& b);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const RingElement& c);
    friend MPoly operator-(const MPoly& a);
    friend bool operator==(const MPoly& a, const MPoly& b);

    MPoly derivative(std::size_t var) const;

    /// Evaluation in any commutative algebra T (needs T + T and T * T);
    /// `lift` maps coefficients into T.
    template <class T, class Lift>
    T evaluate(std::span<const T> point, Lift&& lift) const;

    RingElement evaluate_at(std::span<const RingElement> point) const;
    /// Composition: variable i replaced by images[i].
    MPoly substitute(std::span<const MPoly> images) const;

private:
    void check_arity(std::size_t n) const;

    Ring ring_;
    std::size_t nvars_ = 0;
    TermMap terms_;
};

MPoly pow(const MPoly& p, std::uint32_t k);

template <class T, class Lift>
T MPoly::evaluate(std::span<const T> point, Lift&& lift) const {
    check_arity(point.size());
    std::vector<std::vector<T>> powers(nvars_);
    T acc = lift(ring_.zero());
    for (const auto& [e, c] : terms_) {
        T term = lift(c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(point[i]);
            while (pw.size() < e[i]) pw.push_back(pw.back() * point[i]);
            term = term * pw[e[i] - 1];
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace arclift
