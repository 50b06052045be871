#pragma once

// Newton's method for arcs: Jacobian data of a polynomial map in its
// y-block, the Taylor remainder H, the congruence that defines N1, the
// contraction solver and the full lifting pipeline.

#include <map>
#include <span>
#include <variant>
#include <vector>

#include "arclift/polymap.hpp"
#include "arclift/series.hpp"

namespace arclift {

using PolyMatrix = std::vector<std::vector<MPoly>>;

/// B = (d f_i / d y_j), its adjugate and xi = det B, checked to satisfy
/// B Bhat = Bhat B = xi Id.
struct JacobianData {
    PolyMatrix b;
    PolyMatrix b_hat;
    MPoly xi;
};

/// ArityMismatch unless 1 <= n <= m and split = m - n; DegenerateXi when
/// det B is the zero polynomial.
JacobianData jacobian_data(const PolyMap& f);

/// Polynomial in n variables whose coefficients are truncated series.
class SeriesPoly {
public:
    using TermMap = std::map<Exponents, TruncatedSeries>;

    SeriesPoly() = default;
    SeriesPoly(Ring ring, std::size_t nvars, std::size_t precision);

    const Ring& ring() const { return ring_; }
    std::size_t nvars() const { return nvars_; }
    std::size_t precision() const { return precision_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const;
    /// Largest total degree of a nonzero term, -1 for zero.
    long degree() const;

    void add_term(const Exponents& e, const TruncatedSeries& c);
    SeriesPoly& operator+=(const SeriesPoly& b);
    /// Every coefficient multiplied by s.
    SeriesPoly scaled(const TruncatedSeries& s) const;
    SeriesPoly truncated(std::size_t precision) const;

    TruncatedSeries evaluate(std::span<const TruncatedSeries> v) const;

private:
    Ring ring_;
    std::size_t nvars_ = 0;
    std::size_t precision_ = 0;
    TermMap terms_;
};

using SeriesPolyMap = std::vector<SeriesPoly>;

std::vector<TruncatedSeries> evaluate(const SeriesPolyMap& h, std::span<const TruncatedSeries> v);

/// An arc with f, B, Bhat and xi evaluated along it.
class ArcPoint {
public:
    /// All components share one ring (the map's); precision is the minimum.
    ArcPoint(const PolyMap& f, const JacobianData& jac, std::vector<TruncatedSeries> x);

    const std::vector<TruncatedSeries>& x() const { return x_; }
    std::size_t precision() const { return precision_; }
    const std::vector<TruncatedSeries>& f() const { return fx_; }
    const std::vector<std::vector<TruncatedSeries>>& b() const { return bx_; }
    const std::vector<std::vector<TruncatedSeries>>& b_hat() const { return bhx_; }
    const TruncatedSeries& xi() const { return xix_; }

private:
    std::vector<TruncatedSeries> x_;
    std::size_t precision_ = 0;
    std::vector<TruncatedSeries> fx_;
    std::vector<std::vector<TruncatedSeries>> bx_;
    std::vector<std::vector<TruncatedSeries>> bhx_;
    TruncatedSeries xix_;
};

/// Homogeneous pieces of f(x + w) in w = (w_1..w_n) on the y-block:
/// component i is {k -> B_k(x; w)} with B_0 = f(x) and B_1 = B(x; w).
std::vector<std::map<std::size_t, SeriesPoly>> taylor_pieces(const PolyMap& f, const ArcPoint& x);

/// H(x; v) = sum_{k>=2} (t xi)^(k-2) B_k(x; v), so that
/// f(x + t xi v) = f(x) + t xi B(x; v) + t^2 xi^2 H(x; v).
SeriesPolyMap taylor_H(const PolyMap& f, const ArcPoint& x);

/// h(v) = Bhat(x; H(x; v)).
SeriesPolyMap lifting_map(const PolyMap& f, const ArcPoint& x);

struct NotInN1 {
    std::size_t component = 0;
    long valuation = 0;  // of Bhat f / (t xi^2) in that component
};

/// v1 = -Bhat(x; f(x)) / (t xi^2) when every component is a power series.
/// The sign makes Bhat f + t xi^2 v0 + t^2 xi^2 Bhat H(v0) = 0 read as
/// v0 + t h(v0) = v1. All components share the certified precision N'.
std::variant<std::vector<TruncatedSeries>, NotInN1> check_congruence(const PolyMap& f,
                                                                      const ArcPoint& x);

struct FixedPoint {
    std::vector<TruncatedSeries> v0;
    std::size_t iterations = 0;
};

/// Solves v0 + t h(v0) = v1 mod t^N by v <- v1 - t h(v) from v = v1. Each
/// step is checked to fix one more coefficient; Internal if one does not.
FixedPoint fixed_point_solve(const SeriesPolyMap& h, const std::vector<TruncatedSeries>& v1,
                             std::size_t precision);

/// v1 = v0 + t Bhat(x; H(x; v0)).
std::vector<TruncatedSeries> nu0_forward(const PolyMap& f, const ArcPoint& x,
                                         const std::vector<TruncatedSeries>& v0);

struct ArcLift {
    std::vector<TruncatedSeries> v1;
    std::vector<TruncatedSeries> v0;
    std::vector<TruncatedSeries> x_new;
    std::size_t precision = 0;       // N'
    std::size_t residual_order = 0;  // f(x_new) = 0 mod t^residual_order
};

/// x_new = x + t xi(x) v0 on the y-block with f(x_new) = 0 mod t^N'.
/// NotInN1 (as an Error carrying the component) when the congruence fails;
/// ResidualNonzero if the lifted arc is not a solution.
ArcLift arc_lift(const PolyMap& f, const std::vector<TruncatedSeries>& x);

}  // namespace arclift
