#pragma once

// Strict Weierstrass preparation and division over local Artinian rings,
// the maps alpha_d(q, a, v) = (q, qv + a) and beta_d(q, u) = uq, the
// q | t^n pairing and the kernel fibres of alpha_d over a field.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "arclift/mpoly.hpp"
#include "arclift/series.hpp"
#include "arclift/upoly.hpp"

namespace arclift {

/// x = u * q with u a unit series and q a strict monic polynomial.
///
/// The factorization is the exact one of the degree-(N-1) representative of
/// x, so u * q == x holds mod t^N. Coefficients of u from index
/// `certified_precision` = N - d*e on depend on the unknown tail of x.
struct StrictFactorization {
    TruncatedSeries u;
    MonicPoly q;
    std::size_t certificate = 0;  // q divides t^certificate (d * e)
    std::size_t precision = 0;    // N
    std::size_t certified_precision = 0;
    int rounds = 0;               // correction rounds used
};

/// m-adic Newton iteration on q: with x = u q + r (Euclidean division),
/// q <- q + (u^-1 r mod q). The error moves from m^k to m^2k, so the loop
/// ends after at most ceil(log2 e) + 1 rounds.
///
/// Errors: NonLocalRing, Indeterminate (degenerate x), InsufficientPrecision
/// when N < d (e + 1).
StrictFactorization strict_prepare(const TruncatedSeries& x);

struct WeierstrassDivision {
    TruncatedSeries h;  // precision N - d
    LowPoly a;
    bool exact = true;  // false when q is not strict
};

/// f = q h + a with deg a < d. InsufficientPrecision when N < d (e + 1).
WeierstrassDivision weierstrass_divide(const TruncatedSeries& f, const MonicPoly& q);

struct NoDivide {
    LowPoly remainder;  // t^n mod q, nonzero
};

/// The monic q' with q q' = t^n, or the nonzero remainder of t^n mod q.
std::variant<MonicPoly, NoDivide> divides_power_of_t(const MonicPoly& q, std::size_t n);

/// q v + a.
TruncatedSeries alpha_eval(const MonicPoly& q, const LowPoly& a, const TruncatedSeries& v);
/// u q; NotAUnit when u is not a unit series.
TruncatedSeries beta_eval(const MonicPoly& q, const TruncatedSeries& u);

struct FiberVector {
    LowPoly a;
    TruncatedSeries v;  // q v + a = 0
};

/// Basis of the kernel of (a, v) -> q v + a over a field: one pair
/// (-t^i, t^i / q) for each i from the t-multiplicity of q up to d - 1.
std::vector<FiberVector> s_fiber_basis(const MonicPoly& q, std::size_t precision);

/// Vanishing order at a point of a series whose coefficients are
/// polynomials in parameters; nullopt when every known coefficient vanishes.
std::optional<std::size_t> ord_at_point(std::span<const MPoly> coefficients,
                                        std::span<const RingElement> point);

}  // namespace arclift
