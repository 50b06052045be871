#pragma once

// Text forms of every value the command line reads or prints. Printing is
// canonical (terms degree-then-lex, coefficients in normal form) and every
// printed value parses back to an equal one.
//
//   ring         Fp(5) | Q | Zmod(9) | Artin(Fp(5); eps; 2) | Artin(Q; s1, s2; 3)
//   element      integer expression in the generators: 3*eps^2 - 1/2
//   series       [c0, c1, ...] + O(t^N), or a polynomial in t with + O(t^N)
//   laurent      t^(k) * ([c0, ...] + O(t^M))
//   monic        t^2 + (1 + eps)*t + 3*eps
//   map          vars: [x1, y1]; split: 1; eqs: [y1^2 - x1^3]

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arclift/jets.hpp"
#include "arclift/mpoly.hpp"
#include "arclift/polymap.hpp"
#include "arclift/series.hpp"
#include "arclift/upoly.hpp"
#include "arclift/weierstrass.hpp"

namespace arclift::text {

Ring parse_ring(std::string_view s);

RingElement parse_element(const Ring& ring, std::string_view s);

/// Polynomial in `vars`; ring generators not shadowed by a variable are
/// constants. Division only by invertible constants.
MPoly parse_polynomial(const Ring& ring, const std::vector<std::string>& vars, std::string_view s);
std::string format_polynomial(const MPoly& p, const std::vector<std::string>& vars);

/// `default_precision` is used when a polynomial in t carries no O(t^N).
TruncatedSeries parse_series(const Ring& ring, std::string_view s,
                             std::optional<std::size_t> default_precision = std::nullopt);
std::string format_series(const TruncatedSeries& s);

LaurentSeries parse_laurent(const Ring& ring, std::string_view s);
std::string format_laurent(const LaurentSeries& s);

MonicPoly parse_monic(const Ring& ring, std::string_view s);
std::string format_monic(const MonicPoly& q);

/// Polynomial in t of degree < bound.
LowPoly parse_low(const Ring& ring, std::string_view s, std::size_t bound);
std::string format_low(const LowPoly& a);

struct FactorizationRecord {
    TruncatedSeries u;
    MonicPoly q;
    std::size_t n = 0;  // q divides t^n
    std::size_t precision = 0;

    friend bool operator==(const FactorizationRecord&, const FactorizationRecord&) = default;
};

/// {u: <series>, q: <monic>, n: <int>, N: <int>}
std::string format_factorization(const FactorizationRecord& f);
FactorizationRecord parse_factorization(const Ring& ring, std::string_view s);

/// {q: <monic>, comps: [<poly>, ...]}
std::string format_modq(const ModQVector& v);
ModQVector parse_modq(const Ring& ring, std::string_view s);

/// vars: [..]; split: k; eqs: [..]. Without `split` the x-block is the
/// first m - n variables.
PolyMap parse_map(const Ring& ring, std::string_view s);
std::string format_map(const PolyMap& f);

/// Components separated by ';'.
std::vector<TruncatedSeries> parse_arc(const Ring& ring, std::string_view s,
                                       std::optional<std::size_t> default_precision = std::nullopt);

/// Splits on `sep` outside (), [] and {}; items are trimmed.
std::vector<std::string> split_top_level(std::string_view s, char sep);
std::string_view trim(std::string_view s);

}  // namespace arclift::text
