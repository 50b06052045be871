#pragma once

// Arcs reduced modulo a monic polynomial: points of (R[t]/q)^m identified
// with A_d^m by Euclidean division, the induced maps on them, and the
// two-term expansion g(xbar + t q x') = gbar + t q g'.

#include <vector>

#include "arclift/polymap.hpp"
#include "arclift/series.hpp"
#include "arclift/upoly.hpp"

namespace arclift {

struct ModQVector {
    MonicPoly q;
    std::vector<LowPoly> comps;  // each of bound deg q

    friend bool operator==(const ModQVector&, const ModQVector&) = default;
};

struct ModQReduction {
    LowPoly remainder;
    /// Independent of the unknown tail of x: q strict over a local ring and
    /// N >= d (e + 1).
    bool exact = false;
};

/// Remainder of the truncation of x by q. InsufficientPrecision if N < deg q.
ModQReduction mod_q_reduce(const TruncatedSeries& x, const MonicPoly& q);

/// Evaluates f componentwise in R[t]/(q).
ModQVector map_on_Qd(const PolyMap& f, const ModQVector& xbar);

struct Expansion {
    ModQVector gbar;                   // over t q, bound deg q + 1
    std::vector<TruncatedSeries> gprime;  // precision N - deg q - 1
};

/// w = g(xbar + t q x') split by Euclidean division by t q.
Expansion expand_around(const PolyMap& g, const ModQVector& xbar,
                        const std::vector<TruncatedSeries>& xprime);

/// t * q as a monic polynomial of degree deg q + 1.
MonicPoly times_t(const MonicPoly& q);

}  // namespace arclift
