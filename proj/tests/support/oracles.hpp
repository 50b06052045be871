#pragma once

// Reference computations used only by the tests. None of them call the
// library's preparation, division or lifting code.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "arclift/ring.hpp"
#include "arclift/series.hpp"

namespace oracle {

using arclift::Ring;
using arclift::RingElement;
using arclift::TruncatedSeries;

using Rng = std::mt19937_64;

RingElement random_element(const Ring& r, Rng& rng);
RingElement random_unit(const Ring& r, Rng& rng);
/// Element of the maximal ideal (zero over a field).
RingElement random_nilpotent(const Ring& r, Rng& rng);
/// c_i nilpotent below d, c_d a unit, the rest arbitrary.
TruncatedSeries random_nondegenerate(const Ring& r, std::size_t d, std::size_t n, Rng& rng);
TruncatedSeries random_series(const Ring& r, std::size_t n, Rng& rng);

/// Product of two coefficient vectors, schoolbook.
std::vector<RingElement> convolve(const std::vector<RingElement>& a, const std::vector<RingElement>& b);

/// Solves A x = b over a local ring by elimination on unit pivots.
/// nullopt when some column has no unit pivot.
std::optional<std::vector<RingElement>> solve_local(std::vector<std::vector<RingElement>> a,
                                                    std::vector<RingElement> b);

/// Rank over a field.
std::size_t rank(std::vector<std::vector<RingElement>> rows);

struct Factorization {
    std::vector<RingElement> u;    // N - d coefficients
    std::vector<RingElement> low;  // q_0 .. q_{d-1}
};

/// The exact factorization u * (t^d + low) = x_0 + ... + x_{N-1} t^{N-1}
/// found by Newton's method on the bilinear system in the N unknowns.
std::optional<Factorization> factor_by_newton(const std::vector<RingElement>& x, std::size_t d);

/// Catalan numbers C_0 .. C_{n-1} from C_{k+1} = sum C_i C_{k-i}.
std::vector<std::int64_t> catalan(std::size_t n);

/// All rings used by the randomized suites.
std::vector<Ring> test_rings();

}  // namespace oracle
