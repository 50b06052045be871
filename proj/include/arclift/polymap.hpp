#pragma once

#include <string>
#include <vector>

#include "arclift/mpoly.hpp"

namespace arclift {

/// f = (f_1..f_n) : A^m -> A^n. The first `split` variables form the
/// x-block, the remaining m - split the y-block that Newton lifting moves.
struct PolyMap {
    Ring ring;
    std::vector<std::string> vars;
    std::size_t split = 0;
    std::vector<MPoly> eqs;

    /// Checks arities and rings (ArityMismatch / MixedRings).
    static PolyMap make(Ring ring, std::vector<std::string> vars, std::size_t split,
                        std::vector<MPoly> eqs);

    std::size_t source_dim() const { return vars.size(); }
    std::size_t target_dim() const { return eqs.size(); }

    /// this o inner; inner's target must be this map's source.
    PolyMap compose(const PolyMap& inner) const;
};

}  // namespace arclift
