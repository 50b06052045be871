#include "arclift/polymap.hpp"

namespace arclift {

PolyMap PolyMap::make(Ring ring, std::vector<std::string> vars, std::size_t split, std::vector<MPoly> eqs) {
    if (split > vars.size())
        throw Error(ErrorKind::arity_mismatch, "split exceeds the number of variables");
    for (const auto& f : eqs) {
        if (f.nvars() != vars.size())
            throw Error(ErrorKind::arity_mismatch, "equation over the wrong number of variables");
        if (!(f.ring() == ring)) throw Error(ErrorKind::mixed_rings, "equation over another ring");
    }
    return PolyMap{std::move(ring), std::move(vars), split, std::move(eqs)};
}

PolyMap PolyMap::compose(const PolyMap& inner) const {
    if (inner.target_dim() != source_dim())
        throw Error(ErrorKind::arity_mismatch, "cannot compose: inner target dimension " +
                                                   std::to_string(inner.target_dim()) + " vs " +
                                                   std::to_string(source_dim()));
    std::vector<MPoly> out;
    out.reserve(eqs.size());
    for (const auto& f : eqs) out.push_back(f.substitute(inner.eqs));
    std::size_t split = std::min(inner.split, inner.source_dim());
    return PolyMap{ring, inner.vars, split, std::move(out)};
}

}  // namespace arclift
