#pragma once

#include <algorithm>
#include <optional>

#include "kgh/alternation.hpp"
#include "kgh/defects.hpp"

namespace kgh {

/// Lower bounds on chi(KG^r_s(H)) from the three combinatorial parameters.
struct BoundValues {
    DefectReport cd;
    DefectReport ecd;
    std::optional<AltResult> alt;
    /// ceil(cd / (r-1)), the Dol'nikov-Kriz / Ziegler bound.
    long long cd_bound = 0;
    /// ceil(ecd / (r-1)).
    long long ecd_bound = 0;
    /// ceil((n - alt^r) / (r-1)); only for s = (1,...,1) and n within the alt guard.
    std::optional<long long> alt_bound;
    long long max_bound = 0;
    int mu = 2;
    /// The cd and ecd bounds are theorems only when max s_i < mu(r).
    bool defect_bounds_applicable = true;
};

inline BoundValues bound_values(const Hypergraph& h, int r, const SVector& s,
                                const Guards& guards = {}) {
    BoundValues b;
    b.cd = cd(h, r, s, guards);
    b.ecd = ecd(h, r, s, guards);
    b.mu = mu(r);
    b.defect_bounds_applicable = s.max() < b.mu;
    b.cd_bound = ceil_div(b.cd.value, r - 1);
    b.ecd_bound = ceil_div(b.ecd.value, r - 1);
    b.max_bound = b.defect_bounds_applicable ? std::max(b.cd_bound, b.ecd_bound) : 0;
    if (s.all_ones() && h.n() <= guards.max_alt_n) {
        b.alt = alt_r(h, r, guards);
        b.alt_bound = ceil_div(h.n() - b.alt->value, r - 1);
        b.max_bound = std::max(b.max_bound, *b.alt_bound);
    }
    return b;
}

} // namespace kgh
