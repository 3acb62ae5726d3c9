#include "pxp/geometry.hpp"

#include <bit>

namespace pxp {

Geometry::Geometry(int legs, int rungs) : legs_(legs), rungs_(rungs) {
    const int n = sites();
    full_mask_ = (n == 64) ? ~FockState{0} : ((FockState{1} << n) - 1);
    neighbors_.assign(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= rungs_; ++j) {
        for (int a = 1; a <= legs_; ++a) {
            const int s = site_bit(j, a);
            FockState m = 0;
            if (legs_ == 2) m |= FockState{1} << site_bit(j, 3 - a);
            const int jp = j % rungs_ + 1;
            const int jm = (j + rungs_ - 2) % rungs_ + 1;
            m |= FockState{1} << site_bit(jp, a);
            m |= FockState{1} << site_bit(jm, a);
            neighbors_[static_cast<std::size_t>(s)] = m;
            if (j % 2 == 1)
                odd_mask_ |= FockState{1} << s;
            else
                even_mask_ |= FockState{1} << s;
        }
    }
}

Geometry Geometry::ladder(int rungs) { return make(2, rungs); }
Geometry Geometry::chain(int rungs) { return make(1, rungs); }

Geometry Geometry::make(int legs, int rungs) {
    if (legs != 1 && legs != 2)
        throw ConfigError("unsupported geometry: legs must be 1 or 2");
    if (rungs < 2)
        throw ConfigError("unsupported geometry: need at least 2 rungs");
    if (legs == 2 && rungs % 2 != 0)
        throw ConfigError("unsupported geometry: ladder requires even L");
    if (legs * rungs > 64)
        throw CapacityError("unsupported geometry: more than 64 sites");
    return Geometry(legs, rungs);
}

int Geometry::site_bit(int j, int a) const {
    if (j < 1 || j > rungs_ || a < 1 || a > legs_)
        throw ConfigError("invalid site (" + std::to_string(j) + "," + std::to_string(a) + ")");
    return legs_ * (j - 1) + (a - 1);
}

bool is_valid(FockState state, const Geometry& geo) {
    FockState m = state;
    while (m) {
        const int s = std::countr_zero(m);
        if (state & geo.neighbor_mask(s)) return false;
        m &= m - 1;
    }
    return true;
}

int staggered_magnetization(FockState state, const Geometry& geo) {
    const int occ_even = std::popcount(state & geo.even_rung_mask());
    const int occ_odd = std::popcount(state & geo.odd_rung_mask());
    const int n_even = std::popcount(geo.even_rung_mask());
    const int n_odd = std::popcount(geo.odd_rung_mask());
    // sum (-1)^j (2 b - 1) = 2 (occ_even - occ_odd) - (n_even - n_odd)
    return 2 * (occ_even - occ_odd) - (n_even - n_odd);
}

FockState translate_x(FockState state, const Geometry& geo) {
    const int n = geo.sites();
    const int sh = geo.legs();
    return ((state << sh) | (state >> (n - sh))) & geo.full_mask();
}

FockState translate_y(FockState state, const Geometry& geo) {
    if (geo.legs() == 1) return state;
    const FockState a1 = geo.legs() == 2 ? 0x5555555555555555ULL & geo.full_mask() : 0;
    const FockState a2 = geo.full_mask() & ~a1;
    return ((state & a1) << 1) | ((state & a2) >> 1);
}

} // namespace pxp
