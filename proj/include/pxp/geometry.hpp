#pragma once

#include <cstdint>
#include <vector>

#include "pxp/error.hpp"

namespace pxp {

/// Occupation bitmask of one spin configuration. Bit = 1 means sigma^z = +1.
using FockState = std::uint64_t;

/// Two-leg ladder (legs = 2) or chain (legs = 1) with L rungs, periodic along
/// the legs and open along the rungs. Site (j, a) with 1-based j in 1..L and
/// leg a in 1..legs maps to bit legs*(j-1) + (a-1), so a = 1 is the bottom leg.
class Geometry {
  public:
    static Geometry ladder(int rungs);
    static Geometry chain(int rungs);
    static Geometry make(int legs, int rungs);

    int legs() const { return legs_; }
    int rungs() const { return rungs_; }
    int sites() const { return legs_ * rungs_; }

    int site_bit(int j, int a) const;

    /// Bitmask of the nearest neighbors of one site: the rung partner plus the
    /// two same-leg neighbors (PBC along the leg).
    FockState neighbor_mask(int site) const { return neighbors_[site]; }
    const std::vector<FockState>& neighbor_masks() const { return neighbors_; }

    /// Sites on odd rungs (j = 1, 3, ...) and even rungs, for the staggered field.
    FockState odd_rung_mask() const { return odd_mask_; }
    FockState even_rung_mask() const { return even_mask_; }

    FockState full_mask() const { return full_mask_; }

    bool operator==(const Geometry& o) const {
        return legs_ == o.legs_ && rungs_ == o.rungs_;
    }

  private:
    Geometry(int legs, int rungs);

    int legs_ = 2;
    int rungs_ = 0;
    FockState full_mask_ = 0;
    FockState odd_mask_ = 0;
    FockState even_mask_ = 0;
    std::vector<FockState> neighbors_;
};

/// True iff no nearest-neighbor pair is doubly occupied (Rydberg blockade).
bool is_valid(FockState state, const Geometry& geo);

/// sum_{j,a} (-1)^j sigma^z_{j,a} evaluated on a Fock state, as an exact integer.
int staggered_magnetization(FockState state, const Geometry& geo);

/// Translation by one rung along the legs, (j, a) -> (j+1, a).
FockState translate_x(FockState state, const Geometry& geo);

/// Leg swap (j, 1) <-> (j, 2); identity on a chain.
FockState translate_y(FockState state, const Geometry& geo);

} // namespace pxp
