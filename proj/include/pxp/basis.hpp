#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pxp/geometry.hpp"

namespace pxp {

/// Ordered list of all blockade-valid Fock states of a geometry, ascending by
/// integer value of the bitmask. Index lookup is a binary search.
class Basis {
  public:
    explicit Basis(const Geometry& geo);

    const Geometry& geometry() const { return geo_; }
    std::int64_t size() const { return static_cast<std::int64_t>(states_.size()); }
    FockState state(std::int64_t i) const { return states_[static_cast<std::size_t>(i)]; }
    const std::vector<FockState>& states() const { return states_; }

    /// Index of a state; throws if the state is not in the basis.
    std::int64_t index_of(FockState s) const;
    bool contains(FockState s) const;

  private:
    Geometry geo_;
    std::vector<FockState> states_;
};

/// Closed-form ladder dimension (1+sqrt2)^L + (1-sqrt2)^L + (-1)^L, rounded.
std::int64_t dimension_formula(int rungs);

/// Momentum sector of the translation by two rungs, k in 0 .. L/2 - 1.
/// Representatives are the minimal masks of each compatible orbit.
struct MomentumSector {
    int k = 0;
    std::vector<FockState> reps;
    std::vector<int> orbit_len;
    std::vector<double> norm; // momentum-state normalization sqrt(len)/R

    std::int64_t dimension() const { return static_cast<std::int64_t>(reps.size()); }
};

MomentumSector build_sector(const Basis& basis, int k);

/// Named product states. Z2 puts the excitations on (odd j, leg 1) and
/// (even j, leg 2); Z2bar is its sitewise complement. Z3 (Z4) need L divisible
/// by 3 (4); Z3_1 and Z3_2 are the translated partners of Z3. "vac" is the
/// empty state. Any other name is parsed as a custom bitstring over {., x}
/// in site-bit order and validated against the blockade.
FockState named_state(const std::string& name, const Geometry& geo);

} // namespace pxp
