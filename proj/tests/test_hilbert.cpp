#include "doctest.h"

#include <set>

#include "pxp/basis.hpp"

using namespace pxp;

namespace {

// brute-force oracle: filter all 2^N masks through the blockade rule
std::vector<FockState> brute_force_basis(const Geometry& geo) {
    std::vector<FockState> out;
    for (FockState m = 0; m <= geo.full_mask(); ++m)
        if (is_valid(m, geo)) out.push_back(m);
    return out;
}

} // namespace

TEST_CASE("ladder dimensions match Table S1 and the closed form") {
    const std::vector<std::pair<int, std::int64_t>> table = {
        {2, 7}, {4, 35}, {6, 199}, {8, 1155}, {10, 6727}, {12, 39203}, {14, 228487}, {16, 1331715}};
    for (auto [L, dim] : table) {
        CHECK(dimension_formula(L) == dim);
        if (L <= 10) {
            Basis b(Geometry::ladder(L));
            CHECK(b.size() == dim);
        }
    }
}

TEST_CASE("enumeration equals the brute-force filter on small systems") {
    for (int L : {2, 4, 6}) {
        const Geometry geo = Geometry::ladder(L);
        Basis b(geo);
        CHECK(b.states() == brute_force_basis(geo));
    }
    const Geometry chain = Geometry::chain(4);
    Basis cb(chain);
    CHECK(cb.size() == 7);
    CHECK(cb.states() == brute_force_basis(chain));
}

TEST_CASE("basis is ascending, duplicate-free, and indexable") {
    Basis b(Geometry::ladder(6));
    for (std::int64_t i = 1; i < b.size(); ++i) CHECK(b.state(i - 1) < b.state(i));
    for (std::int64_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b.state(i)) == i);
    CHECK_THROWS_AS((void)b.index_of(3), Error); // 0b11 doubly occupies rung 1
}

TEST_CASE("odd ladder L is rejected") {
    CHECK_THROWS_AS(Geometry::ladder(5), ConfigError);
    CHECK_THROWS_AS(Geometry::ladder(1), ConfigError);
}

TEST_CASE("is_valid basics") {
    const Geometry geo = Geometry::ladder(4);
    CHECK(is_valid(0, geo));
    CHECK_FALSE(is_valid(0b11, geo)); // both sites of rung 1
    CHECK(is_valid(named_state("Z2", geo), geo));
}

TEST_CASE("momentum sectors: k0 dimensions from Table S1 and the partition") {
    const std::vector<std::pair<int, std::int64_t>> k0 = {
        {2, 7}, {4, 21}, {6, 71}, {8, 301}, {10, 1351}};
    for (auto [L, dim] : k0) {
        Basis b(Geometry::ladder(L));
        CHECK(build_sector(b, 0).dimension() == dim);
    }
    Basis b(Geometry::ladder(6));
    std::int64_t total = 0;
    for (int k = 0; k < 3; ++k) total += build_sector(b, k).dimension();
    CHECK(total == 199);
}

TEST_CASE("named states") {
    const Geometry geo = Geometry::ladder(4);
    CHECK(named_state("vac", geo) == 0);
    // Z2: sites (1,1), (2,2), (3,1), (4,2) -> bits 0, 3, 4, 7
    CHECK(named_state("Z2", geo) == ((1u << 0) | (1u << 3) | (1u << 4) | (1u << 7)));
    CHECK(named_state("Z2bar", geo) == ((1u << 1) | (1u << 2) | (1u << 5) | (1u << 6)));

    const Geometry geo6 = Geometry::ladder(6);
    const FockState z3 = named_state("Z3", geo6);
    CHECK(is_valid(z3, geo6));
    CHECK(staggered_magnetization(z3, geo6) == 0);
    CHECK_THROWS_AS(named_state("Z3", geo), ConfigError); // L=4 not divisible by 3

    const Geometry geo8 = Geometry::ladder(8);
    const FockState z4 = named_state("Z4", geo8);
    CHECK(is_valid(z4, geo8));
    CHECK(staggered_magnetization(z4, geo8) == 0);

    CHECK(named_state("x..x....", geo) == ((1u << 0) | (1u << 3)));
    CHECK_THROWS_AS(named_state("xx......", geo), ConfigError); // blockade violation
    CHECK_THROWS_AS(named_state("bogus", geo), ConfigError);
}

TEST_CASE("symmetry maps preserve validity and single flips stay in the basis") {
    const Geometry geo = Geometry::ladder(6);
    Basis b(geo);
    for (std::int64_t i = 0; i < b.size(); ++i) {
        const FockState s = b.state(i);
        CHECK(b.contains(translate_x(translate_x(s, geo), geo)));
        CHECK(b.contains(translate_y(s, geo)));
        for (int site = 0; site < geo.sites(); ++site)
            if ((s & geo.neighbor_mask(site)) == 0)
                CHECK(b.contains(s ^ (FockState{1} << site)));
    }
}

TEST_CASE("Z3 translates are distinct valid states") {
    const Geometry geo = Geometry::ladder(6);
    std::set<FockState> tr = {named_state("Z3", geo), named_state("Z3_1", geo),
                              named_state("Z3_2", geo)};
    CHECK(tr.size() == 3);
    for (FockState s : tr) CHECK(is_valid(s, geo));
}
