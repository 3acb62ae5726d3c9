#include "pxp/basis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace pxp {

namespace {

// Enumerate rung by rung: each rung holds one of {empty, leg1, leg2} (ladder)
// or {empty, occupied} (chain); adjacent rungs must not occupy the same leg,
// with wraparound between the last and first rung.
std::vector<FockState> enumerate_states(const Geometry& geo) {
    const int L = geo.rungs();
    const int legs = geo.legs();
    std::vector<FockState> locals;
    if (legs == 2)
        locals = {0b00, 0b01, 0b10};
    else
        locals = {0b0, 0b1};

    std::vector<FockState> out;
    std::vector<FockState> chosen(static_cast<std::size_t>(L));
    std::function<void(int)> rec = [&](int j) {
        if (j == L) {
            if ((chosen[static_cast<std::size_t>(L - 1)] & chosen[0]) == 0 || L == 1) {
                FockState m = 0;
                for (int r = 0; r < L; ++r)
                    m |= chosen[static_cast<std::size_t>(r)] << (legs * r);
                out.push_back(m);
            }
            return;
        }
        for (FockState loc : locals) {
            if (j > 0 && (chosen[static_cast<std::size_t>(j - 1)] & loc) != 0) continue;
            chosen[static_cast<std::size_t>(j)] = loc;
            rec(j + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Basis::Basis(const Geometry& geo) : geo_(geo), states_(enumerate_states(geo)) {}

std::int64_t Basis::index_of(FockState s) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), s);
    if (it == states_.end() || *it != s)
        throw Error("state not in basis");
    return it - states_.begin();
}

bool Basis::contains(FockState s) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), s);
    return it != states_.end() && *it == s;
}

std::int64_t dimension_formula(int rungs) {
    if (rungs < 1) throw ConfigError("dimension_formula needs L >= 1");
    const double sp = std::pow(1.0 + std::sqrt(2.0), rungs);
    const double sm = std::pow(1.0 - std::sqrt(2.0), rungs);
    const double par = (rungs % 2 == 0) ? 1.0 : -1.0;
    return std::llround(sp + sm + par);
}

MomentumSector build_sector(const Basis& basis, int k) {
    const Geometry& geo = basis.geometry();
    const int L = geo.rungs();
    if (L % 2 != 0)
        throw ConfigError("momentum sectors need even L");
    const int R = L / 2; // number of two-rung translations
    if (k < 0 || k >= R)
        throw ConfigError("momentum index out of range");

    MomentumSector sec;
    sec.k = k;
    std::vector<bool> seen(static_cast<std::size_t>(basis.size()), false);
    for (std::int64_t i = 0; i < basis.size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        const FockState rep = basis.state(i);
        FockState m = rep;
        int len = 0;
        do {
            seen[static_cast<std::size_t>(basis.index_of(m))] = true;
            m = translate_x(translate_x(m, geo), geo);
            ++len;
        } while (m != rep);
        // the orbit carries momentum k iff k * len = 0 mod R
        if ((static_cast<std::int64_t>(k) * len) % R == 0) {
            sec.reps.push_back(rep);
            sec.orbit_len.push_back(len);
            sec.norm.push_back(std::sqrt(static_cast<double>(len)) / R);
        }
    }
    return sec;
}

FockState named_state(const std::string& name, const Geometry& geo) {
    const int L = geo.rungs();
    const int legs = geo.legs();
    auto bit = [&](int j, int a) { return FockState{1} << geo.site_bit(j, a); };

    if (name == "vac") return 0;

    if (name == "Z2" || name == "Z2bar") {
        const bool bar = (name == "Z2bar");
        if (L % 2 != 0) throw ConfigError("Z2 needs even L");
        FockState m = 0;
        for (int j = 1; j <= L; ++j) {
            const bool odd = (j % 2 == 1) != bar;
            if (legs == 1) {
                if (odd) m |= bit(j, 1);
            } else {
                m |= odd ? bit(j, 1) : bit(j, 2);
            }
        }
        return m;
    }

    if (name == "Z3" || name == "Z3_1" || name == "Z3_2") {
        if (L % 3 != 0)
            throw ConfigError("Z3 needs L divisible by 3, got L=" + std::to_string(L));
        FockState m = 0;
        for (int j = 1; j <= L; ++j) {
            if (legs == 1) {
                if (j % 3 == 1) m |= bit(j, 1);
            } else {
                if (j % 3 == 1) m |= bit(j, 2);
                if (j % 3 == 0) m |= bit(j, 1);
            }
        }
        if (name == "Z3_1") m = translate_x(m, geo);
        if (name == "Z3_2") m = translate_x(translate_x(m, geo), geo);
        return m;
    }

    if (name == "Z4") {
        if (L % 4 != 0)
            throw ConfigError("Z4 needs L divisible by 4, got L=" + std::to_string(L));
        FockState m = 0;
        for (int j = 1; j <= L; ++j) {
            if (legs == 1) {
                if (j % 4 == 1) m |= bit(j, 1);
            } else {
                if (j % 4 == 3) m |= bit(j, 1);
                if (j % 4 == 0) m |= bit(j, 2);
            }
        }
        return m;
    }

    // custom bitstring over {., x} in site-bit order
    if (static_cast<int>(name.size()) == geo.sites()) {
        FockState m = 0;
        for (int s = 0; s < geo.sites(); ++s) {
            const char c = name[static_cast<std::size_t>(s)];
            if (c == 'x')
                m |= FockState{1} << s;
            else if (c != '.')
                throw ConfigError("custom state must use only '.' and 'x'");
        }
        if (!is_valid(m, geo))
            throw ConfigError("custom state violates the blockade constraint");
        return m;
    }

    throw ConfigError("unknown initial state '" + name + "'");
}

} // namespace pxp
