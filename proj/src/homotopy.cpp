#include "liescan/homotopy.hpp"

#include <array>

#include "liescan/errors.hpp"

namespace liescan {

std::string FGAbelianGroup::render() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank == 1) {
        out = "Z";
    } else if (free_rank > 1) {
        out = "Z^" + std::to_string(free_rank);
    }
    for (long long m : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z_" + std::to_string(m);
    }
    return out;
}

long long stable_range_bound(const CartanGroup& g) {
    switch (g.cartan_class()) {
        case CartanClass::A:
            return 2 * (g.rank() + 1) - 1;  // SU(m): k <= 2m-1
        case CartanClass::B:
            return 2 * g.rank() - 1;  // SO(2r+1): k <= m-2
        case CartanClass::D:
            return 2 * g.rank() - 2;  // SO(2r): k <= m-2
        case CartanClass::C:
            throw UnsupportedFamilyError("no stable-range bound is defined for the symplectic series");
    }
    throw Error("invalid CartanClass value");
}

FGAbelianGroup stable_pi(StableFamily family, long long k) {
    if (k < 0) throw Error("homotopy index must be >= 0");
    const auto Z = FGAbelianGroup::Z;
    const auto Z2 = [] { return FGAbelianGroup::cyclic(2); };
    const auto O = FGAbelianGroup::trivial;
    switch (family) {
        case StableFamily::U:
            return (k % 2 == 0) ? O() : Z();
        case StableFamily::O: {
            const std::array<FGAbelianGroup, 8> row = {Z2(), Z2(), O(), Z(), O(), O(), O(), Z()};
            return row[static_cast<std::size_t>(k % 8)];
        }
        case StableFamily::Sp: {
            const std::array<FGAbelianGroup, 8> row = {O(), O(), O(), Z(), Z2(), Z2(), O(), Z()};
            return row[static_cast<std::size_t>(k % 8)];
        }
    }
    throw Error("invalid StableFamily value");
}

FGAbelianGroup pi(const CartanGroup& g, long long k) {
    if (k < 0) throw Error("homotopy index must be >= 0");
    const long long bound = stable_range_bound(g);
    if (k > bound) throw OutsideStableRangeError(k, bound);
    if (g.cartan_class() == CartanClass::A) {
        // SU(m), m >= 2, is connected and simply connected; the U table only
        // agrees with SU from k = 2 on (it would report pi_1 = Z).
        if (k <= 1) return FGAbelianGroup::trivial();
        return stable_pi(StableFamily::U, k);
    }
    return stable_pi(StableFamily::O, k);
}

}  // namespace liescan
