#pragma once

#include <string>
#include <vector>

#include "liescan/cartan.hpp"

namespace liescan {

/// Stable families of the Bott periodicity tables.
enum class StableFamily { U, O, Sp };

/// Finitely generated abelian group: free rank plus invariant factors in
/// divisibility order. The values occurring here are 0, Z and Z_2.
struct FGAbelianGroup {
    long long free_rank = 0;
    std::vector<long long> torsion;

    static FGAbelianGroup trivial() { return {}; }
    static FGAbelianGroup Z() { return {1, {}}; }
    static FGAbelianGroup cyclic(long long m) { return {0, {m}}; }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    /// "0", "Z", "Z_2", and "Z^r" / " + "-joined sums in general.
    std::string render() const;

    friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
};

/// Largest k for which pi_k(g) is stable: 2m-1 for SU(m), m-2 for SO(m).
/// Throws UnsupportedFamilyError for class C (no bound provided for Sp).
long long stable_range_bound(const CartanGroup& g);

/// Periodic tables: U has period 2, O and Sp have period 8.
FGAbelianGroup stable_pi(StableFamily family, long long k);

/// pi_k of the group itself. Refuses to extrapolate: throws
/// OutsideStableRangeError when k exceeds stable_range_bound(g).
FGAbelianGroup pi(const CartanGroup& g, long long k);

}  // namespace liescan
