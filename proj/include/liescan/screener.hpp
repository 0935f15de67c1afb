#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liescan/cartan.hpp"
#include "liescan/diophantine.hpp"
#include "liescan/homotopy.hpp"
#include "liescan/poincare.hpp"

namespace liescan {

/// CandidateHomeomorphism records that every check passed; the checks are
/// necessary conditions only, so it never asserts an actual homeomorphism.
enum class Verdict { DimensionMismatch, TopologicallyDistinct, CandidateHomeomorphism };

const char* verdict_name(Verdict v);

struct PolyComparison {
    bool equal = false;
    std::optional<CoeffDiff> first_diff;
};

struct HomotopyWitness {
    long long k;
    FGAbelianGroup pi_a;
    FGAbelianGroup pi_b;
};

struct HomotopyComparison {
    long long bound_a = 0;
    long long bound_b = 0;
    long long k_max = 0;  // pi_k compared for k in [2, k_max]; empty when k_max < 2
    std::optional<HomotopyWitness> witness;
};

struct ScreeningReport {
    CartanGroup group_a;
    CartanGroup group_b;
    long long dim_a = 0;
    long long dim_b = 0;
    bool dims_match = false;
    std::optional<PolyComparison> poly;         // absent when the stage was skipped
    std::optional<HomotopyComparison> homotopy;  // absent when no bound exists (class C)
    Verdict verdict = Verdict::DimensionMismatch;
};

/// Dimension check, then (on a match) polynomial comparison and stable
/// homotopy comparison over the common stable range starting at k = 2.
/// Later stages still run when an earlier one already settles the verdict.
ScreeningReport screen(const CartanGroup& a, const CartanGroup& b);

/// Screens SU(2^n) against SO(N) for every dimension match with n <= max_n.
std::vector<std::pair<QubitMatch, ScreeningReport>> scan_qubit_rotations(long long max_n);

/// All rank pairs (i, j) <= max_rank from two distinct classes whose groups
/// have equal Poincare polynomials. Dimension equality is used as a
/// pre-filter; equal polynomials force equal degree, so nothing is lost.
std::vector<std::pair<long long, long long>> scan_class_pairs(CartanClass class_x,
                                                              CartanClass class_y,
                                                              long long max_rank);

}  // namespace liescan
