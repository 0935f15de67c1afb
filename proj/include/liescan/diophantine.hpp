#pragma once

#include <gmpxx.h>

#include <vector>

namespace liescan {

/// Solution of 2^b = k^2 + 7.
struct RNSolution {
    long long b;
    mpz_class k;

    friend bool operator==(const RNSolution&, const RNSolution&) = default;
};

/// n-qubit dimension match: N^2 - N = 2(2^(2n) - 1) with discriminant root k,
/// N = (k+1)/2.
struct QubitMatch {
    long long n;
    mpz_class N;
    mpz_class k;

    friend bool operator==(const QubitMatch&, const QubitMatch&) = default;
};

/// Solution of 8d^2 = k^2 + 7.
struct PellSolution {
    mpz_class d;
    mpz_class k;

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Exhaustive sweep over b <= max_b, exact integer square-root test per b.
/// Ascending by b; every solution re-checked by substitution.
std::vector<RNSolution> solve_rn_bruteforce(long long max_b);

/// All n <= max_n for which 2^(2n+3) - 7 is a perfect square; each match is
/// re-verified against N^2 - N = 2(2^(2n) - 1).
std::vector<QubitMatch> qubit_rotation_matches(long long max_n);

/// Iterates d' = 3d + k, k' = 8d + 3k from (1, seed_sign), seed_sign in
/// {+1, -1}, and returns `count` successive solutions after the seed.
/// Internal state is signed; the reported k is its absolute value.
std::vector<PellSolution> pell_enumerate(int seed_sign, long long count);

}  // namespace liescan
