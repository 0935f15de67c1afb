#include "liescan/diophantine.hpp"

#include "liescan/errors.hpp"

namespace liescan {

namespace {

mpz_class power_of_two(long long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

// Exact: returns the integer square root when m is a perfect square.
bool perfect_square_root(const mpz_class& m, mpz_class& root) {
    if (mpz_perfect_square_p(m.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    return true;
}

}  // namespace

std::vector<RNSolution> solve_rn_bruteforce(long long max_b) {
    if (max_b < 1) throw Error("max_b must be >= 1");
    std::vector<RNSolution> out;
    mpz_class pow2 = 2;  // 2^b, starting at b = 1
    mpz_class k;
    for (long long b = 1; b <= max_b; ++b, pow2 <<= 1) {
        mpz_class m = pow2 - 7;
        if (m < 1) continue;
        if (!perfect_square_root(m, k)) continue;
        if (k * k + 7 != pow2) throw Error("substitution check failed for b=" + std::to_string(b));
        out.push_back({b, k});
    }
    return out;
}

std::vector<QubitMatch> qubit_rotation_matches(long long max_n) {
    if (max_n < 1) throw Error("max_n must be >= 1");
    std::vector<QubitMatch> out;
    mpz_class k;
    for (long long n = 1; n <= max_n; ++n) {
        mpz_class m = power_of_two(2 * n + 3) - 7;
        if (!perfect_square_root(m, k)) continue;
        // k^2 = 2^(2n+3) - 7 is odd, so k is odd and (k+1)/2 is exact.
        mpz_class N = (k + 1) / 2;
        if (N * N - N != 2 * (power_of_two(2 * n) - 1)) {
            throw Error("dimension-match verification failed for n=" + std::to_string(n));
        }
        out.push_back({n, N, k});
    }
    return out;
}

std::vector<PellSolution> pell_enumerate(int seed_sign, long long count) {
    if (seed_sign != 1 && seed_sign != -1) throw Error("seed_sign must be +1 or -1");
    if (count < 1) throw Error("count must be >= 1");
    std::vector<PellSolution> out;
    out.reserve(static_cast<std::size_t>(count));
    mpz_class d = 1;
    mpz_class k = seed_sign;
    for (long long step = 0; step < count; ++step) {
        mpz_class d_next = 3 * d + k;
        mpz_class k_next = 8 * d + 3 * k;
        d = d_next;
        k = k_next;
        if (8 * d * d != k * k + 7) throw Error("recurrence left the conic 8d^2 - k^2 = 7");
        out.push_back({d, abs(k)});
    }
    return out;
}

}  // namespace liescan
