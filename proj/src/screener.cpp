#include "liescan/screener.hpp"

#include <algorithm>

#include "liescan/errors.hpp"

namespace liescan {

namespace {

std::optional<long long> try_stable_bound(const CartanGroup& g) {
    if (g.cartan_class() == CartanClass::C) return std::nullopt;
    return stable_range_bound(g);
}

long long min_rank(CartanClass c) {
    return c == CartanClass::D ? 3 : 1;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::DimensionMismatch: return "DimensionMismatch";
        case Verdict::TopologicallyDistinct: return "TopologicallyDistinct";
        case Verdict::CandidateHomeomorphism: return "CandidateHomeomorphism";
    }
    return "?";
}

ScreeningReport screen(const CartanGroup& a, const CartanGroup& b) {
    ScreeningReport report{a, b, a.dimension(), b.dimension(), false, std::nullopt,
                           std::nullopt, Verdict::DimensionMismatch};
    report.dims_match = report.dim_a == report.dim_b;
    if (!report.dims_match) return report;

    const auto diff = first_difference(poincare_polynomial(a), poincare_polynomial(b));
    report.poly = PolyComparison{!diff.has_value(), diff};

    const auto bound_a = try_stable_bound(a);
    const auto bound_b = try_stable_bound(b);
    if (bound_a && bound_b) {
        HomotopyComparison cmp{*bound_a, *bound_b, std::min(*bound_a, *bound_b), std::nullopt};
        for (long long k = 2; k <= cmp.k_max; ++k) {
            FGAbelianGroup pa = pi(a, k);
            FGAbelianGroup pb = pi(b, k);
            if (pa != pb) {
                cmp.witness = HomotopyWitness{k, std::move(pa), std::move(pb)};
                break;
            }
        }
        report.homotopy = std::move(cmp);
    }

    const bool distinct = (report.poly && !report.poly->equal) ||
                          (report.homotopy && report.homotopy->witness);
    report.verdict = distinct ? Verdict::TopologicallyDistinct : Verdict::CandidateHomeomorphism;
    return report;
}

std::vector<std::pair<QubitMatch, ScreeningReport>> scan_qubit_rotations(long long max_n) {
    std::vector<std::pair<QubitMatch, ScreeningReport>> out;
    for (QubitMatch& match : qubit_rotation_matches(max_n)) {
        if (match.n > 62 || !match.N.fits_slong_p()) {
            throw Error("dimension match at n=" + std::to_string(match.n) +
                        " exceeds the supported group sizes");
        }
        const CartanGroup su = special_unitary(1LL << match.n);
        const CartanGroup so = special_orthogonal(match.N.get_si());
        ScreeningReport report = screen(su, so);
        out.emplace_back(std::move(match), std::move(report));
    }
    return out;
}

std::vector<std::pair<long long, long long>> scan_class_pairs(CartanClass class_x,
                                                              CartanClass class_y,
                                                              long long max_rank) {
    if (class_x == class_y) throw Error("class scan needs two distinct classes");
    if (max_rank < 1) throw Error("max_rank must be >= 1");
    std::vector<std::pair<long long, long long>> out;
    for (long long i = min_rank(class_x); i <= max_rank; ++i) {
        const CartanGroup gx{class_x, i};
        const long long dim_x = gx.dimension();
        for (long long j = min_rank(class_y); j <= max_rank; ++j) {
            const CartanGroup gy{class_y, j};
            if (gy.dimension() != dim_x) continue;
            if (!first_difference(poincare_polynomial(gx), poincare_polynomial(gy))) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

}  // namespace liescan
