// Acceptance gate: ten checks, one [PASS]/[FAIL] line each.
// Exit status is the number of failed checks.

#include <gmpxx.h>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liescan/cartan.hpp"
#include "liescan/cli.hpp"
#include "liescan/diophantine.hpp"
#include "liescan/errors.hpp"
#include "liescan/homotopy.hpp"
#include "liescan/poincare.hpp"
#include "liescan/screener.hpp"
#include "oracles.hpp"

using namespace liescan;
using nlohmann::json;

namespace {

struct Check {
    std::string label;
    std::function<bool(std::string&)> body;  // appends detail on failure
    std::optional<double> limit_seconds;
};

json cli_json(const std::vector<std::string>& args, bool& ok) {
    std::ostringstream out;
    std::ostringstream err;
    ok = liescan::cli::run(args, out, err) == 0;
    if (!ok) return json();
    return json::parse(out.str());
}

std::vector<long long> factor_degrees(const CartanGroup& g) {
    std::vector<long long> out;
    for (long long alpha : g.exponents()) out.push_back(2 * alpha + 1);
    return out;
}

bool check_rn(std::string& detail) {
    bool ok = false;
    const json j = cli_json({"rn", "--max-b", "1000", "--json"}, ok);
    if (!ok) {
        detail = "CLI exited nonzero";
        return false;
    }
    const std::vector<std::pair<long long, std::string>> expected = {
        {3, "1"}, {4, "3"}, {5, "5"}, {7, "11"}, {15, "181"}};
    const json& sols = j["solutions"];
    if (sols.size() != expected.size()) {
        detail = "expected 5 solutions, got " + std::to_string(sols.size());
        return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (sols[i]["b"] != expected[i].first || sols[i]["k"] != expected[i].second) {
            detail = "solution " + std::to_string(i) + " is " + sols[i].dump();
            return false;
        }
    }
    return true;
}

bool check_qubit_matches(std::string& detail) {
    bool ok = false;
    const json j = cli_json({"qubit-scan", "--max-n", "30", "--json"}, ok);
    if (!ok) {
        detail = "CLI exited nonzero";
        return false;
    }
    const std::vector<std::pair<long long, std::string>> expected = {
        {1, "3"}, {2, "6"}, {6, "91"}};
    const json& matches = j["matches"];
    if (matches.size() != expected.size()) {
        detail = "expected 3 matches, got " + std::to_string(matches.size());
        return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const json& m = matches[i]["match"];
        if (m["n"] != expected[i].first || m["N"] != expected[i].second) {
            detail = "match " + std::to_string(i) + " is " + m.dump();
            return false;
        }
    }
    return true;
}

bool check_dim_4095(std::string& detail) {
    const long long a = parse_group("SU(64)").dimension();
    const long long b = parse_group("SO(91)").dimension();
    if (a != 4095 || b != 4095) {
        detail = "got " + std::to_string(a) + " and " + std::to_string(b);
        return false;
    }
    return true;
}

bool check_poly_coincidences(std::string& detail) {
    const IntPolynomial sphere3{{1, 0, 0, 1}};
    if (poincare_polynomial(parse_group("SU(2)")) != sphere3 ||
        poincare_polynomial(parse_group("SO(3)")) != sphere3) {
        detail = "rank-1 polynomials are not 1 + t^3";
        return false;
    }
    const std::vector<mpz_class> oracle = oracles::expand_by_subsets({3, 5, 7});
    const std::vector<mpz_class> frozen = {1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1};
    if (oracle != frozen) {
        detail = "oracle disagrees with the frozen expansion";
        return false;
    }
    const IntPolynomial product{oracle};
    if (poincare_polynomial(parse_group("SU(4)")) != product ||
        poincare_polynomial(parse_group("SO(6)")) != product) {
        detail = "rank-3 polynomials do not match the product expansion";
        return false;
    }
    return true;
}

bool check_poly_distinction(std::string& detail) {
    const auto diff = first_difference(poincare_polynomial(parse_group("SU(64)")),
                                       poincare_polynomial(parse_group("SO(91)")));
    if (!diff) {
        detail = "polynomials compare equal";
        return false;
    }
    if (diff->degree != 5 || diff->lhs != 1 || diff->rhs != 0) {
        detail = "first difference at degree " + std::to_string(diff->degree);
        return false;
    }
    return true;
}

bool check_homotopy_distinction(std::string& detail) {
    if (pi(parse_group("SU(64)"), 5) != FGAbelianGroup::Z()) {
        detail = "pi_5 of SU(64) is not Z";
        return false;
    }
    if (!pi(parse_group("SO(91)"), 5).is_trivial()) {
        detail = "pi_5 of SO(91) is not trivial";
        return false;
    }
    for (const char* name : {"SU(2)", "SO(3)", "SO(6)"}) {
        try {
            pi(parse_group(name), 5);
            detail = std::string(name) + " did not raise";
            return false;
        } catch (const OutsideStableRangeError&) {
        }
    }
    return true;
}

bool check_bott_tables(std::string& detail) {
    const FGAbelianGroup Z = FGAbelianGroup::Z();
    const FGAbelianGroup Z2 = FGAbelianGroup::cyclic(2);
    const FGAbelianGroup O = FGAbelianGroup::trivial();
    const std::vector<FGAbelianGroup> o_row = {Z2, Z2, O, Z, O, O, O, Z};
    const std::vector<FGAbelianGroup> sp_row = {O, O, O, Z, Z2, Z2, O, Z};
    for (long long i = 0; i < 8; ++i) {
        if (stable_pi(StableFamily::O, i) != o_row[static_cast<std::size_t>(i)] ||
            stable_pi(StableFamily::Sp, i) != sp_row[static_cast<std::size_t>(i)] ||
            stable_pi(StableFamily::U, i) != (i % 2 == 1 ? Z : O)) {
            detail = "row mismatch at i=" + std::to_string(i);
            return false;
        }
    }
    for (long long k = 0; k <= 64; ++k) {
        if (stable_pi(StableFamily::U, k) != stable_pi(StableFamily::U, k + 2) ||
            stable_pi(StableFamily::O, k) != stable_pi(StableFamily::O, k + 8) ||
            stable_pi(StableFamily::Sp, k) != stable_pi(StableFamily::Sp, k + 8)) {
            detail = "periodicity fails at k=" + std::to_string(k);
            return false;
        }
        if (stable_pi(StableFamily::O, k) != stable_pi(StableFamily::Sp, k + 4) ||
            stable_pi(StableFamily::Sp, k) != stable_pi(StableFamily::O, k + 4)) {
            detail = "cross relation fails at k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool check_pell_orbits(std::string& detail) {
    const auto minus = pell_enumerate(-1, 50);
    const auto plus = pell_enumerate(1, 50);
    if (minus[1].d != 11 || minus[1].k != 31) {
        detail = "step 2 of the minus orbit is (" + minus[1].d.get_str() + ", " +
                 minus[1].k.get_str() + ")";
        return false;
    }
    for (const auto* orbit : {&minus, &plus}) {
        for (const PellSolution& s : *orbit) {
            if (8 * s.d * s.d - s.k * s.k != 7) {
                detail = "orbit left the conic at d=" + s.d.get_str();
                return false;
            }
        }
    }
    return true;
}

bool check_uniqueness_scans(std::string& detail) {
    bool ok = false;
    const json ab = cli_json({"class-scan", "A", "B", "--max-rank", "100", "--json"}, ok);
    if (!ok) {
        detail = "A/B scan exited nonzero";
        return false;
    }
    const json ad = cli_json({"class-scan", "A", "D", "--max-rank", "100", "--json"}, ok);
    if (!ok) {
        detail = "A/D scan exited nonzero";
        return false;
    }
    if (ab["pairs"].size() != 1 || ab["pairs"][0]["rank_x"] != 1 || ab["pairs"][0]["rank_y"] != 1) {
        detail = "A/B pairs: " + ab["pairs"].dump();
        return false;
    }
    if (ad["pairs"].size() != 1 || ad["pairs"][0]["rank_x"] != 3 || ad["pairs"][0]["rank_y"] != 3) {
        detail = "A/D pairs: " + ad["pairs"].dump();
        return false;
    }
    return true;
}

bool check_property_suite(std::string& detail) {
    mpz_class two_pow;
    for (CartanClass cls : {CartanClass::A, CartanClass::B, CartanClass::C, CartanClass::D}) {
        const long long start = cls == CartanClass::D ? 3 : 1;
        for (long long r = start; r <= 200; ++r) {
            const CartanGroup g{cls, r};
            const auto exps = g.exponents();
            long long sum = 0;
            for (long long a : exps) sum += a;
            if (g.rank() + 2 * sum != g.dimension()) {
                detail = "dimension identity fails for " + g.cartan_label();
                return false;
            }
            const IntPolynomial p = poincare_polynomial(g);
            if (p.degree() != g.dimension()) {
                detail = "degree mismatch for " + g.cartan_label();
                return false;
            }
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(r));
            if (p.evaluate(1) != two_pow) {
                detail = "P(1) != 2^rank for " + g.cartan_label();
                return false;
            }
            if (p.evaluate(-1) != 0) {
                detail = "P(-1) != 0 for " + g.cartan_label();
                return false;
            }
            const auto& c = p.coefficients();
            for (std::size_t i = 0; i < c.size() / 2 + 1; ++i) {
                if (c[i] != c[c.size() - 1 - i]) {
                    detail = "palindrome fails for " + g.cartan_label();
                    return false;
                }
            }
            if (r <= 8 &&
                c != oracles::expand_by_subsets(factor_degrees(g))) {
                detail = "subset oracle disagrees for " + g.cartan_label();
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Check> checks = {
        {"exactly five solutions of 2^b = k^2 + 7 with b <= 1000", check_rn, 1.0},
        {"dimension matches at n = 1, 2, 6 (N = 3, 6, 91)", check_qubit_matches, std::nullopt},
        {"dim SU(64) = dim SO(91) = 4095", check_dim_4095, std::nullopt},
        {"polynomial coincidences at ranks 1 and 3", check_poly_coincidences, std::nullopt},
        {"SU(64)/SO(91) polynomials first differ at degree 5 with (1, 0)", check_poly_distinction,
         0.1},
        {"pi_5 separates SU(64) from SO(91); small groups are out of range",
         check_homotopy_distinction, std::nullopt},
        {"period rows, periodicity and O/Sp offset through k = 64", check_bott_tables,
         std::nullopt},
        {"conic orbits: (11, 31) at step 2; 50 exact iterates per seed", check_pell_orbits,
         std::nullopt},
        {"rank-100 class scans find only A1~B1 and A3~D3", check_uniqueness_scans, 30.0},
        {"polynomial invariants to rank 200; subset oracle to rank 8", check_property_suite,
         std::nullopt},
    };

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const Check& c = checks[i];
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.limit_seconds && seconds >= *c.limit_seconds) {
            ok = false;
            detail = "exceeded time limit";
        }
        std::printf("[%s] %2zu. %s", ok ? "PASS" : "FAIL", i + 1, c.label.c_str());
        if (c.limit_seconds) {
            std::printf(" (%.3f s, limit %g s)", seconds, *c.limit_seconds);
        }
        if (!ok && !detail.empty()) {
            std::printf(" -- %s", detail.c_str());
        }
        std::printf("\n");
        if (!ok) ++failures;
    }
    std::printf("%zu/%zu checks passed\n", checks.size() - static_cast<std::size_t>(failures),
                checks.size());
    return failures;
}
