#include "liescan/poincare.hpp"

#include <algorithm>

#include "liescan/errors.hpp"

namespace liescan {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one() {
    return IntPolynomial{{mpz_class(1)}};
}

const mpz_class& IntPolynomial::coeff(long long q) const {
    static const mpz_class zero = 0;
    if (q < 0 || q >= static_cast<long long>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(q)];
}

mpz_class IntPolynomial::evaluate(const mpz_class& t) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

std::optional<CoeffDiff> first_difference(const IntPolynomial& a, const IntPolynomial& b) {
    const long long top = std::max(a.degree(), b.degree());
    for (long long q = 0; q <= top; ++q) {
        const mpz_class& x = a.coeff(q);
        const mpz_class& y = b.coeff(q);
        if (x != y) return CoeffDiff{q, x, y};
    }
    return std::nullopt;
}

IntPolynomial poincare_polynomial(const CartanGroup& g) {
    const long long dim = g.dimension();
    std::vector<mpz_class> c(static_cast<std::size_t>(dim) + 1);
    c[0] = 1;
    long long len = 1;
    // Multiply by (1 + t^m) per exponent, ascending: one shifted add each.
    for (long long alpha : g.exponents()) {
        const long long m = 2 * alpha + 1;
        for (long long i = len - 1; i >= 0; --i) {
            if (mpz_sgn(c[static_cast<std::size_t>(i)].get_mpz_t()) != 0) {
                c[static_cast<std::size_t>(i + m)] += c[static_cast<std::size_t>(i)];
            }
        }
        len += m;
    }
    return IntPolynomial(std::move(c));
}

mpz_class betti(const CartanGroup& g, long long q) {
    if (q < 0) throw Error("Betti index must be >= 0");
    if (q > g.dimension()) return 0;
    return poincare_polynomial(g).coeff(q);
}

}  // namespace liescan
