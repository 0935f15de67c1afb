#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "liescan/cartan.hpp"

namespace liescan {

/// Dense polynomial in one formal variable with unbounded integer
/// coefficients, index = degree. Canonical form: the trailing coefficient is
/// nonzero; the zero polynomial is the empty list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial one();

    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

    /// Coefficient of t^q; zero outside [0, degree].
    const mpz_class& coeff(long long q) const;
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }

    mpz_class evaluate(const mpz_class& t) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<mpz_class> coeffs_;
};

struct CoeffDiff {
    long long degree;
    mpz_class lhs;
    mpz_class rhs;
};

/// nullopt when equal; otherwise the smallest degree whose coefficients
/// differ, with both values.
std::optional<CoeffDiff> first_difference(const IntPolynomial& a, const IntPolynomial& b);

/// Expanded product of (1 + t^(2a+1)) over the exponents a of g.
/// The degree always equals dimension(g).
IntPolynomial poincare_polynomial(const CartanGroup& g);

/// Betti number b_q of g: the coefficient of t^q.
mpz_class betti(const CartanGroup& g, long long q);

}  // namespace liescan
