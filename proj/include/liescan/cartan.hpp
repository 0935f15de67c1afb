#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace liescan {

/// The four classical Cartan classes. Exceptional classes are rejected at parse.
enum class CartanClass { A, B, C, D };

char cartan_letter(CartanClass c);

/// A classical compact simple Lie group, identified by Cartan class and rank.
///
/// Construction validates the rank: A/B/C need rank >= 1, D needs rank >= 3
/// (D1 and D2 are not simple).
class CartanGroup {
public:
    CartanGroup(CartanClass cls, long long rank);

    CartanClass cartan_class() const { return cls_; }
    long long rank() const { return rank_; }

    /// A_n -> (n+1)^2 - 1, B_n/C_n -> n(2n+1), D_n -> n(2n-1).
    long long dimension() const;

    /// Exponents in ascending order, multiplicity preserved; the list always
    /// has exactly rank() entries and satisfies rank + 2*sum = dimension.
    std::vector<long long> exponents() const;

    /// Canonical name: SU(m) for A, SO(m) for B/D, Sp(r) for C.
    std::string name() const;

    /// Cartan label, e.g. "A63".
    std::string cartan_label() const;

    friend bool operator==(const CartanGroup&, const CartanGroup&) = default;

private:
    CartanClass cls_;
    long long rank_;
};

CartanGroup special_unitary(long long m);     // SU(m), m >= 2
CartanGroup special_orthogonal(long long m);  // SO(m), m >= 3, m != 4
CartanGroup symplectic(long long r);          // Sp(r), r >= 1

/// Parses "SU(64)", "SO(91)", "Sp(3)" or a Cartan label like "A63".
/// Throws ParseError for malformed text, NotSimpleError for SO(2), SO(4)
/// and D ranks below 3.
CartanGroup parse_group(std::string_view name);

}  // namespace liescan
