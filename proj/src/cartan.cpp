#include "liescan/cartan.hpp"

#include <algorithm>
#include <charconv>

#include "liescan/errors.hpp"

namespace liescan {

namespace {

// Ranks above this would not overflow 64-bit dimensions, but nothing at desk
// scale needs them and the cap keeps every derived quantity comfortably exact.
constexpr long long kMaxRank = 100'000'000;

long long parse_positive_int(std::string_view text, std::string_view what) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty() || value < 1) {
        throw ParseError("malformed " + std::string(what) + " in group name: '" +
                         std::string(text) + "'");
    }
    return value;
}

}  // namespace

char cartan_letter(CartanClass c) {
    switch (c) {
        case CartanClass::A: return 'A';
        case CartanClass::B: return 'B';
        case CartanClass::C: return 'C';
        case CartanClass::D: return 'D';
    }
    throw Error("invalid CartanClass value");
}

CartanGroup::CartanGroup(CartanClass cls, long long rank) : cls_(cls), rank_(rank) {
    if (rank < 1) throw Error("rank must be at least 1, got " + std::to_string(rank));
    if (rank > kMaxRank) throw Error("rank " + std::to_string(rank) + " exceeds the supported maximum");
    if (cls == CartanClass::D && rank < 3) {
        throw NotSimpleError("D" + std::to_string(rank) + " is not simple; class D needs rank >= 3");
    }
}

long long CartanGroup::dimension() const {
    switch (cls_) {
        case CartanClass::A: return (rank_ + 1) * (rank_ + 1) - 1;
        case CartanClass::B:
        case CartanClass::C: return rank_ * (2 * rank_ + 1);
        case CartanClass::D: return rank_ * (2 * rank_ - 1);
    }
    throw Error("invalid CartanClass value");
}

std::vector<long long> CartanGroup::exponents() const {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(rank_));
    switch (cls_) {
        case CartanClass::A:
            for (long long i = 1; i <= rank_; ++i) out.push_back(i);
            break;
        case CartanClass::B:
        case CartanClass::C:
            for (long long i = 1; i <= rank_; ++i) out.push_back(2 * i - 1);
            break;
        case CartanClass::D:
            // 1, 3, ..., 2n-3 plus n-1; for even rank n-1 is odd and occurs twice.
            for (long long i = 1; i <= rank_ - 1; ++i) out.push_back(2 * i - 1);
            out.push_back(rank_ - 1);
            std::sort(out.begin(), out.end());
            break;
    }
    return out;
}

std::string CartanGroup::name() const {
    switch (cls_) {
        case CartanClass::A: return "SU(" + std::to_string(rank_ + 1) + ")";
        case CartanClass::B: return "SO(" + std::to_string(2 * rank_ + 1) + ")";
        case CartanClass::C: return "Sp(" + std::to_string(rank_) + ")";
        case CartanClass::D: return "SO(" + std::to_string(2 * rank_) + ")";
    }
    throw Error("invalid CartanClass value");
}

std::string CartanGroup::cartan_label() const {
    return std::string(1, cartan_letter(cls_)) + std::to_string(rank_);
}

CartanGroup special_unitary(long long m) {
    if (m < 2) throw NotSimpleError("SU(" + std::to_string(m) + ") is not a simple compact group; need m >= 2");
    return {CartanClass::A, m - 1};
}

CartanGroup special_orthogonal(long long m) {
    if (m < 3) {
        if (m == 2) throw NotSimpleError("SO(2) is abelian, not simple");
        throw NotSimpleError("SO(" + std::to_string(m) + ") is not a simple compact group; need m >= 3");
    }
    if (m == 4) throw NotSimpleError("SO(4) is not simple (class D2 splits as A1 x A1)");
    if (m % 2 == 1) return {CartanClass::B, (m - 1) / 2};
    return {CartanClass::D, m / 2};
}

CartanGroup symplectic(long long r) {
    return {CartanClass::C, r};
}

CartanGroup parse_group(std::string_view name) {
    std::string_view s = name;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty group name");

    auto paren_arg = [&](std::string_view prefix) -> std::string_view {
        // caller guarantees s starts with prefix + '('
        std::string_view inner = s.substr(prefix.size() + 1);
        if (inner.empty() || inner.back() != ')') {
            throw ParseError("malformed group name: '" + std::string(name) + "'");
        }
        inner.remove_suffix(1);
        return inner;
    };

    if (s.size() > 3 && s.substr(0, 3) == "SU(") {
        return special_unitary(parse_positive_int(paren_arg("SU"), "size"));
    }
    if (s.size() > 3 && s.substr(0, 3) == "SO(") {
        return special_orthogonal(parse_positive_int(paren_arg("SO"), "size"));
    }
    if (s.size() > 3 && s.substr(0, 3) == "Sp(") {
        return symplectic(parse_positive_int(paren_arg("Sp"), "rank"));
    }

    const char letter = s.front();
    switch (letter) {
        case 'A': return {CartanClass::A, parse_positive_int(s.substr(1), "rank")};
        case 'B': return {CartanClass::B, parse_positive_int(s.substr(1), "rank")};
        case 'C': return {CartanClass::C, parse_positive_int(s.substr(1), "rank")};
        case 'D': return {CartanClass::D, parse_positive_int(s.substr(1), "rank")};
        case 'E':
        case 'F':
        case 'G':
            throw ParseError("exceptional class '" + std::string(1, letter) + "' is not supported");
        default:
            throw ParseError("malformed group name: '" + std::string(name) + "'");
    }
}

}  // namespace liescan
