#pragma once

#include <stdexcept>
#include <string>

namespace liescan {

/// Base class for every domain error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed group name or a number out of the supported range.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A well-formed name that denotes a group outside the catalog of
/// classical compact simple groups (SO(2), SO(4), D ranks below 3).
class NotSimpleError : public Error {
public:
    using Error::Error;
};

/// The requested operation has no defined answer for this family
/// (no stable-range bound is provided for the symplectic series).
class UnsupportedFamilyError : public Error {
public:
    using Error::Error;
};

/// Homotopy query beyond the stable range; carries the offending k and
/// the group's bound so callers can report both.
class OutsideStableRangeError : public Error {
public:
    OutsideStableRangeError(long long k, long long bound)
        : Error("pi_" + std::to_string(k) + " is outside the stable range (bound " +
                std::to_string(bound) + ")"),
          k_(k),
          bound_(bound) {}

    long long k() const { return k_; }
    long long bound() const { return bound_; }

private:
    long long k_;
    long long bound_;
};

}  // namespace liescan
