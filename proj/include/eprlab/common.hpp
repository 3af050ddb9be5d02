#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace eprlab {

/// Arbitrary-precision signed integer used wherever 64-bit arithmetic
/// could overflow (determinants, cofactors, rational components).
using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Reading or writing a file / stream failed.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input; `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Raised by the fixed-width integer kernel when a product or difference
/// leaves the 64-bit range; callers recompute with BigInt.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// int64 wrapper whose arithmetic throws OverflowError instead of wrapping.
/// Division is plain integer division: the elimination kernel only divides
/// where the quotient is exact.
struct CheckedI64 {
    std::int64_t v = 0;

    CheckedI64() = default;
    CheckedI64(std::int64_t x) : v(x) {} // NOLINT: implicit by design
    CheckedI64(int x) : v(x) {}          // NOLINT

    friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r))
            throw OverflowError("64-bit multiply overflow");
        return CheckedI64(r);
    }
    friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r))
            throw OverflowError("64-bit subtract overflow");
        return CheckedI64(r);
    }
    friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r))
            throw OverflowError("64-bit add overflow");
        return CheckedI64(r);
    }
    friend CheckedI64 operator/(CheckedI64 a, CheckedI64 b) {
        return CheckedI64(a.v / b.v);
    }
    CheckedI64 operator-() const {
        if (v == std::numeric_limits<std::int64_t>::min())
            throw OverflowError("64-bit negate overflow");
        return CheckedI64(-v);
    }
    friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v == b.v; }
};

inline std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("64-bit multiply overflow");
    return r;
}

} // namespace eprlab
