#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost's mixed rational/integer operator== recurses forever under C++20 rewritten comparisons;
// these exact matches win overload resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == static_cast<std::int64_t>(b); }
inline bool operator!=(const rational<std::int64_t>& a, std::int64_t b) { return !(a == b); }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(std::int64_t b, const rational<std::int64_t>& a) { return !(a == b); }
inline bool operator!=(int b, const rational<std::int64_t>& a) { return !(a == b); }
}  // namespace boost

namespace ipmod {

/// Exact rational used for every filtration level, energy and level value.
using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" with q > 0 and gcd(p, q) = 1. Anything else throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Lenient variant used for command-line input: accepts "p/q" in any terms and bare integers.
Rational parse_rational_lenient(std::string_view text);

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

/// Floor of r as an integer.
std::int64_t floor_of(const Rational& r);

/// A point of [-inf, +inf] with exact finite part.
class ExtendedRational {
public:
    enum class Kind { negative_infinity, finite, positive_infinity };

    constexpr ExtendedRational() : kind_(Kind::finite), value_(0) {}
    ExtendedRational(const Rational& value) : kind_(Kind::finite), value_(value) {}  // NOLINT

    static ExtendedRational infinity() { return ExtendedRational(Kind::positive_infinity); }
    static ExtendedRational negative_infinity() { return ExtendedRational(Kind::negative_infinity); }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_finite() const { return kind_ == Kind::finite; }
    [[nodiscard]] bool is_positive_infinity() const { return kind_ == Kind::positive_infinity; }
    [[nodiscard]] bool is_negative_infinity() const { return kind_ == Kind::negative_infinity; }

    /// Finite part; throws std::logic_error when infinite.
    [[nodiscard]] const Rational& value() const;

    /// Adds a finite offset; infinities absorb it.
    [[nodiscard]] ExtendedRational plus(const Rational& offset) const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

private:
    explicit ExtendedRational(Kind kind) : kind_(kind), value_(0) {}

    Kind kind_;
    Rational value_;
};

/// "p/q", "inf" or "-inf".
std::string to_string(const ExtendedRational& r);

/// Inverse of to_string(ExtendedRational).
ExtendedRational parse_extended(std::string_view text);

}  // namespace ipmod
