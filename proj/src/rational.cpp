#include "ipmod/rational.hpp"

#include <charconv>
#include <numeric>

namespace ipmod {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw std::invalid_argument("rational '" + std::string(text) + "' must be written as p/q");
    }
    const auto p = parse_int(text.substr(0, slash), text);
    const auto q = parse_int(text.substr(slash + 1), text);
    if (q <= 0) {
        throw std::invalid_argument("rational '" + std::string(text) + "' needs a positive denominator");
    }
    if (std::gcd(p, q) != 1) {
        throw std::invalid_argument("rational '" + std::string(text) + "' is not in lowest terms");
    }
    return Rational(p, q);
}

Rational parse_rational_lenient(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, text));
    }
    const auto p = parse_int(text.substr(0, slash), text);
    const auto q = parse_int(text.substr(slash + 1), text);
    if (q == 0) {
        throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
    }
    return Rational(p, q);
}

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

std::int64_t floor_of(const Rational& r) {
    auto q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) {
        --q;
    }
    return q;
}

const Rational& ExtendedRational::value() const {
    if (kind_ != Kind::finite) {
        throw std::logic_error("value() on an infinite extended rational");
    }
    return value_;
}

ExtendedRational ExtendedRational::plus(const Rational& offset) const {
    if (kind_ != Kind::finite) {
        return *this;
    }
    return ExtendedRational(value_ + offset);
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) {
        return false;
    }
    return a.kind_ != ExtendedRational::Kind::finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) {
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    }
    if (a.kind_ != ExtendedRational::Kind::finite || a.value_ == b.value_) {
        return std::strong_ordering::equal;
    }
    return a.value_ < b.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(const ExtendedRational& r) {
    switch (r.kind()) {
        case ExtendedRational::Kind::negative_infinity:
            return "-inf";
        case ExtendedRational::Kind::positive_infinity:
            return "inf";
        case ExtendedRational::Kind::finite:
            break;
    }
    return to_string(r.value());
}

ExtendedRational parse_extended(std::string_view text) {
    if (text == "inf") {
        return ExtendedRational::infinity();
    }
    if (text == "-inf") {
        return ExtendedRational::negative_infinity();
    }
    return ExtendedRational(parse_rational(text));
}

}  // namespace ipmod
