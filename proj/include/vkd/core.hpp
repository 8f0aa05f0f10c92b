#ifndef VKD_CORE_HPP
#define VKD_CORE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace vkd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
    input,
    window_out_of_range,
    unknown_generator,
    malformed_exponent,
    not_trivial_in_group,
    precondition_violated,
    target_missing,
    side_condition_violated,
    overlap_created,
    sequence_rejected,
    budget_exceeded,
    basepoint_not_on_boundary,
    closed_band_found,
    path_not_closed,
    path_not_simple,
    pattern_mismatch,
    path_not_on_tessellation,
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::input: return "input-error";
    case ErrorCode::window_out_of_range: return "window-out-of-range";
    case ErrorCode::unknown_generator: return "unknown-generator";
    case ErrorCode::malformed_exponent: return "malformed-exponent";
    case ErrorCode::not_trivial_in_group: return "not-trivial-in-group";
    case ErrorCode::precondition_violated: return "precondition-violated";
    case ErrorCode::target_missing: return "target-missing";
    case ErrorCode::side_condition_violated: return "side-condition-violated";
    case ErrorCode::overlap_created: return "overlap-created";
    case ErrorCode::sequence_rejected: return "sequence-rejected";
    case ErrorCode::budget_exceeded: return "budget-exceeded";
    case ErrorCode::basepoint_not_on_boundary: return "basepoint-not-on-boundary";
    case ErrorCode::closed_band_found: return "closed-band-found";
    case ErrorCode::path_not_closed: return "path-not-closed";
    case ErrorCode::path_not_simple: return "path-not-simple";
    case ErrorCode::pattern_mismatch: return "pattern-mismatch";
    case ErrorCode::path_not_on_tessellation: return "path-not-on-tessellation";
    }
    return "error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Nonnegative unbounded integer or infinity.
class Cost {
public:
    Cost() = default;
    Cost(long long v) : value_(v) {}
    Cost(BigInt v) : value_(std::move(v)) {}

    static Cost infinite() {
        Cost c;
        c.inf_ = true;
        return c;
    }

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }
    const BigInt& value() const {
        if (inf_) throw Error(ErrorCode::precondition_violated, "value of infinite cost");
        return value_;
    }

    friend Cost operator+(const Cost& a, const Cost& b) {
        if (a.inf_ || b.inf_) return infinite();
        return Cost(a.value_ + b.value_);
    }
    Cost& operator+=(const Cost& o) { return *this = *this + o; }

    friend bool operator==(const Cost& a, const Cost& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
        if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return inf_ ? "inf" : value_.str(); }
    friend std::ostream& operator<<(std::ostream& os, const Cost& c) { return os << c.str(); }

private:
    BigInt value_ = 0;
    bool inf_ = false;
};

inline std::string rational_str(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string rational_preview(const Rational& r, int digits = 6) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt num = numerator(r), den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    BigInt ip = scaled / scale, fp = scaled % scale;
    std::string f = fp.str();
    while (static_cast<int>(f.size()) < digits) f.insert(f.begin(), '0');
    return (neg ? "-" : "") + ip.str() + "." + f;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_rational(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return floor_div(numerator(r), denominator(r));
}

inline BigInt ipow(BigInt base, unsigned e) {
    BigInt out = 1;
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

} // namespace vkd

#endif
