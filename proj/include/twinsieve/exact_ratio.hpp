// exact_ratio.hpp
// Arbitrary-precision rationals for the primorial closed forms, whose
// numerators and denominators run to ~140 digits.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "twinsieve/config.hpp"

namespace twinsieve {

using BigInt = boost::multiprecision::cpp_int;

// A rational kept in lowest terms with a positive denominator.
class ExactRatio {
public:
    ExactRatio() : num_(0), den_(1) {}
    ExactRatio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw domain_error("ExactRatio: zero denominator");
        normalize();
    }
    template <typename Int>
        requires std::is_integral_v<Int>
    ExactRatio(Int value) : num_(value), den_(1) {}  // NOLINT: implicit from integers

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
        if (b.num_ == 0) throw domain_error("ExactRatio: division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
        const BigInt l = a.num_ * b.den_;
        const BigInt r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const { return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_)); }

    // Decimal rendering with exactly `places` digits after the point,
    // rounded half to even.
    std::string to_decimal(unsigned places) const {
        BigInt scale = 1;
        for (unsigned i = 0; i < places; ++i) scale *= 10;
        const bool negative = num_ < 0;
        const BigInt mag = negative ? BigInt(-num_) : num_;
        BigInt q = (mag * scale) / den_;
        const BigInt r = (mag * scale) % den_;
        const BigInt twice = 2 * r;
        if (twice > den_ || (twice == den_ && (q & 1) != 0)) ++q;

        std::string digits = q.str();
        if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
        std::string out = digits.substr(0, digits.size() - places);
        if (places > 0) out += "." + digits.substr(digits.size() - places);
        if (negative && q != 0) out.insert(0, "-");
        return out;
    }

    // Integer or fixed-point decimal ("6.6278", "-3", "0.5").
    static ExactRatio parse_decimal(std::string_view text) {
        if (text.empty()) throw domain_error("ExactRatio: empty decimal");
        bool negative = false;
        if (text.front() == '-' || text.front() == '+') {
            negative = text.front() == '-';
            text.remove_prefix(1);
        }
        BigInt num = 0;
        BigInt den = 1;
        bool seen_point = false;
        bool seen_digit = false;
        for (char c : text) {
            if (c == '.' && !seen_point) {
                seen_point = true;
                continue;
            }
            if (c < '0' || c > '9') throw domain_error("ExactRatio: malformed decimal '" + std::string(text) + "'");
            seen_digit = true;
            num = num * 10 + (c - '0');
            if (seen_point) den *= 10;
        }
        if (!seen_digit) throw domain_error("ExactRatio: malformed decimal '" + std::string(text) + "'");
        return {negative ? BigInt(-num) : num, den};
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace twinsieve
