#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>

#include "tropcount/errors.hpp"

namespace tropcount {

// Exact rational number on 64-bit numerator/denominator. The denominator is
// always positive and the fraction is kept reduced, so equality is field
// equality. Intermediates run through 128-bit integers; results that do not
// fit back into 64 bits throw.
class Rational {
public:
    Rational() = default;
    Rational(long long numerator) : num_(numerator), den_(1) {}
    Rational(long long numerator, long long denominator) {
        assign(numerator, denominator);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sgn() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw ValidationError("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
    }

    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    static Rational parse(std::string_view text);

private:
    using i128 = __int128;

    void assign(long long numerator, long long denominator) {
        *this = from128(numerator, denominator);
    }

    static Rational from128(i128 n, i128 d) {
        if (d == 0) throw ValidationError("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lo = std::numeric_limits<long long>::min();
        constexpr i128 hi = std::numeric_limits<long long>::max();
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational overflows 64-bit storage");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return ValidationError("malformed rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::size_t slash = text.find('/');
    auto parse_int = [&](std::string_view part) -> long long {
        if (part.empty()) throw bad();
        std::size_t pos = 0;
        bool neg = false;
        if (part[0] == '-' || part[0] == '+') {
            neg = part[0] == '-';
            pos = 1;
        }
        if (pos == part.size()) throw bad();
        long long value = 0;
        for (; pos < part.size(); ++pos) {
            char ch = part[pos];
            if (ch < '0' || ch > '9') throw bad();
            if (value > (std::numeric_limits<long long>::max() - (ch - '0')) / 10)
                throw std::overflow_error("rational literal too large");
            value = value * 10 + (ch - '0');
        }
        return neg ? -value : value;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace tropcount
