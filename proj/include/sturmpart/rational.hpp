#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "sturmpart/int128.hpp"

namespace sturmpart {

// Reduced fraction num/den with den > 0, stored in 128-bit integers.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}       // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(i128 n) : num_(n), den_(1) {}      // NOLINT(google-explicit-constructor)
    Rational(i128 num, i128 den) : num_(num), den_(den) {
        if (den_ == 0) throw input_error("rational with zero denominator");
        normalize();
    }

    static Rational parse(std::string_view s) {
        size_t slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(parse_i128(s));
        return Rational(parse_i128(s.substr(0, slash)), parse_i128(s.substr(slash + 1)));
    }

    i128 num() const { return num_; }
    i128 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sign128(num_); }

    i128 floor() const { return floor_div(num_, den_); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        i128 g = gcd128(a.den_, b.den_);
        i128 bd = b.den_ / g;
        i128 n = checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g));
        return Rational(n, checked_mul(a.den_, bd));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        i128 g1 = gcd128(a.num_, b.den_);
        i128 g2 = gcd128(b.num_, a.den_);
        return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                        checked_mul(a.den_ / g2, b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw input_error("rational division by zero");
        Rational inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        if (inv.den_ < 0) {
            inv.num_ = -inv.num_;
            inv.den_ = -inv.den_;
        }
        return a * inv;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int s = (a - b).sign();
        return s < 0   ? std::strong_ordering::less
               : s > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    std::string str() const {
        if (den_ == 1) return to_string(num_);
        return to_string(num_) + "/" + to_string(den_);
    }

    double approx() const { return to_double(num_) / to_double(den_); }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        i128 g = gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    i128 num_, den_;
};

} // namespace sturmpart
