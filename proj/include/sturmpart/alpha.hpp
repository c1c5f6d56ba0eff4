#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sturmpart/rational.hpp"

namespace sturmpart {

// Eventually periodic continued fraction [prefix; period period period ...]
// in the convention alpha = 1/(c1 + 1/(c2 + ...)), all coefficients >= 1.
struct CfSpec {
    std::vector<long long> prefix;
    std::vector<long long> period;
};

// Canonical quadratic surd (p + q*sqrt(d)) / r with q > 0, d squarefree and
// not a perfect square, gcd(p, q, r) = 1. r may be negative after the q > 0
// normalization.
struct QuadraticForm {
    i128 p = 0, q = 0, d = 0, r = 1;

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// Exact description of the rotation angle: an irrational alpha in (0, 1).
// Both input forms are normalized to the same canonical quadratic surd, so
// equality of specs is structural.
class AlphaSpec {
public:
    // alpha = (p + q*sqrt(d))/r, r >= 1, d positive non-square, q != 0.
    static AlphaSpec quadratic(long long p, long long q, long long d, long long r);
    // alpha = [prefix; period repeated].
    static AlphaSpec continued_fraction(std::vector<long long> prefix,
                                        std::vector<long long> period);

    static AlphaSpec golden(); // (-1 + sqrt(5)) / 2
    static AlphaSpec silver(); // sqrt(2) - 1

    const QuadraticForm& quad() const { return quad_; }
    const std::optional<CfSpec>& cf() const { return cf_; }
    long double approx() const { return approx_; }

    std::string str() const;

    friend bool operator==(const AlphaSpec& a, const AlphaSpec& b) {
        return a.quad_ == b.quad_;
    }

private:
    AlphaSpec() = default;

    QuadraticForm quad_;
    std::optional<CfSpec> cf_;
    long double approx_ = 0.0L;
};

// Element s + t*alpha of the field Q(alpha); the coordinates determine the
// value uniquely because alpha is irrational.
struct QAlpha {
    Rational s, t;

    QAlpha() = default;
    QAlpha(Rational s_, Rational t_) : s(std::move(s_)), t(std::move(t_)) {}

    friend QAlpha operator+(const QAlpha& a, const QAlpha& b) {
        return QAlpha(a.s + b.s, a.t + b.t);
    }
    friend QAlpha operator-(const QAlpha& a, const QAlpha& b) {
        return QAlpha(a.s - b.s, a.t - b.t);
    }
    QAlpha operator-() const { return QAlpha(-s, -t); }
    friend QAlpha operator*(const Rational& c, const QAlpha& x) {
        return QAlpha(c * x.s, c * x.t);
    }
    friend bool operator==(const QAlpha& a, const QAlpha& b) {
        return a.s == b.s && a.t == b.t;
    }

    std::string str() const {
        if (t.sign() < 0) return s.str() + "-" + (-t).str() + "*alpha";
        return s.str() + "+" + t.str() + "*alpha";
    }
};

// Exact sign of s + t*alpha, decided in the quadratic field.
int sign_of(const QAlpha& x, const AlphaSpec& alpha);

// Exact three-way comparison of field elements (floating filter with exact
// fallback; never approximate in the result).
std::strong_ordering compare_values(const QAlpha& x, const QAlpha& y, const AlphaSpec& alpha);

i128 floor_of(const QAlpha& x, const AlphaSpec& alpha);

// x reduced mod 1 into [0, 1).
QAlpha frac_of(const QAlpha& x, const AlphaSpec& alpha);

double approx_of(const QAlpha& x, const AlphaSpec& alpha);

// Upper bound on |approx_of(x) - exact value|; infinity when the coordinates
// are too large for the double path.
double approx_error_bound(const QAlpha& x);

} // namespace sturmpart
