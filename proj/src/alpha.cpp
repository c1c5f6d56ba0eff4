#include "sturmpart/alpha.hpp"

#include <cmath>
#include <limits>

namespace sturmpart {

namespace {

// Pull square factors of d into q, so d ends up squarefree.
void extract_square_factors(i128& q, i128& d) {
    for (i128 f = 2; checked_mul(f, f) <= d; ++f) {
        i128 ff = f * f;
        while (d % ff == 0) {
            d /= ff;
            q = checked_mul(q, f);
        }
    }
}

QuadraticForm normalize_quadratic(i128 p, i128 q, i128 d, i128 r) {
    if (r == 0) throw input_error("alpha: zero denominator");
    if (q == 0) throw input_error("alpha: q = 0 makes alpha rational");
    if (d <= 0) throw input_error("alpha: d must be positive");
    extract_square_factors(q, d);
    if (d == 1 || is_perfect_square(d))
        throw input_error("alpha: d is a perfect square, alpha would be rational");
    if (q < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    i128 g = gcd128(gcd128(p, q), r);
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
    }
    return QuadraticForm{p, q, d, r};
}

long double approx_quadratic(const QuadraticForm& f) {
    return ((long double)to_double(f.p) +
            (long double)to_double(f.q) * sqrtl((long double)to_double(f.d))) /
           (long double)to_double(f.r);
}

// Sign of A + B*sqrt(d) for rationals A, B.
int sign_sqrt_combination(const Rational& a, const Rational& b, i128 d) {
    int sa = a.sign();
    int sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    int cmp_sq = (a * a - Rational(d) * b * b).sign(); // sign of A^2 - B^2 d
    return sa > 0 ? cmp_sq : -cmp_sq;
}

int sign_exact(const QAlpha& x, const QuadraticForm& f) {
    if (x.t.sign() == 0) return x.s.sign();
    // s + t(p + q sqrt(d))/r = [s r + t p + t q sqrt(d)] / r
    Rational a = x.s * Rational(f.r) + x.t * Rational(f.p);
    Rational b = x.t * Rational(f.q);
    int s = sign_sqrt_combination(a, b, f.d);
    return f.r > 0 ? s : -s;
}

struct Mobius {
    // t -> (a t + b) / (c t + d)
    i128 a = 1, b = 0, c = 0, d = 1;
};

Mobius compose(const Mobius& f, const Mobius& g) {
    // (f ∘ g)(t) = f(g(t))
    return Mobius{
        checked_add(checked_mul(f.a, g.a), checked_mul(f.b, g.c)),
        checked_add(checked_mul(f.a, g.b), checked_mul(f.b, g.d)),
        checked_add(checked_mul(f.c, g.a), checked_mul(f.d, g.c)),
        checked_add(checked_mul(f.c, g.b), checked_mul(f.d, g.d)),
    };
}

Mobius digit_map(i128 c) {
    // t -> 1/(c + t)
    return Mobius{0, 1, 1, c};
}

QuadraticForm cf_to_quadratic(const CfSpec& cf) {
    for (long long c : cf.prefix)
        if (c < 1) throw input_error("alpha cf: prefix coefficients must be >= 1");
    for (long long c : cf.period)
        if (c < 1) throw input_error("alpha cf: period coefficients must be >= 1");
    if (cf.period.empty())
        throw input_error("alpha cf: empty period (alpha must be irrational)");

    // Purely periodic tail y satisfies y = M(y) with M the composition of the
    // period's digit maps; solve c y^2 + (d - a) y - b = 0 for the root in (0,1).
    Mobius m;
    for (long long c : cf.period) m = compose(m, digit_map(c));
    i128 qa = m.c;
    i128 qb = checked_sub(m.d, m.a);
    i128 qc = -m.b;
    i128 disc = checked_sub(checked_mul(qb, qb), checked_mul(4, checked_mul(qa, qc)));
    if (disc <= 0 || is_perfect_square(disc))
        throw input_error("alpha cf: period does not define a quadratic irrational");
    // y = (-qb + sqrt(disc)) / (2 qa), the positive root since qa > 0.
    i128 e = -qb;
    i128 g = checked_mul(2, qa);

    Mobius pre;
    for (long long c : cf.prefix) pre = compose(pre, digit_map(c));
    // alpha = pre(y) with y = (e + sqrt(disc)) / g; rationalize the quotient.
    i128 u = checked_add(checked_mul(pre.a, e), checked_mul(pre.b, g));
    i128 v = checked_add(checked_mul(pre.c, e), checked_mul(pre.d, g));
    i128 num_p = checked_sub(checked_mul(u, v),
                             checked_mul(checked_mul(pre.a, pre.c), disc));
    i128 num_q = checked_sub(checked_mul(pre.a, v), checked_mul(u, pre.c));
    i128 den = checked_sub(checked_mul(v, v),
                           checked_mul(checked_mul(pre.c, pre.c), disc));
    return normalize_quadratic(num_p, num_q, disc, den);
}

void validate_unit_interval(const QuadraticForm& f, long double approx) {
    (void)approx;
    QAlpha alpha_value(Rational(0), Rational(1));
    // Build a throwaway sign check directly against the form.
    if (sign_exact(alpha_value, f) <= 0)
        throw input_error("alpha must be positive");
    QAlpha alpha_minus_one(Rational(-1), Rational(1));
    if (sign_exact(alpha_minus_one, f) >= 0)
        throw input_error("alpha must be less than 1");
}

} // namespace

AlphaSpec AlphaSpec::quadratic(long long p, long long q, long long d, long long r) {
    if (r < 1) throw input_error("alpha: r must be a positive integer");
    AlphaSpec spec;
    spec.quad_ = normalize_quadratic(p, q, d, r);
    spec.approx_ = approx_quadratic(spec.quad_);
    validate_unit_interval(spec.quad_, spec.approx_);
    return spec;
}

AlphaSpec AlphaSpec::continued_fraction(std::vector<long long> prefix,
                                        std::vector<long long> period) {
    AlphaSpec spec;
    CfSpec cf{std::move(prefix), std::move(period)};
    spec.quad_ = cf_to_quadratic(cf);
    spec.cf_ = std::move(cf);
    spec.approx_ = approx_quadratic(spec.quad_);
    validate_unit_interval(spec.quad_, spec.approx_);
    return spec;
}

AlphaSpec AlphaSpec::golden() { return quadratic(-1, 1, 5, 2); }

AlphaSpec AlphaSpec::silver() { return quadratic(-1, 1, 2, 1); }

std::string AlphaSpec::str() const {
    const auto& f = quad_;
    return "(" + to_string(f.p) + "+" + to_string(f.q) + "*sqrt(" + to_string(f.d) +
           "))/" + to_string(f.r);
}

int sign_of(const QAlpha& x, const AlphaSpec& alpha) {
    return sign_exact(x, alpha.quad());
}

double approx_of(const QAlpha& x, const AlphaSpec& alpha) {
    return x.s.approx() + x.t.approx() * (double)alpha.approx();
}

double approx_error_bound(const QAlpha& x) {
    constexpr double kBig = 9.0e15; // beyond 2^53 the double path loses exactness
    double sn = std::fabs(to_double(x.s.num()));
    double sd = to_double(x.s.den());
    double tn = std::fabs(to_double(x.t.num()));
    double td = to_double(x.t.den());
    if (sn > kBig || sd > kBig || tn > kBig || td > kBig)
        return std::numeric_limits<double>::infinity();
    double mag = sn / sd + tn / td;
    return (1.0 + mag) * 1e-12;
}

std::strong_ordering compare_values(const QAlpha& x, const QAlpha& y, const AlphaSpec& alpha) {
    double ax = approx_of(x, alpha);
    double ay = approx_of(y, alpha);
    double err = approx_error_bound(x) + approx_error_bound(y);
    if (std::isfinite(err)) {
        if (ax - ay > err) return std::strong_ordering::greater;
        if (ay - ax > err) return std::strong_ordering::less;
    }
    int s = sign_of(x - y, alpha);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

i128 floor_of(const QAlpha& x, const AlphaSpec& alpha) {
    // Long double guess (good to ~18 digits even for large coordinates),
    // then exact adjustment so that g <= x < g + 1.
    long double guess = (long double)x.s.num() / (long double)x.s.den() +
                        (long double)x.t.num() / (long double)x.t.den() * alpha.approx();
    i128 g = 0;
    if (std::isfinite((double)guess) && fabsl(guess) < 9.0e17L) g = (i128)(long long)floorl(guess);
    while (sign_of(QAlpha(x.s - Rational(g), x.t), alpha) < 0) --g;
    while (sign_of(QAlpha(x.s - Rational(checked_add(g, 1)), x.t), alpha) >= 0) ++g;
    return g;
}

QAlpha frac_of(const QAlpha& x, const AlphaSpec& alpha) {
    i128 m = floor_of(x, alpha);
    return QAlpha(x.s - Rational(m), x.t);
}

} // namespace sturmpart
