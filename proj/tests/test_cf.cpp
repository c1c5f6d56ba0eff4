#include <doctest.h>

#include "sturmpart/cf.hpp"

using namespace sturmpart;

TEST_CASE("cf expansion") {
    CHECK(expand_cf(AlphaSpec::golden(), 5) == std::vector<long long>{1, 1, 1, 1, 1});
    CHECK(expand_cf(AlphaSpec::silver(), 4) == std::vector<long long>{2, 2, 2, 2});
    CHECK(expand_cf(AlphaSpec::continued_fraction({1, 2}, {3}), 5) ==
          std::vector<long long>{1, 2, 3, 3, 3});
    CHECK_THROWS_AS(expand_cf(AlphaSpec::golden(), 0), input_error);
    CHECK_THROWS_AS(expand_cf(AlphaSpec::golden(), 300), resource_limit_error);
}

TEST_CASE("convergent tables match the recurrences") {
    ConvergentTable g = convergents(AlphaSpec::golden(), 5);
    CHECK(g.q == std::vector<i128>{1, 1, 2, 3, 5, 8});
    CHECK(g.r == std::vector<i128>{1, 2, 3, 5, 8, 13});
    CHECK(g.p == std::vector<i128>{0, 1, 1, 2, 3, 5});
    ConvergentTable s = convergents(AlphaSpec::silver(), 3);
    CHECK(s.q == std::vector<i128>{1, 2, 5, 12});
    CHECK(s.r == std::vector<i128>{1, 3, 7, 17});
}

TEST_CASE("eta is exactly |q alpha - p|, positive and strictly decreasing") {
    for (const AlphaSpec& alpha :
         {AlphaSpec::golden(), AlphaSpec::silver(), AlphaSpec::continued_fraction({}, {1, 2})}) {
        ConvergentTable t = convergents(alpha, 20);
        for (int k = 0; k <= 20; ++k) {
            QAlpha q_alpha_minus_p(Rational(-t.p[(size_t)k]), Rational(t.q[(size_t)k]));
            int s = sign_of(q_alpha_minus_p, alpha);
            CHECK(s != 0);
            QAlpha abs_val = s > 0 ? q_alpha_minus_p : -q_alpha_minus_p;
            CHECK(t.eta[(size_t)k] == abs_val);
            CHECK(sign_of(t.eta[(size_t)k], alpha) > 0);
            if (k >= 1)
                CHECK(sign_of(t.eta[(size_t)k - 1] - t.eta[(size_t)k], alpha) > 0);
        }
        // Sandwich |alpha - p_k/q_k| < 1/(q_k q_{k+1}), i.e. eta_k q_{k+1} < 1.
        for (int k = 0; k < 20; ++k) {
            QAlpha scaled = Rational(t.q[(size_t)k + 1]) * t.eta[(size_t)k];
            CHECK(sign_of(scaled - QAlpha(Rational(1), Rational(0)), alpha) < 0);
        }
        // Monotonicity of q (k >= 2) and r (k >= 1).
        for (int k = 2; k <= 20; ++k) CHECK(t.q[(size_t)k] > t.q[(size_t)k - 1]);
        for (int k = 1; k <= 20; ++k) CHECK(t.r[(size_t)k] > t.r[(size_t)k - 1]);
    }
}

TEST_CASE("locate_k examples and inverse property") {
    ConvergentTable g = convergents(AlphaSpec::golden(), 10);
    CHECK(locate_k(g, 1) == 1);
    CHECK(locate_k(g, 4) == 3);
    ConvergentTable s = convergents(AlphaSpec::silver(), 10);
    CHECK(locate_k(s, 7) == 3);
    CHECK_THROWS_AS(locate_k(g, 0), input_error);
    ConvergentTable shallow = convergents(AlphaSpec::golden(), 3);
    CHECK_THROWS_AS(locate_k(shallow, 1000), resource_limit_error);
    for (i128 n = 1; n < g.r.back(); ++n) {
        int k = locate_k(g, n);
        CHECK(g.r[(size_t)k - 1] <= n);
        CHECK(n < g.r[(size_t)k]);
    }
}

TEST_CASE("interval I_k: length eta_k, endpoints 0 and <q_k>") {
    // The display convention that matches the two-towers structure: I_k runs
    // [0, <q_k>) for odd k and [<q_k>, 0) for even k (length eta_k either way).
    for (const AlphaSpec& alpha : {AlphaSpec::golden(), AlphaSpec::silver()}) {
        ConvergentTable t = convergents(alpha, 10);
        for (int k = 0; k <= 10; ++k) {
            Arc I = interval_I(t, k);
            CHECK(arc_length(I, alpha) == t.eta[(size_t)k]);
            CirclePoint zero(Rational(0), Rational(0));
            CirclePoint qk = orbit_point((long long)t.q[(size_t)k]);
            if (k % 2 == 1) {
                CHECK(I.start == zero);
                CHECK(I.end == qk);
            } else {
                CHECK(I.start == qk);
                CHECK(I.end == zero);
            }
        }
    }
    CHECK_THROWS_AS(interval_I(convergents(AlphaSpec::golden(), 3), 9), input_error);
}
