#include "sturmpart/cf.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace sturmpart {

namespace {

// floor((P + sqrt(D)) / Q) with sqrt(D) irrational, Q != 0.
i128 floor_quadratic(i128 P, i128 D, i128 Q) {
    i128 s = (i128)isqrt128((u128)D);
    if (Q > 0) return floor_div(checked_add(P, s), Q);
    // (P + sqrt(D))/Q = (-P - sqrt(D))/(-Q); integer m <= that iff
    // sqrt(D) <= -P - m(-Q), and sqrt(D) <= X iff s + 1 <= X.
    return floor_div(checked_sub(checked_sub(-P, s), 1), -Q);
}

// Standard surd expansion: x = (P + sqrt(D))/Q with Q | D - P^2.
std::vector<long long> expand_quadratic(const QuadraticForm& f, int depth) {
    // alpha = (p + q sqrt(d))/r with q > 0; fold q into the radicand.
    i128 P = f.p;
    i128 D = checked_mul(checked_mul(f.q, f.q), f.d);
    i128 Q = f.r;
    if ((checked_sub(D, checked_mul(P, P))) % Q != 0) {
        P = checked_mul(P, abs128(Q));
        D = checked_mul(D, checked_mul(Q, Q));
        Q = checked_mul(Q, abs128(Q));
    }
    std::vector<long long> out;
    out.reserve((size_t)depth);
    // First step consumes the integer part (zero since alpha is in (0,1)).
    i128 a0 = floor_quadratic(P, D, Q);
    P = checked_sub(checked_mul(a0, Q), P);
    Q = (checked_sub(D, checked_mul(P, P))) / Q;
    for (int i = 0; i < depth; ++i) {
        i128 a = floor_quadratic(P, D, Q);
        if (a < 1 || a > (i128)9'000'000'000'000'000'000LL)
            throw input_error("continued fraction expansion left (0,1) range");
        out.push_back((long long)a);
        P = checked_sub(checked_mul(a, Q), P);
        Q = (checked_sub(D, checked_mul(P, P))) / Q;
    }
    return out;
}

std::vector<long long> expand_periodic(const CfSpec& cf, int depth) {
    std::vector<long long> out;
    out.reserve((size_t)depth);
    for (long long c : cf.prefix) {
        if ((int)out.size() == depth) return out;
        out.push_back(c);
    }
    size_t i = 0;
    while ((int)out.size() < depth) {
        out.push_back(cf.period[i % cf.period.size()]);
        ++i;
    }
    return out;
}

using AlphaKey = std::array<i128, 4>;

AlphaKey key_of(const AlphaSpec& alpha) {
    const auto& f = alpha.quad();
    return {f.p, f.q, f.d, f.r};
}

ConvergentTable build_table(const AlphaSpec& alpha, int depth, const Limits& limits) {
    ConvergentTable t{alpha, {}, {}, {}, {}, {}};
    auto cs = expand_cf(alpha, depth, limits);
    t.c.assign(1, 0);
    t.c.insert(t.c.end(), cs.begin(), cs.end());
    t.p.assign({0, 1});
    t.q.assign({1, (i128)t.c[1]});
    for (int k = 2; k <= depth; ++k) {
        t.p.push_back(checked_add(checked_mul(t.c[(size_t)k], t.p[(size_t)k - 1]),
                                  t.p[(size_t)k - 2]));
        t.q.push_back(checked_add(checked_mul(t.c[(size_t)k], t.q[(size_t)k - 1]),
                                  t.q[(size_t)k - 2]));
    }
    t.r.assign(1, 1);
    for (int k = 1; k <= depth; ++k)
        t.r.push_back(checked_add(t.q[(size_t)k], t.q[(size_t)k - 1]));
    t.eta.assign(1, QAlpha(Rational(0), Rational(1)));
    t.eta.push_back(QAlpha(Rational(1), Rational(-(i128)t.c[1])));
    for (int k = 2; k <= depth; ++k)
        t.eta.push_back(t.eta[(size_t)k - 2] - Rational((i128)t.c[(size_t)k]) * t.eta[(size_t)k - 1]);
    return t;
}

} // namespace

std::vector<long long> expand_cf(const AlphaSpec& alpha, int depth, const Limits& limits) {
    if (depth < 1) throw input_error("expand_cf: depth must be >= 1");
    if (depth > limits.max_cf_depth)
        throw resource_limit_error("expand_cf: depth exceeds cap of " +
                                   std::to_string(limits.max_cf_depth));
    if (alpha.cf()) return expand_periodic(*alpha.cf(), depth);
    return expand_quadratic(alpha.quad(), depth);
}

static ConvergentTable truncated(const ConvergentTable& t, int depth) {
    if (t.depth() == depth) return t;
    ConvergentTable out{t.alpha, {}, {}, {}, {}, {}};
    out.c.assign(t.c.begin(), t.c.begin() + depth + 1);
    out.p.assign(t.p.begin(), t.p.begin() + depth + 1);
    out.q.assign(t.q.begin(), t.q.begin() + depth + 1);
    out.r.assign(t.r.begin(), t.r.begin() + depth + 1);
    out.eta.assign(t.eta.begin(), t.eta.begin() + depth + 1);
    return out;
}

ConvergentTable convergents(const AlphaSpec& alpha, int depth, const Limits& limits) {
    if (depth < 1) throw input_error("convergents: depth must be >= 1");
    static std::mutex mu;
    static std::map<AlphaKey, std::shared_ptr<const ConvergentTable>> cache;
    AlphaKey key = key_of(alpha);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second->depth() >= depth)
            return truncated(*it->second, depth);
    }
    auto built = std::make_shared<const ConvergentTable>(build_table(alpha, depth, limits));
    {
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[key];
        if (!slot || slot->depth() < depth) slot = built;
        return truncated(*slot, depth);
    }
}

int locate_k(const ConvergentTable& table, i128 n) {
    if (n < 1) throw input_error("locate_k: n must be >= 1");
    for (int k = 1; k <= table.depth(); ++k)
        if (table.r[(size_t)k - 1] <= n && n < table.r[(size_t)k]) return k;
    throw resource_limit_error("locate_k: convergent table too shallow for n = " +
                               to_string(n));
}

Arc interval_I(const ConvergentTable& table, int k) {
    if (k < 0 || k > table.depth())
        throw input_error("interval_I: k outside table depth");
    const QAlpha& eta = table.eta[(size_t)k];
    CirclePoint zero(Rational(0), Rational(0));
    if (k % 2 == 1) return Arc{zero, CirclePoint(eta.s, eta.t)};
    return Arc{CirclePoint(-eta.s, -eta.t), zero};
}

} // namespace sturmpart
