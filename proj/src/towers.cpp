#include "sturmpart/towers.hpp"

#include <algorithm>
#include <stdexcept>

namespace sturmpart {

namespace {

CachedValue level_start_value(const Arc& core, long long m, const AlphaSpec& alpha) {
    QAlpha v(core.start.a, core.start.b - Rational((i128)m));
    return cache_value(frac_of(v, alpha), alpha);
}

long long to_level_count(i128 v) {
    if (v < 0 || v > (i128)1'000'000'000LL)
        throw resource_limit_error("tower height out of range");
    return (long long)v;
}

} // namespace

RokhlinTower make_tower(const AlphaSpec& alpha, const Arc& core, long long from, long long to) {
    if (from >= to) throw input_error("make_tower: empty level range");
    RokhlinTower t{core, from, to};
    // Levels are rotations of one arc, so they share a length L; sorted by
    // start, disjointness means consecutive gaps of at least L (with wrap).
    QAlpha len = arc_length(core, alpha);
    std::vector<CachedValue> starts;
    starts.reserve((size_t)(to - from));
    for (long long m = from; m < to; ++m) starts.push_back(level_start_value(core, m, alpha));
    std::sort(starts.begin(), starts.end(), [&](const CachedValue& a, const CachedValue& b) {
        return compare_cached(a, b, alpha) == std::strong_ordering::less;
    });
    for (size_t i = 0; i + 1 < starts.size(); ++i) {
        QAlpha gap = starts[i + 1].exact - starts[i].exact;
        if (sign_of(gap - len, alpha) < 0)
            throw input_error("make_tower: levels overlap");
    }
    if (starts.size() > 1) {
        QAlpha wrap_gap = starts.front().exact + QAlpha(Rational(1), Rational(0)) -
                          starts.back().exact;
        if (sign_of(wrap_gap - len, alpha) < 0)
            throw input_error("make_tower: levels overlap around 0");
    } else {
        if (sign_of(len - QAlpha(Rational(1), Rational(0)), alpha) > 0)
            throw input_error("make_tower: level longer than the circle");
    }
    return t;
}

Arc tower_level(const RokhlinTower& t, long long m) {
    if (m < t.from || m >= t.to) throw input_error("tower_level: index outside range");
    return shift_arc(t.core, -m);
}

Arc tower_base(const RokhlinTower& t) { return tower_level(t, t.from); }

Arc tower_top(const RokhlinTower& t) { return tower_level(t, t.to - 1); }

namespace {

struct LevelRef {
    Arc arc;
    CachedValue start_value;
};

std::vector<LevelRef> sorted_levels(const std::vector<const RokhlinTower*>& towers,
                                    const AlphaSpec& alpha) {
    std::vector<LevelRef> levels;
    for (const RokhlinTower* t : towers)
        for (long long m = t->from; m < t->to; ++m) {
            Arc a = tower_level(*t, m);
            CachedValue v = cache_value(point_value(a.start, alpha), alpha);
            levels.push_back(LevelRef{std::move(a), std::move(v)});
        }
    std::sort(levels.begin(), levels.end(), [&](const LevelRef& a, const LevelRef& b) {
        return compare_cached(a.start_value, b.start_value, alpha) == std::strong_ordering::less;
    });
    return levels;
}

// The levels must tile the circle: each arc's end is the next arc's start.
void check_tiling(const std::vector<LevelRef>& levels, const AlphaSpec& alpha,
                  const char* what) {
    for (size_t i = 0; i < levels.size(); ++i) {
        const Arc& cur = levels[i].arc;
        const Arc& nxt = levels[(i + 1) % levels.size()].arc;
        QAlpha end_val = point_value(cur.end, alpha);
        QAlpha nxt_val = point_value(nxt.start, alpha);
        if (!(end_val == nxt_val))
            throw std::logic_error(std::string(what) + ": levels do not tile the circle");
    }
}

} // namespace

TowerPair three_lengths_towers(const AlphaSpec& alpha, int k, const Limits& limits) {
    if (k < 1) throw input_error("three_lengths_towers: k must be >= 1");
    ConvergentTable table = convergents(alpha, k + 1, limits);
    long long q_km1 = to_level_count(table.q[(size_t)k - 1]);
    long long q_k = to_level_count(table.q[(size_t)k]);
    TowerPair pair;
    pair.k = k;
    pair.left = make_tower(alpha, interval_I(table, k), 0, q_km1);
    pair.right = make_tower(alpha, interval_I(table, k - 1), 0, q_k);

    // Self-check: the level set is exactly the arc set of P^{r_k - 1}.
    auto levels = sorted_levels({&pair.left, &pair.right}, alpha);
    check_tiling(levels, alpha, "three_lengths_towers");
    long long power = to_level_count(table.r[(size_t)k] - 1);
    LabeledPartition p = refine(LabeledPartition::sturmian(alpha), power, limits);
    if (p.arc_count() != levels.size())
        throw std::logic_error("three_lengths_towers: level count mismatch");
    for (size_t i = 0; i < levels.size(); ++i)
        if (!(levels[i].arc.start == p.start(i)))
            throw std::logic_error("three_lengths_towers: level endpoints mismatch");
    return pair;
}

bool verify_tower_inclusion(const AlphaSpec& alpha, int k, const Limits& limits) {
    if (k < 1) throw input_error("verify_tower_inclusion: k must be >= 1");
    ConvergentTable table = convergents(alpha, k + 1, limits);
    Arc outer = interval_I(table, k - 1);
    Arc inner = interval_I(table, k);
    long long q_km1 = to_level_count(table.q[(size_t)k - 1]);
    long long q_k = to_level_count(table.q[(size_t)k]);
    for (long long s = 0; s < table.c[(size_t)k + 1]; ++s) {
        Arc shifted = shift_arc(inner, -(q_km1 + s * q_k));
        if (!arc_contains_arc(outer, shifted, alpha)) return false;
    }
    return true;
}

Word tower_code(const LabeledPartition& r, const RokhlinTower& tower) {
    const AlphaSpec& alpha = r.alpha();
    Word code;
    code.reserve((size_t)tower.height());
    for (long long j = 0; j < tower.height(); ++j) {
        Arc level = tower_level(tower, tower.to - 1 - j);
        size_t arc_idx = r.find_arc(level.start);
        if (!r.is_trivial() && !arc_contains_arc(r.arc(arc_idx), level, alpha))
            throw input_error("tower_code: a level straddles a boundary of the partition");
        code.push_back(r.arc_label(arc_idx));
    }
    return code;
}

std::pair<Word, Word> iterate_codes(const Word& u, const Word& v, long long c_next) {
    if (u.empty() || v.empty()) throw input_error("iterate_codes: empty code word");
    if (c_next < 1) throw input_error("iterate_codes: coefficient must be >= 1");
    return {v, word_concat(word_pow(v, c_next), u)};
}

ZWords build_zwords(const Word& u, const Word& v, long long c1, long long c2, long long c3) {
    if (u.empty() || v.empty()) throw input_error("build_zwords: empty code word");
    if (c1 < 1 || c2 < 1 || c3 < 1) throw input_error("build_zwords: coefficients must be >= 1");
    ZWords zw;
    zw.w = word_concat(word_pow(v, c1), u);
    zw.w_prime = word_concat(word_pow(zw.w, c2), v);
    zw.w_dprime = word_concat(word_pow(zw.w_prime, c3), zw.w);
    zw.z = word_concat(zw.w_dprime, zw.w_prime);
    return zw;
}

bool verify_per_structure(const Word& u, const Word& v, const Word& z, size_t w_prime_len) {
    if (u.empty() || v.empty() || z.size() < u.size() + v.size() + 1)
        throw input_error("verify_per_structure: inconsistent word sizes");
    if (u.front() == v.front() || u.back() == v.back())
        throw input_error("verify_per_structure: boundary conditions violated "
                          "(codes must differ at both ends)");
    std::vector<size_t> per = per_set(z, w_prime_len);
    size_t cut = z.size() - u.size() - v.size();
    std::vector<bool> in_per(z.size(), false);
    for (size_t j : per) in_per[j] = true;
    for (size_t j = 0; j < cut; ++j)
        if (!in_per[j]) return false;
    return !in_per[cut] && !in_per[z.size() - 1];
}

namespace {

// outer minus inner when they share exactly one endpoint; the difference is
// then a single arc.
Arc arc_subtract_touching(const Arc& outer, const Arc& inner, const AlphaSpec& alpha) {
    if (!arc_contains_arc(outer, inner, alpha))
        throw input_error("arc difference: inner arc not contained");
    if (inner.start == outer.start) return Arc{inner.end, outer.end};
    if (inner.end == outer.end) return Arc{outer.start, inner.start};
    throw input_error("arc difference: result is not a single arc");
}

} // namespace

FiveTowers decompose_ABCDE(const AlphaSpec& alpha, int k, const Limits& limits) {
    if (k < 1) throw input_error("decompose_ABCDE: k must be >= 1");
    ConvergentTable table = convergents(alpha, k + 3, limits);
    long long q_k2 = to_level_count(table.q[(size_t)k + 2]);
    long long q_k3 = to_level_count(table.q[(size_t)k + 3]);
    long long r_k = to_level_count(table.r[(size_t)k]);
    Arc I = interval_I(table, k + 3);
    Arc K = shift_arc(I, -q_k2);
    Arc J = arc_subtract_touching(interval_I(table, k + 2), K, alpha);
    FiveTowers f{
        make_tower(alpha, I, 0, q_k2),
        make_tower(alpha, K, 0, r_k - 1),
        make_tower(alpha, K, r_k - 1, q_k3),
        make_tower(alpha, J, r_k - 1, q_k3),
        make_tower(alpha, J, 0, r_k - 1),
    };
    auto levels = sorted_levels({&f.A, &f.B, &f.C, &f.D, &f.E}, alpha);
    check_tiling(levels, alpha, "decompose_ABCDE");
    return f;
}

namespace {

std::string describe_mismatch(const char* tower, long long m, const Word& expected,
                              const Word& actual) {
    return std::string(tower) + " level " + std::to_string(m) + ": expected " +
           word_str(expected) + ", got " + word_str(actual);
}

} // namespace

NameFormulaReport verify_name_formulas(const LabeledPartition& r, int k, const Limits& limits) {
    if (k < 1) throw input_error("verify_name_formulas: k must be >= 1");
    const AlphaSpec& alpha = r.alpha();
    ConvergentTable table = convergents(alpha, k + 3, limits);
    long long r_k = to_level_count(table.r[(size_t)k]);
    long long r_k3 = to_level_count(table.r[(size_t)k + 3]);
    long long q_k2 = to_level_count(table.q[(size_t)k + 2]);
    long long q_k3 = to_level_count(table.q[(size_t)k + 3]);

    CutIndexProfile profile = cut_index_profile(r); // rejects trivial/non-measurable
    if (profile.ell != 0 || profile.ell + profile.n != r_k - 1)
        throw input_error("verify_name_formulas: 0 and r_k-1 must be cut indices and the "
                          "partition rougher than P^{r_k-1}");

    NameFormulaReport report;
    report.k = k;
    report.r_k = r_k;
    report.r_k3 = r_k3;

    TowerPair pair = three_lengths_towers(alpha, k, limits);
    report.u = tower_code(r, pair.left);
    report.v = tower_code(r, pair.right);
    report.zwords = build_zwords(report.u, report.v, table.c[(size_t)k + 1],
                                 table.c[(size_t)k + 2], table.c[(size_t)k + 3]);
    const Word& z = report.zwords.z;
    const Word& wd = report.zwords.w_dprime;
    const Word& wp = report.zwords.w_prime;
    if ((long long)z.size() != r_k3)
        throw std::logic_error("verify_name_formulas: |z| != r_{k+3}");

    FiveTowers towers = decompose_ABCDE(alpha, k, limits);

    long long stride = 1;
    if (r_k3 > limits.max_name_formula_span) {
        stride = (r_k3 + limits.max_name_formula_span - 1) / limits.max_name_formula_span;
        report.exhaustive = false;
    }

    auto record_failure = [&](std::string msg) {
        ++report.mismatches;
        if (report.failures.size() < 8) report.failures.push_back(std::move(msg));
    };

    // A, B, C levels are T^{-m} I for 0 <= m < r_{k+3}; their names are the
    // cyclic rotations of z placing z's tail first.
    for (long long m = 0; m < r_k3; m += stride) {
        Arc level = m < q_k2 ? tower_level(towers.A, m)
                             : tower_level(m < q_k2 + r_k - 1 ? towers.B : towers.C, m - q_k2);
        Word expected = word_rotate_left(z, (size_t)(r_k3 - m - 1));
        Word actual = name_of_point(r, level.start, r_k3);
        ++report.levels_checked;
        if (expected != actual)
            record_failure(describe_mismatch("ABC", m, expected, actual));
    }

    // D levels share their names with the C level of the same height.
    for (long long m = r_k - 1; m < q_k3; m += stride) {
        Arc level = tower_level(towers.D, m);
        Word expected = word_rotate_left(z, (size_t)(r_k3 - (m + q_k2) - 1));
        Word actual = name_of_point(r, level.start, r_k3);
        ++report.levels_checked;
        if (expected != actual)
            record_failure(describe_mismatch("D", m, expected, actual));
    }

    // E levels: suffix of w'', then all of w'', then a prefix of w'.
    for (long long m = 0; m < r_k - 1; m += stride) {
        Arc level = tower_level(towers.E, m);
        Word expected = word_concat(
            word_concat(subword(wd, (size_t)(q_k3 - m - 1), (size_t)q_k3), wd),
            subword(wp, 0, (size_t)(q_k2 - m - 1)));
        Word actual = name_of_point(r, level.start, r_k3);
        ++report.levels_checked;
        if (expected != actual) {
            record_failure(describe_mismatch("E", m, expected, actual));
            continue;
        }
        std::vector<size_t> per = per_set(actual, wp.size());
        std::vector<bool> in_per(actual.size(), false);
        for (size_t j : per) in_per[j] = true;
        size_t ex1 = (size_t)((m + (long long)wp.size()) % r_k3);
        size_t ex2 = (size_t)(((m - r_k + 1) % r_k3 + r_k3) % r_k3);
        if (in_per[ex1] || in_per[ex2]) {
            ++report.per_exclusion_failures;
            if (report.failures.size() < 8)
                report.failures.push_back("E level " + std::to_string(m) +
                                          ": excluded Per index present");
        }
    }

    report.holds = report.mismatches == 0 && report.per_exclusion_failures == 0;
    return report;
}

} // namespace sturmpart
