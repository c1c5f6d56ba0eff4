#include "sturmpart/partition.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace sturmpart {

CachedValue cache_value(QAlpha v, const AlphaSpec& alpha) {
    CachedValue out;
    out.approx = approx_of(v, alpha);
    out.err = approx_error_bound(v);
    out.exact = std::move(v);
    return out;
}

std::strong_ordering compare_cached(const CachedValue& x, const CachedValue& y,
                                    const AlphaSpec& alpha) {
    double err = x.err + y.err;
    if (std::isfinite(err)) {
        if (x.approx - y.approx > err) return std::strong_ordering::greater;
        if (y.approx - x.approx > err) return std::strong_ordering::less;
    }
    int s = sign_of(x.exact - y.exact, alpha);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

struct ArcEntry {
    CirclePoint point;
    CachedValue value;
    Symbol name;
};

CachedValue zero_value(const AlphaSpec& alpha) {
    return cache_value(QAlpha(Rational(0), Rational(0)), alpha);
}

} // namespace

LabeledPartition LabeledPartition::from_arcs(const AlphaSpec& alpha,
                                             std::vector<std::pair<CirclePoint, Symbol>> arcs) {
    if (arcs.empty()) throw input_error("partition needs at least one arc");
    std::vector<ArcEntry> entries;
    entries.reserve(arcs.size());
    for (auto& [pt, name] : arcs)
        entries.push_back(ArcEntry{pt, cache_value(point_value(pt, alpha), alpha), name});
    std::sort(entries.begin(), entries.end(), [&](const ArcEntry& a, const ArcEntry& b) {
        return compare_cached(a.value, b.value, alpha) == std::strong_ordering::less;
    });
    for (size_t i = 0; i + 1 < entries.size(); ++i)
        if (compare_cached(entries[i].value, entries[i + 1].value, alpha) ==
            std::strong_ordering::equal)
            throw input_error("duplicate cutpoints in partition spec");

    // Canonicalize: drop cutpoints between same-label neighbours, circularly.
    std::vector<ArcEntry> kept;
    kept.reserve(entries.size());
    for (auto& e : entries) {
        if (!kept.empty() && kept.back().name == e.name) continue;
        kept.push_back(std::move(e));
    }
    while (kept.size() > 1 && kept.front().name == kept.back().name)
        kept.erase(kept.begin());

    LabeledPartition p;
    p.alpha_ = alpha;
    if (kept.size() == 1) {
        p.starts_ = {CirclePoint(Rational(0), Rational(0))};
        p.values_ = {zero_value(alpha)};
        p.labels_ = {0};
        p.names_ = {kept.front().name};
        return p;
    }
    std::map<Symbol, int> ids;
    for (auto& e : kept) {
        auto it = ids.find(e.name);
        int id;
        if (it == ids.end()) {
            id = (int)p.names_.size();
            ids.emplace(e.name, id);
            p.names_.push_back(e.name);
        } else {
            id = it->second;
        }
        p.starts_.push_back(e.point);
        p.values_.push_back(std::move(e.value));
        p.labels_.push_back(id);
    }
    return p;
}

LabeledPartition LabeledPartition::from_cut_labels(const AlphaSpec& alpha,
                                                   const std::vector<CutAssignment>& assignments) {
    if (assignments.empty()) throw input_error("partition spec has no cuts");
    std::vector<std::pair<CirclePoint, Symbol>> arcs;
    size_t distinct_labels = 0;
    {
        std::vector<Symbol> seen;
        for (const auto& a : assignments) {
            arcs.emplace_back(a.cut, a.label);
            if (std::find(seen.begin(), seen.end(), a.label) == seen.end())
                seen.push_back(a.label);
        }
        distinct_labels = seen.size();
    }
    LabeledPartition p = from_arcs(alpha, std::move(arcs));
    if (p.is_trivial() && distinct_labels >= 2)
        throw input_error("cut labels collapse to the trivial partition despite " +
                          std::to_string(distinct_labels) + " distinct labels");
    return p;
}

LabeledPartition LabeledPartition::sturmian(const AlphaSpec& alpha) {
    return from_cut_labels(alpha, {{orbit_point(0), "0"}, {orbit_point(1), "1"}});
}

LabeledPartition LabeledPartition::trivial(const AlphaSpec& alpha, const Symbol& label) {
    return from_arcs(alpha, {{CirclePoint(Rational(0), Rational(0)), label}});
}

Arc LabeledPartition::arc(size_t i) const {
    if (is_trivial()) throw input_error("trivial partition has no proper arcs");
    if (i >= starts_.size()) throw input_error("arc index out of range");
    return Arc{starts_[i], starts_[(i + 1) % starts_.size()]};
}

size_t LabeledPartition::find_arc(const CachedValue& v) const {
    if (is_trivial()) return 0;
    // Last start <= v, wrapping to the final arc below the first start.
    size_t lo = 0, hi = starts_.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (compare_cached(values_[mid], v, alpha_) != std::strong_ordering::greater)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo == 0 ? starts_.size() - 1 : lo - 1;
}

size_t LabeledPartition::find_arc(const CirclePoint& x) const {
    return find_arc(cache_value(point_value(x, alpha_), alpha_));
}

LabeledPartition join(const LabeledPartition& r, const LabeledPartition& s,
                      const Limits& limits) {
    if (!(r.alpha_ == s.alpha_)) throw input_error("join: mismatched alpha");
    const AlphaSpec& alpha = r.alpha_;
    size_t nr = r.arc_count(), ns = s.arc_count();
    if (nr + ns > (size_t)limits.max_cutpoints)
        throw resource_limit_error("join: cutpoint cap exceeded");

    struct UnionEntry {
        const CirclePoint* point;
        const CachedValue* value;
        int rlab, slab;
    };
    std::vector<UnionEntry> merged;
    merged.reserve(nr + ns);
    size_t i = 0, j = 0;
    while (i < nr || j < ns) {
        std::strong_ordering ord = std::strong_ordering::equal;
        if (i == nr)
            ord = std::strong_ordering::greater;
        else if (j == ns)
            ord = std::strong_ordering::less;
        else
            ord = compare_cached(r.values_[i], s.values_[j], alpha);
        if (ord == std::strong_ordering::less)
            merged.push_back({&r.starts_[i], &r.values_[i], r.labels_[i], -1}), ++i;
        else if (ord == std::strong_ordering::greater)
            merged.push_back({&s.starts_[j], &s.values_[j], -1, s.labels_[j]}), ++j;
        else {
            merged.push_back({&r.starts_[i], &r.values_[i], r.labels_[i], s.labels_[j]});
            ++i, ++j;
        }
    }
    // Fill the missing side of each union arc from the arc it falls into; a
    // union point below a side's first start lies in that side's last arc.
    int last_r = r.labels_.back(), last_s = s.labels_.back();
    for (auto& e : merged) {
        if (e.rlab < 0) e.rlab = last_r; else last_r = e.rlab;
        if (e.slab < 0) e.slab = last_s; else last_s = e.slab;
    }

    // Canonicalize in place: the union is already sorted and duplicate-free,
    // so only same-label neighbours need dropping.
    std::vector<size_t> keep;
    keep.reserve(merged.size());
    auto pair_of = [&](size_t idx) {
        return std::make_pair(merged[idx].rlab, merged[idx].slab);
    };
    for (size_t idx = 0; idx < merged.size(); ++idx) {
        if (!keep.empty() && pair_of(keep.back()) == pair_of(idx)) continue;
        keep.push_back(idx);
    }
    while (keep.size() > 1 && pair_of(keep.front()) == pair_of(keep.back()))
        keep.erase(keep.begin());

    LabeledPartition out;
    out.alpha_ = alpha;
    if (keep.size() == 1) {
        out.starts_ = {CirclePoint(Rational(0), Rational(0))};
        out.values_ = {zero_value(alpha)};
        out.labels_ = {0};
        out.names_ = {"s0"};
        return out;
    }
    std::map<std::pair<int, int>, int> ids;
    out.starts_.reserve(keep.size());
    out.values_.reserve(keep.size());
    out.labels_.reserve(keep.size());
    for (size_t idx : keep) {
        auto key = pair_of(idx);
        auto it = ids.find(key);
        if (it == ids.end()) {
            it = ids.emplace(key, (int)out.names_.size()).first;
            out.names_.push_back("s" + std::to_string(out.names_.size()));
        }
        out.starts_.push_back(*merged[idx].point);
        out.values_.push_back(*merged[idx].value);
        out.labels_.push_back(it->second);
    }
    return out;
}

LabeledPartition preimage(const LabeledPartition& r, long long j) {
    if (j == 0 || r.is_trivial()) return r;
    LabeledPartition out;
    out.alpha_ = r.alpha_;
    out.names_ = r.names_;
    size_t n = r.arc_count();
    std::vector<CirclePoint> starts;
    std::vector<CachedValue> values;
    starts.reserve(n);
    values.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        starts.push_back(apply_rotation(r.starts_[i], -j));
        QAlpha shifted(r.values_[i].exact.s, r.values_[i].exact.t - Rational((i128)j));
        values.push_back(cache_value(frac_of(shifted, r.alpha_), r.alpha_));
    }
    // Rotation preserves circular order; re-anchor the arrays at the minimum.
    size_t lo = 0;
    for (size_t i = 1; i < n; ++i)
        if (compare_cached(values[i], values[lo], r.alpha_) == std::strong_ordering::less)
            lo = i;
    out.starts_.reserve(n);
    out.values_.reserve(n);
    out.labels_.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        size_t src = (lo + i) % n;
        out.starts_.push_back(std::move(starts[src]));
        out.values_.push_back(std::move(values[src]));
        out.labels_.push_back(r.labels_[src]);
    }
    return out;
}

namespace {

// R^n = R^a v T^{-a} R^{n-a}; splitting at the midpoint keeps the join sizes
// balanced and the recursion logarithmic.
LabeledPartition refine_rec(const LabeledPartition& r, long long n,
                            std::map<long long, LabeledPartition>& memo,
                            const Limits& limits) {
    if (n == 1) return r;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    long long a = n / 2;
    LabeledPartition out = join(refine_rec(r, a, memo, limits),
                                preimage(refine_rec(r, n - a, memo, limits), a), limits);
    return memo.emplace(n, std::move(out)).first->second;
}

} // namespace

LabeledPartition refine(const LabeledPartition& r, long long n, const Limits& limits) {
    if (n < 1) throw input_error("refine: power must be >= 1");
    if (n > limits.max_refine_power)
        throw resource_limit_error("refine: power exceeds cap of " +
                                   std::to_string(limits.max_refine_power));
    std::map<long long, LabeledPartition> memo;
    return refine_rec(r, n, memo, limits);
}

bool is_finer(const LabeledPartition& r, const LabeledPartition& s) {
    if (!(r.alpha() == s.alpha())) throw input_error("is_finer: mismatched alpha");
    if (s.is_trivial()) return true;
    if (r.is_trivial()) return false;
    const AlphaSpec& alpha = r.alpha();
    // Every cutpoint of S must be a cutpoint of R.
    size_t nr = r.arc_count(), ns = s.arc_count();
    {
        size_t i = 0;
        for (size_t j = 0; j < ns; ++j) {
            while (i < nr && compare_cached(r.start_value(i), s.start_value(j), alpha) ==
                                 std::strong_ordering::less)
                ++i;
            if (i == nr || !(r.start(i) == s.start(j))) return false;
        }
    }
    // The induced label map must be single-valued across all arcs of R.
    std::vector<int> r_to_s((size_t)r.alphabet_size(), -1);
    size_t j = 0;
    // Label of S on the arc containing values below s.start(0): the last arc.
    int current = s.label_id(ns - 1);
    for (size_t i = 0; i < nr; ++i) {
        while (j < ns && compare_cached(s.start_value(j), r.start_value(i), alpha) !=
                             std::strong_ordering::greater) {
            current = s.label_id(j);
            ++j;
        }
        int rid = r.label_id(i);
        if (r_to_s[(size_t)rid] == -1)
            r_to_s[(size_t)rid] = current;
        else if (r_to_s[(size_t)rid] != current)
            return false;
    }
    return true;
}

bool partitions_equal(const LabeledPartition& r, const LabeledPartition& s) {
    if (!(r.alpha() == s.alpha())) throw input_error("partitions_equal: mismatched alpha");
    if (r.arc_count() != s.arc_count()) return false;
    size_t n = r.arc_count();
    for (size_t i = 0; i < n; ++i)
        if (!(r.start(i) == s.start(i))) return false;
    std::vector<int> fwd(r.alphabet_size(), -1), bwd(s.alphabet_size(), -1);
    for (size_t i = 0; i < n; ++i) {
        int a = r.label_id(i), b = s.label_id(i);
        if (fwd[(size_t)a] == -1) fwd[(size_t)a] = b;
        if (bwd[(size_t)b] == -1) bwd[(size_t)b] = a;
        if (fwd[(size_t)a] != b || bwd[(size_t)b] != a) return false;
    }
    return true;
}

bool is_sturmian_measurable(const LabeledPartition& r) {
    if (r.is_trivial()) return true;
    for (size_t i = 0; i < r.arc_count(); ++i)
        if (!orbit_index(r.start(i))) return false;
    return true;
}

CutIndexProfile cut_index_profile(const LabeledPartition& r) {
    if (r.is_trivial())
        throw input_error("cut_index_profile: trivial partition has no cut indices");
    CutIndexProfile out;
    for (size_t i = 0; i < r.arc_count(); ++i) {
        auto idx = orbit_index(r.start(i));
        if (!idx)
            throw input_error("cut_index_profile: partition is not Sturmian-measurable");
        out.indices.push_back(*idx);
    }
    std::sort(out.indices.begin(), out.indices.end());
    out.ell = out.indices.front();
    out.n = out.indices.back() - out.indices.front();
    return out;
}

bool is_interval_partition(const LabeledPartition& r) {
    std::vector<int> count(r.alphabet_size(), 0);
    for (size_t i = 0; i < r.arc_count(); ++i) ++count[(size_t)r.label_id(i)];
    for (int c : count)
        if (c != 1) return false;
    return true;
}

std::optional<std::pair<long long, long long>> equals_sturmian_refinement(
    const LabeledPartition& r) {
    if (r.is_trivial()) return std::nullopt;
    if (r.alphabet_size() != r.arc_count()) return std::nullopt; // labels must be distinct
    std::vector<long long> indices;
    for (size_t i = 0; i < r.arc_count(); ++i) {
        auto idx = orbit_index(r.start(i));
        if (!idx) return std::nullopt;
        indices.push_back(*idx);
    }
    auto [lo, hi] = std::minmax_element(indices.begin(), indices.end());
    long long ell = *lo, m = *hi - *lo;
    if ((long long)indices.size() != m + 1) return std::nullopt; // not a consecutive run
    return std::make_pair(ell, m);
}

Word name_of_point(const LabeledPartition& r, const CirclePoint& x, long long n) {
    if (n < 1) throw input_error("name_of_point: length must be >= 1");
    const AlphaSpec& alpha = r.alpha();
    CachedValue v = cache_value(point_value(x, alpha), alpha);
    CachedValue one = cache_value(QAlpha(Rational(1), Rational(0)), alpha);
    Word out;
    out.reserve((size_t)n);
    for (long long i = 0; i < n; ++i) {
        out.push_back(r.arc_label(r.find_arc(v)));
        QAlpha next(v.exact.s, v.exact.t + Rational(1));
        v = cache_value(std::move(next), alpha);
        if (compare_cached(v, one, alpha) != std::strong_ordering::less)
            v = cache_value(QAlpha(v.exact.s - Rational(1), v.exact.t), alpha);
    }
    return out;
}

std::optional<Theorem1Witness> theorem1_witness(const LabeledPartition& r,
                                                long long max_power, const Limits& limits) {
    if (r.is_trivial())
        throw input_error("theorem1_witness: trivial partition");
    if (!is_sturmian_measurable(r))
        throw input_error("theorem1_witness: partition is not Sturmian-measurable");
    if (max_power < 1) throw input_error("theorem1_witness: max_power must be >= 1");
    CutIndexProfile profile = cut_index_profile(r);
    LabeledPartition chain = r;
    for (long long k = 1; k <= max_power; ++k) {
        if (k > 1) chain = join(chain, preimage(r, k - 1), limits);
        if (auto esr = equals_sturmian_refinement(chain)) {
            auto [ell, m] = *esr;
            if (ell >= profile.ell + profile.n)
                throw std::logic_error("theorem1_witness: ell bound violated");
            return Theorem1Witness{k, ell, m};
        }
    }
    return std::nullopt;
}

namespace {

// Convergent table deep enough to evaluate the bound formulas at k + 3.
ConvergentTable table_for_bound(const AlphaSpec& alpha, long long n, int& k_out,
                                const Limits& limits) {
    int depth = 8;
    for (;;) {
        ConvergentTable t = convergents(alpha, std::min(depth, limits.max_cf_depth), limits);
        if (t.r.back() > (i128)n) {
            int k = locate_k(t, (i128)n);
            if (k + 3 <= t.depth()) {
                k_out = k;
                return t;
            }
        }
        if (depth >= limits.max_cf_depth)
            throw resource_limit_error("theorem2_bound: convergent depth cap reached");
        depth *= 2;
    }
}

long long to_ll(i128 v, const char* what) {
    if (v > (i128)4'000'000'000'000'000'000LL || v < -(i128)4'000'000'000'000'000'000LL)
        throw resource_limit_error(std::string(what) + " exceeds 64-bit range");
    return (long long)v;
}

} // namespace

Theorem2Bound theorem2_bound(const LabeledPartition& r, const Limits& limits) {
    CutIndexProfile profile = cut_index_profile(r);
    int k = 0;
    ConvergentTable t = table_for_bound(r.alpha(), profile.n, k, limits);
    i128 rk3 = t.r[(size_t)k + 3];
    i128 rk = t.r[(size_t)k];
    Theorem2Bound b;
    b.ell = profile.ell;
    b.n = profile.n;
    b.k = k;
    b.K = to_ll(rk3 + 2 * rk - (i128)profile.n - 2, "theorem2 bound K");
    b.M = to_ll(rk3 + 2 * rk - 3, "theorem2 bound M");
    return b;
}

Theorem2Report verify_theorem2(const LabeledPartition& r, const Limits& limits) {
    Theorem2Report report;
    report.bound = theorem2_bound(r, limits);
    if (report.bound.K > limits.max_refine_power || report.bound.M > limits.max_refine_power)
        throw resource_limit_error("verify_theorem2: bound " + std::to_string(report.bound.K) +
                                   " exceeds refine power cap");
    LabeledPartition chain = r;
    for (long long k = 1; k <= report.bound.K; ++k) {
        if (k > 1) chain = join(chain, preimage(r, k - 1), limits);
        if (report.first_collapse_k == 0 && equals_sturmian_refinement(chain))
            report.first_collapse_k = k;
    }
    LabeledPartition rhs =
        preimage(refine(LabeledPartition::sturmian(r.alpha()), report.bound.M, limits),
                 report.bound.ell);
    report.lhs_arcs = (long long)chain.arc_count();
    report.rhs_arcs = (long long)rhs.arc_count();
    report.holds = partitions_equal(chain, rhs);
    return report;
}

namespace {

Symbol coarsening_label(int i) {
    if (i < 26) return Symbol(1, char('A' + i));
    return "L" + std::to_string(i);
}

} // namespace

LabeledPartition random_coarsening(const AlphaSpec& alpha, long long n, int num_labels,
                                   unsigned long long seed, const Limits& limits) {
    if (n < 1) throw input_error("random_coarsening: n must be >= 1");
    if (num_labels < 2 || (long long)num_labels > n + 1)
        throw input_error("random_coarsening: need 2 <= labels <= n+1");
    LabeledPartition base = refine(LabeledPartition::sturmian(alpha), n, limits);
    std::mt19937_64 gen(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<int> labels(base.arc_count());
        std::vector<bool> used((size_t)num_labels, false);
        for (auto& l : labels) {
            l = (int)(gen() % (unsigned long long)num_labels);
            used[(size_t)l] = true;
        }
        if (std::find(used.begin(), used.end(), false) != used.end()) continue;
        std::vector<std::pair<CirclePoint, Symbol>> arcs;
        arcs.reserve(labels.size());
        for (size_t i = 0; i < labels.size(); ++i)
            arcs.emplace_back(base.start(i), coarsening_label(labels[i]));
        LabeledPartition p = LabeledPartition::from_arcs(alpha, std::move(arcs));
        if (!p.is_trivial()) return p;
    }
    throw input_error("random_coarsening: could not draw a non-trivial labeling");
}

LabeledPartition rotation_invariant_partition(const AlphaSpec& alpha, int m_fold) {
    if (m_fold < 2) throw input_error("rotation_invariant_partition: fold must be >= 2");
    std::vector<CutAssignment> cuts;
    for (int j = 0; j < 2 * m_fold; ++j)
        cuts.push_back(CutAssignment{CirclePoint(Rational(j, 2 * m_fold), Rational(0)),
                                     j % 2 == 0 ? "M" : "N"});
    return LabeledPartition::from_cut_labels(alpha, cuts);
}

SymmetricCheckReport symmetric_counterexample_check(const AlphaSpec& alpha, long long max_n,
                                                    int m_fold, const Limits& limits) {
    if (max_n < 1) throw input_error("symmetric_counterexample_check: max_n must be >= 1");
    SymmetricCheckReport report;
    report.max_n = max_n;
    report.m_fold = m_fold;
    LabeledPartition r = rotation_invariant_partition(alpha, m_fold);
    LabeledPartition chain = r;
    for (long long n = 1; n <= max_n; ++n) {
        if (n > 1) chain = join(chain, preimage(r, n - 1), limits);
        if (is_interval_partition(chain)) report.connected_at.push_back(n);
    }
    report.all_disconnected = report.connected_at.empty();
    return report;
}

} // namespace sturmpart
