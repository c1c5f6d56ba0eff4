#pragma once

#include <optional>
#include <vector>

#include "sturmpart/cf.hpp"
#include "sturmpart/words.hpp"

namespace sturmpart {

// A value in Q(alpha) together with a cached floating approximation used to
// short-circuit exact comparisons.
struct CachedValue {
    QAlpha exact;
    double approx = 0.0;
    double err = 0.0;
};

CachedValue cache_value(QAlpha v, const AlphaSpec& alpha);
std::strong_ordering compare_cached(const CachedValue& x, const CachedValue& y,
                                    const AlphaSpec& alpha);

struct CutAssignment {
    CirclePoint cut;
    Symbol label;
};

// Finite partition of the circle into labeled half-open arcs. Canonical form:
// arc starts strictly increasing in [0,1), circularly adjacent arcs carry
// distinct labels, label ids are dense in first-appearance order. The trivial
// partition is stored as a single arc starting at 0.
class LabeledPartition {
public:
    static LabeledPartition from_cut_labels(const AlphaSpec& alpha,
                                            const std::vector<CutAssignment>& assignments);

    // The two-arc partition {[0,1-alpha) -> "0", [1-alpha,1) -> "1"}.
    static LabeledPartition sturmian(const AlphaSpec& alpha);

    static LabeledPartition trivial(const AlphaSpec& alpha, const Symbol& label = "0");

    // Raw canonicalizing constructor used by the lattice operations; arcs is
    // a list of (start point, label name) in arbitrary order.
    static LabeledPartition from_arcs(const AlphaSpec& alpha,
                                      std::vector<std::pair<CirclePoint, Symbol>> arcs);

    const AlphaSpec& alpha() const { return alpha_; }
    size_t arc_count() const { return starts_.size(); }
    bool is_trivial() const { return starts_.size() == 1; }

    const CirclePoint& start(size_t i) const { return starts_[i]; }
    const CachedValue& start_value(size_t i) const { return values_[i]; }
    int label_id(size_t i) const { return labels_[i]; }
    const Symbol& label_name(int id) const { return names_[(size_t)id]; }
    const Symbol& arc_label(size_t i) const { return names_[(size_t)labels_[i]]; }
    size_t alphabet_size() const { return names_.size(); }

    // Proper arc [start_i, start_{i+1}); invalid on the trivial partition.
    Arc arc(size_t i) const;

    // Index of the arc containing the given value in [0,1).
    size_t find_arc(const CachedValue& v) const;
    size_t find_arc(const CirclePoint& x) const;

private:
    friend LabeledPartition join(const LabeledPartition&, const LabeledPartition&,
                                 const Limits&);
    friend LabeledPartition preimage(const LabeledPartition&, long long);

    LabeledPartition() = default;

    AlphaSpec alpha_ = AlphaSpec::golden();
    std::vector<CirclePoint> starts_;
    std::vector<CachedValue> values_;
    std::vector<int> labels_;
    std::vector<Symbol> names_;
};

// Cut indices of a Sturmian-measurable partition: cc(R) = { i : <i> on the
// boundary }, with ell = min cc and n = max cc - min cc. These are exactly
// the largest ell and least n with R rougher than T^{-ell} P^n.
struct CutIndexProfile {
    std::vector<long long> indices;
    long long ell = 0;
    long long n = 0;
};

LabeledPartition join(const LabeledPartition& r, const LabeledPartition& s,
                      const Limits& limits = default_limits());

// T^{-j} R: every cutpoint x replaced by T^{-j}(x); labels unchanged.
LabeledPartition preimage(const LabeledPartition& r, long long j);

// R^n = R v T^{-1}R v ... v T^{-(n-1)}R.
LabeledPartition refine(const LabeledPartition& r, long long n,
                        const Limits& limits = default_limits());

bool is_finer(const LabeledPartition& r, const LabeledPartition& s);

// Same cutpoints and same block structure (labels compared up to renaming).
bool partitions_equal(const LabeledPartition& r, const LabeledPartition& s);

bool is_sturmian_measurable(const LabeledPartition& r);

CutIndexProfile cut_index_profile(const LabeledPartition& r);

// True iff every label occurs on exactly one arc.
bool is_interval_partition(const LabeledPartition& r);

// (ell, m) iff the cutpoints are exactly {<i> : ell <= i <= ell+m} and the
// m+1 arcs carry pairwise distinct labels, i.e. R = T^{-ell} P^m.
std::optional<std::pair<long long, long long>> equals_sturmian_refinement(
    const LabeledPartition& r);

// Letter i is the label of the arc containing T^i(x).
Word name_of_point(const LabeledPartition& r, const CirclePoint& x, long long n);

struct Theorem1Witness {
    long long k = 0;   // least power with R^k a shifted Sturmian refinement
    long long ell = 0;
    long long m = 0;
};

// Scans k = 1..max_power; empty when the cap is exhausted.
std::optional<Theorem1Witness> theorem1_witness(const LabeledPartition& r,
                                                long long max_power,
                                                const Limits& limits = default_limits());

struct Theorem2Bound {
    long long ell = 0;
    long long n = 0;
    long long k = 0;  // r_{k-1} <= n < r_k
    long long K = 0;  // refine power r_{k+3} + 2 r_k - n - 2
    long long M = 0;  // target power r_{k+3} + 2 r_k - 3
};

Theorem2Bound theorem2_bound(const LabeledPartition& r,
                             const Limits& limits = default_limits());

struct Theorem2Report {
    bool holds = false;
    Theorem2Bound bound;
    long long lhs_arcs = 0;
    long long rhs_arcs = 0;
    // Least power at which the refinement chain becomes a shifted Sturmian
    // refinement; 0 when it never happens below K (cannot occur when the
    // verification holds).
    long long first_collapse_k = 0;
};

// Checks refine(R, K) == T^{-ell} refine(P, M) exactly.
Theorem2Report verify_theorem2(const LabeledPartition& r,
                               const Limits& limits = default_limits());

// Surjective random labeling of P^n's n+1 arcs; deterministic per seed.
LabeledPartition random_coarsening(const AlphaSpec& alpha, long long n, int num_labels,
                                   unsigned long long seed,
                                   const Limits& limits = default_limits());

// The rational-rotation-invariant partition with cuts at j/(2m) and two
// alternating labels; m = 2 gives [0,1/4) u [1/2,3/4) versus its complement.
LabeledPartition rotation_invariant_partition(const AlphaSpec& alpha, int m_fold);

struct SymmetricCheckReport {
    long long max_n = 0;
    int m_fold = 2;
    // Powers n at which the refinement consists of intervals only (expected
    // to stay empty: every refinement keeps a disconnected set).
    std::vector<long long> connected_at;
    bool all_disconnected = true;
};

SymmetricCheckReport symmetric_counterexample_check(const AlphaSpec& alpha, long long max_n,
                                                    int m_fold = 2,
                                                    const Limits& limits = default_limits());

} // namespace sturmpart
