#pragma once

#include <vector>

#include "sturmpart/circle.hpp"
#include "sturmpart/limits.hpp"

namespace sturmpart {

// Convergent data for alpha up to depth K. Index conventions follow the
// usual ones for these recurrences: c_k for 1 <= k <= K (c[0] unused),
// p, q, r, eta for 0 <= k <= K, with
//   p_k = c_k p_{k-1} + p_{k-2},  p_0 = 0, p_1 = 1,
//   q_k = c_k q_{k-1} + q_{k-2},  q_0 = 1, q_1 = c_1,
//   r_0 = 1, r_k = q_k + q_{k-1},
//   eta_k = |q_k alpha - p_k| held exactly as an element of Q(alpha).
struct ConvergentTable {
    AlphaSpec alpha;
    std::vector<long long> c;
    std::vector<i128> p, q, r;
    std::vector<QAlpha> eta;

    int depth() const { return (int)c.size() - 1; }
};

// First `depth` coefficients of the continued fraction of alpha.
std::vector<long long> expand_cf(const AlphaSpec& alpha, int depth,
                                 const Limits& limits = default_limits());

// Table construction is memoized per canonical alpha within the process.
ConvergentTable convergents(const AlphaSpec& alpha, int depth,
                            const Limits& limits = default_limits());

// The unique k >= 1 with r_{k-1} <= n < r_k; throws when the table is too
// shallow to decide.
int locate_k(const ConvergentTable& table, i128 n);

// The interval I_k: one of the two arcs adjacent to 0 cut out by <q_k>,
// of length eta_k. Runs [<q_k>, 0) for even k and [0, <q_k>) for odd k.
Arc interval_I(const ConvergentTable& table, int k);

} // namespace sturmpart
