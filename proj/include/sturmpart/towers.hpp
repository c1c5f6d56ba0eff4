#pragma once

#include "sturmpart/partition.hpp"

namespace sturmpart {

// Rokhlin tower: the disjoint family of arcs T^{-m}(core) for from <= m < to.
// Base is the level m = from, top the level m = to - 1.
struct RokhlinTower {
    Arc core;
    long long from = 0;
    long long to = 0;

    long long height() const { return to - from; }
};

// Validates disjointness of the levels (exact arc arithmetic).
RokhlinTower make_tower(const AlphaSpec& alpha, const Arc& core, long long from, long long to);

Arc tower_level(const RokhlinTower& t, long long m);
Arc tower_base(const RokhlinTower& t);
Arc tower_top(const RokhlinTower& t);

// The two towers Lambda(I_k, 0, q_{k-1}) and Lambda(I_{k-1}, 0, q_k) whose
// levels are exactly the arcs of P^{r_k - 1}.
struct TowerPair {
    int k = 1;
    RokhlinTower left;  // base I_k, height q_{k-1}
    RokhlinTower right; // base I_{k-1}, height q_k
};

// Construction self-checks that the level set coincides with the arcs of
// refine(P, r_k - 1), endpoint for endpoint.
TowerPair three_lengths_towers(const AlphaSpec& alpha, int k,
                               const Limits& limits = default_limits());

// T^{-(q_{k-1} + s q_k)} I_k inside I_{k-1} for 0 <= s < c_{k+1}.
bool verify_tower_inclusion(const AlphaSpec& alpha, int k,
                            const Limits& limits = default_limits());

// Word read down the tower: letter j labels the level T^{-(to-1)+j}(core);
// equals the R-name of length height of any point on the top level. Errors
// when some level straddles a boundary of R.
Word tower_code(const LabeledPartition& r, const RokhlinTower& tower);

// Codes of the towers one level up: (v, v^c u).
std::pair<Word, Word> iterate_codes(const Word& u, const Word& v, long long c_next);

struct ZWords {
    Word w;        // v^{c1} u
    Word w_prime;  // w^{c2} v
    Word w_dprime; // (w')^{c3} w
    Word z;        // w'' w'
};

ZWords build_zwords(const Word& u, const Word& v, long long c1, long long c2, long long c3);

// Periodicity skeleton of z at shift |w'|: the first |z|-|v|-|u| positions
// repeat, while positions |z|-1 and |z|-|v|-|u| break the period. Requires
// the boundary conditions u_0 != v_0 and last(u) != last(v).
bool verify_per_structure(const Word& u, const Word& v, const Word& z, size_t w_prime_len);

// The five towers A..E over bases I = I_{k+3}, K = T^{-q_{k+2}} I_{k+3} and
// J = I_{k+2} minus K; their levels tile the circle.
struct FiveTowers {
    RokhlinTower A; // Lambda(I, 0, q_{k+2})
    RokhlinTower B; // Lambda(K, 0, r_k - 1)
    RokhlinTower C; // Lambda(K, r_k - 1, q_{k+3})
    RokhlinTower D; // Lambda(J, r_k - 1, q_{k+3})
    RokhlinTower E; // Lambda(J, 0, r_k - 1)
};

FiveTowers decompose_ABCDE(const AlphaSpec& alpha, int k,
                           const Limits& limits = default_limits());

struct NameFormulaReport {
    int k = 1;
    long long r_k = 0;
    long long r_k3 = 0; // r_{k+3} = |z|
    Word u, v;
    ZWords zwords;
    bool exhaustive = true; // false when levels were sampled under the cap
    long long levels_checked = 0;
    long long mismatches = 0;
    long long per_exclusion_failures = 0;
    // Human-readable descriptions of the first few failures, if any.
    std::vector<std::string> failures;
    // Reading adopted for the name formula of the E-levels (the suffix/
    // prefix split that makes every name exactly r_{k+3} letters long).
    std::string e_formula_reading = "length-consistent";
    bool holds = false;
};

// Checks the closed-form names of length r_{k+3}: rotations of z on the
// A/B/C levels (and the matching D levels), the w''-suffix . w'' . w'-prefix
// form on the E levels, plus the two excluded periodicity indices there.
// Requires 0 and r_k - 1 to be cut indices of R and R rougher than P^{r_k-1}.
NameFormulaReport verify_name_formulas(const LabeledPartition& r, int k,
                                       const Limits& limits = default_limits());

} // namespace sturmpart
