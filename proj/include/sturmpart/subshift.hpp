#pragma once

#include <map>
#include <optional>
#include <variant>

#include "sturmpart/partition.hpp"

namespace sturmpart {

// The subshift whose language the rules read: either the Sturmian subshift
// of a given alpha (binary alphabet, m+1 factors of each length m) or the
// full shift over a finite alphabet.
struct SturmianModel {
    AlphaSpec alpha;
};

struct FullShiftModel {
    std::vector<Symbol> alphabet;
};

using LanguageModel = std::variant<SturmianModel, FullShiftModel>;

bool models_equal(const LanguageModel& a, const LanguageModel& b);

// All words of the given length, lexicographically sorted. Errors out when
// the enumeration would exceed the caps.
std::vector<Word> language(const LanguageModel& model, long long m,
                           const Limits& limits = default_limits());

bool in_language(const LanguageModel& model, const Word& w,
                 const Limits& limits = default_limits());

// Width-m local rule: an extensional table from the model's length-m words
// to output symbols.
class LocalRule {
public:
    LocalRule(LanguageModel model, int width, std::map<Word, Symbol> table,
              const Limits& limits = default_limits());

    const LanguageModel& model() const { return model_; }
    int width() const { return width_; }
    const std::map<Word, Symbol>& table() const { return table_; }

    const Symbol& apply(const Word& w) const;
    std::vector<Symbol> output_alphabet() const;
    bool is_constant() const;

private:
    LanguageModel model_;
    int width_ = 1;
    std::map<Word, Symbol> table_;
};

// The paper's running example on the full binary shift:
// 11 -> 0, 10 -> 0, 01 -> 1, 00 -> 2.
LocalRule example1_rule();

// Sliding application: output letter i is rule(word[i, i+m)). The word must
// belong to the model's language.
Word sliding_block(const LocalRule& rule, const Word& word,
                   const Limits& limits = default_limits());

// A rule is minimal when it does not factor through dropping its last
// letter; width-1 rules are minimal by definition.
bool is_minimal(const LocalRule& rule, const Limits& limits = default_limits());

// True when the output never depends on the first letter, i.e. the rule
// factors through the shift. Width-1 rules read their only letter and are
// never considered to ignore it.
bool ignores_first_letter(const LocalRule& rule, const Limits& limits = default_limits());

// Least-width rule inducing the same sliding block codes.
LocalRule minimize(const LocalRule& rule, const Limits& limits = default_limits());

struct InjectivityResult {
    bool injective = false;
    // Lexicographically earliest pair of distinct words with equal images.
    std::optional<std::pair<Word, Word>> collision;
};

// Decides injectivity of the length-n sliding block code by exhaustive
// enumeration of the model's words of length m+n-1.
InjectivityResult injectivity_at(const LocalRule& rule, long long n,
                                 const Limits& limits = default_limits());

// Partition of the circle by the rule's output on the arcs of P^m
// (Sturmian models only). Rougher than P^m by construction.
LabeledPartition rule_to_partition(const LocalRule& rule,
                                   const Limits& limits = default_limits());

struct MinimalInjectiveResult {
    std::optional<long long> n_min; // least injective length, when found
    long long n_bound = 0;          // refinement-collapse bound K
    Theorem2Bound bound;
    std::string reason; // set when n_min is absent
};

// Finds the least n with psi^{*n} injective together with the a-priori bound
// derived from the rule's partition; empty (with reason) for rules that can
// never be injective: constant, non-minimal, or first-letter-ignoring ones.
MinimalInjectiveResult minimal_injective_n(const LocalRule& rule,
                                           const Limits& limits = default_limits());

struct Prop5Report {
    bool cond1_injective_at_finite_n = false;
    bool cond3_infinite_code_nonconstant = false;
    bool cond4_rule_nonconstant = false;
    bool consistent = false; // the three decidable conditions agree
    MinimalInjectiveResult injectivity;
};

// Equivalence report for minimal, first-letter-dependent rules on a Sturmian
// model. Condition (2), injectivity of the infinite code, sits strictly
// between (1) and (3) and is implied rather than decided separately.
Prop5Report prop5_report(const LocalRule& rule, const Limits& limits = default_limits());

struct Example1Collision {
    long long n = 0;
    Word first, second;
    bool shape_ok = false;             // witness of the (x10, x11) form
    bool all_shape_pairs_collide = false; // every (x10, x11) pair has equal images
};

struct Example1Report {
    long long n_max = 0;
    std::vector<Example1Collision> collisions;
    bool all_collide_with_shape = false;
    long long prefix_checked_max_len = 0;
    bool prefix_determination_ok = false;
};

// (a) every finite sliding block code of the example rule collides on a pair
// (x10, x11); (b) equal images still pin down the first n letters, which is
// what makes the infinite code injective.
Example1Report example1_demo(long long n_max, long long prefix_len_cap = 14,
                             const Limits& limits = default_limits());

} // namespace sturmpart
