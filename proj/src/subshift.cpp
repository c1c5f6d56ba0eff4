#include "sturmpart/subshift.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace sturmpart {

namespace {

constexpr char kSep = '\x1f';

std::string word_key(const Word& w) {
    std::string out;
    for (const auto& s : w) {
        out += s;
        out += kSep;
    }
    return out;
}

// Sturmian factors of length m: the P-names of the arcs of P^m, read at the
// arcs' left endpoints.
std::vector<Word> sturmian_language(const SturmianModel& model, long long m,
                                    const Limits& limits) {
    LabeledPartition p = refine(LabeledPartition::sturmian(model.alpha), m, limits);
    LabeledPartition base = LabeledPartition::sturmian(model.alpha);
    std::vector<Word> words;
    words.reserve(p.arc_count());
    for (size_t i = 0; i < p.arc_count(); ++i)
        words.push_back(name_of_point(base, p.start(i), m));
    std::sort(words.begin(), words.end());
    return words;
}

void check_full_shift_size(const FullShiftModel& model, long long m, const Limits& limits) {
    if (model.alphabet.empty()) throw input_error("full shift with empty alphabet");
    if (m > limits.max_full_shift_len)
        throw resource_limit_error("full-shift enumeration length " + std::to_string(m) +
                                   " exceeds cap of " +
                                   std::to_string(limits.max_full_shift_len));
}

// Lexicographic enumeration without materializing the word list; fn returns
// false to stop early.
void for_each_word(const LanguageModel& model, long long m, const Limits& limits,
                   const std::function<bool(const Word&)>& fn) {
    if (m < 1) throw input_error("language: length must be >= 1");
    if (const auto* sturmian = std::get_if<SturmianModel>(&model)) {
        for (const Word& w : sturmian_language(*sturmian, m, limits))
            if (!fn(w)) return;
        return;
    }
    const auto& full = std::get<FullShiftModel>(model);
    check_full_shift_size(full, m, limits);
    std::vector<Symbol> alphabet = full.alphabet;
    std::sort(alphabet.begin(), alphabet.end());
    std::vector<size_t> digits((size_t)m, 0);
    Word w((size_t)m, alphabet[0]);
    for (;;) {
        if (!fn(w)) return;
        size_t pos = (size_t)m;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < alphabet.size()) {
                w[pos] = alphabet[digits[pos]];
                break;
            }
            digits[pos] = 0;
            w[pos] = alphabet[0];
            if (pos == 0) return;
        }
    }
}

} // namespace

bool models_equal(const LanguageModel& a, const LanguageModel& b) {
    if (a.index() != b.index()) return false;
    if (const auto* sa = std::get_if<SturmianModel>(&a))
        return sa->alpha == std::get<SturmianModel>(b).alpha;
    return std::get<FullShiftModel>(a).alphabet == std::get<FullShiftModel>(b).alphabet;
}

std::vector<Word> language(const LanguageModel& model, long long m, const Limits& limits) {
    if (const auto* full = std::get_if<FullShiftModel>(&model)) {
        check_full_shift_size(*full, m, limits);
        double count = 1;
        for (long long i = 0; i < m; ++i) count *= (double)full->alphabet.size();
        if (count > 4e6)
            throw resource_limit_error("language: full-shift word list too large to hold");
    }
    std::vector<Word> out;
    for_each_word(model, m, limits, [&](const Word& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

bool in_language(const LanguageModel& model, const Word& w, const Limits& limits) {
    if (w.empty()) return false;
    if (const auto* full = std::get_if<FullShiftModel>(&model)) {
        for (const auto& s : w)
            if (std::find(full->alphabet.begin(), full->alphabet.end(), s) ==
                full->alphabet.end())
                return false;
        return true;
    }
    auto words = language(model, (long long)w.size(), limits);
    return std::binary_search(words.begin(), words.end(), w);
}

LocalRule::LocalRule(LanguageModel model, int width, std::map<Word, Symbol> table,
                     const Limits& limits)
    : model_(std::move(model)), width_(width), table_(std::move(table)) {
    if (width_ < 1) throw input_error("local rule: width must be >= 1");
    std::vector<Word> words = language(model_, width_, limits);
    if (words.size() != table_.size())
        throw input_error("local rule: table must cover the language of length " +
                          std::to_string(width_) + " exactly (" +
                          std::to_string(words.size()) + " words, got " +
                          std::to_string(table_.size()) + " entries)");
    for (const Word& w : words)
        if (table_.find(w) == table_.end())
            throw input_error("local rule: table misses language word '" + word_str(w) + "'");
}

const Symbol& LocalRule::apply(const Word& w) const {
    auto it = table_.find(w);
    if (it == table_.end())
        throw input_error("local rule: word '" + word_str(w) + "' outside the language");
    return it->second;
}

std::vector<Symbol> LocalRule::output_alphabet() const {
    std::vector<Symbol> out;
    for (const auto& [w, s] : table_)
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

bool LocalRule::is_constant() const { return output_alphabet().size() <= 1; }

LocalRule example1_rule() {
    FullShiftModel model{{"0", "1"}};
    std::map<Word, Symbol> table{
        {{"1", "1"}, "0"},
        {{"1", "0"}, "0"},
        {{"0", "1"}, "1"},
        {{"0", "0"}, "2"},
    };
    return LocalRule(LanguageModel(model), 2, std::move(table));
}

Word sliding_block(const LocalRule& rule, const Word& word, const Limits& limits) {
    size_t m = (size_t)rule.width();
    if (word.size() < m)
        throw input_error("sliding_block: word shorter than the rule width");
    if (!in_language(rule.model(), word, limits))
        throw input_error("sliding_block: word '" + word_str(word) + "' not in the language");
    Word out;
    out.reserve(word.size() - m + 1);
    for (size_t i = 0; i + m <= word.size(); ++i)
        out.push_back(rule.apply(subword(word, i, i + m)));
    return out;
}

bool is_minimal(const LocalRule& rule, const Limits& limits) {
    if (rule.width() == 1) return true;
    // Minimal iff some pair of words sharing the (m-1)-prefix maps apart.
    std::map<Word, Symbol> by_prefix;
    (void)limits;
    for (const auto& [w, out] : rule.table()) {
        Word prefix = subword(w, 0, w.size() - 1);
        auto [it, inserted] = by_prefix.emplace(std::move(prefix), out);
        if (!inserted && it->second != out) return true;
    }
    return false;
}

bool ignores_first_letter(const LocalRule& rule, const Limits& limits) {
    if (rule.width() == 1) return false;
    (void)limits;
    std::map<Word, Symbol> by_suffix;
    for (const auto& [w, out] : rule.table()) {
        Word suffix = subword(w, 1, w.size());
        auto [it, inserted] = by_suffix.emplace(std::move(suffix), out);
        if (!inserted && it->second != out) return false;
    }
    return true;
}

LocalRule minimize(const LocalRule& rule, const Limits& limits) {
    LocalRule current = rule;
    while (current.width() > 1 && !is_minimal(current, limits)) {
        std::map<Word, Symbol> table;
        for (const auto& [w, out] : current.table())
            table.emplace(subword(w, 0, w.size() - 1), out);
        current = LocalRule(current.model(), current.width() - 1, std::move(table), limits);
    }
    return current;
}

InjectivityResult injectivity_at(const LocalRule& rule, long long n, const Limits& limits) {
    if (n < 1) throw input_error("injectivity_at: n must be >= 1");
    size_t m = (size_t)rule.width();
    InjectivityResult result;
    result.injective = true;
    std::unordered_map<std::string, Word> seen;
    for_each_word(rule.model(), n + (long long)m - 1, limits, [&](const Word& w) {
        Word image;
        image.reserve((size_t)n);
        for (size_t i = 0; i + m <= w.size(); ++i)
            image.push_back(rule.apply(subword(w, i, i + m)));
        auto [it, inserted] = seen.emplace(word_key(image), w);
        if (!inserted) {
            result.injective = false;
            result.collision = std::make_pair(it->second, w);
            return false;
        }
        return true;
    });
    return result;
}

LabeledPartition rule_to_partition(const LocalRule& rule, const Limits& limits) {
    const auto* sturmian = std::get_if<SturmianModel>(&rule.model());
    if (!sturmian)
        throw input_error("rule_to_partition: rule must live on a Sturmian model");
    const AlphaSpec& alpha = sturmian->alpha;
    LabeledPartition base = LabeledPartition::sturmian(alpha);
    LabeledPartition pm = refine(base, rule.width(), limits);
    std::vector<std::pair<CirclePoint, Symbol>> arcs;
    arcs.reserve(pm.arc_count());
    for (size_t i = 0; i < pm.arc_count(); ++i) {
        Word name = name_of_point(base, pm.start(i), rule.width());
        arcs.emplace_back(pm.start(i), rule.apply(name));
    }
    return LabeledPartition::from_arcs(alpha, std::move(arcs));
}

MinimalInjectiveResult minimal_injective_n(const LocalRule& rule, const Limits& limits) {
    if (!std::holds_alternative<SturmianModel>(rule.model()))
        throw input_error("minimal_injective_n: rule must live on a Sturmian model");
    MinimalInjectiveResult result;
    if (rule.is_constant()) {
        result.reason = "constant rule: not injective at any length";
        return result;
    }
    if (!is_minimal(rule, limits)) {
        result.reason = "rule is not minimal: no finite sliding block code is injective";
        return result;
    }
    if (ignores_first_letter(rule, limits)) {
        result.reason = "rule ignores the first letter: no sliding block code is injective";
        return result;
    }
    LabeledPartition r = rule_to_partition(rule, limits);
    result.bound = theorem2_bound(r, limits);
    result.n_bound = result.bound.K;
    for (long long n = 1; n <= result.n_bound; ++n) {
        if (injectivity_at(rule, n, limits).injective) {
            result.n_min = n;
            return result;
        }
    }
    result.reason = "no injective length up to the bound";
    return result;
}

Prop5Report prop5_report(const LocalRule& rule, const Limits& limits) {
    if (!std::holds_alternative<SturmianModel>(rule.model()))
        throw input_error("prop5_report: rule must live on a Sturmian model");
    if (!is_minimal(rule, limits))
        throw input_error("prop5_report: rule must be minimal");
    if (ignores_first_letter(rule, limits))
        throw input_error("prop5_report: rule must depend on its first letter");
    Prop5Report report;
    report.cond4_rule_nonconstant = !rule.is_constant();
    // The infinite code is non-constant iff two words already have distinct
    // images under some finite code; width-1 witnesses suffice.
    report.cond3_infinite_code_nonconstant = false;
    for (long long witness_len = 1; witness_len <= 4 && !report.cond3_infinite_code_nonconstant;
         ++witness_len) {
        std::optional<Word> first_image;
        for_each_word(rule.model(), rule.width() + witness_len - 1, limits, [&](const Word& w) {
            Word image = sliding_block(rule, w, limits);
            if (!first_image) {
                first_image = image;
                return true;
            }
            if (*first_image != image) {
                report.cond3_infinite_code_nonconstant = true;
                return false;
            }
            return true;
        });
    }
    if (report.cond4_rule_nonconstant) {
        report.injectivity = minimal_injective_n(rule, limits);
        report.cond1_injective_at_finite_n = report.injectivity.n_min.has_value();
    } else {
        report.injectivity.reason = "constant rule";
        report.cond1_injective_at_finite_n = false;
    }
    report.consistent = report.cond1_injective_at_finite_n == report.cond3_infinite_code_nonconstant &&
                        report.cond3_infinite_code_nonconstant == report.cond4_rule_nonconstant;
    return report;
}

Example1Report example1_demo(long long n_max, long long prefix_len_cap, const Limits& limits) {
    if (n_max < 1) throw input_error("example1_demo: n_max must be >= 1");
    LocalRule rule = example1_rule();
    Example1Report report;
    report.n_max = n_max;
    report.all_collide_with_shape = true;
    for (long long n = 1; n <= n_max; ++n) {
        InjectivityResult inj = injectivity_at(rule, n, limits);
        Example1Collision c;
        c.n = n;
        if (inj.collision) {
            c.first = inj.collision->first;
            c.second = inj.collision->second;
            size_t len = c.first.size();
            c.shape_ok = len >= 2 && c.first.size() == c.second.size() &&
                         subword(c.first, 0, len - 1) == subword(c.second, 0, len - 1) &&
                         c.first[len - 2] == "1" &&
                         ((c.first[len - 1] == "0" && c.second[len - 1] == "1") ||
                          (c.first[len - 1] == "1" && c.second[len - 1] == "0"));
        }
        // Every pair (x10, x11) collides, for every prefix x of length n-1.
        c.all_shape_pairs_collide = true;
        auto pair_check = [&](const Word& x) {
            Word a = word_concat(x, {"1", "0"});
            Word b = word_concat(x, {"1", "1"});
            Word ia, ib;
            for (size_t i = 0; i + 2 <= a.size(); ++i) {
                ia.push_back(rule.apply(subword(a, i, i + 2)));
                ib.push_back(rule.apply(subword(b, i, i + 2)));
            }
            if (ia != ib) c.all_shape_pairs_collide = false;
            return c.all_shape_pairs_collide;
        };
        if (n == 1) {
            pair_check(Word{});
        } else {
            for_each_word(rule.model(), n - 1, limits,
                          [&](const Word& x) { return pair_check(x); });
        }
        if (!inj.collision || !c.shape_ok || !c.all_shape_pairs_collide)
            report.all_collide_with_shape = false;
        report.collisions.push_back(std::move(c));
    }

    // Prefix determination: equal images of the length-n code force equal
    // first n letters; checked exhaustively for all word lengths <= cap.
    report.prefix_checked_max_len = prefix_len_cap;
    report.prefix_determination_ok = true;
    for (long long len = 2; len <= prefix_len_cap; ++len) {
        long long n = len - 1; // words of length n + m - 1 = n + 1
        std::unordered_map<std::string, Word> image_to_prefix;
        bool ok = true;
        for_each_word(rule.model(), len, limits, [&](const Word& w) {
            Word image;
            for (size_t i = 0; i + 2 <= w.size(); ++i)
                image.push_back(rule.apply(subword(w, i, i + 2)));
            Word prefix = subword(w, 0, (size_t)n);
            auto [it, inserted] = image_to_prefix.emplace(word_key(image), prefix);
            if (!inserted && it->second != prefix) {
                ok = false;
                return false;
            }
            return true;
        });
        if (!ok) {
            report.prefix_determination_ok = false;
            break;
        }
    }
    return report;
}

} // namespace sturmpart
