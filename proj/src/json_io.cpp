#include "sturmpart/json_io.hpp"

namespace sturmpart {

namespace {

long long get_ll(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw input_error(std::string("expected integer field '") + key + "'");
    return j[key].get<long long>();
}

std::string get_str(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw input_error(std::string("expected string field '") + key + "'");
    return j[key].get<std::string>();
}

std::vector<long long> get_ll_array(const json& j) {
    if (!j.is_array()) throw input_error("expected an array of integers");
    std::vector<long long> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw input_error("expected an array of integers");
        out.push_back(v.get<long long>());
    }
    return out;
}

} // namespace

AlphaSpec alpha_from_json(const json& j) {
    if (!j.is_object()) throw input_error("alpha spec must be a JSON object");
    if (j.contains("quadratic")) {
        const json& q = j["quadratic"];
        return AlphaSpec::quadratic(get_ll(q, "p"), get_ll(q, "q"), get_ll(q, "d"),
                                    get_ll(q, "r"));
    }
    if (j.contains("cf")) {
        const json& c = j["cf"];
        if (!c.contains("prefix") || !c.contains("period"))
            throw input_error("cf alpha spec needs 'prefix' and 'period'");
        return AlphaSpec::continued_fraction(get_ll_array(c["prefix"]),
                                             get_ll_array(c["period"]));
    }
    throw input_error("alpha spec must contain 'quadratic' or 'cf'");
}

json alpha_to_json(const AlphaSpec& alpha) {
    if (alpha.cf()) {
        return json{{"cf", {{"prefix", alpha.cf()->prefix}, {"period", alpha.cf()->period}}}};
    }
    const auto& f = alpha.quad();
    auto ll = [](i128 v) {
        if (v > (i128)9'000'000'000'000'000'000LL || v < -(i128)9'000'000'000'000'000'000LL)
            throw input_error("alpha component exceeds the JSON integer range");
        return (long long)v;
    };
    return json{{"quadratic",
                 {{"p", ll(f.p)}, {"q", ll(f.q)}, {"d", ll(f.d)}, {"r", ll(f.r)}}}};
}

LabeledPartition partition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("cuts"))
        throw input_error("partition spec needs 'alpha' and 'cuts'");
    AlphaSpec alpha = alpha_from_json(j["alpha"]);
    if (!j["cuts"].is_array() || j["cuts"].empty())
        throw input_error("partition spec 'cuts' must be a non-empty array");
    std::vector<CutAssignment> cuts;
    for (const auto& c : j["cuts"]) {
        CutAssignment a;
        a.label = get_str(c, "label");
        if (c.contains("orbit")) {
            a.cut = orbit_point(get_ll(c, "orbit"));
        } else if (c.contains("rational")) {
            a.cut = CirclePoint(Rational::parse(get_str(c, "rational")), Rational(0));
        } else {
            throw input_error("each cut needs 'orbit' or 'rational'");
        }
        cuts.push_back(std::move(a));
    }
    return LabeledPartition::from_cut_labels(alpha, cuts);
}

json partition_to_json(const LabeledPartition& p, const LabeledPartition* base,
                       long long name_len) {
    json arcs = json::array();
    for (size_t i = 0; i < p.arc_count(); ++i) {
        json arc;
        const CirclePoint& pt = p.start(i);
        if (auto idx = orbit_index(pt)) {
            arc["start"] = json{{"orbit", *idx}};
        } else {
            arc["start"] = json{{"a", pt.a.str()}, {"b", pt.b.str()}};
        }
        arc["label"] = p.arc_label(i);
        if (base && name_len > 0)
            arc["name"] = word_str(name_of_point(*base, pt, name_len));
        arcs.push_back(std::move(arc));
    }
    return json{{"alpha", alpha_to_json(p.alpha())},
                {"arc_count", p.arc_count()},
                {"trivial", p.is_trivial()},
                {"arcs", std::move(arcs)}};
}

namespace {

LanguageModel model_from_json(const json& j) {
    if (!j.is_object()) throw input_error("rule model must be a JSON object");
    if (j.contains("sturmian")) return SturmianModel{alpha_from_json(j["sturmian"])};
    if (j.contains("full_shift")) {
        if (!j["full_shift"].is_array() || j["full_shift"].empty())
            throw input_error("full_shift model needs a non-empty alphabet array");
        std::vector<Symbol> alphabet;
        for (const auto& s : j["full_shift"]) {
            if (!s.is_string() || s.get<std::string>().size() != 1)
                throw input_error("full_shift alphabet symbols must be single characters");
            alphabet.push_back(s.get<std::string>());
        }
        return FullShiftModel{std::move(alphabet)};
    }
    throw input_error("rule model must contain 'sturmian' or 'full_shift'");
}

json model_to_json(const LanguageModel& model) {
    if (const auto* s = std::get_if<SturmianModel>(&model))
        return json{{"sturmian", alpha_to_json(s->alpha)}};
    return json{{"full_shift", std::get<FullShiftModel>(model).alphabet}};
}

Word split_key(const std::string& key) {
    Word w;
    for (char c : key) w.push_back(Symbol(1, c));
    return w;
}

} // namespace

LocalRule rule_from_json(const json& j, const Limits& limits) {
    if (!j.is_object() || !j.contains("model") || !j.contains("width") || !j.contains("table"))
        throw input_error("rule spec needs 'model', 'width' and 'table'");
    LanguageModel model = model_from_json(j["model"]);
    long long width = get_ll(j, "width");
    if (width < 1 || width > 64) throw input_error("rule width out of range");
    if (!j["table"].is_object()) throw input_error("rule 'table' must be an object");
    std::map<Word, Symbol> table;
    for (const auto& [key, value] : j["table"].items()) {
        if ((long long)key.size() != width)
            throw input_error("rule table key '" + key + "' does not have width " +
                              std::to_string(width));
        if (!value.is_string() || value.get<std::string>().empty())
            throw input_error("rule table values must be non-empty strings");
        table.emplace(split_key(key), value.get<std::string>());
    }
    return LocalRule(std::move(model), (int)width, std::move(table), limits);
}

json rule_to_json(const LocalRule& rule) {
    json table = json::object();
    for (const auto& [w, out] : rule.table()) table[word_str(w)] = out;
    return json{{"model", model_to_json(rule.model())},
                {"width", rule.width()},
                {"table", std::move(table)}};
}

json word_to_json(const Word& w) {
    return json{{"symbols", w}, {"joined", word_str(w)}};
}

json bound_to_json(const Theorem2Bound& bound) {
    return json{{"ell", bound.ell}, {"n", bound.n}, {"k", bound.k},
                {"K", bound.K},     {"M", bound.M}};
}

json theorem2_report_to_json(const Theorem2Report& report, const AlphaSpec& alpha) {
    return json{{"command", "partition-verify-thm2"},
                {"alpha", alpha_to_json(alpha)},
                {"holds", report.holds},
                {"bound", bound_to_json(report.bound)},
                {"lhs_arcs", report.lhs_arcs},
                {"rhs_arcs", report.rhs_arcs},
                {"first_collapse_k", report.first_collapse_k}};
}

json theorem1_report_to_json(const std::optional<Theorem1Witness>& witness,
                             long long max_power, const Theorem2Bound& bound,
                             const AlphaSpec& alpha) {
    json j{{"command", "partition-verify-thm1"},
           {"alpha", alpha_to_json(alpha)},
           {"found", witness.has_value()},
           {"max_power", max_power},
           {"bound", bound_to_json(bound)}};
    if (witness) {
        j["k"] = witness->k;
        j["ell"] = witness->ell;
        j["m"] = witness->m;
    }
    return j;
}

json zwords_report_to_json(int k, const AlphaSpec& alpha, const Word& u, const Word& v,
                           const ZWords& zwords, bool boundary_conditions_hold,
                           const std::optional<bool>& per_structure_ok) {
    json per{{"shift", zwords.w_prime.size()},
             {"boundary_conditions_hold", boundary_conditions_hold},
             {"per_z", per_set(zwords.z, zwords.w_prime.size())}};
    per["structure_ok"] = per_structure_ok ? json(*per_structure_ok) : json(nullptr);
    return json{{"command", "towers-codes"},
                {"alpha", alpha_to_json(alpha)},
                {"k", k},
                {"u", word_to_json(u)},
                {"v", word_to_json(v)},
                {"w", word_to_json(zwords.w)},
                {"w_prime", word_to_json(zwords.w_prime)},
                {"w_dprime", word_to_json(zwords.w_dprime)},
                {"z", word_to_json(zwords.z)},
                {"per", std::move(per)}};
}

json name_formula_report_to_json(const NameFormulaReport& report, const AlphaSpec& alpha) {
    return json{{"command", "towers-name-formulas"},
                {"alpha", alpha_to_json(alpha)},
                {"k", report.k},
                {"r_k", report.r_k},
                {"r_k3", report.r_k3},
                {"holds", report.holds},
                {"exhaustive", report.exhaustive},
                {"levels_checked", report.levels_checked},
                {"mismatches", report.mismatches},
                {"per_exclusion_failures", report.per_exclusion_failures},
                {"e_formula_reading", report.e_formula_reading},
                {"failures", report.failures}};
}

json minimal_injective_to_json(const MinimalInjectiveResult& result) {
    json j{{"n_bound", result.n_bound}, {"bound", bound_to_json(result.bound)}};
    j["n_min"] = result.n_min ? json(*result.n_min) : json(nullptr);
    j["reason"] = result.reason;
    return j;
}

json prop5_report_to_json(const Prop5Report& report) {
    return json{{"cond1_injective_at_finite_n", report.cond1_injective_at_finite_n},
                {"cond3_infinite_code_nonconstant", report.cond3_infinite_code_nonconstant},
                {"cond4_rule_nonconstant", report.cond4_rule_nonconstant},
                {"consistent", report.consistent},
                {"injectivity", minimal_injective_to_json(report.injectivity)}};
}

json analyze_report_to_json(const LocalRule& rule, const Limits& limits) {
    json j{{"command", "sbc-analyze"},
           {"model", model_to_json(rule.model())},
           {"width", rule.width()},
           {"minimal", is_minimal(rule, limits)},
           {"ignores_first_letter", ignores_first_letter(rule, limits)},
           {"constant", rule.is_constant()},
           {"minimized_width", minimize(rule, limits).width()}};
    bool sturmian = std::holds_alternative<SturmianModel>(rule.model());
    if (sturmian && is_minimal(rule, limits) && !ignores_first_letter(rule, limits)) {
        j["prop5"] = prop5_report_to_json(prop5_report(rule, limits));
    } else {
        j["prop5"] = nullptr;
    }
    if (!sturmian) {
        // Bounded search so the full-shift example still reports something useful.
        long long cap = limits.max_full_shift_len - rule.width() + 1;
        cap = std::min<long long>(cap, 12);
        json search{{"cap", cap}};
        search["first_injective_n"] = nullptr;
        for (long long n = 1; n <= cap; ++n) {
            if (injectivity_at(rule, n, limits).injective) {
                search["first_injective_n"] = n;
                break;
            }
        }
        j["search"] = std::move(search);
    } else {
        j["search"] = nullptr;
    }
    return j;
}

json example1_report_to_json(const Example1Report& report) {
    json collisions = json::array();
    for (const auto& c : report.collisions) {
        json e{{"n", c.n},
               {"shape_ok", c.shape_ok},
               {"all_shape_pairs_collide", c.all_shape_pairs_collide}};
        e["first"] = word_str(c.first);
        e["second"] = word_str(c.second);
        collisions.push_back(std::move(e));
    }
    return json{{"command", "demo-example1"},
                {"n_max", report.n_max},
                {"collisions", std::move(collisions)},
                {"all_collide_with_shape", report.all_collide_with_shape},
                {"prefix_checked_max_len", report.prefix_checked_max_len},
                {"prefix_determination_ok", report.prefix_determination_ok}};
}

json symmetric_report_to_json(const SymmetricCheckReport& report, const AlphaSpec& alpha) {
    return json{{"command", "demo-symmetric"},
                {"alpha", alpha_to_json(alpha)},
                {"max_n", report.max_n},
                {"fold", report.m_fold},
                {"connected_at", report.connected_at},
                {"all_disconnected", report.all_disconnected}};
}

} // namespace sturmpart
