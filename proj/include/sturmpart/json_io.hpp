#pragma once

#include <json.hpp>

#include "sturmpart/subshift.hpp"
#include "sturmpart/towers.hpp"

namespace sturmpart {

using nlohmann::json;

// {"quadratic": {"p":..,"q":..,"d":..,"r":..}} or
// {"cf": {"prefix": [...], "period": [...]}}
AlphaSpec alpha_from_json(const json& j);
json alpha_to_json(const AlphaSpec& alpha);

// {"alpha": <alpha>, "cuts": [{"orbit": 0, "label": "A"},
//                             {"rational": "1/4", "label": "B"}, ...]}
LabeledPartition partition_from_json(const json& j);

// Arcs with their start points and labels; when `base` is given each arc
// also carries its name (the label word read along the orbit) of length n.
json partition_to_json(const LabeledPartition& p, const LabeledPartition* base = nullptr,
                       long long name_len = 0);

// {"model": {"sturmian": <alpha>} | {"full_shift": ["0","1"]},
//  "width": 2, "table": {"00": "2", "01": "1", ...}}
LocalRule rule_from_json(const json& j, const Limits& limits = default_limits());
json rule_to_json(const LocalRule& rule);

json word_to_json(const Word& w);

json bound_to_json(const Theorem2Bound& bound);
json theorem2_report_to_json(const Theorem2Report& report, const AlphaSpec& alpha);
json theorem1_report_to_json(const std::optional<Theorem1Witness>& witness,
                             long long max_power, const Theorem2Bound& bound,
                             const AlphaSpec& alpha);
json zwords_report_to_json(int k, const AlphaSpec& alpha, const Word& u, const Word& v,
                           const ZWords& zwords, bool boundary_conditions_hold,
                           const std::optional<bool>& per_structure_ok);
json name_formula_report_to_json(const NameFormulaReport& report, const AlphaSpec& alpha);
json minimal_injective_to_json(const MinimalInjectiveResult& result);
json prop5_report_to_json(const Prop5Report& report);
json analyze_report_to_json(const LocalRule& rule, const Limits& limits);
json example1_report_to_json(const Example1Report& report);
json symmetric_report_to_json(const SymmetricCheckReport& report, const AlphaSpec& alpha);

} // namespace sturmpart
