#include <doctest.h>

#include <fstream>

#include "support/schema_check.hpp"

#include "sturmpart/json_io.hpp"

using namespace sturmpart;

namespace {

json schema_root() {
    static json schema = [] {
        std::ifstream in(std::string(STURMPART_TEST_SOURCE_DIR) +
                         "/../schemas/reports.schema.json");
        REQUIRE(in.good());
        json j;
        in >> j;
        return j;
    }();
    return schema;
}

void check_valid(const json& report) {
    std::string why;
    bool ok = schema_check::validate_report(schema_root(), report, &why);
    INFO(why);
    INFO(report.dump(2).substr(0, 400));
    CHECK(ok);
}

} // namespace

TEST_CASE("alpha json round trip") {
    AlphaSpec g = alpha_from_json(json::parse(R"({"quadratic": {"p": -1, "q": 1, "d": 5, "r": 2}})"));
    CHECK(g == AlphaSpec::golden());
    CHECK(alpha_from_json(alpha_to_json(g)) == g);
    AlphaSpec cf = alpha_from_json(json::parse(R"({"cf": {"prefix": [], "period": [1]}})"));
    CHECK(cf == AlphaSpec::golden());
    CHECK(alpha_from_json(alpha_to_json(cf)) == cf);
    CHECK(alpha_to_json(cf).contains("cf")); // the original form is preserved
    CHECK_THROWS_AS(alpha_from_json(json::parse(R"({"quadratic": {"p": -1}})")), input_error);
    CHECK_THROWS_AS(alpha_from_json(json::parse(R"({"x": 1})")), input_error);
    CHECK_THROWS_AS(alpha_from_json(json::parse(R"("golden")")), input_error);
}

TEST_CASE("partition spec parsing") {
    json spec = json::parse(R"({
        "alpha": {"quadratic": {"p": -1, "q": 1, "d": 5, "r": 2}},
        "cuts": [{"orbit": 0, "label": "0"}, {"orbit": 1, "label": "1"}]
    })");
    LabeledPartition p = partition_from_json(spec);
    CHECK(partitions_equal(p, LabeledPartition::sturmian(AlphaSpec::golden())));
    json sym = json::parse(R"({
        "alpha": {"quadratic": {"p": -1, "q": 1, "d": 5, "r": 2}},
        "cuts": [{"rational": "0", "label": "M"}, {"rational": "1/4", "label": "N"},
                 {"rational": "1/2", "label": "M"}, {"rational": "3/4", "label": "N"}]
    })");
    LabeledPartition s = partition_from_json(sym);
    CHECK(s.arc_count() == 4);
    CHECK(partitions_equal(s, rotation_invariant_partition(AlphaSpec::golden(), 2)));
    CHECK_THROWS_AS(partition_from_json(json::parse(R"({"alpha": {}, "cuts": []})")),
                    input_error);
    json bad = spec;
    bad["cuts"][0] = json{{"label", "0"}};
    CHECK_THROWS_AS(partition_from_json(bad), input_error);
    // Round trip through the output format start points.
    json out = partition_to_json(p);
    CHECK(out["arc_count"] == 2);
    CHECK(out["arcs"][0]["start"]["orbit"] == 0);
}

TEST_CASE("rule json parsing") {
    json spec = json::parse(R"({
        "model": {"full_shift": ["0", "1"]},
        "width": 2,
        "table": {"00": "2", "01": "1", "10": "0", "11": "0"}
    })");
    LocalRule rule = rule_from_json(spec);
    CHECK(rule.table() == example1_rule().table());
    CHECK(rule_from_json(rule_to_json(rule)).table() == rule.table());
    // Sturmian model tables must cover the language exactly.
    json sturmian_spec = json::parse(R"({
        "model": {"sturmian": {"quadratic": {"p": -1, "q": 1, "d": 5, "r": 2}}},
        "width": 2,
        "table": {"01": "a", "10": "b", "11": "a"}
    })");
    LocalRule srule = rule_from_json(sturmian_spec);
    CHECK(srule.width() == 2);
    json missing = sturmian_spec;
    missing["table"].erase("11");
    CHECK_THROWS_AS(rule_from_json(missing), input_error);
    json forbidden = sturmian_spec;
    forbidden["table"].erase("11");
    forbidden["table"]["00"] = "c";
    CHECK_THROWS_AS(rule_from_json(forbidden), input_error);
    json wrong_width = spec;
    wrong_width["table"] = json{{"0", "a"}, {"1", "b"}};
    CHECK_THROWS_AS(rule_from_json(wrong_width), input_error);
}

TEST_CASE("reports validate against the published schema") {
    AlphaSpec g = AlphaSpec::golden();
    LabeledPartition p = LabeledPartition::sturmian(g);

    check_valid(theorem2_report_to_json(verify_theorem2(p), g));
    auto bound = theorem2_bound(p);
    check_valid(theorem1_report_to_json(theorem1_witness(p, 9), 9, bound, g));
    check_valid(theorem1_report_to_json(std::nullopt, 1, bound, g));

    ConvergentTable t = convergents(g, 5);
    TowerPair pair = three_lengths_towers(g, 1);
    Word u = tower_code(p, pair.left), v = tower_code(p, pair.right);
    ZWords zw = build_zwords(u, v, t.c[2], t.c[3], t.c[4]);
    check_valid(zwords_report_to_json(1, g, u, v, zw, true,
                                      verify_per_structure(u, v, zw.z, zw.w_prime.size())));
    check_valid(zwords_report_to_json(1, g, u, v, zw, false, std::nullopt));

    check_valid(name_formula_report_to_json(verify_name_formulas(p, 1), g));

    std::map<Word, Symbol> id{{Word{"0"}, "0"}, {Word{"1"}, "1"}};
    LocalRule ident(LanguageModel(SturmianModel{g}), 1, id);
    check_valid(analyze_report_to_json(ident, default_limits()));
    check_valid(analyze_report_to_json(example1_rule(), default_limits()));

    json minn = minimal_injective_to_json(minimal_injective_n(ident));
    minn["command"] = "sbc-minimal-n";
    check_valid(minn);

    check_valid(example1_report_to_json(example1_demo(3, 8)));
    check_valid(symmetric_report_to_json(symmetric_counterexample_check(g, 5), g));

    json refine_out = partition_to_json(refine(p, 3), &p, 3);
    refine_out["command"] = "partition-refine";
    refine_out["n"] = 3;
    check_valid(refine_out);
}
