#include <doctest.h>

#include "tractlab/io.hpp"

using namespace tractlab;

TEST_CASE("area csv layout") {
    SampledAreaFunction area;
    area.tubelet_length_cm = 0.5;
    area.areas = {1.0, 2.0};
    const std::string csv = area_csv(area);
    CHECK(csv == "index,x_cm,area_cm2\n1,0.25,1\n2,0.75,2\n");
}

TEST_CASE("dataset csv round trip") {
    ExperimentConfig cfg;
    cfg.model = ModelId::drm;
    cfg.condition = Condition::C1;
    cfg.sample_count = 5;
    cfg.rng_seed = 7;
    const auto records = run_condition(cfg);
    const std::string csv = dataset_csv(records, cfg);

    const auto parsed = parse_dataset_csv(csv);
    REQUIRE(parsed.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(parsed[i].condition == records[i].condition);
        CHECK(parsed[i].index == records[i].index);
        CHECK(parsed[i].dct.a1_tilde == records[i].dct.a1_tilde);
        CHECK(parsed[i].formants.f1 == records[i].formants.f1);
        CHECK(parsed[i].deviations.df2 == records[i].deviations.df2);
        CHECK(parsed[i].failed == records[i].failed);
    }
}

TEST_CASE("dataset parse errors carry line numbers") {
    try {
        parse_dataset_csv("condition,index,rho,theta,p1,p2,p3,p4,a1t,a2t,f1,f2,df1,df2,failed\n"
                          "C1,0,bad,0,1,1,1,1,0,0,500,1500,0,0,0\n");
        FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_dataset_csv(""), InvalidInput);
    CHECK_THROWS_AS(parse_dataset_csv("not,a,header\n"), InvalidInput);
}

TEST_CASE("model and condition names") {
    CHECK(model_from_name("fant") == ModelId::fant);
    CHECK(model_name(ModelId::generic) == std::string("generic"));
    CHECK_THROWS_AS(model_from_name("nope"), InvalidInput);
    CHECK(condition_from_name("C2") == Condition::C2);
    CHECK_THROWS_AS(condition_from_name("C3"), InvalidInput);
}

TEST_CASE("functional report json is well formed") {
    FunctionalReport report;
    report.bin_width = 0.05;
    report.threshold = 0.02;
    report.p95_spread_df1 = 0.001;
    report.p95_spread_df2 = 0.002;
    report.functional = true;
    report.bins.push_back({-1, 2, 10, 0.001, 0.002});
    const std::string j = functional_report_json(report);
    CHECK(j.find("\"functional\": true") != std::string::npos);
    CHECK(j.find("\"bins\"") != std::string::npos);
}
