#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "fixtures_util.hpp"
#include "graycat/pipeline.hpp"

using namespace graycat;

namespace {

const char* kAll[] = {"trivial",  "z2-triv", "z2-id",   "z3-id",
                      "z4-id",    "s3-z3",   "s3-comm", "z3-z3-z2-inv",
                      "neg-lifting", "neg-cm2"};

std::string write_temp(const std::string& body) {
    std::string path =
        std::string(FIXTURE_DIR) + "/../build/tmp_fixture_test.g2x";
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("every corpus file parses") {
    for (const char* name : kAll) {
        CAPTURE(name);
        FixtureSpec spec = load_fixture(name);
        CHECK(!spec.name.empty());
        CHECK((spec.kind == "two_crossed" || spec.kind == "crossed_module"));
        bool is_negative =
            std::string(name).rfind("neg-", 0) == 0;
        CHECK(spec.expected_pass == !is_negative);
    }
}

TEST_CASE("malformed files raise parse errors with location context") {
    std::string path = write_temp("[meta]\nname = \"x\"\n[group.N]\nkind = ?\n");
    CHECK_THROWS_WITH_AS(parse_fixture(path), doctest::Contains(":4:"),
                         FixtureError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(parse_fixture("/nonexistent/file.g2x"), FixtureError);
}

TEST_CASE("structurally invalid fixtures are rejected with context") {
    // boundary map of the wrong length for the declared group orders
    std::string path = write_temp(
        "[meta]\nname = \"bad\"\nkind = \"two_crossed\"\n"
        "[group.L]\ntrivial = true\n"
        "[group.M]\ncyclic = 2\n"
        "[group.N]\ncyclic = 2\n"
        "[maps]\nd2 = [0]\nd1 = [0]\n");
    CHECK_THROWS_WITH_AS(parse_fixture(path), doctest::Contains("[maps] d1"),
                         FixtureError);
    std::remove(path.c_str());
}

TEST_CASE("pipeline: positive fixtures pass every stage") {
    PipelineOptions opts;
    for (const char* name : {"trivial", "z2-triv", "s3-z3", "s3-comm"}) {
        CAPTURE(name);
        VerificationReport rep = run_pipeline(load_fixture(name), opts);
        CHECK(rep.passed());
        std::set<std::string> stages;
        for (const auto& s : rep.stages) {
            CHECK(!s.skipped);
            stages.insert(s.stage);
        }
        CHECK(stages == std::set<std::string>{"axioms", "gray", "algebra",
                                              "chain", "representation"});
    }
}

TEST_CASE("pipeline: failures stop the run and skip later stages") {
    PipelineOptions opts;
    VerificationReport rep = run_pipeline(load_fixture("neg-lifting"), opts);
    CHECK(!rep.passed());
    REQUIRE(!rep.stages.empty());
    CHECK(rep.stages.front().stage == "axioms");
    CHECK(!rep.stages.front().passed());
    const CheckRecord* c = rep.first_failure();
    REQUIRE(c != nullptr);
    CHECK(c->id == "axiom-2cm2");
    CHECK(!c->witness.empty());
    bool any_skipped = false;
    for (const auto& s : rep.stages)
        if (s.skipped) {
            any_skipped = true;
            CHECK(!s.skip_reason.empty());
        }
    CHECK(any_skipped);
}

TEST_CASE("pipeline: embedded crossed module failing its own axioms") {
    PipelineOptions opts;
    VerificationReport rep = run_pipeline(load_fixture("neg-cm2"), opts);
    CHECK(!rep.passed());
    const CheckRecord* c = rep.first_failure();
    REQUIRE(c != nullptr);
    CHECK(c->id == "axiom-cm2");
}

TEST_CASE("pipeline: stage prefix runs exactly that prefix") {
    PipelineOptions opts;
    opts.stage = "gray";
    VerificationReport rep = run_pipeline(load_fixture("s3-z3"), opts);
    REQUIRE(!rep.stages.empty());
    CHECK(rep.stages.front().stage == "axioms");
    for (const auto& s : rep.stages)
        CHECK((s.stage == "axioms" || s.stage == "gray"));
    CHECK(rep.stages.back().stage == "gray");
    CHECK(rep.passed());
}

TEST_CASE("pipeline: serial kernels give the same report") {
    PipelineOptions par, ser;
    ser.parallel = false;
    FixtureSpec spec = load_fixture("z3-z3-z2-inv");
    CHECK(emit_json(run_pipeline(spec, par)) ==
          emit_json(run_pipeline(spec, ser)));
}

TEST_CASE("budget limit raises the dedicated exception") {
    PipelineOptions opts;
    opts.budget = 5;
    CHECK_THROWS_AS(run_pipeline(load_fixture("s3-z3"), opts), BudgetExceeded);
}

TEST_CASE("JSON report round trip is lossless") {
    PipelineOptions opts;
    for (const char* name : {"z2-triv", "s3-comm", "neg-lifting"}) {
        CAPTURE(name);
        VerificationReport rep = run_pipeline(load_fixture(name), opts);
        std::string json = emit_json(rep);
        VerificationReport back = parse_report_json(json);
        CHECK(emit_json(back) == json);
        CHECK(back.fixture == rep.fixture);
        CHECK(back.expected_pass == rep.expected_pass);
        REQUIRE(back.stages.size() == rep.stages.size());
        for (size_t i = 0; i < rep.stages.size(); ++i) {
            CHECK(back.stages[i].stage == rep.stages[i].stage);
            CHECK(back.stages[i].skipped == rep.stages[i].skipped);
            CHECK(back.stages[i].dimensions == rep.stages[i].dimensions);
            REQUIRE(back.stages[i].checks.size() == rep.stages[i].checks.size());
            for (size_t j = 0; j < rep.stages[i].checks.size(); ++j) {
                CHECK(back.stages[i].checks[j].id == rep.stages[i].checks[j].id);
                CHECK(back.stages[i].checks[j].pass ==
                      rep.stages[i].checks[j].pass);
                CHECK(back.stages[i].checks[j].witness ==
                      rep.stages[i].checks[j].witness);
            }
        }
    }
}

TEST_CASE("text report names the fixture and the stages") {
    PipelineOptions opts;
    VerificationReport rep = run_pipeline(load_fixture("z2-triv"), opts);
    std::string text = emit_text(rep);
    CHECK(text.find(rep.fixture) != std::string::npos);
    for (const auto& s : rep.stages)
        CHECK(text.find(s.stage) != std::string::npos);
}
