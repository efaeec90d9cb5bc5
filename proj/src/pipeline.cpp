#include "graycat/pipeline.hpp"

#include <json.hpp>

#include "graycat/gray.hpp"

namespace graycat {

namespace {

int stage_index(const std::string& name) {
    if (name == "axioms") return 0;
    if (name == "gray") return 1;
    if (name == "algebra") return 2;
    if (name == "chain") return 3;
    if (name == "representation" || name == "all") return 4;
    throw std::invalid_argument("unknown stage: " + name);
}

StageReport skipped_stage(const std::string& name, const std::string& reason) {
    StageReport s;
    s.stage = name;
    s.skipped = true;
    s.skip_reason = reason;
    return s;
}

StageReport failed_stage(const std::string& name, const std::string& check_id,
                         const std::string& what) {
    StageReport s;
    s.stage = name;
    CheckRecord c{check_id, "stage construction"};
    c.pass = false;
    c.witness = what;
    s.add(c);
    return s;
}

}  // namespace

VerificationReport run_pipeline(const FixtureSpec& spec,
                                const PipelineOptions& options) {
    VerificationReport out;
    out.fixture = spec.name;
    out.expected_pass = spec.expected_pass;
    const int last = stage_index(options.stage);

    StageReport ax;
    ax.stage = "axioms";
    TwoCrossedModule x;
    bool assembled = false;
    if (spec.kind == "crossed_module") {
        // check the two-level axioms before embedding: the embedding refuses
        // invalid input
        StageReport cm = verify_crossed_module(to_crossed_module(spec));
        for (auto& c : cm.checks) ax.add(c);
        if (cm.passed()) {
            x = to_module(spec);
            assembled = true;
        }
    } else {
        x = to_module(spec);
        assembled = true;
    }
    if (assembled) {
        StageReport full = verify_2xm(x);
        for (auto& c : full.checks) ax.add(c);
        for (auto& d : full.dimensions) ax.dimensions.push_back(d);
    }
    out.stages.push_back(ax);
    bool ok = ax.passed() && assembled;
    if (last == 0) return out;

    std::shared_ptr<GrayGroupoid> g;
    if (!ok) {
        out.stages.push_back(skipped_stage("gray", "axiom stage failed"));
    } else {
        g = std::make_shared<GrayGroupoid>(theta(x));
        VerifyOptions vo;
        vo.tuple_budget = options.budget;
        vo.seed = options.seed;
        out.stages.push_back(verify_gray(*g, vo));
        out.stages.push_back(cat2_kernel_check(*g));
        out.stages.push_back(delta_roundtrip_check(*g));
        ok = out.stages.end()[-3].passed() && out.stages.end()[-2].passed() &&
             out.stages.end()[-1].passed();
    }
    if (last == 1) return out;

    std::shared_ptr<Cat2AlgebraBundle> bundle;
    if (!ok) {
        out.stages.push_back(skipped_stage("algebra", "earlier stage failed"));
    } else {
        try {
            bundle = std::make_shared<Cat2AlgebraBundle>(quotient_cat2(
                g, options.field, GeneratorFamilies::all(), options.parallel));
            out.stages.push_back(kernel_basis_lemma_check(*bundle));
            out.stages.push_back(quotient_checks(*bundle));
            out.stages.push_back(functoriality_check(*bundle));
            ok = out.stages.end()[-3].passed() && out.stages.end()[-2].passed() &&
                 out.stages.end()[-1].passed();
        } catch (const BudgetExceeded&) {
            throw;
        } catch (const std::exception& e) {
            out.stages.push_back(failed_stage("algebra", "algebra-construction", e.what()));
            ok = false;
        }
    }
    if (last == 2) return out;

    RegularRepresentation rep;
    bool have_rep = false;
    if (!ok) {
        out.stages.push_back(skipped_stage("chain", "earlier stage failed"));
    } else {
        try {
            rep = build_representation(bundle);
            have_rep = true;
            StageReport ch;
            ch.stage = "chain";
            ch.dim("dim-K1", rep.delta.dim0());
            ch.dim("dim-K2", rep.delta.dim1());
            ch.dim("dim-K3", rep.delta.dim2());
            CheckRecord c{"chain-complex-valid",
                          "the induced boundaries compose to zero and all lambda "
                          "data assembled consistently on the kernel bases"};
            c.pass = true;
            ch.add(c);
            out.stages.push_back(ch);
        } catch (const std::exception& e) {
            out.stages.push_back(failed_stage("chain", "chain-construction", e.what()));
            ok = false;
        }
    }
    if (last == 3) return out;

    if (!ok || !have_rep) {
        out.stages.push_back(skipped_stage("representation", "earlier stage failed"));
    } else {
        out.stages.push_back(verify_representation(rep));
        if (spec.kind == "crossed_module")
            out.stages.push_back(barker_degeneration_check(rep, to_crossed_module(spec)));
    }
    return out;
}

// --- serialization -----------------------------------------------------------

using nlohmann::json;

std::string emit_json(const VerificationReport& report) {
    json stages = json::array();
    for (const auto& s : report.stages) {
        json checks = json::array();
        for (const auto& c : s.checks)
            checks.push_back({{"id", c.id},
                              {"description", c.description},
                              {"mode", c.mode},
                              {"pass", c.pass},
                              {"informational", c.informational},
                              {"witness", c.witness}});
        json dims = json::array();
        for (const auto& [k, v] : s.dimensions) dims.push_back({{"name", k}, {"value", v}});
        stages.push_back({{"stage", s.stage},
                          {"skipped", s.skipped},
                          {"skip_reason", s.skip_reason},
                          {"dimensions", dims},
                          {"checks", checks}});
    }
    json j{{"fixture", report.fixture},
           {"expected_pass", report.expected_pass},
           {"passed", report.passed()},
           {"stages", stages}};
    return j.dump(2);
}

VerificationReport parse_report_json(const std::string& text) {
    json j = json::parse(text);
    VerificationReport r;
    r.fixture = j.at("fixture").get<std::string>();
    r.expected_pass = j.at("expected_pass").get<bool>();
    for (const auto& s : j.at("stages")) {
        StageReport st;
        st.stage = s.at("stage").get<std::string>();
        st.skipped = s.at("skipped").get<bool>();
        st.skip_reason = s.at("skip_reason").get<std::string>();
        for (const auto& d : s.at("dimensions"))
            st.dim(d.at("name").get<std::string>(), d.at("value").get<long long>());
        for (const auto& c : s.at("checks")) {
            CheckRecord cr;
            cr.id = c.at("id").get<std::string>();
            cr.description = c.at("description").get<std::string>();
            cr.mode = c.at("mode").get<std::string>();
            cr.pass = c.at("pass").get<bool>();
            cr.informational = c.at("informational").get<bool>();
            cr.witness = c.at("witness").get<std::string>();
            st.add(cr);
        }
        r.stages.push_back(std::move(st));
    }
    return r;
}

std::string emit_text(const VerificationReport& report) {
    std::string out;
    out += "fixture: " + report.fixture +
           (report.expected_pass ? "  (expected: pass)\n" : "  (expected: fail)\n");
    for (const auto& s : report.stages) {
        out += "[" + s.stage + "]";
        if (s.skipped) {
            out += " SKIPPED (" + s.skip_reason + ")\n";
            continue;
        }
        out += "\n";
        for (const auto& [k, v] : s.dimensions)
            out += "  " + k + " = " + std::to_string(v) + "\n";
        for (const auto& c : s.checks) {
            out += std::string("  ") + (c.pass ? "PASS " : "FAIL ") + c.id;
            if (c.informational) out += " (informational)";
            if (!c.pass && !c.witness.empty()) out += "  witness: " + c.witness;
            out += "\n";
        }
    }
    out += report.passed() ? "overall: PASS\n" : "overall: FAIL\n";
    return out;
}

}  // namespace graycat
