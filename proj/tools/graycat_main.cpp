// Command-line front end: parse fixtures, run the verification pipeline, and
// emit machine- or human-readable reports.
//
// Exit codes: 0 pass, 1 check failure, 2 input error, 3 budget exceeded.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graycat/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact verification engine for 2-crossed modules, their Gray "
                 "3-groupoids, quotient cat2-group algebras, and the right "
                 "regular representation"};

    std::vector<std::string> paths;
    std::string field_spec = "rational";
    std::string stage = "all";
    std::string format = "text";
    long long budget = 100'000'000;
    uint64_t seed = 0;
    bool serial = false;

    app.add_option("fixtures", paths, "fixture files to verify")->required();
    app.add_option("--field", field_spec, "rational or prime:<p>")
        ->capture_default_str();
    app.add_option("--budget", budget, "tuple-visit budget")->capture_default_str();
    app.add_option("--seed", seed, "seed recorded for sampled modes")
        ->capture_default_str();
    app.add_option("--stage", stage,
                   "run the pipeline up to this stage "
                   "(axioms|gray|algebra|chain|representation|all)")
        ->capture_default_str();
    app.add_option("--report", format, "json or text")->capture_default_str();
    app.add_flag("--serial", serial, "use the serial reference kernels");

    CLI11_PARSE(app, argc, argv);

    graycat::PipelineOptions opts;
    opts.budget = budget;
    opts.seed = seed;
    opts.stage = stage;
    opts.parallel = !serial;
    if (field_spec == "rational") {
        opts.field.p = 0;
    } else if (field_spec.rfind("prime:", 0) == 0) {
        try {
            opts.field.p = static_cast<uint32_t>(std::stoul(field_spec.substr(6)));
        } catch (const std::exception&) {
            std::cerr << "bad --field value: " << field_spec << "\n";
            return 2;
        }
        if (!graycat::is_prime(opts.field.p)) {
            std::cerr << "--field prime:<p> requires a prime, got "
                      << field_spec.substr(6) << "\n";
            return 2;
        }
    } else {
        std::cerr << "bad --field value: " << field_spec << "\n";
        return 2;
    }
    if (format != "json" && format != "text") {
        std::cerr << "bad --report value: " << format << "\n";
        return 2;
    }

    int exit_code = 0;
    for (const auto& path : paths) {
        try {
            graycat::FixtureSpec spec = graycat::parse_fixture(path);
            graycat::VerificationReport rep = graycat::run_pipeline(spec, opts);
            std::cout << (format == "json" ? graycat::emit_json(rep)
                                           : graycat::emit_text(rep));
            std::cout << "\n";
            if (!rep.passed()) {
                if (exit_code == 0) exit_code = 1;
                if (const auto* c = rep.first_failure())
                    std::cerr << path << ": first failing check: " << c->id << "\n";
            }
        } catch (const graycat::BudgetExceeded& e) {
            std::cerr << path << ": budget exceeded: " << e.what() << "\n";
            return 3;
        } catch (const graycat::FixtureError& e) {
            std::cerr << path << ": " << e.what() << "\n";
            return 2;
        } catch (const std::invalid_argument& e) {
            std::cerr << path << ": invalid input: " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            std::cerr << path << ": error: " << e.what() << "\n";
            return 2;
        }
    }
    return exit_code;
}
