#pragma once

#include <string>

#include "graycat/fixture.hpp"
#include "graycat/regrep.hpp"
#include "graycat/report.hpp"

namespace graycat {

struct PipelineOptions {
    Field field{};  // characteristic 0 by default
    long long budget = 100'000'000;
    uint64_t seed = 0;
    std::string stage = "all";  // axioms | gray | algebra | chain | representation | all
    bool parallel = true;
};

// Runs the stage sequence axioms -> gray -> algebra -> chain -> representation
// (a prefix if options.stage is set); stages after a failing one are skipped.
// Throws BudgetExceeded; fixture problems surface as FixtureError from the
// parsing layer before this is called.
VerificationReport run_pipeline(const FixtureSpec& spec,
                                const PipelineOptions& options);

// Report serialization; the JSON form parses back losslessly.
std::string emit_json(const VerificationReport& report);
std::string emit_text(const VerificationReport& report);
VerificationReport parse_report_json(const std::string& text);

}  // namespace graycat
