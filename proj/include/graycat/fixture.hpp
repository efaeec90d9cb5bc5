#pragma once

#include <memory>
#include <string>
#include <vector>

#include "graycat/xmod.hpp"

namespace graycat {

// Parsed input file: INI-style sections, JSON values. Describes either a full
// three-level module ("two_crossed") or a two-level one ("crossed_module",
// which the pipeline embeds with a trivial top group).
struct FixtureSpec {
    std::string name;
    std::string kind = "two_crossed";  // or "crossed_module"
    bool expected_pass = true;

    std::shared_ptr<FiniteGroup> L, M, N;  // L is null for crossed_module
    std::vector<Elem> d2, d1;              // d2 absent for crossed_module
    std::vector<std::vector<Elem>> act_nm, act_nl, lifting;
};

// Thrown by the parser with file/line context.
struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FixtureSpec parse_fixture(const std::string& path);

// Structural assembly (sizes, homomorphism/action validity checked; axiom
// verification is a pipeline stage, not done here). For crossed_module kind
// the embedding with trivial L is returned.
TwoCrossedModule to_module(const FixtureSpec& spec);

// The two-level module of a crossed_module fixture (throws for other kinds).
CrossedModule to_crossed_module(const FixtureSpec& spec);

}  // namespace graycat
