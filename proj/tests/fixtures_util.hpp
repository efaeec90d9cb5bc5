#pragma once

#include <string>

#include "graycat/fixture.hpp"

inline graycat::FixtureSpec load_fixture(const std::string& name) {
    return graycat::parse_fixture(std::string(FIXTURE_DIR) + "/" + name + ".g2x");
}

inline graycat::TwoCrossedModule load_module(const std::string& name) {
    return graycat::to_module(load_fixture(name));
}
