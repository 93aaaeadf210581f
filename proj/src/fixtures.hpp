#pragma once

#include "network.hpp"

#include <string>
#include <vector>

namespace crnkit {

struct FixtureEntry {
    std::string name;
    std::string text;
};

// Generated from fixtures/*.crn at build time.
const std::vector<FixtureEntry>& fixture_entries();

std::vector<std::string> fixture_names();
const std::string* fixture_text(const std::string& name);
ReactionNetwork load_fixture(const std::string& name);

}  // namespace crnkit
