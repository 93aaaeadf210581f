#include "fixtures.hpp"

namespace crnkit {

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& e : fixture_entries()) names.push_back(e.name);
    return names;
}

const std::string* fixture_text(const std::string& name) {
    for (const auto& e : fixture_entries())
        if (e.name == name) return &e.text;
    return nullptr;
}

ReactionNetwork load_fixture(const std::string& name) {
    const std::string* text = fixture_text(name);
    if (!text) parse_fail("unknown fixture '" + name + "'");
    return parse_network(*text);
}

}  // namespace crnkit
