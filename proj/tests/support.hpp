#pragma once

#include "vda/io.hpp"

#include <string>

inline std::string fixture(const std::string& name) { return std::string(VDA_FIXTURE_DIR) + "/" + name; }

inline const vda::io::AgentFile& eldercare() {
    static const auto file = vda::io::load_agent_file(fixture("eldercare.json"));
    return file;
}

inline const vda::io::AgentFile& nixon() {
    static const auto file = vda::io::load_agent_file(fixture("nixon.json"));
    return file;
}
