#pragma once

#include "vda/aba.hpp"
#include "vda/core.hpp"
#include "vda/epistemic.hpp"
#include "vda/explain.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace vda::io {

enum class FileKind { Agent, Framework };

/// Contents of an input document. `kind` decides which members are set.
struct AgentFile {
    FileKind kind = FileKind::Agent;
    std::string name;
    // kind == Agent
    VdaAgent agent;
    DutyNames duty_names;
    std::optional<EpistemicSpec> epistemic;
    // kind == Framework
    aba::AbaFramework framework;

    bool operator==(const AgentFile&) const = default;
};

/// Throws ParseError (malformed JSON, with line and column) or SchemaError
/// (well-formed JSON that does not describe a valid agent or framework).
AgentFile parse_agent_file(std::string_view text);
AgentFile load_agent_file(const std::filesystem::path& path);

/// Pretty-printed JSON that parses back to an equal value.
std::string serialize_agent_file(const AgentFile& file);

} // namespace vda::io
