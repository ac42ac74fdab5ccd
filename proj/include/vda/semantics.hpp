#pragma once

#include "vda/attack_graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vda {

enum class Semantics { Grounded, Complete, Preferred, Stable };

std::string_view to_string(Semantics semantics);
/// Accepts "grounded", "complete", "preferred", "stable".
std::optional<Semantics> parse_semantics(std::string_view text);

struct Extension {
    Semantics semantics = Semantics::Complete;
    std::vector<std::size_t> members; // sorted

    bool contains(std::size_t argument) const;
    bool operator==(const Extension&) const = default;
};

struct EnumerationLimits {
    std::size_t max_arguments = 4096;
    std::size_t max_extensions = 100'000;
};

/// Least fixpoint of the defence operator.
Extension grounded(const AttackGraph& graph);

/// Complete extensions by three-valued labelling search, sorted by member list.
std::vector<Extension> complete(const AttackGraph& graph, const EnumerationLimits& limits = {});
/// ⊆-maximal complete extensions.
std::vector<Extension> preferred(const AttackGraph& graph, const EnumerationLimits& limits = {});
/// Complete labellings without undecided arguments. May be empty.
std::vector<Extension> stable(const AttackGraph& graph, const EnumerationLimits& limits = {});

std::vector<Extension> extensions(const AttackGraph& graph, Semantics semantics,
                                  const EnumerationLimits& limits = {});

bool conflict_free(const AttackGraph& graph, const std::vector<std::size_t>& members);
bool defends(const AttackGraph& graph, const std::vector<std::size_t>& members, std::size_t argument);
bool admissible(const AttackGraph& graph, const std::vector<std::size_t>& members);

enum class Verdict {
    SkepticallyJustified,
    CredulouslyJustified,
    SkepticallyRejected,
    CredulouslyRejected,
    Undecided,
};

std::string_view to_string(Verdict verdict);

struct ArgumentStatus {
    bool in_every = false; // member of every extension (and there is one)
    bool in_some = false;  // member of at least one extension: "credulously accepted"
    bool attacked_by_skeptical = false;
    bool attacked_by_credulous = false;

    /// In some but not all extensions.
    bool credulously_justified() const noexcept { return in_some && !in_every; }
    /// Precedence: skeptically justified, skeptically rejected, credulously
    /// justified, credulously rejected, undecided.
    Verdict verdict() const noexcept;
};

struct AcceptanceReport {
    Semantics semantics = Semantics::Grounded;
    std::vector<Extension> extensions;
    std::vector<ArgumentStatus> statuses;
    /// No extension exists (possible under stable semantics); every status is undecided.
    bool vacuous = false;
    std::string diagnostic;
};

AcceptanceReport acceptance_status(const AttackGraph& graph, Semantics semantics,
                                   const EnumerationLimits& limits = {});

} // namespace vda
