#pragma once

#include "vda/epistemic.hpp"
#include "vda/pipeline.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vda {

enum class ExplanationVerdict {
    JustifiedSkeptical,
    JustifiedCredulous,
    Rejected,
    RejectedAPriori, // no action rule: the vector satisfies no duty
    Indeterminate,
};

std::string_view to_string(ExplanationVerdict verdict);

enum class SubjectKind { Action, Assumption };

struct CitedArgument {
    std::size_t id = 0;
    std::string label;                 // X1, Y4, ...
    std::string text;                  // {u7, v_S1(warn)} ⊢ ¬v_S1(charge)
    std::vector<std::string> premises; // display forms

    bool operator==(const CitedArgument&) const = default;
};

/// Why `winner` beats `loser` under a disjunct; vectors in duty order.
struct DutyComparison {
    std::string winner;
    std::string loser;
    std::string disjunct;
    std::vector<int> winner_values;
    std::vector<int> loser_values;

    bool operator==(const DutyComparison&) const = default;
};

/// An attacker of the explained argument and the extension members attacking it.
struct Defence {
    CitedArgument attacker;
    std::vector<CitedArgument> counters;

    bool operator==(const Defence&) const = default;
};

struct ExtensionReason {
    std::size_t extension = 0; // index into the acceptance report
    bool member = false;
    /// Not a member: the chosen attacker belonging to the extension.
    std::optional<CitedArgument> attacker;
    std::optional<DutyComparison> comparison;
    /// Member: how each attacker is answered inside the extension.
    std::vector<Defence> defences;

    bool operator==(const ExtensionReason&) const = default;
};

struct Explanation {
    SubjectKind kind = SubjectKind::Action;
    std::string subject;   // action name or assumption literal (display form)
    std::string context;   // situation id
    Semantics semantics = Semantics::Grounded;
    ExplanationVerdict verdict = ExplanationVerdict::Indeterminate;
    std::optional<CitedArgument> argument;
    std::string assumption; // display form of v_S(α) or the literal
    std::vector<std::string> duties;
    std::vector<int> values; // actions: the duty vector
    std::vector<ExtensionReason> extensions;
    std::vector<CitedArgument> attackers;
    /// Skeptically accepted arguments attacking some attacker.
    std::vector<CitedArgument> defenders;
    /// Indeterminate verdicts: attackers that are themselves undecided.
    std::vector<CitedArgument> undecided_attackers;

    bool operator==(const Explanation&) const = default;
};

/// Throws LookupError for unknown actions.
Explanation explain_action(const PracticalResult& result, std::string_view action);

/// One explanation per epistemic assumption, in assumption order.
std::vector<Explanation> explain_situation(const EpistemicResult& result, std::string_view situation_id = "");

/// Duty code → full name, e.g. "mH2P" → "Minimize Harm to Patient".
using DutyNames = std::map<std::string, std::string>;

/// Deterministic prose. Throws SchemaError when `names` lacks a duty.
std::string render_text(const Explanation& explanation, const DutyNames& names = {});

/// "(0, 1, -1)".
std::string format_vector(const std::vector<int>& values);

} // namespace vda
