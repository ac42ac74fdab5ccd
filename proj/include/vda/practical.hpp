#pragma once

#include "vda/aba.hpp"
#include "vda/core.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vda {

/// Which duty vectors become assumptions of the practical framework.
enum class AssumptionPolicy {
    /// Vectors with some duty degree ≥ 1; if none qualifies, every vector.
    SatisfiesSomeDuty,
    AllVectors,
};

enum class RuleKind { Action, Principle };

/// A generated action or principle rule with its provenance.
struct GeneratedRule {
    std::string label; // r1, r2, ...
    RuleKind kind = RuleKind::Action;
    /// Action rules: the action. Principle rules: the preferred action α.
    std::string action;
    /// Principle rules: the action β whose vector is negated.
    std::string rejected;
    /// Principle rules: the disjunct in the body.
    std::size_t disjunct = 0;
    /// Principle rules: every disjunct u with v(α) ≥_u v(β).
    std::vector<std::size_t> qualifying;
};

/// Sentence naming scheme of practical frameworks.
namespace practical_names {
std::string action(std::string_view a);
std::string vector(std::string_view a);
std::string negated_vector(std::string_view a);
std::string disjunct(std::string_view id);
} // namespace practical_names

struct PracticalFramework {
    std::string situation;
    /// Actions whose duty vector is an assumption, in action order.
    std::vector<std::string> assumption_actions;
    /// True when no vector satisfied a duty and every vector became an assumption.
    bool fallback_used = false;
    /// Action rules (action order) then principle rules (by rejected action,
    /// then preferred action); labelled r1, r2, ... in that order.
    std::vector<GeneratedRule> rules;
    /// ABA framework: the generated rules followed by one fact per disjunct.
    aba::AbaFramework framework;

    bool is_assumption(std::string_view action) const;
    const GeneratedRule* action_rule(std::string_view action) const;
};

/// Compiles the practical-reasoning framework of `agent` in a situation.
/// Throws LookupError when the situation has no matrix.
PracticalFramework practical_framework(const VdaAgent& agent, std::string_view situation_id,
                                       AssumptionPolicy policy = AssumptionPolicy::SatisfiesSomeDuty);

/// Derivation settings for practical frameworks: {v} ⊢ v arguments are left
/// out, since {v} ⊢ α has the same support and attackers.
aba::DerivationOptions practical_derivation_options();

/// The disjunct a principle rule cites among several qualifying ones: the
/// one whose bounds are tightest (largest sum), lowest index on ties.
std::size_t tightest_disjunct(const Principle& principle, const std::vector<std::size_t>& qualifying);

} // namespace vda
