#pragma once

#include "vda/attack_graph.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vda::aba {

/// head ← body. An empty body makes the rule a fact.
struct Rule {
    std::string label;
    std::string head;
    std::vector<std::string> body;

    bool operator==(const Rule&) const = default;
};

/// Unchecked description of a flat ABA framework ⟨L, R, A, ‾⟩. Sentences are
/// identified by name; `display` optionally maps names to a printable form.
struct AbaFramework {
    std::vector<std::string> language;
    std::vector<Rule> rules;
    std::vector<std::string> assumptions;
    std::map<std::string, std::string> contrary;
    std::map<std::string, std::string> display;

    bool operator==(const AbaFramework&) const = default;
};

struct SentenceId {
    std::uint32_t value = 0;

    auto operator<=>(const SentenceId&) const = default;
};

class ValidatedFramework;

/// Checks totality of the contrary map, flatness and that every sentence
/// mentioned belongs to the language.
ValidatedFramework validate_framework(AbaFramework framework);

/// An indexed framework whose invariants hold. Only `validate_framework`
/// constructs one.
class ValidatedFramework {
public:
    struct CompiledRule {
        SentenceId head;
        std::vector<SentenceId> body;
    };

    const AbaFramework& source() const noexcept { return source_; }

    std::size_t sentence_count() const noexcept { return source_.language.size(); }
    const std::string& name(SentenceId s) const { return source_.language[s.value]; }
    const std::string& display(SentenceId s) const { return display_[s.value]; }
    std::optional<SentenceId> find(std::string_view name) const;
    SentenceId require(std::string_view name) const;

    const std::vector<SentenceId>& assumptions() const noexcept { return assumptions_; }
    bool is_assumption(SentenceId s) const { return is_assumption_[s.value]; }
    SentenceId contrary(SentenceId assumption) const;
    /// Assumptions whose contrary is `sentence`.
    const std::vector<SentenceId>& contrary_of(SentenceId sentence) const { return contrary_of_[sentence.value]; }

    std::size_t rule_count() const noexcept { return rules_.size(); }
    const CompiledRule& rule(std::size_t index) const { return rules_[index]; }
    const std::string& rule_label(std::size_t index) const { return source_.rules[index].label; }
    const std::vector<std::size_t>& rules_for(SentenceId head) const { return rules_by_head_[head.value]; }

private:
    friend ValidatedFramework validate_framework(AbaFramework framework);
    ValidatedFramework() = default;

    AbaFramework source_;
    std::unordered_map<std::string, SentenceId> index_;
    std::vector<std::string> display_;
    std::vector<SentenceId> assumptions_;
    std::vector<char> is_assumption_;
    std::vector<std::optional<SentenceId>> contrary_;
    std::vector<std::vector<SentenceId>> contrary_of_;
    std::vector<CompiledRule> rules_;
    std::vector<std::vector<std::size_t>> rules_by_head_;
};

/// Node of a deduction tree. Leaves carry an assumption or τ (no sentence);
/// internal nodes carry the rule whose head labels them.
struct DeductionNode {
    std::optional<SentenceId> sentence;
    std::optional<std::size_t> rule;
    std::vector<std::size_t> children;

    bool operator==(const DeductionNode&) const = default;
};

struct Argument {
    std::size_t id = 0;
    std::vector<SentenceId> support; // sorted
    SentenceId conclusion;
    std::vector<std::size_t> rules_used; // sorted
    std::vector<DeductionNode> tree;     // tree[0] is the root

    /// Support plus every non-root sentence expanded by a fact (empty-body rule).
    std::vector<SentenceId> premises(const ValidatedFramework& framework) const;
    std::size_t depth() const;

    bool operator==(const Argument&) const = default;
};

struct DerivationOptions {
    std::size_t max_arguments = 100'000;
    std::size_t max_depth = 64;
    /// Emit {a} ⊢ a for every assumption a.
    bool include_assumption_arguments = true;
    /// Drop arguments with empty support whose claim is not the contrary of
    /// any assumption: they cannot be attacked, attack nothing, and belong to
    /// every extension.
    bool omit_inert_arguments = true;
};

/// All deductions by backward chaining, never repeating a sentence on a
/// branch. Order: assumption arguments (assumption order), then arguments
/// grouped by their root rule (rule order). Ids are positions in the result.
std::vector<Argument> derive_arguments(const ValidatedFramework& framework, const DerivationOptions& options = {});

/// (X, Y) iff the claim of X is the contrary of some assumption supporting Y.
std::vector<Attack> compute_attacks(const std::vector<Argument>& arguments, const ValidatedFramework& framework);

struct Aaf {
    std::vector<Argument> arguments;
    AttackGraph graph;
};

Aaf to_aaf(std::vector<Argument> arguments, std::vector<Attack> attacks);

enum class PremiseStyle { Support, Premises };

/// "{a, b} ⊢ c" using display forms; premises sorted by language order.
std::string format_argument(const Argument& argument, const ValidatedFramework& framework,
                            PremiseStyle style = PremiseStyle::Support);

std::string format_rule(std::size_t rule, const ValidatedFramework& framework);

} // namespace vda::aba
