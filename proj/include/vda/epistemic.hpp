#pragma once

#include "vda/aba.hpp"
#include "vda/core.hpp"
#include "vda/semantics.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vda {

/// p ← p1, ..., pn over literals. An empty body makes the rule a fact.
struct EpistemicRule {
    std::string label;
    Literal head;
    std::vector<Literal> body;

    bool operator==(const EpistemicRule&) const = default;
};

struct EpistemicSpec {
    std::vector<EpistemicRule> rules;
    std::vector<Literal> assumptions;
    /// Per-assumption overrides; every other assumption is contrary to its complement.
    std::map<Literal, Literal> contraries;

    bool operator==(const EpistemicSpec&) const = default;
};

/// Sentence id of a literal in epistemic frameworks ("p" or "-p").
std::string literal_sentence(const Literal& literal);

/// Builds the epistemic framework over every literal of the language. True
/// perceptions that are not assumptions become facts, appended after the
/// declared rules unless a declared fact already concludes them.
aba::AbaFramework epistemic_framework(const VdaLanguage& language, const EpistemicSpec& spec,
                                      const std::set<std::string>& perceptions);

struct AssumptionVerdict {
    Literal assumption;
    std::size_t argument = 0; // the {a} ⊢ a argument
    Verdict verdict = Verdict::Undecided;
    std::vector<std::size_t> attackers;
    /// Accepted arguments (member of every extension) attacking some attacker.
    std::vector<std::size_t> defenders;

    bool decided() const noexcept {
        return verdict == Verdict::SkepticallyJustified || verdict == Verdict::SkepticallyRejected;
    }
};

struct EpistemicResult {
    /// Absent when there are no assumptions: then P^J = P.
    std::optional<aba::ValidatedFramework> framework;
    aba::Aaf aaf;
    AcceptanceReport acceptance;
    std::set<std::string> perceptions;
    std::vector<AssumptionVerdict> verdicts; // in assumption order
    /// Assumptions neither skeptically justified nor skeptically rejected (display form).
    std::vector<std::string> undecided;
    /// P^J = (P \ A) ∪ A^J; only meaningful when `undecided` is empty.
    std::set<std::string> justified_perceptions;
};

/// Runs the epistemic framework under `semantics` and classifies every
/// assumption. Never throws on indeterminate inputs.
EpistemicResult evaluate_epistemic(const VdaLanguage& language, const EpistemicSpec& spec,
                                   const std::set<std::string>& perceptions,
                                   Semantics semantics = Semantics::Grounded);

struct JustifiedSituation {
    std::set<std::string> justified_perceptions;
    Situation situation;
    std::vector<AssumptionVerdict> verdicts;
};

/// S^J built from P^J. Throws IndeterminateSituationError listing undecided assumptions.
JustifiedSituation justified_situation(const VdaLanguage& language, const EpistemicResult& result,
                                       std::string situation_id = "SJ");

} // namespace vda
