#pragma once

#include "vda/aba.hpp"
#include "vda/core.hpp"
#include "vda/epistemic.hpp"
#include "vda/practical.hpp"
#include "vda/semantics.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vda {

struct PracticalResult {
    VdaAgent agent;
    std::string situation;
    Semantics semantics = Semantics::Grounded;
    PracticalFramework practical;
    aba::ValidatedFramework framework;
    aba::Aaf aaf;
    AcceptanceReport acceptance;
    /// Per language action, the id of its {v(α)} ⊢ α argument (none without an action rule).
    std::vector<std::optional<std::size_t>> action_arguments;
    SolutionSet solutions;
    EthicalOrdering ordering;

    /// Actions whose argument is in every extension (skeptical) or in some extension.
    std::vector<std::string> justified_actions(bool skeptical = true) const;
    std::optional<std::size_t> action_argument(std::string_view action) const;
};

PracticalResult run_practical(const VdaAgent& agent, std::string_view situation_id,
                              Semantics semantics = Semantics::Grounded,
                              AssumptionPolicy policy = AssumptionPolicy::SatisfiesSomeDuty);

struct Decision {
    EpistemicResult epistemic;
    JustifiedSituation justified;
    /// Declared situation whose valuation equals S^J.
    std::string situation;
    PracticalResult practical;
};

/// Justified situation, then the practical pipeline on the matrix registered
/// for S^J. Throws IndeterminateSituationError, or LookupError when no
/// declared situation has the valuation of S^J or it has no matrix.
Decision end_to_end_decide(const VdaAgent& agent, const EpistemicSpec& spec, const std::set<std::string>& perceptions,
                           Semantics semantics = Semantics::Grounded);

} // namespace vda
