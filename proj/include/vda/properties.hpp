#pragma once

// Instance-level checks of the solution/argumentation correspondence, shared
// by the acceptance suite and the oracle-check subcommand.

#include "vda/oracle.hpp"

#include <string>

namespace vda::oracle {

struct PropertyOutcome {
    bool applicable = true; // false when the premise of an implication is not met
    bool holds = true;
    std::string detail;     // filled on violation
};

/// |solutions| = 1 implies the practical AAF has exactly one complete
/// extension and it is the grounded one.
PropertyOutcome check_single_solution_property(const RandomInstance& instance);

/// solutions = actions whose {v(α)} ⊢ α argument is in some complete extension.
PropertyOutcome check_solution_correspondence(const RandomInstance& instance);

/// Every vector is an assumption, strict preference is transitive and no
/// two distinct actions are weakly preferred to each other.
bool within_hypotheses(const RandomInstance& instance);

} // namespace vda::oracle
