#include "vda/properties.hpp"

#include "vda/pipeline.hpp"

#include <algorithm>

namespace vda::oracle {

namespace {

std::string names(const std::vector<std::string>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
    return out + "}";
}

} // namespace

PropertyOutcome check_single_solution_property(const RandomInstance& instance) {
    const auto result = run_practical(instance.agent, instance.situation, Semantics::Complete, instance.policy);
    PropertyOutcome out;
    if (result.solutions.actions.size() != 1) {
        out.applicable = false;
        return out;
    }
    const auto g = grounded(result.aaf.graph);
    const auto& exts = result.acceptance.extensions;
    out.holds = exts.size() == 1 && exts.front().members == g.members;
    if (!out.holds) {
        out.detail = "solution " + result.solutions.actions.front() + ", " + std::to_string(exts.size()) +
                     " complete extensions, grounded has " + std::to_string(g.members.size()) + " members";
    }
    return out;
}

PropertyOutcome check_solution_correspondence(const RandomInstance& instance) {
    const auto result = run_practical(instance.agent, instance.situation, Semantics::Complete, instance.policy);
    PropertyOutcome out;
    const auto credulous = result.justified_actions(false);
    out.holds = credulous == result.solutions.actions;
    if (!out.holds) out.detail = "solutions " + names(result.solutions.actions) + " vs credulous " + names(credulous);
    return out;
}

bool within_hypotheses(const RandomInstance& instance) {
    if (instance.policy != AssumptionPolicy::AllVectors) return false;
    const auto& matrix = instance.agent.matrix(instance.situation);
    const auto& principle = instance.agent.principle();
    const auto& actions = instance.agent.language().actions();
    for (const auto& a : actions)
        for (const auto& b : actions) {
            if (a == b) continue;
            if (!prefers(matrix, principle, a, b).empty() && !prefers(matrix, principle, b, a).empty()) return false;
            for (const auto& c : actions) {
                if (c == a || c == b) continue;
                if (strictly_prefers(matrix, principle, a, b) && strictly_prefers(matrix, principle, b, c) &&
                    !strictly_prefers(matrix, principle, a, c))
                    return false;
            }
        }
    return true;
}

} // namespace vda::oracle
