#include "vda/pipeline.hpp"

#include "vda/error.hpp"

namespace vda {

std::optional<std::size_t> PracticalResult::action_argument(std::string_view action) const {
    return action_arguments[agent.language().require_action(action)];
}

std::vector<std::string> PracticalResult::justified_actions(bool skeptical) const {
    std::vector<std::string> out;
    const auto& actions = agent.language().actions();
    for (std::size_t i = 0; i < actions.size(); ++i) {
        if (!action_arguments[i]) continue;
        const auto& s = acceptance.statuses[*action_arguments[i]];
        if (skeptical ? s.in_every : s.in_some) out.push_back(actions[i]);
    }
    return out;
}

PracticalResult run_practical(const VdaAgent& agent, std::string_view situation_id, Semantics semantics,
                              AssumptionPolicy policy) {
    auto practical = practical_framework(agent, situation_id, policy);
    PracticalResult out{agent, std::string(situation_id), semantics, practical,
                        aba::validate_framework(practical.framework)};
    auto args = aba::derive_arguments(out.framework, practical_derivation_options());
    auto attacks = aba::compute_attacks(args, out.framework);
    out.aaf = aba::to_aaf(std::move(args), std::move(attacks));
    out.acceptance = acceptance_status(out.aaf.graph, semantics);

    for (const auto& action : agent.language().actions()) {
        std::optional<std::size_t> found;
        if (auto id = out.framework.find(practical_names::action(action))) {
            for (const auto& x : out.aaf.arguments) {
                if (x.conclusion == *id) {
                    found = x.id;
                    break;
                }
            }
        }
        out.action_arguments.push_back(found);
    }
    out.solutions = solutions(agent, situation_id);
    out.ordering = ethical_ordering(agent, situation_id);
    return out;
}

Decision end_to_end_decide(const VdaAgent& agent, const EpistemicSpec& spec, const std::set<std::string>& perceptions,
                           Semantics semantics) {
    auto epistemic = evaluate_epistemic(agent.language(), spec, perceptions, semantics);
    auto justified = justified_situation(agent.language(), epistemic);
    auto id = agent.find_situation(justified.situation);
    if (!id) {
        std::string shown;
        for (const auto& p : justified.justified_perceptions) shown += (shown.empty() ? "" : ", ") + p;
        throw LookupError("no declared situation has the justified valuation {" + shown + "}");
    }
    auto practical = run_practical(agent, *id, semantics);
    return Decision{std::move(epistemic), std::move(justified), *id, std::move(practical)};
}

} // namespace vda
