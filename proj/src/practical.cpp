#include "vda/practical.hpp"

#include "vda/error.hpp"

#include <algorithm>
#include <numeric>

namespace vda {

namespace practical_names {
std::string action(std::string_view a) { return "act:" + std::string(a); }
std::string vector(std::string_view a) { return "vec:" + std::string(a); }
std::string negated_vector(std::string_view a) { return "not:" + std::string(a); }
std::string disjunct(std::string_view id) { return "dis:" + std::string(id); }
} // namespace practical_names

bool PracticalFramework::is_assumption(std::string_view action) const {
    return std::find(assumption_actions.begin(), assumption_actions.end(), action) != assumption_actions.end();
}

const GeneratedRule* PracticalFramework::action_rule(std::string_view action) const {
    for (const auto& r : rules)
        if (r.kind == RuleKind::Action && r.action == action) return &r;
    return nullptr;
}

std::size_t tightest_disjunct(const Principle& principle, const std::vector<std::size_t>& qualifying) {
    if (qualifying.empty()) throw ArgumentError("no qualifying disjunct");
    auto weight = [&](std::size_t i) {
        const auto& b = principle[i].bounds;
        return std::accumulate(b.begin(), b.end(), 0L);
    };
    std::size_t best = qualifying.front();
    for (auto i : qualifying)
        if (weight(i) > weight(best) || (weight(i) == weight(best) && i < best)) best = i;
    return best;
}

PracticalFramework practical_framework(const VdaAgent& agent, std::string_view situation_id,
                                       AssumptionPolicy policy) {
    namespace names = practical_names;
    const auto& matrix = agent.matrix(situation_id);
    const auto& principle = agent.principle();
    const auto& actions = agent.language().actions();

    PracticalFramework out;
    out.situation = std::string(situation_id);
    for (const auto& row : matrix.rows()) {
        bool satisfies = std::any_of(row.values.begin(), row.values.end(), [](int d) { return d >= 1; });
        if (policy == AssumptionPolicy::AllVectors || satisfies) out.assumption_actions.push_back(row.action);
    }
    if (out.assumption_actions.empty()) {
        out.assumption_actions = actions;
        out.fallback_used = true;
    }

    for (const auto& a : out.assumption_actions) {
        out.rules.push_back(GeneratedRule{"", RuleKind::Action, a, "", 0, {}});
    }
    for (const auto& beta : out.assumption_actions) {
        for (const auto& alpha : actions) {
            if (alpha == beta) continue;
            auto qualifying = prefers(matrix, principle, alpha, beta);
            if (qualifying.empty()) continue;
            out.rules.push_back(GeneratedRule{"", RuleKind::Principle, alpha, beta,
                                              tightest_disjunct(principle, qualifying), std::move(qualifying)});
        }
    }
    for (std::size_t i = 0; i < out.rules.size(); ++i) out.rules[i].label = "r" + std::to_string(i + 1);

    auto& f = out.framework;
    const std::string vsub = "v_" + out.situation;
    for (const auto& u : principle.disjuncts()) {
        f.language.push_back(names::disjunct(u.id));
        f.display[names::disjunct(u.id)] = u.id;
    }
    for (const auto& a : actions) {
        f.language.push_back(names::vector(a));
        f.display[names::vector(a)] = vsub + "(" + a + ")";
    }
    for (const auto& a : actions) {
        f.language.push_back(names::negated_vector(a));
        f.display[names::negated_vector(a)] = "¬" + vsub + "(" + a + ")";
    }
    for (const auto& a : actions) {
        f.language.push_back(names::action(a));
        f.display[names::action(a)] = a;
    }
    for (const auto& a : out.assumption_actions) {
        f.assumptions.push_back(names::vector(a));
        f.contrary[names::vector(a)] = names::negated_vector(a);
    }
    for (const auto& r : out.rules) {
        if (r.kind == RuleKind::Action) {
            f.rules.push_back(aba::Rule{r.label, names::action(r.action), {names::vector(r.action)}});
        } else {
            f.rules.push_back(aba::Rule{r.label, names::negated_vector(r.rejected),
                                        {names::disjunct(principle[r.disjunct].id), names::vector(r.action)}});
        }
    }
    for (const auto& u : principle.disjuncts()) f.rules.push_back(aba::Rule{u.id, names::disjunct(u.id), {}});
    return out;
}

aba::DerivationOptions practical_derivation_options() {
    aba::DerivationOptions options;
    options.include_assumption_arguments = false;
    return options;
}

} // namespace vda
