#include "vda/epistemic.hpp"

#include "vda/error.hpp"

#include <algorithm>

namespace vda {

std::string literal_sentence(const Literal& literal) { return literal.to_string(); }

aba::AbaFramework epistemic_framework(const VdaLanguage& language, const EpistemicSpec& spec,
                                      const std::set<std::string>& perceptions) {
    aba::AbaFramework f;
    for (const auto& atom : language.atoms()) {
        for (bool positive : {true, false}) {
            Literal l{atom, positive};
            f.language.push_back(literal_sentence(l));
            f.display[literal_sentence(l)] = l.display();
        }
    }
    auto check = [&](const Literal& l, const std::string& where) {
        if (!language.has_atom(l.atom)) throw SchemaError("literal '" + l.display() + "' in " + where + " is not in the language");
    };

    std::set<Literal> assumptions;
    for (const auto& a : spec.assumptions) {
        check(a, "assumptions");
        if (!assumptions.insert(a).second) throw SchemaError("duplicate assumption '" + a.display() + "'");
        f.assumptions.push_back(literal_sentence(a));
        auto it = spec.contraries.find(a);
        Literal contrary = it == spec.contraries.end() ? a.negated() : it->second;
        check(contrary, "contrary of '" + a.display() + "'");
        f.contrary[literal_sentence(a)] = literal_sentence(contrary);
    }
    for (const auto& [a, c] : spec.contraries) {
        if (!assumptions.contains(a)) throw SchemaError("contrary given for non-assumption '" + a.display() + "'");
    }

    std::set<Literal> stated_facts;
    for (const auto& r : spec.rules) {
        check(r.head, "rule '" + r.label + "'");
        aba::Rule rule{r.label, literal_sentence(r.head), {}};
        for (const auto& b : r.body) {
            check(b, "rule '" + r.label + "'");
            rule.body.push_back(literal_sentence(b));
        }
        if (r.body.empty()) stated_facts.insert(r.head);
        f.rules.push_back(std::move(rule));
    }
    for (const auto& atom : language.atoms()) {
        if (!perceptions.contains(atom)) continue;
        Literal p{atom, true};
        if (assumptions.contains(p) || stated_facts.contains(p)) continue;
        f.rules.push_back(aba::Rule{"fact:" + atom, literal_sentence(p), {}});
    }
    for (const auto& p : perceptions) {
        if (!language.has_atom(p)) throw SchemaError("perception '" + p + "' is not in the language");
    }
    return f;
}

EpistemicResult evaluate_epistemic(const VdaLanguage& language, const EpistemicSpec& spec,
                                   const std::set<std::string>& perceptions, Semantics semantics) {
    EpistemicResult out;
    out.perceptions = perceptions;
    out.justified_perceptions = perceptions;
    if (spec.assumptions.empty()) {
        out.acceptance = acceptance_status(out.aaf.graph, semantics);
        return out;
    }
    out.framework = aba::validate_framework(epistemic_framework(language, spec, perceptions));
    const auto& framework = *out.framework;
    auto args = aba::derive_arguments(framework);
    auto attacks = aba::compute_attacks(args, framework);
    out.aaf = aba::to_aaf(std::move(args), std::move(attacks));
    out.acceptance = acceptance_status(out.aaf.graph, semantics);

    const auto& graph = out.aaf.graph;
    for (const auto& a : spec.assumptions) {
        const auto id = framework.require(literal_sentence(a));
        auto it = std::find_if(out.aaf.arguments.begin(), out.aaf.arguments.end(), [&](const aba::Argument& x) {
            return x.conclusion == id && x.support == std::vector<aba::SentenceId>{id};
        });
        AssumptionVerdict v{a, static_cast<std::size_t>(it - out.aaf.arguments.begin()), Verdict::Undecided, {}, {}};
        v.verdict = out.acceptance.statuses[v.argument].verdict();
        v.attackers = graph.attackers(v.argument);
        for (auto y : v.attackers) {
            for (auto z : graph.attackers(y)) {
                if (out.acceptance.statuses[z].in_every) v.defenders.push_back(z);
            }
        }
        std::sort(v.defenders.begin(), v.defenders.end());
        v.defenders.erase(std::unique(v.defenders.begin(), v.defenders.end()), v.defenders.end());
        if (!v.decided()) out.undecided.push_back(a.display());
        out.verdicts.push_back(std::move(v));
    }

    // P^J = (P \ A) ∪ A^J. A justified ¬p also removes p, keeping S^J a valuation.
    for (const auto& v : out.verdicts)
        if (v.assumption.positive) out.justified_perceptions.erase(v.assumption.atom);
    for (const auto& v : out.verdicts) {
        if (v.verdict != Verdict::SkepticallyJustified) continue;
        if (v.assumption.positive)
            out.justified_perceptions.insert(v.assumption.atom);
        else
            out.justified_perceptions.erase(v.assumption.atom);
    }
    return out;
}

JustifiedSituation justified_situation(const VdaLanguage& language, const EpistemicResult& result,
                                       std::string situation_id) {
    if (!result.undecided.empty()) throw IndeterminateSituationError(result.undecided);
    return JustifiedSituation{result.justified_perceptions,
                              Situation(std::move(situation_id), language, result.justified_perceptions),
                              result.verdicts};
}

} // namespace vda
