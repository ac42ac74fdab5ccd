#include "vda/explain.hpp"

#include "vda/error.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace vda {

std::string_view to_string(ExplanationVerdict verdict) {
    switch (verdict) {
    case ExplanationVerdict::JustifiedSkeptical: return "skeptically-justified";
    case ExplanationVerdict::JustifiedCredulous: return "credulously-justified";
    case ExplanationVerdict::Rejected: return "rejected";
    case ExplanationVerdict::RejectedAPriori: return "rejected-a-priori";
    case ExplanationVerdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::string format_vector(const std::vector<int>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(values[i]);
    }
    return out + ")";
}

namespace {

CitedArgument cite(const aba::Aaf& aaf, const aba::ValidatedFramework& framework, std::size_t id, char prefix) {
    const auto& x = aaf.arguments[id];
    CitedArgument c{id, prefix + std::to_string(id + 1),
                    aba::format_argument(x, framework, aba::PremiseStyle::Premises), {}};
    for (auto p : x.premises(framework)) c.premises.push_back(framework.display(p));
    return c;
}

// Shared extension walk. `choose` picks one attacker among those in the extension.
template <typename Choose>
void explain_membership(Explanation& e, const aba::Aaf& aaf, const aba::ValidatedFramework& framework,
                        const AcceptanceReport& report, std::size_t x, char prefix, Choose choose) {
    const auto& graph = aaf.graph;
    for (auto y : graph.attackers(x)) e.attackers.push_back(cite(aaf, framework, y, prefix));

    std::vector<std::size_t> defenders;
    for (std::size_t i = 0; i < report.extensions.size(); ++i) {
        const auto& ext = report.extensions[i];
        ExtensionReason r{i, ext.contains(x), std::nullopt, std::nullopt, {}};
        if (r.member) {
            for (auto y : graph.attackers(x)) {
                Defence d{cite(aaf, framework, y, prefix), {}};
                for (auto z : graph.attackers(y)) {
                    if (!ext.contains(z)) continue;
                    d.counters.push_back(cite(aaf, framework, z, prefix));
                    if (report.statuses[z].in_every) defenders.push_back(z);
                }
                r.defences.push_back(std::move(d));
            }
        } else {
            std::vector<std::size_t> inside;
            for (auto y : graph.attackers(x))
                if (ext.contains(y)) inside.push_back(y);
            if (!inside.empty()) r.attacker = cite(aaf, framework, choose(inside), prefix);
        }
        e.extensions.push_back(std::move(r));
    }
    std::sort(defenders.begin(), defenders.end());
    defenders.erase(std::unique(defenders.begin(), defenders.end()), defenders.end());
    for (auto z : defenders) e.defenders.push_back(cite(aaf, framework, z, prefix));

    const auto& s = report.statuses[x];
    bool rejected = !report.vacuous && !s.in_some &&
                    std::all_of(e.extensions.begin(), e.extensions.end(), [](const ExtensionReason& r) {
                        return r.attacker.has_value();
                    });
    if (s.in_every && !report.vacuous)
        e.verdict = ExplanationVerdict::JustifiedSkeptical;
    else if (s.in_some)
        e.verdict = ExplanationVerdict::JustifiedCredulous;
    else if (rejected)
        e.verdict = ExplanationVerdict::Rejected;
    else
        e.verdict = ExplanationVerdict::Indeterminate;

    if (e.verdict == ExplanationVerdict::Indeterminate) {
        for (auto y : graph.attackers(x)) {
            const auto v = report.statuses[y].verdict();
            if (v != Verdict::SkepticallyJustified && v != Verdict::SkepticallyRejected)
                e.undecided_attackers.push_back(cite(aaf, framework, y, prefix));
        }
    }
}

} // namespace

Explanation explain_action(const PracticalResult& result, std::string_view action) {
    const auto& language = result.agent.language();
    const auto index = language.require_action(action);
    const auto& matrix = result.agent.matrix(result.situation);

    Explanation e;
    e.kind = SubjectKind::Action;
    e.subject = std::string(action);
    e.context = result.situation;
    e.semantics = result.semantics;
    e.duties = language.duties();
    e.values = matrix.at(action).values;
    e.assumption = result.framework.display(result.framework.require(practical_names::vector(action)));

    const auto x = result.action_arguments[index];
    if (!x) {
        e.verdict = ExplanationVerdict::RejectedAPriori;
        return e;
    }
    e.argument = cite(result.aaf, result.framework, *x, 'X');

    const auto& rules = result.practical.rules;
    auto generated = [&](std::size_t arg) -> const GeneratedRule& {
        return rules[result.aaf.arguments[arg].tree.front().rule.value()];
    };
    auto choose = [&](const std::vector<std::size_t>& candidates) {
        return *std::min_element(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
            const auto& ra = generated(a);
            const auto& rb = generated(b);
            return std::tie(ra.disjunct, ra.action, a) < std::tie(rb.disjunct, rb.action, b);
        });
    };
    explain_membership(e, result.aaf, result.framework, result.acceptance, *x, 'X', choose);

    const auto& principle = result.agent.principle();
    for (auto& r : e.extensions) {
        if (!r.attacker) continue;
        const auto& rule = generated(r.attacker->id);
        r.comparison = DutyComparison{rule.action, e.subject, principle[rule.disjunct].id,
                                      matrix.at(rule.action).values, e.values};
    }
    return e;
}

std::vector<Explanation> explain_situation(const EpistemicResult& result, std::string_view situation_id) {
    std::vector<Explanation> out;
    for (const auto& v : result.verdicts) {
        Explanation e;
        e.kind = SubjectKind::Assumption;
        e.subject = v.assumption.display();
        e.context = std::string(situation_id);
        e.semantics = result.acceptance.semantics;
        e.assumption = e.subject;
        e.argument = cite(result.aaf, *result.framework, v.argument, 'Y');
        auto lowest = [](const std::vector<std::size_t>& c) { return *std::min_element(c.begin(), c.end()); };
        explain_membership(e, result.aaf, *result.framework, result.acceptance, v.argument, 'Y', lowest);
        // A situation only distinguishes skeptical verdicts.
        if (v.verdict == Verdict::SkepticallyRejected)
            e.verdict = ExplanationVerdict::Rejected;
        else if (v.verdict != Verdict::SkepticallyJustified)
            e.verdict = ExplanationVerdict::Indeterminate;
        if (e.verdict == ExplanationVerdict::Indeterminate && e.undecided_attackers.empty()) {
            for (auto y : result.aaf.graph.attackers(v.argument)) {
                const auto s = result.acceptance.statuses[y].verdict();
                if (s != Verdict::SkepticallyJustified && s != Verdict::SkepticallyRejected)
                    e.undecided_attackers.push_back(cite(result.aaf, *result.framework, y, 'Y'));
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += i + 1 == items.size() ? " and " : ", ";
        out += items[i];
    }
    return out;
}

std::string labels(const std::vector<CitedArgument>& args) {
    std::vector<std::string> l;
    for (const auto& a : args) l.push_back(a.label);
    return join(l);
}

std::string cited(const CitedArgument& a) { return a.label + " = " + a.text; }

std::string extension_label(std::size_t i) { return "E" + std::to_string(i + 1); }

struct DutyTerm {
    const std::string& code;
    const std::string& name;
};

std::string term(const DutyTerm& d, int degree, bool compact) {
    std::string verb;
    if (degree > 0)
        verb = "satisfying " + d.name + " with degree " + std::to_string(degree);
    else if (degree < 0)
        verb = "violating " + d.name + " with degree " + std::to_string(degree);
    else
        verb = "without violating " + d.name;
    return verb + " (" + d.code + (compact ? ":" : ": ") + std::to_string(degree) + ")";
}

std::vector<DutyTerm> duty_terms(const Explanation& e, const DutyNames& names) {
    std::vector<DutyTerm> out;
    for (const auto& d : e.duties) {
        auto it = names.find(d);
        if (it == names.end()) throw SchemaError("no name for duty '" + d + "'");
        out.push_back(DutyTerm{d, it->second});
    }
    return out;
}

std::string comparison_text(const DutyComparison& c, const std::vector<DutyTerm>& duties) {
    std::vector<std::string> gains, costs, rival;
    for (std::size_t i = 0; i < duties.size(); ++i) {
        const int w = c.winner_values[i], l = c.loser_values[i];
        if (w > l && w > 0) gains.push_back(term(duties[i], w, true));
        if (w > l && w < 0)
            gains.push_back("violating " + duties[i].name + " only with degree " + std::to_string(w) + " instead of " +
                            std::to_string(l) + " (" + duties[i].code + ":" + std::to_string(w) + ")");
        if (w > l && w == 0)
            gains.push_back("avoiding the violation of " + duties[i].name + " with degree " + std::to_string(l) + " (" +
                            duties[i].code + ":0)");
        if (w < l && w != 0) costs.push_back(term(duties[i], w, false));
        if (w < l && l != 0) rival.push_back(term(duties[i], l, false));
    }
    std::string out = "Under " + c.disjunct + ", " + c.winner + " is preferable to " + c.loser + ": ";
    if (gains.empty() && costs.empty() && rival.empty()) {
        return out + "no duty differentiates the two actions, and the bounds of " + c.disjunct + " accept the tie.";
    }
    if (gains.empty())
        out += c.winner + " gains on no duty, yet the bounds of " + c.disjunct + " accept ";
    else
        out += join(gains);
    if (!costs.empty()) out += (gains.empty() ? "" : ", at the cost of ") + join(costs);
    if (rival.empty())
        out += "; " + c.loser + " does better on no duty.";
    else
        out += (gains.empty() ? " against " : ", outweighs ") + c.loser + " " + join(rival) + ".";
    out += " Duties on which both actions agree do not differentiate them and are left out.";
    return out;
}

std::string consequence_text(const Explanation& e, const std::vector<DutyTerm>& duties) {
    std::vector<std::string> sat, vio;
    for (std::size_t i = 0; i < duties.size(); ++i) {
        const int k = e.values[i];
        if (k > 0) sat.push_back(duties[i].name + " with degree " + std::to_string(k) + " (" + duties[i].code + ":" + std::to_string(k) + ")");
        if (k < 0) vio.push_back(duties[i].name + " with degree " + std::to_string(k) + " (" + duties[i].code + ": " + std::to_string(k) + ")");
    }
    std::string out = "Accepting " + e.assumption + " means that, in situation " + e.context + ", " + e.subject + "'s ";
    if (sat.empty())
        out += "consequences are accepted although they satisfy no duty";
    else
        out += "satisfaction of " + join(sat) + " is accepted";
    if (!vio.empty()) out += " despite the violation of " + join(vio);
    return out + ".";
}

} // namespace

std::string render_text(const Explanation& e, const DutyNames& names) {
    std::ostringstream out;
    const std::string sem = std::string(to_string(e.semantics)) + " semantics";
    const bool action = e.kind == SubjectKind::Action;
    const auto duties = action ? duty_terms(e, names) : std::vector<DutyTerm>{};
    const std::string where = action ? " in situation " + e.context : "";
    const std::string consequence =
        action ? "The ethical consequence " + e.assumption + " = " + format_vector(e.values) : "The assumption " + e.assumption;

    switch (e.verdict) {
    case ExplanationVerdict::RejectedAPriori:
        out << e.subject << " is rejected a priori" << where << ": " << e.assumption << " = " << format_vector(e.values)
            << " satisfies no duty, so no action rule concludes " << e.subject << ".\n";
        return out.str();
    case ExplanationVerdict::JustifiedSkeptical:
    case ExplanationVerdict::JustifiedCredulous: {
        const bool skeptical = e.verdict == ExplanationVerdict::JustifiedSkeptical;
        out << e.subject << " is " << (skeptical ? "skeptically" : "credulously") << " justified" << where << " under "
            << sem << ".\n";
        std::vector<std::string> in;
        for (const auto& r : e.extensions)
            if (r.member) in.push_back(extension_label(r.extension));
        out << "- " << cited(*e.argument) << " is in " << (skeptical ? "every extension" : "some extensions") << " ("
            << join(in) << ").\n";
        if (e.attackers.empty()) {
            out << "- " << consequence << " is accepted since it has no attacker.\n";
        } else {
            out << "- " << consequence << " is accepted since every attacker is itself attacked inside the extension:\n";
            for (const auto& r : e.extensions) {
                if (!r.member) continue;
                for (const auto& d : r.defences)
                    out << "  - in " << extension_label(r.extension) << ", " << cited(d.attacker) << " is attacked by "
                        << labels(d.counters) << ".\n";
            }
            if (!e.defenders.empty())
                out << "- " << e.argument->label << " is defended by the skeptically accepted "
                    << (e.defenders.size() == 1 ? "argument " : "arguments ") << labels(e.defenders) << ".\n";
        }
        for (const auto& r : e.extensions) {
            if (r.member) continue;
            const auto ext = extension_label(r.extension);
            if (!r.attacker) {
                out << "- In " << ext << ", " << e.argument->label << " is undecided: no attacker belongs to " << ext
                    << ".\n";
                continue;
            }
            out << "- In " << ext << ", " << e.argument->label << " is attacked by " << cited(*r.attacker)
                << ", which belongs to " << ext << ".\n";
            if (r.comparison) out << "  " << comparison_text(*r.comparison, duties) << "\n";
        }
        if (action) out << "- " << consequence_text(e, duties) << "\n";
        return out.str();
    }
    case ExplanationVerdict::Rejected:
        out << e.subject << " is " << (action ? "rejected" : "skeptically rejected") << where << " under " << sem << ".\n";
        for (const auto& r : e.extensions) {
            const auto& a = *r.attacker;
            out << "- " << cited(*e.argument) << " is not in " << extension_label(r.extension) << ".\n";
            out << "- " << consequence << " is not acceptable, since " << e.argument->label << " is attacked by "
                << cited(a);
            if (a.premises.empty())
                out << ", which needs no premise and is accepted in " << extension_label(r.extension) << ".\n";
            else if (a.premises.size() == 1)
                out << ", whose premise " << a.premises.front() << " is accepted in " << extension_label(r.extension)
                    << ".\n";
            else
                out << ", whose premises " << join(a.premises) << " are accepted in " << extension_label(r.extension)
                    << ".\n";
            if (r.comparison) out << "- " << comparison_text(*r.comparison, duties) << "\n";
        }
        return out.str();
    case ExplanationVerdict::Indeterminate:
        out << e.subject << " is indeterminate" << where << " under " << sem << ": ";
        if (e.argument) out << e.argument->label << " is neither in every extension nor attacked by a skeptically accepted argument";
        out << ".\n";
        for (const auto& a : e.undecided_attackers) out << "- undecided attacker " << cited(a) << "\n";
        return out.str();
    }
    return out.str();
}

} // namespace vda
