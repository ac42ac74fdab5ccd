#include "vda/cli.hpp"

#include "vda/error.hpp"
#include "vda/explain.hpp"
#include "vda/io.hpp"
#include "vda/oracle.hpp"
#include "vda/pipeline.hpp"
#include "vda/properties.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace vda::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

struct Options {
    std::string file;
    std::string situation;
    std::string action;
    std::string semantics = "grounded";
    std::string format = "text";
    std::string perceptions;
    bool dot = false;
    bool explain_situation = false;
    bool perceptions_given = false;
    std::uint64_t seed = 0;
    std::size_t count = 200;
};

Semantics semantics_of(const Options& o) { return *parse_semantics(o.semantics); }

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::string label(char prefix, std::size_t id) { return prefix + std::to_string(id + 1); }

std::vector<std::string> labels(char prefix, const std::vector<std::size_t>& ids) {
    std::vector<std::string> out;
    for (auto id : ids) out.push_back(label(prefix, id));
    return out;
}

// ---- shared AAF rendering -------------------------------------------------

void write_arguments(std::ostream& out, const aba::Aaf& aaf, const aba::ValidatedFramework& f, char prefix) {
    out << "arguments:\n";
    for (const auto& x : aaf.arguments)
        out << "  " << label(prefix, x.id) << ": " << aba::format_argument(x, f, aba::PremiseStyle::Premises) << "\n";
    out << "attacks:\n";
    for (const auto& a : aaf.graph.attacks())
        out << "  " << label(prefix, a.attacker) << " → " << label(prefix, a.target) << "\n";
}

void write_extensions(std::ostream& out, const AcceptanceReport& report, char prefix) {
    out << "extensions:\n";
    for (std::size_t i = 0; i < report.extensions.size(); ++i)
        out << "  E" << i + 1 << ": {" << join(labels(prefix, report.extensions[i].members)) << "}\n";
    if (report.vacuous) out << "  (none) " << report.diagnostic << "\n";
}

Json arguments_json(const aba::Aaf& aaf, const aba::ValidatedFramework& f, const AcceptanceReport& report, char prefix) {
    Json args = Json::array();
    for (const auto& x : aaf.arguments) {
        Json support = Json::array(), premises = Json::array(), rules = Json::array();
        for (auto s : x.support) support.push_back(f.display(s));
        for (auto s : x.premises(f)) premises.push_back(f.display(s));
        for (auto r : x.rules_used) rules.push_back(f.rule_label(r));
        args.push_back(Json{{"label", label(prefix, x.id)},
                            {"support", support},
                            {"premises", premises},
                            {"conclusion", f.display(x.conclusion)},
                            {"rules", rules},
                            {"status", to_string(report.statuses[x.id].verdict())}});
    }
    return args;
}

Json graph_json(const AttackGraph& graph, const AcceptanceReport& report, char prefix) {
    Json attacks = Json::array();
    for (const auto& a : graph.attacks()) attacks.push_back(Json::array({label(prefix, a.attacker), label(prefix, a.target)}));
    Json exts = Json::array();
    for (const auto& e : report.extensions) exts.push_back(labels(prefix, e.members));
    Json out{{"attacks", attacks}, {"semantics", to_string(report.semantics)}, {"extensions", exts}};
    if (report.vacuous) out["diagnostic"] = report.diagnostic;
    return out;
}

void write_dot(std::ostream& out, const aba::Aaf& aaf, const aba::ValidatedFramework& f, char prefix) {
    out << "digraph aaf {\n  rankdir=LR;\n  node [shape=box];\n";
    for (const auto& x : aaf.arguments) {
        out << "  " << label(prefix, x.id) << " [label=\"" << label(prefix, x.id) << "\\n"
            << aba::format_argument(x, f, aba::PremiseStyle::Premises) << "\"];\n";
    }
    for (const auto& a : aaf.graph.attacks())
        out << "  " << label(prefix, a.attacker) << " -> " << label(prefix, a.target) << ";\n";
    out << "}\n";
}

// ---- practical runs -------------------------------------------------------

struct PracticalRun {
    std::optional<Decision> decision; // set when the situation went through epistemic reasoning
    const PracticalResult& result() const { return decision ? decision->practical : *direct; }
    std::optional<PracticalResult> direct;
};

PracticalRun practical_for(const io::AgentFile& file, const std::string& situation, Semantics semantics) {
    const auto& agent = file.agent;
    const auto& s = agent.situation(situation);
    PracticalRun run;
    if (agent.matrices().contains(situation)) {
        run.direct = run_practical(agent, situation, semantics);
    } else if (file.epistemic) {
        run.decision = end_to_end_decide(agent, *file.epistemic, s.perceptions(), semantics);
    } else {
        throw LookupError("situation '" + situation + "' has no action matrix");
    }
    return run;
}

std::string valuation(const Situation& s) {
    std::vector<std::string> pos, neg;
    for (const auto& l : s.literals()) (l.positive ? pos : neg).push_back(l.display());
    pos.insert(pos.end(), neg.begin(), neg.end());
    return "{" + join(pos) + "}";
}

std::string action_status(const PracticalResult& r, std::size_t i) {
    const auto& arg = r.action_arguments[i];
    if (!arg) return "no action rule";
    return std::string(to_string(r.acceptance.statuses[*arg].verdict())) + " (" + label('X', *arg) + ")";
}

std::string rule_text(const PracticalResult& r, std::size_t i) {
    return aba::format_rule(i, r.framework);
}

Json practical_json(const PracticalRun& run, const std::string& requested) {
    const auto& r = run.result();
    Json out;
    out["situation"] = r.situation;
    if (run.decision) {
        out["requested_situation"] = requested;
        out["justified_situation"] = valuation(run.decision->justified.situation);
    }
    out["semantics"] = to_string(r.semantics);
    Json assumptions = Json::array();
    for (const auto& a : r.practical.assumption_actions)
        assumptions.push_back(r.framework.display(r.framework.require(practical_names::vector(a))));
    out["assumptions"] = assumptions;
    out["fallback_assumptions"] = r.practical.fallback_used;
    Json rules = Json::array();
    for (std::size_t i = 0; i < r.practical.rules.size(); ++i) {
        const auto& g = r.practical.rules[i];
        Json rule{{"label", g.label}, {"kind", g.kind == RuleKind::Action ? "action" : "principle"}, {"rule", rule_text(r, i)}};
        if (g.kind == RuleKind::Principle) {
            rule["preferred"] = g.action;
            rule["rejected"] = g.rejected;
            rule["disjunct"] = r.agent.principle()[g.disjunct].id;
            rule["qualifying"] = disjunct_ids(r.agent.principle(), g.qualifying);
        }
        rules.push_back(rule);
    }
    out["rules"] = rules;
    out["arguments"] = arguments_json(r.aaf, r.framework, r.acceptance, 'X');
    const auto graph = graph_json(r.aaf.graph, r.acceptance, 'X');
    for (const auto& [k, v] : graph.items()) out[k] = v;
    Json actions = Json::array();
    const auto& names = r.agent.language().actions();
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& arg = r.action_arguments[i];
        actions.push_back(Json{{"action", names[i]},
                               {"argument", arg ? Json(label('X', *arg)) : Json()},
                               {"status", arg ? Json(to_string(r.acceptance.statuses[*arg].verdict())) : Json("no-action-rule")}});
    }
    out["actions"] = actions;
    out["justified"] = r.justified_actions(true);
    out["credulous"] = r.justified_actions(false);
    out["solutions"] = r.solutions.actions;
    return out;
}

void write_practical(std::ostream& out, const PracticalRun& run, const std::string& requested) {
    const auto& r = run.result();
    if (run.decision) {
        out << "situation: " << requested << " (perceptions justified by epistemic reasoning)\n";
        out << "justified situation: " << valuation(run.decision->justified.situation) << " = " << r.situation << "\n";
    } else {
        out << "situation: " << r.situation << "\n";
    }
    out << "semantics: " << to_string(r.semantics) << "\n";
    std::vector<std::string> assumptions;
    for (const auto& a : r.practical.assumption_actions)
        assumptions.push_back(r.framework.display(r.framework.require(practical_names::vector(a))));
    out << "assumptions: " << join(assumptions) << (r.practical.fallback_used ? " (no vector satisfies a duty)" : "") << "\n";
    out << "rules:\n";
    for (std::size_t i = 0; i < r.practical.rules.size(); ++i) {
        const auto& g = r.practical.rules[i];
        out << "  " << g.label << ": " << rule_text(r, i);
        if (g.kind == RuleKind::Principle && g.qualifying.size() > 1)
            out << "  [also " << join([&] {
                std::vector<std::string> others;
                for (auto q : g.qualifying)
                    if (q != g.disjunct) others.push_back(r.agent.principle()[q].id);
                return others;
            }()) << "]";
        out << "\n";
    }
    write_arguments(out, r.aaf, r.framework, 'X');
    write_extensions(out, r.acceptance, 'X');
    out << "actions:\n";
    const auto& names = r.agent.language().actions();
    for (std::size_t i = 0; i < names.size(); ++i) out << "  " << names[i] << ": " << action_status(r, i) << "\n";
    const auto justified = r.justified_actions(true);
    out << "justified: " << (justified.empty() ? "(none)" : join(justified)) << "\n";
}

// ---- subcommands ----------------------------------------------------------

int cmd_solve(const Options& o, Format format, std::ostream& out) {
    const auto file = io::load_agent_file(o.file);
    if (file.kind != io::FileKind::Agent) throw ArgumentError("solve needs a vda-agent file");
    const auto& agent = file.agent;
    // Perceptions without a matrix are first justified; the matrix of S^J is used.
    std::string sid = o.situation;
    if (!agent.matrices().contains(sid) && file.epistemic && agent.situation(sid).id() == sid)
        sid = end_to_end_decide(agent, *file.epistemic, agent.situation(sid).perceptions()).situation;
    const auto sol = solutions(agent, sid);
    const auto ordering = ethical_ordering(agent, sid);
    const auto& principle = agent.principle();

    if (format == Format::Json) {
        Json steps = Json::array();
        for (const auto& s : ordering.steps)
            steps.push_back(Json{{"action", s.action}, {"to_next", disjunct_ids(principle, s.disjuncts_to_next)}});
        Json j{{"situation", o.situation}, {"solutions", sol.actions}, {"ordering", steps}, {"cyclic", ordering.cyclic}};
        if (sid != o.situation) j["justified_situation"] = sid;
        if (sol.empty()) j["diagnostic"] = sol.diagnostic;
        out << j.dump(2) << "\n";
    } else {
        out << "situation: " << o.situation << "\n";
        if (sid != o.situation) out << "justified situation: " << sid << "\n";
        out << "solutions: " << (sol.empty() ? "(none)" : join(sol.actions)) << "\n";
        if (sol.empty()) out << "diagnostic: " << sol.diagnostic << "\n";
        std::vector<std::string> order;
        for (const auto& s : ordering.steps) order.push_back(s.action);
        out << "ordering: " << join(order) << "\n";
        for (std::size_t i = 0; i + 1 < ordering.steps.size(); ++i) {
            const auto& s = ordering.steps[i];
            out << "  " << s.action << " ≥ " << ordering.steps[i + 1].action << "  ";
            if (s.disjuncts_to_next.empty())
                out << "(no disjunct)\n";
            else
                out << "(" << join(disjunct_ids(principle, s.disjuncts_to_next)) << ")\n";
        }
        if (ordering.cyclic) out << "note: a strict-preference cycle blocked the ordering; the rest follows name order\n";
    }
    return sol.empty() ? DomainError : Success;
}

int cmd_justify_framework(const io::AgentFile& file, const Options& o, Format format, std::ostream& out) {
    const auto f = aba::validate_framework(file.framework);
    auto args = aba::derive_arguments(f);
    auto attacks = aba::compute_attacks(args, f);
    const auto aaf = aba::to_aaf(std::move(args), std::move(attacks));
    if (o.dot) {
        write_dot(out, aaf, f, 'Y');
        return Success;
    }
    const auto report = acceptance_status(aaf.graph, semantics_of(o));
    if (format == Format::Json) {
        Json rules = Json::array();
        for (std::size_t i = 0; i < f.rule_count(); ++i)
            rules.push_back(Json{{"label", f.rule_label(i)}, {"rule", aba::format_rule(i, f)}});
        Json j{{"framework", file.name}, {"semantics", o.semantics}, {"rules", rules},
               {"arguments", arguments_json(aaf, f, report, 'Y')}};
        const auto graph = graph_json(aaf.graph, report, 'Y');
        for (const auto& [k, v] : graph.items()) j[k] = v;
        out << j.dump(2) << "\n";
        return Success;
    }
    if (!file.name.empty()) out << "framework: " << file.name << "\n";
    out << "semantics: " << o.semantics << "\nrules:\n";
    for (std::size_t i = 0; i < f.rule_count(); ++i) out << "  " << f.rule_label(i) << ": " << aba::format_rule(i, f) << "\n";
    write_arguments(out, aaf, f, 'Y');
    write_extensions(out, report, 'Y');
    out << "statuses:\n";
    for (std::size_t i = 0; i < aaf.arguments.size(); ++i)
        out << "  " << label('Y', i) << ": " << to_string(report.statuses[i].verdict()) << "\n";
    return Success;
}

int cmd_justify(const Options& o, Format format, std::ostream& out) {
    const auto file = io::load_agent_file(o.file);
    if (file.kind == io::FileKind::Framework) return cmd_justify_framework(file, o, format, out);
    if (o.situation.empty()) throw ArgumentError("justify needs a situation for a vda-agent file");
    const auto run = practical_for(file, o.situation, semantics_of(o));
    if (o.dot)
        write_dot(out, run.result().aaf, run.result().framework, 'X');
    else if (format == Format::Json)
        out << practical_json(run, o.situation).dump(2) << "\n";
    else
        write_practical(out, run, o.situation);
    return Success;
}

Json explanation_json(const Explanation& e, const std::string& text) {
    auto cited = [](const CitedArgument& a) {
        return Json{{"label", a.label}, {"argument", a.text}, {"premises", a.premises}};
    };
    auto cited_list = [&](const std::vector<CitedArgument>& xs) {
        Json out = Json::array();
        for (const auto& x : xs) out.push_back(cited(x));
        return out;
    };
    Json j;
    j["kind"] = e.kind == SubjectKind::Action ? "action" : "assumption";
    j["subject"] = e.subject;
    j["situation"] = e.context;
    j["semantics"] = to_string(e.semantics);
    j["verdict"] = to_string(e.verdict);
    j["argument"] = e.argument ? cited(*e.argument) : Json();
    j["assumption"] = e.assumption;
    if (e.kind == SubjectKind::Action) j["vector"] = e.values;
    Json exts = Json::array();
    for (const auto& r : e.extensions) {
        Json x{{"extension", "E" + std::to_string(r.extension + 1)}, {"member", r.member}};
        if (r.attacker) x["attacker"] = cited(*r.attacker);
        if (r.comparison) {
            const auto& c = *r.comparison;
            x["comparison"] = Json{{"winner", c.winner}, {"loser", c.loser}, {"disjunct", c.disjunct},
                                   {"winner_vector", c.winner_values}, {"loser_vector", c.loser_values}};
        }
        if (r.member) {
            Json defences = Json::array();
            for (const auto& d : r.defences) defences.push_back(Json{{"attacker", cited(d.attacker)}, {"counters", cited_list(d.counters)}});
            x["defences"] = defences;
        }
        exts.push_back(x);
    }
    j["extensions"] = exts;
    j["attackers"] = cited_list(e.attackers);
    j["defenders"] = cited_list(e.defenders);
    if (!e.undecided_attackers.empty()) j["undecided_attackers"] = cited_list(e.undecided_attackers);
    j["text"] = text;
    return j;
}

int cmd_explain(const Options& o, Format format, std::ostream& out) {
    const auto file = io::load_agent_file(o.file);
    if (file.kind != io::FileKind::Agent) throw ArgumentError("explain needs a vda-agent file");
    const auto& agent = file.agent;

    if (o.explain_situation) {
        const auto& s = agent.situation(o.situation);
        const EpistemicSpec none;
        const auto result = evaluate_epistemic(agent.language(), file.epistemic ? *file.epistemic : none,
                                               s.perceptions(), semantics_of(o));
        const auto explanations = explain_situation(result, o.situation);
        const bool determinate = result.undecided.empty();
        std::string summary;
        if (determinate) {
            Situation sj("SJ", agent.language(), result.justified_perceptions);
            summary = "the justified situation " + valuation(sj) +
                      " is skeptically justified: every assumption is skeptically justified or rejected.";
        } else {
            summary = "no skeptically justified situation: undecided assumptions " + join(result.undecided) + ".";
        }
        if (format == Format::Json) {
            Json list = Json::array();
            for (const auto& e : explanations) list.push_back(explanation_json(e, render_text(e, file.duty_names)));
            out << Json{{"situation", o.situation}, {"determinate", determinate}, {"summary", summary}, {"assumptions", list}}.dump(2)
                << "\n";
        } else {
            out << o.situation << ": " << summary << "\n";
            for (const auto& e : explanations) out << "\n" << render_text(e, file.duty_names);
        }
        return Success;
    }

    if (o.action.empty()) throw ArgumentError("explain needs an action or --situation");
    const auto run = practical_for(file, o.situation, semantics_of(o));
    const auto e = explain_action(run.result(), o.action);
    const auto text = render_text(e, file.duty_names);
    if (format == Format::Json)
        out << explanation_json(e, text).dump(2) << "\n";
    else
        out << text;
    return Success;
}

std::set<std::string> split_perceptions(const std::string& list) {
    std::set<std::string> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

int cmd_epistemic(const Options& o, Format format, std::ostream& out, std::ostream& err) {
    const auto file = io::load_agent_file(o.file);
    if (file.kind != io::FileKind::Agent) throw ArgumentError("epistemic needs a vda-agent file");
    const auto& agent = file.agent;
    std::set<std::string> perceptions;
    if (o.perceptions_given)
        perceptions = split_perceptions(o.perceptions);
    else if (!o.situation.empty())
        perceptions = agent.situation(o.situation).perceptions();
    else
        throw ArgumentError("epistemic needs a situation or --perceptions");

    const EpistemicSpec none;
    const auto& spec = file.epistemic ? *file.epistemic : none;
    const auto result = evaluate_epistemic(agent.language(), spec, perceptions, semantics_of(o));
    const bool determinate = result.undecided.empty();
    std::optional<Situation> sj;
    std::optional<std::string> match;
    if (determinate) {
        sj = justified_situation(agent.language(), result).situation;
        match = agent.find_situation(*sj);
    }

    std::vector<std::string> shown;
    for (const auto& atom : agent.language().atoms())
        if (perceptions.contains(atom)) shown.push_back(atom);
    std::vector<std::string> pj;
    for (const auto& atom : agent.language().atoms())
        if (result.justified_perceptions.contains(atom)) pj.push_back(atom);

    if (format == Format::Json) {
        Json j;
        j["perceptions"] = shown;
        Json assumptions = Json::array();
        for (const auto& a : spec.assumptions) assumptions.push_back(a.display());
        j["assumptions"] = assumptions;
        if (result.framework) {
            j["arguments"] = arguments_json(result.aaf, *result.framework, result.acceptance, 'Y');
            const auto graph = graph_json(result.aaf.graph, result.acceptance, 'Y');
            for (const auto& [k, v] : graph.items()) j[k] = v;
        }
        Json verdicts = Json::array();
        for (const auto& v : result.verdicts)
            verdicts.push_back(Json{{"assumption", v.assumption.display()}, {"argument", label('Y', v.argument)},
                                    {"verdict", to_string(v.verdict)}, {"attackers", labels('Y', v.attackers)},
                                    {"defenders", labels('Y', v.defenders)}});
        j["verdicts"] = verdicts;
        j["determinate"] = determinate;
        if (determinate) {
            j["justified_perceptions"] = pj;
            j["justified_situation"] = valuation(*sj);
            j["matching_situation"] = match ? Json(*match) : Json();
        } else {
            j["undecided"] = result.undecided;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "perceptions: " << join(shown) << "\n";
        std::vector<std::string> assumptions;
        for (const auto& a : spec.assumptions) assumptions.push_back(a.display());
        out << "assumptions: " << (assumptions.empty() ? "(none)" : join(assumptions)) << "\n";
        if (result.framework) {
            const auto& f = *result.framework;
            out << "rules:\n";
            for (std::size_t i = 0; i < f.rule_count(); ++i) {
                if (f.rule_label(i).starts_with("fact:")) continue;
                out << "  " << f.rule_label(i) << ": " << aba::format_rule(i, f) << "\n";
            }
            write_arguments(out, result.aaf, f, 'Y');
            write_extensions(out, result.acceptance, 'Y');
            for (std::size_t i = 0; i < result.acceptance.extensions.size(); ++i) {
                std::vector<std::string> concl;
                for (auto m : result.acceptance.extensions[i].members) concl.push_back(f.display(result.aaf.arguments[m].conclusion));
                out << "conclusions of E" << i + 1 << ": {" << join(concl) << "}\n";
            }
            out << "verdicts:\n";
            for (const auto& v : result.verdicts)
                out << "  " << v.assumption.display() << ": " << to_string(v.verdict) << " (" << label('Y', v.argument) << ")\n";
        }
        if (determinate) {
            out << "justified perceptions: {" << join(pj) << "}\n";
            out << "justified situation: " << valuation(*sj) << "\n";
            out << "matching situation: " << (match ? *match : "(none declared)") << "\n";
        }
    }
    if (!determinate) {
        err << "error: indeterminate situation: undecided assumptions: " << join(result.undecided) << "\n";
        return DomainError;
    }
    return Success;
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
    std::size_t solution_mismatch = 0, semantics_mismatch = 0, prop2 = 0, prop2_applicable = 0, prop3 = 0;
    for (std::size_t i = 0; i < o.count; ++i) {
        oracle::RandomVdaSpec spec;
        spec.seed = o.seed + i;
        const auto inst = oracle::random_vda(spec);
        const auto sol = solutions(inst.agent, inst.situation).actions;
        const auto brute = oracle::brute_force_solutions(inst.agent, inst.situation);
        if (std::set<std::string>(sol.begin(), sol.end()) != brute && !ethical_ordering(inst.agent, inst.situation).cyclic)
            ++solution_mismatch;
        const auto p2 = oracle::check_single_solution_property(inst);
        prop2_applicable += p2.applicable;
        prop2 += p2.applicable && !p2.holds;
        prop3 += !oracle::check_solution_correspondence(inst).holds;

        const auto graph = oracle::random_aaf(oracle::RandomAafSpec{spec.seed});
        for (auto sem : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred, Semantics::Stable}) {
            std::vector<std::vector<std::size_t>> got;
            for (auto& e : extensions(graph, sem)) got.push_back(e.members);
            if (got != oracle::brute_force_extensions(graph, sem)) ++semantics_mismatch;
        }
    }
    out << "instances: " << o.count << " (seeds " << o.seed << ".." << o.seed + o.count - 1 << ")\n";
    out << "solutions vs brute force (acyclic): " << solution_mismatch << " mismatches\n";
    out << "semantics vs brute force: " << semantics_mismatch << " mismatches\n";
    out << "single-solution property: " << prop2 << " violations in " << prop2_applicable << " applicable instances\n";
    out << "solution correspondence: " << prop3 << " violations\n";
    return solution_mismatch + semantics_mismatch == 0 ? Success : DomainError;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Justify and explain the decisions of a value driven agent by argumentation", "vda"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--semantics", o.semantics, "grounded, complete, preferred or stable")
            ->check(CLI::IsMember({"grounded", "complete", "preferred", "stable"}));
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* solve = app.add_subcommand("solve", "Solutions and ethical ordering in a situation");
    solve->add_option("FILE", o.file, "Agent file")->required();
    solve->add_option("SITUATION", o.situation, "Situation id")->required();
    solve->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* justify = app.add_subcommand("justify", "Rules, arguments, attacks, extensions and justified actions");
    justify->add_option("FILE", o.file, "Agent or framework file")->required();
    justify->add_option("SITUATION", o.situation, "Situation id (agent files)");
    justify->add_flag("--dot", o.dot, "Print the argument graph in DOT");
    add_common(justify);

    auto* explain = app.add_subcommand("explain", "Explain why an action or situation is justified or rejected");
    explain->add_option("FILE", o.file, "Agent file")->required();
    explain->add_option("SITUATION", o.situation, "Situation id")->required();
    explain->add_option("ACTION", o.action, "Action to explain");
    explain->add_flag("--situation", o.explain_situation, "Explain the justified situation instead of an action");
    add_common(explain);

    auto* epistemic = app.add_subcommand("epistemic", "Justify perceptions and rebuild the situation");
    epistemic->add_option("FILE", o.file, "Agent file")->required();
    epistemic->add_option("SITUATION", o.situation, "Situation whose perceptions are used");
    auto* perceptions = epistemic->add_option("--perceptions", o.perceptions, "Comma-separated true perceptions");
    add_common(epistemic);

    auto* check = app.add_subcommand("oracle-check", "");
    check->group("");
    check->add_option("--seed", o.seed, "First seed");
    check->add_option("--count", o.count, "Number of random instances");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    o.perceptions_given = perceptions->count() > 0;
    const Format format = o.format == "json" ? Format::Json : Format::Text;

    try {
        if (solve->parsed()) return cmd_solve(o, format, out);
        if (justify->parsed()) return cmd_justify(o, format, out);
        if (explain->parsed()) return cmd_explain(o, format, out);
        if (epistemic->parsed()) return cmd_epistemic(o, format, out, err);
        if (check->parsed()) return cmd_oracle_check(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const LookupError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const TotalityError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const FlatnessError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const IndeterminateSituationError& e) {
        err << "error: " << e.what() << "\n";
        return DomainError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return DomainError;
    }
    return UsageError;
}

} // namespace vda::cli
