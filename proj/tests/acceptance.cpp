// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "support.hpp"

#include "vda/cli.hpp"
#include "vda/explain.hpp"
#include "vda/oracle.hpp"
#include "vda/pipeline.hpp"
#include "vda/properties.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace vda;

namespace {

constexpr std::uint64_t kVdaSeeds = 1000;
constexpr std::uint64_t kAafSeeds = 500;
constexpr double kS1Seconds = 1.0;
constexpr double kPropSeconds = 60.0;
constexpr double kAafSeconds = 120.0;

struct Verdict {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail = what; // keep the first mismatch
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

bool all_passed = true;

void report(int n, const std::string& title, const std::function<Verdict()>& body, double limit = 0) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit > 0 && secs >= limit) v.expect(false, "took " + std::to_string(secs) + " s");
    all_passed = all_passed && v.pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << n << ". " << title << " (" << timing;
    if (limit > 0) std::cout << ", limit " << limit << " s";
    std::cout << ")";
    if (!v.detail.empty()) std::cout << ": " << v.detail;
    std::cout << "\n";
}

std::vector<std::string> labels(const std::vector<std::size_t>& ids) {
    std::vector<std::string> out;
    for (auto i : ids) out.push_back("X" + std::to_string(i + 1));
    return out;
}

std::vector<std::vector<std::size_t>> member_sets(const std::vector<Extension>& exts) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& e : exts) out.push_back(e.members);
    std::sort(out.begin(), out.end());
    return out;
}

Verdict eldercare_s1() {
    Verdict v;
    const auto r = run_practical(eldercare().agent, "S1");
    const std::vector<std::string> expected_rules{
        "charge ← v_S1(charge)",
        "warn ← v_S1(warn)",
        "notify ← v_S1(notify)",
        "seekTask ← v_S1(seekTask)",
        "¬v_S1(charge) ← u7, v_S1(warn)",
        "¬v_S1(charge) ← u7, v_S1(notify)",
        "¬v_S1(charge) ← u4, v_S1(seekTask)",
        "¬v_S1(notify) ← u5, v_S1(warn)",
        "¬v_S1(seekTask) ← u7, v_S1(warn)",
        "¬v_S1(seekTask) ← u7, v_S1(notify)",
    };
    std::vector<std::string> rules;
    for (std::size_t i = 0; i < r.practical.rules.size(); ++i) rules.push_back(aba::format_rule(i, r.framework));
    v.expect(rules == expected_rules, "generated rules differ");
    v.expect(r.aaf.arguments.size() == 10, "expected 10 arguments, got " + std::to_string(r.aaf.arguments.size()));
    v.expect(r.acceptance.extensions.size() == 1 &&
                 labels(r.acceptance.extensions[0].members) == std::vector<std::string>{"X2", "X5", "X8", "X9"},
             "grounded extension differs");
    v.expect(r.solutions.actions == std::vector<std::string>{"warn"}, "solutions differ");
    v.expect(r.justified_actions(true) == std::vector<std::string>{"warn"}, "justified actions differ");
    return v;
}

Verdict nixon_diamond() {
    Verdict v;
    const auto fw = aba::validate_framework(nixon().framework);
    const auto args = aba::derive_arguments(fw);
    const auto graph = aba::to_aaf(args, aba::compute_attacks(args, fw)).graph;
    using Sets = std::vector<std::vector<std::size_t>>;
    v.expect(args.size() == 4, "expected 4 arguments");
    v.expect(grounded(graph).members.empty(), "grounded not empty");
    v.expect(complete(graph).size() == 3, "complete extension count");
    v.expect(member_sets(preferred(graph)) == Sets{{0, 2}, {1, 3}}, "preferred differs from {Y1,Y3},{Y2,Y4}");
    v.expect(member_sets(stable(graph)) == Sets{{0, 2}, {1, 3}}, "stable differs from {Y1,Y3},{Y2,Y4}");
    const auto report = acceptance_status(graph, Semantics::Preferred);
    for (const auto& s : report.statuses) {
        v.expect(s.in_some, "an argument is not credulously accepted");
        v.expect(!s.in_every, "an argument is skeptically accepted");
    }
    return v;
}

Verdict epistemic_s2() {
    Verdict v;
    const auto& ag = eldercare().agent;
    const auto res = evaluate_epistemic(ag.language(), *eldercare().epistemic, ag.situation("S2").perceptions());
    v.expect(res.aaf.arguments.size() == 6, "expected six arguments");
    v.expect(res.aaf.graph.attacks() == std::vector<Attack>{{3, 0}, {3, 4}, {4, 1}, {4, 3}, {5, 2}, {5, 4}},
             "attacks differ");
    v.expect(res.acceptance.extensions.size() == 1 &&
                 res.acceptance.extensions[0].members == std::vector<std::size_t>{1, 3, 5},
             "extension differs from {Y2, Y4, Y6}");
    std::set<std::string> conclusions;
    if (!res.acceptance.extensions.empty())
        for (auto m : res.acceptance.extensions[0].members)
            conclusions.insert(res.framework->display(res.aaf.arguments[m].conclusion));
    v.expect(conclusions == std::set<std::string>{"lb", "¬fc", "ab"}, "conclusions differ");
    v.expect(res.justified_perceptions == std::set<std::string>{"lb", "mrt", "r", "rm", "ab"}, "P^J differs");
    const auto js = justified_situation(ag.language(), res);
    std::vector<std::string> lits;
    for (const auto& l : js.situation.literals()) lits.push_back(l.display());
    v.expect(lits == std::vector<std::string>{"lb", "mrt", "r", "rm", "¬fc", "¬ni", "¬w", "¬pi", "¬e", "¬iw", "ab"},
             "S^J differs");
    return v;
}

oracle::RandomVdaSpec corpus_spec(std::uint64_t seed) {
    oracle::RandomVdaSpec spec{seed};
    spec.max_actions = 5;
    spec.max_duties = 4;
    spec.range = {-2, 2};
    spec.max_disjuncts = 4;
    return spec;
}

struct Tally {
    std::size_t instances = 0;
    std::size_t applicable = 0;
    std::size_t violations = 0;
    std::string first;
};

template <typename Check>
Tally tally(Check check, bool restricted) {
    Tally t;
    for (std::uint64_t seed = 0; seed < kVdaSeeds; ++seed) {
        auto spec = corpus_spec(seed);
        if (restricted) spec.policy = AssumptionPolicy::AllVectors;
        const auto inst = oracle::random_vda(spec);
        if (restricted && !oracle::within_hypotheses(inst)) continue;
        ++t.instances;
        const auto out = check(inst);
        if (!out.applicable) continue;
        ++t.applicable;
        if (!out.holds) {
            if (t.violations++ == 0) t.first = "seed " + std::to_string(seed) + ": " + out.detail;
        }
    }
    return t;
}

template <typename Check>
Verdict property(Check check) {
    Verdict v;
    const auto t = tally(check, false);
    v.expect(t.violations == 0, std::to_string(t.violations) + " violations in " + std::to_string(t.applicable) +
                                    " applicable instances; first " + t.first);
    const auto h = tally(check, true);
    std::cout << "       note: all vectors as assumptions, transitive strict preference, no mutual weak pairs: "
              << h.violations << " violations in " << h.applicable << " applicable of " << h.instances
              << " instances\n";
    return v;
}

Verdict semantics_oracle() {
    Verdict v;
    for (std::uint64_t seed = 0; seed < kAafSeeds; ++seed) {
        oracle::RandomAafSpec spec{seed};
        spec.max_arguments = 12;
        spec.max_density = 0.4;
        spec.self_loops = true;
        const auto g = oracle::random_aaf(spec);
        const auto tag = "seed " + std::to_string(seed);
        for (auto sem : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred, Semantics::Stable})
            v.expect(member_sets(extensions(g, sem)) == oracle::brute_force_extensions(g, sem),
                     tag + ": " + std::string(to_string(sem)) + " disagrees with subset enumeration");
        const auto comp = member_sets(complete(g));
        const auto pref = member_sets(preferred(g));
        const auto st = member_sets(stable(g));
        const auto gr = grounded(g).members;
        for (const auto& s : st)
            v.expect(std::find(pref.begin(), pref.end(), s) != pref.end(), tag + ": stable not preferred");
        for (const auto& p : pref)
            v.expect(std::find(comp.begin(), comp.end(), p) != comp.end(), tag + ": preferred not complete");
        v.expect(std::find(comp.begin(), comp.end(), gr) != comp.end(), tag + ": grounded not complete");
        for (const auto& c : comp)
            v.expect(std::includes(c.begin(), c.end(), gr.begin(), gr.end()), tag + ": grounded not least");
    }
    return v;
}

Verdict faithfulness() {
    Verdict v;
    for (const auto* sid : {"S1", "S2J"}) {
        const auto r = run_practical(eldercare().agent, sid);
        for (const auto& action : r.agent.language().actions()) {
            const auto e = explain_action(r, action);
            for (const auto& reason : e.extensions) {
                const auto& ext = r.acceptance.extensions.at(reason.extension);
                const auto tag = std::string(sid) + "/" + action;
                v.expect(ext.contains(e.argument->id) == reason.member, tag + ": membership claim wrong");
                if (reason.attacker) {
                    v.expect(ext.contains(reason.attacker->id), tag + ": attacker not in extension");
                    v.expect(r.aaf.graph.attacks(reason.attacker->id, e.argument->id), tag + ": attacker does not attack");
                }
                for (const auto& d : reason.defences)
                    for (const auto& c : d.counters)
                        v.expect(ext.contains(c.id) && r.aaf.graph.attacks(c.id, d.attacker.id),
                                 tag + ": counter-attack not in extension");
            }
        }
    }
    const auto r = run_practical(eldercare().agent, "S1");
    const auto e = explain_action(r, "charge");
    v.expect(!e.extensions.empty() && e.extensions[0].attacker &&
                 e.extensions[0].attacker->premises == std::vector<std::string>{"u7", "v_S1(warn)"},
             "charge attacker premises are not u7 and v_S1(warn)");
    const auto text = render_text(e, eldercare().duty_names);
    v.expect(text.find("MG2P") == std::string::npos, "charge explanation mentions MG2P");
    return v;
}

std::string cli_output(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
}

Verdict determinism() {
    Verdict v;
    const std::vector<std::vector<std::string>> runs{
        {"solve", fixture("eldercare.json"), "S1"},
        {"justify", fixture("eldercare.json"), "S1", "--format", "json"},
        {"justify", fixture("eldercare.json"), "S2J", "--dot"},
        {"explain", fixture("eldercare.json"), "S1", "charge"},
        {"explain", fixture("eldercare.json"), "S2", "--situation"},
        {"epistemic", fixture("eldercare.json"), "S2", "--format", "json"},
        {"justify", fixture("nixon.json"), "--semantics", "preferred"},
        {"epistemic", fixture("symmetric.json"), "S"},
        {"solve", fixture("single-action.json"), "S"},
        {"solve", fixture("malformed-row.json"), "S1"},
        {"solve", fixture("broken-syntax.json"), "S1"},
    };
    for (const auto& args : runs) v.expect(cli_output(args) == cli_output(args), "output differs for " + args[0]);
    for (const auto* name : {"eldercare.json", "nixon.json", "symmetric.json", "single-action.json"}) {
        const auto first = io::load_agent_file(fixture(name));
        const auto again = io::parse_agent_file(io::serialize_agent_file(first));
        v.expect(first == again, std::string(name) + ": parse, serialize, parse changed the document");
    }
    return v;
}

} // namespace

int main() {
    report(1, "Eldercare S1 rules, arguments, grounded extension and solution", eldercare_s1, kS1Seconds);
    report(2, "Nixon diamond extensions under all four semantics", nixon_diamond);
    report(3, "Epistemic S2 arguments, attacks and justified situation", epistemic_s2);
    report(4, "Single solution implies a unique complete extension equal to grounded (1000 seeds)",
           [] { return property(oracle::check_single_solution_property); }, kPropSeconds);
    report(5, "Solutions equal credulously accepted actions under complete semantics (1000 seeds)",
           [] { return property(oracle::check_solution_correspondence); });
    report(6, "Semantics agree with subset enumeration on 500 random graphs", semantics_oracle, kAafSeconds);
    report(7, "Explanations cite arguments faithfully", faithfulness);
    report(8, "CLI output is deterministic and fixtures round-trip", determinism);
    return all_passed ? 0 : 1;
}
