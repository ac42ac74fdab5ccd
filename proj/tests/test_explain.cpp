#include "support.hpp"

#include "vda/error.hpp"
#include "vda/explain.hpp"
#include "vda/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace vda;

namespace {

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

const PracticalResult& s1() {
    static const auto r = run_practical(eldercare().agent, "S1");
    return r;
}

bool member(const Extension& e, std::size_t a) { return std::binary_search(e.members.begin(), e.members.end(), a); }

void check_faithful(const PracticalResult& r, const Explanation& e) {
    const auto& g = r.aaf.graph;
    const auto& pi = r.agent.principle();
    const auto& m = r.agent.matrix(r.situation);
    if (e.verdict == ExplanationVerdict::RejectedAPriori) {
        CHECK_FALSE(e.argument.has_value());
        CHECK(std::none_of(e.values.begin(), e.values.end(), [](int k) { return k >= 1; }));
        return;
    }
    REQUIRE(e.argument.has_value());
    const auto x = e.argument->id;
    for (const auto& reason : e.extensions) {
        const auto& ext = r.acceptance.extensions.at(reason.extension);
        CHECK(reason.member == member(ext, x));
        if (!reason.member && !reason.attacker) {
            // Undecided in this extension: nothing inside attacks it.
            CHECK(e.verdict != ExplanationVerdict::Rejected);
            for (auto y : g.attackers(x)) CHECK_FALSE(member(ext, y));
        } else if (!reason.member) {
            CHECK(member(ext, reason.attacker->id));
            CHECK(g.attacks(reason.attacker->id, x));
            REQUIRE(reason.comparison.has_value());
            const auto& c = *reason.comparison;
            CHECK(c.loser == e.subject);
            CHECK(c.winner_values == m.at(c.winner).values);
            CHECK(c.loser_values == m.at(c.loser).values);
            const auto u = pi.index_of(c.disjunct);
            REQUIRE(u.has_value());
            for (std::size_t d = 0; d < c.winner_values.size(); ++d)
                CHECK(c.winner_values[d] - c.loser_values[d] >= pi[*u].bounds[d]);
        } else {
            CHECK(reason.defences.size() == g.attackers(x).size());
            for (const auto& def : reason.defences) {
                CHECK(g.attacks(def.attacker.id, x));
                REQUIRE_FALSE(def.counters.empty());
                for (const auto& k : def.counters) {
                    CHECK(member(ext, k.id));
                    CHECK(g.attacks(k.id, def.attacker.id));
                }
            }
        }
    }
}

} // namespace

TEST_SUITE("explain") {

TEST_CASE("warn is justified and unattacked") {
    const auto e = explain_action(s1(), "warn");
    CHECK(e.verdict == ExplanationVerdict::JustifiedSkeptical);
    CHECK(e.attackers.empty());
    const auto text = render_text(e, eldercare().duty_names);
    CHECK(has(text, "warn is skeptically justified in situation S1"));
    CHECK(has(text, "has no attacker"));
    CHECK(has(text, "satisfaction of Minimize Harm to Patient with degree 1 (mH2P:1)"));
    CHECK(has(text, "Maximize Respect Autonomy with degree -1 (MRA: -1)"));
}

TEST_CASE("charge is rejected by warn under u7") {
    const auto e = explain_action(s1(), "charge");
    CHECK(e.verdict == ExplanationVerdict::Rejected);
    REQUIRE(e.extensions.size() == 1);
    REQUIRE(e.extensions[0].attacker.has_value());
    CHECK(e.extensions[0].attacker->label == "X5");
    REQUIRE(e.extensions[0].comparison.has_value());
    CHECK(e.extensions[0].comparison->winner == "warn");
    CHECK(e.extensions[0].comparison->disjunct == "u7");
    const auto text = render_text(e, eldercare().duty_names);
    CHECK(has(text, "mH2P:1"));
    CHECK(has(text, "MRA: -1"));
    CHECK(has(text, "MMR: 1"));
    CHECK_FALSE(has(text, "MG2P"));
    CHECK(has(text, "whose premises u7 and v_S1(warn) are accepted in E1"));
}

TEST_CASE("a lighter violation counts as the winner's gain") {
    const auto text = render_text(explain_action(s1(), "notify"), eldercare().duty_names);
    CHECK(has(text, "only with degree -1 instead of -2 (MRA:-1)"));
    CHECK(has(text, "notify does better on no duty"));
}

TEST_CASE("remind is rejected a priori") {
    const auto e = explain_action(s1(), "remind");
    CHECK(e.verdict == ExplanationVerdict::RejectedAPriori);
    CHECK(has(render_text(e, eldercare().duty_names), "satisfies no duty"));
    CHECK_THROWS_AS(explain_action(s1(), "fly"), LookupError);
}

TEST_CASE("missing duty name") {
    auto names = eldercare().duty_names;
    names.erase("MRA");
    CHECK_THROWS_AS(render_text(explain_action(s1(), "warn"), names), SchemaError);
}

TEST_CASE("zero differential is accepted by a non-positive disjunct") {
    VdaLanguage lang({"p"}, {"a", "b"}, {"d"});
    std::map<std::string, ActionMatrix> m;
    m.emplace("S", ActionMatrix("S", lang, {{"a", {1}}, {"b", {1}}}));
    VdaAgent ag(lang, {Situation("S", lang, {})}, m, Principle({{"u", {0}}}, 1));
    const auto r = run_practical(ag, "S", Semantics::Preferred);
    const auto e = explain_action(r, "b");
    CHECK(e.verdict == ExplanationVerdict::JustifiedCredulous);
    std::size_t out_of = 0;
    for (const auto& reason : e.extensions)
        if (!reason.member) {
            ++out_of;
            CHECK(has(render_text(e, {{"d", "Duty"}}), "no duty differentiates the two actions"));
        }
    CHECK(out_of == 1);
    CHECK(explain_action(run_practical(ag, "S"), "a").verdict == ExplanationVerdict::Indeterminate);
}

TEST_CASE("situation explanations") {
    const auto& ag = eldercare().agent;
    const auto res = evaluate_epistemic(ag.language(), *eldercare().epistemic, ag.situation("S2").perceptions());
    const auto es = explain_situation(res, "S2");
    REQUIRE(es.size() == 3);
    CHECK(es[0].subject == "fc");
    CHECK(es[0].verdict == ExplanationVerdict::Rejected);
    CHECK(es[1].verdict == ExplanationVerdict::JustifiedSkeptical);
    std::vector<std::string> defenders;
    for (const auto& d : es[1].defenders) defenders.push_back(d.label);
    CHECK(defenders == std::vector<std::string>{"Y4", "Y6"});
    CHECK(es[2].subject == "¬ab");
    CHECK(has(render_text(es[2]), "which needs no premise and is accepted in E1"));
    CHECK(has(render_text(es[0]), "whose premise lb is accepted in E1"));
}

TEST_CASE("explanations are faithful on the fixture") {
    for (auto sem : {Semantics::Grounded, Semantics::Preferred})
        for (const auto* sid : {"S1", "S2J"}) {
            const auto r = run_practical(eldercare().agent, sid, sem);
            for (const auto& a : r.agent.language().actions()) check_faithful(r, explain_action(r, a));
        }
}

TEST_CASE("explanations are faithful on random agents") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto inst = oracle::random_vda({seed});
        for (auto sem : {Semantics::Grounded, Semantics::Preferred}) {
            const auto r = run_practical(inst.agent, inst.situation, sem, inst.policy);
            DutyNames names;
            for (const auto& d : inst.agent.language().duties()) names[d] = "duty " + d;
            for (const auto& a : inst.agent.language().actions()) {
                CAPTURE(seed);
                const auto e = explain_action(r, a);
                check_faithful(r, e);
                CHECK_FALSE(render_text(e, names).empty());
                CHECK(render_text(e, names) == render_text(explain_action(r, a), names));
            }
        }
    }
}

TEST_CASE("format vector") {
    CHECK(format_vector({0, 1, -1}) == "(0, 1, -1)");
    CHECK(format_vector({}) == "()");
}

} // TEST_SUITE
