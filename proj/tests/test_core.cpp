#include "support.hpp"

#include "vda/core.hpp"
#include "vda/error.hpp"
#include "vda/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace vda;

namespace {

const VdaAgent& ag1() { return eldercare().agent; }
const ActionMatrix& s1() { return ag1().matrix("S1"); }

// Straight from the S1 table, kept apart from the fixture file on purpose.
const std::map<std::string, std::vector<int>> kS1Table = {
    {"charge", {0, 1, -1, -1, 0, 0, 0}}, {"remind", {-1, -1, -1, -1, 0, 0, 0}}, {"engage", {0, -1, -1, -1, 0, 0, 0}},
    {"warn", {0, 0, 1, -1, 0, -1, 0}},   {"notify", {0, 0, 1, -1, 0, -2, 0}},   {"seekTask", {0, -1, -1, 1, 0, 0, 0}},
};

// Componentwise check done by hand, independent of meets_lower_bounds.
std::vector<std::string> naive_prefers(const VdaAgent& agent, const std::map<std::string, std::vector<int>>& table,
                                       const std::string& a, const std::string& b) {
    std::vector<std::string> out;
    for (const auto& u : agent.principle().disjuncts()) {
        bool ok = true;
        for (std::size_t d = 0; d < u.bounds.size(); ++d) ok = ok && table.at(a)[d] - table.at(b)[d] >= u.bounds[d];
        if (ok) out.push_back(u.id);
    }
    return out;
}

std::map<std::string, std::vector<int>> table_of(const ActionMatrix& m) {
    std::map<std::string, std::vector<int>> t;
    for (const auto& r : m.rows()) t[r.action] = r.values;
    return t;
}

bool strict_cycle(const oracle::RandomInstance& inst) {
    const auto& actions = inst.agent.language().actions();
    const auto t = table_of(inst.agent.matrix(inst.situation));
    const auto n = actions.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !naive_prefers(inst.agent, t, actions[i], actions[j]).empty() &&
                naive_prefers(inst.agent, t, actions[j], actions[i]).empty())
                reach[i][j] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
    for (std::size_t i = 0; i < n; ++i)
        if (reach[i][i]) return true;
    return false;
}

} // namespace

TEST_SUITE("core") {

TEST_CASE("fixture matrix reproduces the S1 table") {
    for (const auto& [action, values] : kS1Table) CHECK(s1().at(action).values == values);
}

TEST_CASE("duty differential") {
    CHECK(duty_differential(s1().at("warn"), s1().at("charge")).values == std::vector<int>{0, -1, 2, 0, 0, -1, 0});
    CHECK(duty_differential(s1().at("seekTask"), s1().at("charge")).values == std::vector<int>{0, -2, 0, 2, 0, 0, 0});
    CHECK(duty_differential(s1().at("warn"), s1().at("warn")).values == std::vector<int>(7, 0));
    CHECK_THROWS_AS(duty_differential(DutyVector{"a", {1, 2}}, DutyVector{"b", {1}}), SchemaError);
}

TEST_CASE("meets lower bounds") {
    const auto& pi = ag1().principle();
    CHECK(meets_lower_bounds(DutyDifferential{{0, -1, 2, 0, 0, -1, 0}}, pi[6]));
    CHECK(meets_lower_bounds(DutyDifferential{{0, 0}}, Disjunct{"z", {0, 0}}));
    CHECK_FALSE(meets_lower_bounds(DutyDifferential{{0, 1, -2, 0, 0, 1, 0}}, pi[4]));
    CHECK_THROWS_AS(meets_lower_bounds(DutyDifferential{{0}}, pi[0]), SchemaError);
}

TEST_CASE("prefers matches an exhaustive componentwise scan") {
    const auto& actions = ag1().language().actions();
    for (const auto& a : actions)
        for (const auto& b : actions)
            CHECK(disjunct_ids(ag1().principle(), prefers(s1(), ag1().principle(), a, b)) ==
                  naive_prefers(ag1(), kS1Table, a, b));

    auto ids = [](const std::vector<std::size_t>& v) { return disjunct_ids(ag1().principle(), v); };
    auto contains = [](const std::vector<std::string>& v, const char* id) {
        return std::find(v.begin(), v.end(), id) != v.end();
    };
    CHECK(contains(ids(prefers(s1(), ag1().principle(), "warn", "notify")), "u5"));
    CHECK(contains(ids(prefers(s1(), ag1().principle(), "seekTask", "charge")), "u4"));
    CHECK(prefers(s1(), ag1().principle(), "notify", "warn").empty());
    CHECK_THROWS_AS(prefers(s1(), ag1().principle(), "fly", "warn"), LookupError);
}

TEST_CASE("strict preference") {
    CHECK(strictly_prefers(s1(), ag1().principle(), "warn", "notify"));
    CHECK_FALSE(strictly_prefers(s1(), ag1().principle(), "notify", "warn"));
    CHECK_THROWS_AS(strictly_prefers(s1(), ag1().principle(), "warn", "warn"), ArgumentError);

    // Mutual weak preference cancels.
    VdaLanguage lang({"p"}, {"a", "b"}, {"d"});
    std::map<std::string, ActionMatrix> m;
    m.emplace("S", ActionMatrix("S", lang, {{"a", {1}}, {"b", {0}}}));
    VdaAgent agent(lang, {Situation("S", lang, {})}, m, Principle({{"u", {-2}}}, 1));
    CHECK_FALSE(strictly_prefers(agent.matrix("S"), agent.principle(), "a", "b"));
    CHECK_FALSE(strictly_prefers(agent.matrix("S"), agent.principle(), "b", "a"));
    CHECK(solutions(agent, "S").actions == std::vector<std::string>{"a", "b"});
}

TEST_CASE("solutions and ordering on S1") {
    CHECK(solutions(ag1(), "S1").actions == std::vector<std::string>{"warn"});
    const auto ordering = ethical_ordering(ag1(), "S1");
    std::vector<std::string> order;
    for (const auto& s : ordering.steps) order.push_back(s.action);
    CHECK(order == std::vector<std::string>{"warn", "notify", "seekTask", "charge", "engage", "remind"});
    CHECK_FALSE(ordering.cyclic);
    const auto first = disjunct_ids(ag1().principle(), ordering.steps[0].disjuncts_to_next);
    CHECK(std::find(first.begin(), first.end(), "u5") != first.end());
    CHECK_THROWS_AS(solutions(ag1(), "S2"), LookupError);
}

TEST_CASE("single action") {
    const auto file = io::load_agent_file(fixture("single-action.json"));
    CHECK(solutions(file.agent, "S").actions == std::vector<std::string>{"act"});
    CHECK(ethical_ordering(file.agent, "S").steps.size() == 1);
}

TEST_CASE("empty solution set under a strict cycle covering all actions") {
    // a > b under u1, b > c under u2, c > a under u3; no reverse preference holds.
    VdaLanguage lang({"p"}, {"a", "b", "c"}, {"d1", "d2", "d3"});
    std::map<std::string, ActionMatrix> m;
    m.emplace("S", ActionMatrix("S", lang, {{"a", {1, 0, -1}}, {"b", {0, -1, 1}}, {"c", {-1, 1, 0}}}));
    Principle pi({{"u1", {1, 1, -4}}, {"u2", {1, -4, 1}}, {"u3", {-4, 1, 1}}}, 3);
    VdaAgent agent(lang, {Situation("S", lang, {})}, m, pi);
    const auto sol = solutions(agent, "S");
    CHECK(sol.empty());
    CHECK_FALSE(sol.diagnostic.empty());
    CHECK(ethical_ordering(agent, "S").cyclic);
}

TEST_CASE("reflexive bound check and antisymmetry over random agents") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto inst = oracle::random_vda({seed});
        const auto& m = inst.agent.matrix(inst.situation);
        const auto& pi = inst.agent.principle();
        for (const auto& row : m.rows()) {
            for (const auto& u : pi.disjuncts()) {
                if (std::all_of(u.bounds.begin(), u.bounds.end(), [](int b) { return b <= 0; }))
                    CHECK(meets_lower_bounds(duty_differential(row, row), u));
            }
        }
        const auto& actions = inst.agent.language().actions();
        for (const auto& a : actions)
            for (const auto& b : actions)
                if (a != b) CHECK_FALSE((strictly_prefers(m, pi, a, b) && strictly_prefers(m, pi, b, a)));
    }
}

TEST_CASE("solutions equal the first elements of greedy orderings under every tie-break permutation") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        oracle::RandomVdaSpec spec{seed};
        spec.max_actions = 5;
        const auto inst = oracle::random_vda(spec);
        const auto& m = inst.agent.matrix(inst.situation);
        const auto& pi = inst.agent.principle();
        auto perm = inst.agent.language().actions();
        std::sort(perm.begin(), perm.end());
        std::set<std::string> firsts;
        do {
            for (const auto& a : perm) {
                bool beaten = std::any_of(perm.begin(), perm.end(),
                                          [&](const std::string& b) { return b != a && strictly_prefers(m, pi, b, a); });
                if (!beaten) {
                    firsts.insert(a);
                    break;
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        const auto sol = solutions(inst.agent, inst.situation).actions;
        CHECK(std::set<std::string>(sol.begin(), sol.end()) == firsts);
    }
}

TEST_CASE("solutions equal the permutation oracle on acyclic random agents") {
    std::size_t compared = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        oracle::RandomVdaSpec spec{seed};
        spec.max_actions = 4;
        const auto inst = oracle::random_vda(spec);
        if (strict_cycle(inst)) continue;
        ++compared;
        const auto sol = solutions(inst.agent, inst.situation).actions;
        CHECK(std::set<std::string>(sol.begin(), sol.end()) == oracle::brute_force_solutions(inst.agent, inst.situation));
        CHECK_FALSE(sol.empty());
    }
    CHECK(compared > 300);
}

TEST_CASE("language and situation invariants") {
    CHECK_THROWS_AS(VdaLanguage({"p"}, {"x"}, {"x"}), SchemaError);
    CHECK_THROWS_AS(VdaLanguage({"p", "p"}, {"a"}, {"d"}), SchemaError);
    VdaLanguage lang({"p", "q"}, {"a"}, {"d"});
    const Situation s("S", lang, {"p"});
    CHECK(s.literals() == std::vector<Literal>{{"p", true}, {"q", false}});
    CHECK_THROWS_AS(Situation("S", lang, {"r"}), SchemaError);
    CHECK_THROWS_AS(Situation::from_literals("S", lang, {{"p", true}, {"p", false}, {"q", true}}), SchemaError);
    CHECK_THROWS_AS(Situation::from_literals("S", lang, {{"p", true}}), SchemaError);
    CHECK(parse_literal("¬p") == Literal{"p", false});
    CHECK(parse_literal("-p") == Literal{"p", false});
    CHECK(parse_literal("p") == Literal{"p", true});
}

TEST_CASE("matrix and principle invariants") {
    VdaLanguage lang({"p"}, {"a", "b"}, {"d1", "d2"});
    CHECK_THROWS_AS(ActionMatrix("S", lang, {{"a", {0, 0}}}), SchemaError);
    CHECK_THROWS_AS(ActionMatrix("S", lang, {{"a", {0, 0}}, {"b", {0}}}), SchemaError);
    CHECK_THROWS_AS(ActionMatrix("S", lang, {{"a", {0, 3}}, {"b", {0, 0}}}), SchemaError);
    CHECK_NOTHROW(ActionMatrix("S", lang, {{"a", {0, 3}}, {"b", {0, 0}}}, DegreeRange{-3, 3}));
    CHECK_THROWS_AS(ActionMatrix("S", lang, {{"a", {0, 0}}, {"c", {0, 0}}}), SchemaError);
    CHECK_THROWS_AS(Principle({}, 2), SchemaError);
    CHECK_THROWS_AS(Principle({{"u", {0, 0}}, {"u", {1, 1}}}, 2), SchemaError);
    std::map<std::string, ActionMatrix> m;
    m.emplace("T", ActionMatrix("T", lang, {{"a", {0, 0}}, {"b", {0, 0}}}));
    CHECK_THROWS_AS(VdaAgent(lang, {Situation("S", lang, {})}, m, Principle({{"u", {0, 0}}}, 2)), SchemaError);
}

} // TEST_SUITE
