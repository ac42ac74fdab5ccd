#include "vda/error.hpp"
#include "vda/oracle.hpp"
#include "vda/semantics.hpp"

#include <doctest.h>

#include <algorithm>

using namespace vda;

namespace {

std::vector<std::vector<std::size_t>> members(const std::vector<Extension>& exts) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& e : exts) out.push_back(e.members);
    std::sort(out.begin(), out.end());
    return out;
}

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST_SUITE("semantics") {

TEST_CASE("edgeless graph") {
    const AttackGraph g(4, {});
    CHECK(grounded(g).members == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(complete(g).size() == 1);
    CHECK(stable(g).size() == 1);
    const auto r = acceptance_status(g, Semantics::Preferred);
    for (const auto& s : r.statuses) CHECK(s.verdict() == Verdict::SkepticallyJustified);
}

TEST_CASE("empty graph has the empty extension") {
    const AttackGraph g(0, {});
    CHECK(grounded(g).members.empty());
    CHECK(stable(g).size() == 1);
}

TEST_CASE("self-attack") {
    const AttackGraph g(2, {{0, 0}, {0, 1}});
    CHECK(grounded(g).members.empty());
    CHECK(stable(g).empty());
    const auto r = acceptance_status(g, Semantics::Stable);
    CHECK(r.vacuous);
    CHECK_FALSE(r.diagnostic.empty());
    CHECK(r.statuses[0].verdict() == Verdict::Undecided);
    const auto p = acceptance_status(g, Semantics::Preferred);
    CHECK(p.statuses[1].verdict() == Verdict::Undecided);
}

TEST_CASE("reinstatement chain") {
    // 0 → 1 → 2
    const AttackGraph g(3, {{0, 1}, {1, 2}});
    CHECK(grounded(g).members == std::vector<std::size_t>{0, 2});
    const auto r = acceptance_status(g, Semantics::Grounded);
    CHECK(r.statuses[0].verdict() == Verdict::SkepticallyJustified);
    CHECK(r.statuses[1].verdict() == Verdict::SkepticallyRejected);
    CHECK(r.statuses[2].verdict() == Verdict::SkepticallyJustified);
}

TEST_CASE("mutual attack verdicts") {
    // 0 ⇄ 1, 1 → 2
    const AttackGraph g(3, {{0, 1}, {1, 0}, {1, 2}});
    const auto r = acceptance_status(g, Semantics::Preferred);
    REQUIRE(r.extensions.size() == 2);
    CHECK(r.statuses[0].verdict() == Verdict::CredulouslyJustified);
    CHECK(r.statuses[2].verdict() == Verdict::CredulouslyJustified);
    const auto gr = acceptance_status(g, Semantics::Grounded);
    CHECK(gr.statuses[2].verdict() == Verdict::Undecided);
}

TEST_CASE("odd cycle has no stable extension") {
    const AttackGraph g(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(stable(g).empty());
    CHECK(members(preferred(g)) == std::vector<std::vector<std::size_t>>{{}});
}

TEST_CASE("parse semantics") {
    CHECK(parse_semantics("preferred") == Semantics::Preferred);
    CHECK_FALSE(parse_semantics("ideal").has_value());
    CHECK(to_string(Semantics::Stable) == "stable");
}

TEST_CASE("enumeration cap") {
    std::vector<Attack> attacks;
    for (std::size_t i = 0; i < 20; i += 2) {
        attacks.push_back({i, i + 1});
        attacks.push_back({i + 1, i});
    }
    const AttackGraph g(20, attacks);
    EnumerationLimits lim;
    lim.max_extensions = 100;
    CHECK_THROWS_AS(complete(g, lim), ResourceError);
    CHECK(preferred(g).size() == 1024);
}

TEST_CASE("random graphs agree with subset enumeration") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto g = oracle::random_aaf({seed});
        for (auto sem : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred, Semantics::Stable}) {
            CAPTURE(seed);
            CAPTURE(to_string(sem));
            CHECK(members(extensions(g, sem)) == oracle::brute_force_extensions(g, sem));
        }
    }
}

TEST_CASE("lattice properties on random graphs") {
    for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
        const auto g = oracle::random_aaf({seed});
        const auto gr = grounded(g).members;
        const auto comp = complete(g);
        const auto pref = preferred(g);
        const auto st = stable(g);
        CAPTURE(seed);
        REQUIRE_FALSE(comp.empty());
        CHECK(admissible(g, gr));
        for (const auto& c : comp) {
            CHECK(subset(gr, c.members));
            CHECK(admissible(g, c.members));
            for (std::size_t a = 0; a < g.size(); ++a)
                if (defends(g, c.members, a)) CHECK(c.contains(a));
        }
        for (const auto& s : st) CHECK(std::find(pref.begin(), pref.end(), Extension{Semantics::Preferred, s.members}) != pref.end());
        for (const auto& p : pref)
            for (const auto& q : pref)
                if (!(p == q)) CHECK_FALSE(subset(p.members, q.members));
        CHECK(std::find(comp.begin(), comp.end(), Extension{Semantics::Complete, gr}) != comp.end());
    }
}

TEST_CASE("status flags agree with extension membership") {
    for (std::uint64_t seed = 2000; seed < 2100; ++seed) {
        const auto g = oracle::random_aaf({seed});
        const auto r = acceptance_status(g, Semantics::Preferred);
        for (std::size_t a = 0; a < g.size(); ++a) {
            const bool every = std::all_of(r.extensions.begin(), r.extensions.end(), [&](const Extension& e) { return e.contains(a); });
            const bool some = std::any_of(r.extensions.begin(), r.extensions.end(), [&](const Extension& e) { return e.contains(a); });
            CHECK(r.statuses[a].in_every == every);
            CHECK(r.statuses[a].in_some == some);
            if (r.statuses[a].in_every) CHECK(r.statuses[a].verdict() == Verdict::SkepticallyJustified);
        }
    }
}

} // TEST_SUITE
