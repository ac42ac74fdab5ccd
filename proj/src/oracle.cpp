#include "vda/oracle.hpp"

#include "vda/error.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace vda::oracle {

namespace {

bool weakly(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& bounds) {
    for (std::size_t d = 0; d < bounds.size(); ++d)
        if (a[d] - b[d] < bounds[d]) return false;
    return true;
}

} // namespace

std::set<std::string> brute_force_solutions(const VdaAgent& agent, const std::string& situation_id) {
    const auto& actions = agent.language().actions();
    if (actions.size() > 7) throw ResourceError("brute_force_actions", 7);
    std::map<std::string, std::vector<int>> row;
    for (const auto& v : agent.matrix(situation_id).rows()) row[v.action] = v.values;

    auto some = [&](const std::string& a, const std::string& b) {
        for (const auto& u : agent.principle().disjuncts())
            if (weakly(row[a], row[b], u.bounds)) return true;
        return false;
    };
    auto beats = [&](const std::string& a, const std::string& b) { return some(a, b) && !some(b, a); };

    std::vector<std::string> order = actions;
    std::sort(order.begin(), order.end());
    std::set<std::string> firsts;
    do {
        bool valid = true;
        for (std::size_t i = 0; i < order.size() && valid; ++i)
            for (std::size_t j = i + 1; j < order.size() && valid; ++j)
                if (beats(order[j], order[i])) valid = false;
        if (valid) firsts.insert(order.front());
    } while (std::next_permutation(order.begin(), order.end()));
    return firsts;
}

std::vector<std::vector<std::size_t>> brute_force_extensions(const AttackGraph& graph, Semantics semantics) {
    const std::size_t n = graph.size();
    if (n > 16) throw ResourceError("brute_force_arguments", 16);
    std::vector<std::vector<char>> att(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : graph.attacks()) att[a][b] = 1;

    using Set = std::uint32_t;
    auto in = [](Set s, std::size_t x) { return (s >> x) & 1u; };
    auto conflict_free = [&](Set s) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (in(s, a) && in(s, b) && att[a][b]) return false;
        return true;
    };
    auto defends = [&](Set s, std::size_t x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (!att[y][x]) continue;
            bool countered = false;
            for (std::size_t z = 0; z < n; ++z)
                if (in(s, z) && att[z][y]) countered = true;
            if (!countered) return false;
        }
        return true;
    };
    auto admissible = [&](Set s) {
        if (!conflict_free(s)) return false;
        for (std::size_t x = 0; x < n; ++x)
            if (in(s, x) && !defends(s, x)) return false;
        return true;
    };
    auto complete = [&](Set s) {
        if (!admissible(s)) return false;
        for (std::size_t x = 0; x < n; ++x)
            if (!in(s, x) && defends(s, x)) return false;
        return true;
    };
    auto stable = [&](Set s) {
        if (!conflict_free(s)) return false;
        for (std::size_t x = 0; x < n; ++x) {
            if (in(s, x)) continue;
            bool hit = false;
            for (std::size_t y = 0; y < n; ++y)
                if (in(s, y) && att[y][x]) hit = true;
            if (!hit) return false;
        }
        return true;
    };
    auto subset = [](Set a, Set b) { return (a & b) == a; };

    const Set all = n == 0 ? 0 : static_cast<Set>((1ull << n) - 1);
    std::vector<Set> found;
    std::vector<Set> admissibles;
    for (Set s = 0;; ++s) {
        switch (semantics) {
        case Semantics::Complete:
        case Semantics::Grounded:
            if (complete(s)) found.push_back(s);
            break;
        case Semantics::Preferred:
            if (admissible(s)) admissibles.push_back(s);
            break;
        case Semantics::Stable:
            if (stable(s)) found.push_back(s);
            break;
        }
        if (s == all) break;
    }
    if (semantics == Semantics::Grounded) {
        // The least complete extension: the one contained in all others.
        std::vector<Set> least;
        for (auto s : found)
            if (std::all_of(found.begin(), found.end(), [&](Set t) { return subset(s, t); })) least.push_back(s);
        found = least;
    }
    if (semantics == Semantics::Preferred) {
        for (auto s : admissibles) {
            bool maximal = std::none_of(admissibles.begin(), admissibles.end(),
                                        [&](Set t) { return t != s && subset(s, t); });
            if (maximal) found.push_back(s);
        }
    }

    std::vector<std::vector<std::size_t>> out;
    for (auto s : found) {
        std::vector<std::size_t> members;
        for (std::size_t x = 0; x < n; ++x)
            if (in(s, x)) members.push_back(x);
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

RandomInstance random_vda(const RandomVdaSpec& spec) {
    if (spec.max_actions < 1 || spec.max_actions > 6) throw ArgumentError("max_actions must be in 1..6");
    if (spec.max_duties < 1 || spec.max_duties > 5) throw ArgumentError("max_duties must be in 1..5");
    if (spec.max_disjuncts < 1 || spec.max_disjuncts > 5) throw ArgumentError("max_disjuncts must be in 1..5");
    if (spec.range.low > spec.range.high || spec.bound_low > spec.bound_high) throw ArgumentError("empty range");

    std::mt19937_64 rng(spec.seed);
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    const auto n_actions = static_cast<std::size_t>(pick(1, static_cast<long>(spec.max_actions)));
    const auto n_duties = static_cast<std::size_t>(pick(1, static_cast<long>(spec.max_duties)));
    const auto n_disjuncts = static_cast<std::size_t>(pick(1, static_cast<long>(spec.max_disjuncts)));

    std::vector<std::string> actions, duties;
    for (std::size_t i = 0; i < n_actions; ++i) actions.push_back("a" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n_duties; ++i) duties.push_back("d" + std::to_string(i + 1));
    VdaLanguage language({"p"}, actions, duties);

    std::vector<DutyVector> rows;
    for (const auto& a : actions) {
        DutyVector v{a, {}};
        for (std::size_t d = 0; d < n_duties; ++d) v.values.push_back(static_cast<int>(pick(spec.range.low, spec.range.high)));
        rows.push_back(std::move(v));
    }
    std::vector<Disjunct> disjuncts;
    for (std::size_t k = 0; k < n_disjuncts; ++k) {
        Disjunct u{"u" + std::to_string(k + 1), {}};
        for (std::size_t d = 0; d < n_duties; ++d) u.bounds.push_back(static_cast<int>(pick(spec.bound_low, spec.bound_high)));
        disjuncts.push_back(std::move(u));
    }

    Situation s("S", language, {"p"});
    std::map<std::string, ActionMatrix> matrices;
    matrices.emplace("S", ActionMatrix("S", language, std::move(rows), spec.range));
    Principle principle(std::move(disjuncts), n_duties);
    return RandomInstance{VdaAgent(language, {s}, std::move(matrices), std::move(principle), spec.range), "S",
                          spec.policy};
}

AttackGraph random_aaf(const RandomAafSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    const auto n = std::uniform_int_distribution<std::size_t>(1, spec.max_arguments)(rng);
    const double density = std::uniform_real_distribution<double>(0.0, spec.max_density)(rng);
    std::bernoulli_distribution edge(density);
    std::vector<Attack> attacks;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if ((a != b || spec.self_loops) && edge(rng)) attacks.push_back(Attack{a, b});
    return AttackGraph(n, std::move(attacks));
}

} // namespace vda::oracle
