#pragma once

// Naive reference implementations for tests. Nothing here calls the
// production preference, derivation or semantics code.

#include "vda/attack_graph.hpp"
#include "vda/core.hpp"
#include "vda/practical.hpp"
#include "vda/semantics.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace vda::oracle {

/// First elements of every permutation in which no later action strictly
/// beats an earlier one. At most 7 actions.
std::set<std::string> brute_force_solutions(const VdaAgent& agent, const std::string& situation_id);

/// Every subset checked against the textbook definitions. At most 16 arguments.
std::vector<std::vector<std::size_t>> brute_force_extensions(const AttackGraph& graph, Semantics semantics);

struct RandomVdaSpec {
    std::uint64_t seed = 0;
    std::size_t max_actions = 5;   // ≤ 6
    std::size_t max_duties = 4;    // ≤ 5
    DegreeRange range{-2, 2};
    std::size_t max_disjuncts = 4; // ≤ 5
    int bound_low = -4;
    int bound_high = 4;
    AssumptionPolicy policy = AssumptionPolicy::SatisfiesSomeDuty;
};

struct RandomInstance {
    VdaAgent agent;
    std::string situation;
    AssumptionPolicy policy = AssumptionPolicy::SatisfiesSomeDuty;
};

/// Same spec, same agent. Counts are drawn uniformly from 1..max.
RandomInstance random_vda(const RandomVdaSpec& spec);

struct RandomAafSpec {
    std::uint64_t seed = 0;
    std::size_t max_arguments = 12;
    double max_density = 0.4;
    bool self_loops = true;
};

AttackGraph random_aaf(const RandomAafSpec& spec);

} // namespace vda::oracle
