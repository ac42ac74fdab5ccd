#include "vda/attack_graph.hpp"

#include "vda/error.hpp"

#include <algorithm>
#include <string>

namespace vda {

AttackGraph::AttackGraph(std::size_t size, std::vector<Attack> attacks)
    : attacks_(std::move(attacks)), attackers_(size), targets_(size) {
    std::sort(attacks_.begin(), attacks_.end());
    attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());
    for (const auto& a : attacks_) {
        if (a.attacker >= size || a.target >= size) {
            throw SchemaError("attack " + std::to_string(a.attacker) + " -> " + std::to_string(a.target) +
                              " references a missing argument");
        }
        attackers_[a.target].push_back(a.attacker);
        targets_[a.attacker].push_back(a.target);
    }
}

bool AttackGraph::attacks(std::size_t attacker, std::size_t target) const {
    const auto& t = targets_[attacker];
    return std::binary_search(t.begin(), t.end(), target);
}

} // namespace vda
