#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace vda {

struct Attack {
    std::size_t attacker = 0;
    std::size_t target = 0;

    auto operator<=>(const Attack&) const = default;
};

/// Directed attack relation over arguments 0..size()-1. Edges are kept sorted
/// and unique; self-attacks are allowed.
class AttackGraph {
public:
    AttackGraph() = default;
    AttackGraph(std::size_t size, std::vector<Attack> attacks);

    std::size_t size() const noexcept { return attackers_.size(); }
    const std::vector<Attack>& attacks() const noexcept { return attacks_; }
    const std::vector<std::size_t>& attackers(std::size_t argument) const { return attackers_[argument]; }
    const std::vector<std::size_t>& targets(std::size_t argument) const { return targets_[argument]; }
    bool attacks(std::size_t attacker, std::size_t target) const;

    bool operator==(const AttackGraph& other) const { return attacks_ == other.attacks_ && size() == other.size(); }

private:
    std::vector<Attack> attacks_;
    std::vector<std::vector<std::size_t>> attackers_;
    std::vector<std::vector<std::size_t>> targets_;
};

} // namespace vda
