#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vda {

/// Inclusive range of admissible duty satisfaction/violation degrees.
struct DegreeRange {
    int low = -2;
    int high = 2;

    bool contains(int degree) const noexcept { return degree >= low && degree <= high; }
    bool operator==(const DegreeRange&) const = default;
};

/// Perception atoms, actions and duties of an agent. Duty order is shared by
/// every duty vector and every disjunct.
class VdaLanguage {
public:
    VdaLanguage() = default;
    VdaLanguage(std::vector<std::string> atoms, std::vector<std::string> actions,
                std::vector<std::string> duties);

    const std::vector<std::string>& atoms() const noexcept { return atoms_; }
    const std::vector<std::string>& actions() const noexcept { return actions_; }
    const std::vector<std::string>& duties() const noexcept { return duties_; }

    std::optional<std::size_t> atom_index(std::string_view atom) const;
    std::optional<std::size_t> action_index(std::string_view action) const;
    std::optional<std::size_t> duty_index(std::string_view duty) const;

    bool has_atom(std::string_view atom) const { return atom_index(atom).has_value(); }
    bool has_action(std::string_view action) const { return action_index(action).has_value(); }

    /// Position of an action; throws LookupError for unknown names.
    std::size_t require_action(std::string_view action) const;

    bool operator==(const VdaLanguage&) const = default;

private:
    std::vector<std::string> atoms_;
    std::vector<std::string> actions_;
    std::vector<std::string> duties_;
};

struct Literal {
    std::string atom;
    bool positive = true;

    Literal negated() const { return Literal{atom, !positive}; }

    /// File form: "p" or "-p".
    std::string to_string() const { return positive ? atom : "-" + atom; }
    /// Display form: "p" or "¬p".
    std::string display() const { return positive ? atom : "¬" + atom; }

    auto operator<=>(const Literal&) const = default;
};

/// Accepts "p", "-p", "~p" and "¬p".
Literal parse_literal(std::string_view text);

/// A total valuation over the language atoms: one literal per atom, in atom order.
class Situation {
public:
    Situation() = default;
    /// Builds P ∪ {¬p | p ∉ P}. Every perception must be a language atom.
    Situation(std::string id, const VdaLanguage& language, const std::set<std::string>& perceptions);

    /// Validates that the literals form a total valuation.
    static Situation from_literals(std::string id, const VdaLanguage& language,
                                   const std::vector<Literal>& literals);

    const std::string& id() const noexcept { return id_; }
    const std::vector<Literal>& literals() const noexcept { return literals_; }
    std::set<std::string> perceptions() const;
    bool holds(std::string_view atom) const;

    bool same_valuation(const Situation& other) const { return literals_ == other.literals_; }
    bool operator==(const Situation&) const = default;

private:
    std::string id_;
    std::vector<Literal> literals_;
};

/// Ethical consequences of one action: one degree per duty, in duty order.
struct DutyVector {
    std::string action;
    std::vector<int> values;

    bool operator==(const DutyVector&) const = default;
};

class ActionMatrix {
public:
    ActionMatrix() = default;
    /// Requires exactly one row per language action (any order); rows are
    /// stored in action order. Degrees are checked against `range`.
    ActionMatrix(std::string situation, const VdaLanguage& language, std::vector<DutyVector> rows,
                 DegreeRange range = {});

    const std::string& situation() const noexcept { return situation_; }
    const std::vector<DutyVector>& rows() const noexcept { return rows_; }
    /// Throws LookupError for unknown actions.
    const DutyVector& at(std::string_view action) const;

    bool operator==(const ActionMatrix&) const = default;

private:
    std::string situation_;
    std::vector<DutyVector> rows_;
};

/// Lower bounds on duty differentials; one clause of a principle.
struct Disjunct {
    std::string id;
    std::vector<int> bounds;

    bool operator==(const Disjunct&) const = default;
};

class Principle {
public:
    Principle() = default;
    Principle(std::vector<Disjunct> disjuncts, std::size_t duty_count);

    const std::vector<Disjunct>& disjuncts() const noexcept { return disjuncts_; }
    std::size_t size() const noexcept { return disjuncts_.size(); }
    const Disjunct& operator[](std::size_t i) const { return disjuncts_[i]; }
    std::optional<std::size_t> index_of(std::string_view id) const;

    bool operator==(const Principle&) const = default;

private:
    std::vector<Disjunct> disjuncts_;
};

class VdaAgent {
public:
    VdaAgent() = default;
    VdaAgent(VdaLanguage language, std::vector<Situation> situations,
             std::map<std::string, ActionMatrix> matrices, Principle principle, DegreeRange range = {});

    const VdaLanguage& language() const noexcept { return language_; }
    const std::vector<Situation>& situations() const noexcept { return situations_; }
    const std::map<std::string, ActionMatrix>& matrices() const noexcept { return matrices_; }
    const Principle& principle() const noexcept { return principle_; }
    const DegreeRange& degree_range() const noexcept { return range_; }

    const Situation& situation(std::string_view id) const;
    const ActionMatrix& matrix(std::string_view situation_id) const;
    /// First declared situation with the same valuation, if any.
    std::optional<std::string> find_situation(const Situation& valuation) const;

    bool operator==(const VdaAgent&) const = default;

private:
    VdaLanguage language_;
    std::vector<Situation> situations_;
    std::map<std::string, ActionMatrix> matrices_;
    Principle principle_;
    DegreeRange range_;
};

struct DutyDifferential {
    std::vector<int> values;

    bool operator==(const DutyDifferential&) const = default;
};

/// Componentwise a − b.
DutyDifferential duty_differential(const DutyVector& a, const DutyVector& b);

/// True iff every component of `w` is at least the corresponding bound of `u`.
bool meets_lower_bounds(const DutyDifferential& w, const Disjunct& u);

/// Indices (into `principle`) of every disjunct u with v(alpha) ≥_u v(beta).
std::vector<std::size_t> prefers(const ActionMatrix& matrix, const Principle& principle,
                                 std::string_view alpha, std::string_view beta);

/// Ids of the disjuncts at `indices`.
std::vector<std::string> disjunct_ids(const Principle& principle, const std::vector<std::size_t>& indices);

/// Some disjunct prefers alpha to beta and none prefers beta to alpha.
bool strictly_prefers(const ActionMatrix& matrix, const Principle& principle, std::string_view alpha,
                      std::string_view beta);

struct SolutionSet {
    std::vector<std::string> actions; // in language action order
    std::string diagnostic;           // set when the set is empty

    bool empty() const noexcept { return actions.empty(); }
    bool contains(std::string_view action) const;
};

/// Actions not strictly dominated by any other action.
SolutionSet solutions(const VdaAgent& agent, std::string_view situation_id);

enum class TieBreak { NameOrder, DeclarationOrder };

struct OrderingStep {
    std::string action;
    std::vector<std::size_t> disjuncts_to_next; // disjuncts with v(action) ≥_u v(next)
};

struct EthicalOrdering {
    std::vector<OrderingStep> steps;
    /// Set when a strict-preference cycle blocked the greedy selection; the
    /// remainder then follows the tie-break order.
    bool cyclic = false;
};

EthicalOrdering ethical_ordering(const VdaAgent& agent, std::string_view situation_id,
                                 TieBreak tie_break = TieBreak::NameOrder);

} // namespace vda
