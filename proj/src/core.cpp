#include "vda/core.hpp"

#include "vda/error.hpp"

#include <algorithm>

namespace vda {

namespace {

std::optional<std::size_t> position(const std::vector<std::string>& names, std::string_view name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

void require_unique(const std::vector<std::string>& names, const char* what) {
    std::set<std::string_view> seen;
    for (const auto& n : names) {
        if (n.empty()) throw SchemaError(std::string("empty name among ") + what);
        if (!seen.insert(n).second) throw SchemaError(std::string("duplicate ") + what + " '" + n + "'");
    }
}

} // namespace

VdaLanguage::VdaLanguage(std::vector<std::string> atoms, std::vector<std::string> actions,
                         std::vector<std::string> duties)
    : atoms_(std::move(atoms)), actions_(std::move(actions)), duties_(std::move(duties)) {
    require_unique(atoms_, "atom");
    require_unique(actions_, "action");
    require_unique(duties_, "duty");
    for (const auto& a : actions_) {
        if (position(duties_, a)) throw SchemaError("'" + a + "' is both an action and a duty");
    }
}

std::optional<std::size_t> VdaLanguage::atom_index(std::string_view atom) const { return position(atoms_, atom); }
std::optional<std::size_t> VdaLanguage::action_index(std::string_view action) const {
    return position(actions_, action);
}
std::optional<std::size_t> VdaLanguage::duty_index(std::string_view duty) const { return position(duties_, duty); }

std::size_t VdaLanguage::require_action(std::string_view action) const {
    auto idx = action_index(action);
    if (!idx) throw LookupError("unknown action '" + std::string(action) + "'");
    return *idx;
}

Literal parse_literal(std::string_view text) {
    bool positive = true;
    if (text.starts_with("¬")) {
        positive = false;
        text.remove_prefix(std::string_view("¬").size());
    } else if (text.starts_with("-") || text.starts_with("~")) {
        positive = false;
        text.remove_prefix(1);
    }
    if (text.empty()) throw SchemaError("empty literal");
    return Literal{std::string(text), positive};
}

Situation::Situation(std::string id, const VdaLanguage& language, const std::set<std::string>& perceptions)
    : id_(std::move(id)) {
    for (const auto& p : perceptions) {
        if (!language.has_atom(p)) throw SchemaError("situation '" + id_ + "': unknown atom '" + p + "'");
    }
    literals_.reserve(language.atoms().size());
    for (const auto& atom : language.atoms()) literals_.push_back(Literal{atom, perceptions.contains(atom)});
}

Situation Situation::from_literals(std::string id, const VdaLanguage& language,
                                   const std::vector<Literal>& literals) {
    std::vector<int> seen(language.atoms().size(), 0);
    std::set<std::string> perceptions;
    for (const auto& l : literals) {
        auto idx = language.atom_index(l.atom);
        if (!idx) throw SchemaError("situation '" + id + "': unknown atom '" + l.atom + "'");
        if (seen[*idx]++) throw SchemaError("situation '" + id + "': atom '" + l.atom + "' valued twice");
        if (l.positive) perceptions.insert(l.atom);
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) throw SchemaError("situation '" + id + "': atom '" + language.atoms()[i] + "' has no value");
    }
    return Situation(std::move(id), language, perceptions);
}

std::set<std::string> Situation::perceptions() const {
    std::set<std::string> out;
    for (const auto& l : literals_)
        if (l.positive) out.insert(l.atom);
    return out;
}

bool Situation::holds(std::string_view atom) const {
    return std::any_of(literals_.begin(), literals_.end(),
                       [&](const Literal& l) { return l.positive && l.atom == atom; });
}

ActionMatrix::ActionMatrix(std::string situation, const VdaLanguage& language, std::vector<DutyVector> rows,
                           DegreeRange range)
    : situation_(std::move(situation)) {
    std::vector<const DutyVector*> ordered(language.actions().size(), nullptr);
    for (const auto& row : rows) {
        auto idx = language.action_index(row.action);
        if (!idx) throw SchemaError("matrix '" + situation_ + "': unknown action '" + row.action + "'");
        if (ordered[*idx]) throw SchemaError("matrix '" + situation_ + "': duplicate row for '" + row.action + "'");
        if (row.values.size() != language.duties().size()) {
            throw SchemaError("matrix '" + situation_ + "', row '" + row.action + "': expected " +
                              std::to_string(language.duties().size()) + " duty values, got " +
                              std::to_string(row.values.size()));
        }
        for (std::size_t d = 0; d < row.values.size(); ++d) {
            if (!range.contains(row.values[d])) {
                throw SchemaError("matrix '" + situation_ + "', row '" + row.action + "': degree " +
                                  std::to_string(row.values[d]) + " for duty '" + language.duties()[d] +
                                  "' outside [" + std::to_string(range.low) + ", " + std::to_string(range.high) +
                                  "]");
            }
        }
        ordered[*idx] = &row;
    }
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        if (!ordered[i]) throw SchemaError("matrix '" + situation_ + "': no row for action '" + language.actions()[i] + "'");
        rows_.push_back(*ordered[i]);
    }
}

const DutyVector& ActionMatrix::at(std::string_view action) const {
    for (const auto& row : rows_)
        if (row.action == action) return row;
    throw LookupError("matrix '" + situation_ + "': unknown action '" + std::string(action) + "'");
}

Principle::Principle(std::vector<Disjunct> disjuncts, std::size_t duty_count) : disjuncts_(std::move(disjuncts)) {
    if (disjuncts_.empty()) throw SchemaError("principle has no disjuncts");
    std::set<std::string_view> ids;
    for (const auto& u : disjuncts_) {
        if (u.id.empty()) throw SchemaError("disjunct with empty id");
        if (!ids.insert(u.id).second) throw SchemaError("duplicate disjunct id '" + u.id + "'");
        if (u.bounds.size() != duty_count) {
            throw SchemaError("disjunct '" + u.id + "': expected " + std::to_string(duty_count) + " bounds, got " +
                              std::to_string(u.bounds.size()));
        }
    }
}

std::optional<std::size_t> Principle::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < disjuncts_.size(); ++i)
        if (disjuncts_[i].id == id) return i;
    return std::nullopt;
}

VdaAgent::VdaAgent(VdaLanguage language, std::vector<Situation> situations,
                   std::map<std::string, ActionMatrix> matrices, Principle principle, DegreeRange range)
    : language_(std::move(language)), situations_(std::move(situations)), matrices_(std::move(matrices)),
      principle_(std::move(principle)), range_(range) {
    if (range_.low > range_.high) throw SchemaError("empty degree range");
    std::set<std::string_view> ids;
    for (const auto& s : situations_) {
        if (!ids.insert(s.id()).second) throw SchemaError("duplicate situation id '" + s.id() + "'");
        if (s.literals().size() != language_.atoms().size()) {
            throw SchemaError("situation '" + s.id() + "' does not value every atom");
        }
    }
    for (const auto& [sid, m] : matrices_) {
        if (!ids.contains(sid)) throw SchemaError("matrix for undeclared situation '" + sid + "'");
        if (m.situation() != sid) throw SchemaError("matrix keyed '" + sid + "' describes '" + m.situation() + "'");
        if (m.rows().size() != language_.actions().size()) {
            throw SchemaError("matrix '" + sid + "' does not cover every action");
        }
    }
    for (const auto& u : principle_.disjuncts()) {
        if (u.bounds.size() != language_.duties().size()) {
            throw SchemaError("disjunct '" + u.id + "' does not cover the duty list");
        }
    }
}

const Situation& VdaAgent::situation(std::string_view id) const {
    for (const auto& s : situations_)
        if (s.id() == id) return s;
    throw LookupError("unknown situation '" + std::string(id) + "'");
}

const ActionMatrix& VdaAgent::matrix(std::string_view situation_id) const {
    auto it = matrices_.find(std::string(situation_id));
    if (it == matrices_.end()) throw LookupError("no action matrix for situation '" + std::string(situation_id) + "'");
    return it->second;
}

std::optional<std::string> VdaAgent::find_situation(const Situation& valuation) const {
    for (const auto& s : situations_)
        if (s.same_valuation(valuation)) return s.id();
    return std::nullopt;
}

DutyDifferential duty_differential(const DutyVector& a, const DutyVector& b) {
    if (a.values.size() != b.values.size()) {
        throw SchemaError("duty vectors of '" + a.action + "' and '" + b.action + "' cover different duty lists");
    }
    DutyDifferential w;
    w.values.reserve(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) w.values.push_back(a.values[i] - b.values[i]);
    return w;
}

bool meets_lower_bounds(const DutyDifferential& w, const Disjunct& u) {
    if (w.values.size() != u.bounds.size()) {
        throw SchemaError("differential and disjunct '" + u.id + "' cover different duty lists");
    }
    for (std::size_t i = 0; i < w.values.size(); ++i)
        if (w.values[i] < u.bounds[i]) return false;
    return true;
}

std::vector<std::size_t> prefers(const ActionMatrix& matrix, const Principle& principle, std::string_view alpha,
                                 std::string_view beta) {
    const auto w = duty_differential(matrix.at(alpha), matrix.at(beta));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < principle.size(); ++i)
        if (meets_lower_bounds(w, principle[i])) out.push_back(i);
    return out;
}

std::vector<std::string> disjunct_ids(const Principle& principle, const std::vector<std::size_t>& indices) {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(principle[i].id);
    return out;
}

bool strictly_prefers(const ActionMatrix& matrix, const Principle& principle, std::string_view alpha,
                      std::string_view beta) {
    if (alpha == beta) throw ArgumentError("strict preference needs two distinct actions");
    return !prefers(matrix, principle, alpha, beta).empty() && prefers(matrix, principle, beta, alpha).empty();
}

bool SolutionSet::contains(std::string_view action) const {
    return std::find(actions.begin(), actions.end(), action) != actions.end();
}

SolutionSet solutions(const VdaAgent& agent, std::string_view situation_id) {
    const auto& matrix = agent.matrix(situation_id);
    const auto& actions = agent.language().actions();
    SolutionSet out;
    for (const auto& alpha : actions) {
        bool dominated = std::any_of(actions.begin(), actions.end(), [&](const std::string& beta) {
            return beta != alpha && strictly_prefers(matrix, agent.principle(), beta, alpha);
        });
        if (!dominated) out.actions.push_back(alpha);
    }
    if (out.actions.empty()) {
        out.diagnostic = "every action is strictly dominated: the strict preference relation of situation '" +
                         std::string(situation_id) + "' is cyclic";
    }
    return out;
}

EthicalOrdering ethical_ordering(const VdaAgent& agent, std::string_view situation_id, TieBreak tie_break) {
    const auto& matrix = agent.matrix(situation_id);
    const auto& principle = agent.principle();
    std::vector<std::string> remaining = agent.language().actions();
    if (tie_break == TieBreak::NameOrder) std::sort(remaining.begin(), remaining.end());

    EthicalOrdering ordering;
    while (!remaining.empty()) {
        auto pick = std::find_if(remaining.begin(), remaining.end(), [&](const std::string& alpha) {
            return std::none_of(remaining.begin(), remaining.end(), [&](const std::string& beta) {
                return beta != alpha && strictly_prefers(matrix, principle, beta, alpha);
            });
        });
        if (pick == remaining.end()) {
            ordering.cyclic = true;
            pick = remaining.begin();
        }
        ordering.steps.push_back(OrderingStep{*pick, {}});
        remaining.erase(pick);
    }
    for (std::size_t i = 0; i + 1 < ordering.steps.size(); ++i) {
        ordering.steps[i].disjuncts_to_next =
            prefers(matrix, principle, ordering.steps[i].action, ordering.steps[i + 1].action);
    }
    return ordering;
}

} // namespace vda
