#include "vda/aba.hpp"

#include "vda/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace vda::aba {

ValidatedFramework validate_framework(AbaFramework framework) {
    ValidatedFramework v;
    const auto n = framework.language.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = framework.language[i];
        if (s.empty()) throw SchemaError("empty sentence in language");
        if (!v.index_.emplace(s, SentenceId{static_cast<std::uint32_t>(i)}).second) {
            throw SchemaError("duplicate sentence '" + s + "' in language");
        }
    }
    auto lookup = [&](const std::string& s, const std::string& where) {
        auto it = v.index_.find(s);
        if (it == v.index_.end()) throw SchemaError("dangling sentence '" + s + "' in " + where);
        return it->second;
    };

    if (framework.assumptions.empty()) throw SchemaError("framework has no assumptions");
    v.is_assumption_.assign(n, 0);
    v.contrary_.assign(n, std::nullopt);
    v.contrary_of_.assign(n, {});
    for (const auto& a : framework.assumptions) {
        auto id = lookup(a, "assumptions");
        if (v.is_assumption_[id.value]) throw SchemaError("duplicate assumption '" + a + "'");
        v.is_assumption_[id.value] = 1;
        v.assumptions_.push_back(id);
    }
    for (const auto& [a, c] : framework.contrary) {
        auto id = lookup(a, "contrary map");
        if (!v.is_assumption_[id.value]) throw SchemaError("contrary given for non-assumption '" + a + "'");
        v.contrary_[id.value] = lookup(c, "contrary of '" + a + "'");
    }
    for (auto a : v.assumptions_) {
        if (!v.contrary_[a.value]) throw TotalityError("assumption '" + framework.language[a.value] + "' has no contrary");
        v.contrary_of_[v.contrary_[a.value]->value].push_back(a);
    }

    v.rules_by_head_.assign(n, {});
    std::set<std::string_view> labels;
    for (std::size_t r = 0; r < framework.rules.size(); ++r) {
        const auto& rule = framework.rules[r];
        const std::string where = "rule '" + rule.label + "'";
        if (!rule.label.empty() && !labels.insert(rule.label).second) {
            throw SchemaError("duplicate rule label '" + rule.label + "'");
        }
        ValidatedFramework::CompiledRule compiled{lookup(rule.head, where), {}};
        if (v.is_assumption_[compiled.head.value]) {
            throw FlatnessError("assumption '" + rule.head + "' is the head of " + where);
        }
        for (const auto& b : rule.body) compiled.body.push_back(lookup(b, where));
        v.rules_by_head_[compiled.head.value].push_back(r);
        v.rules_.push_back(std::move(compiled));
    }
    for (const auto& [s, d] : framework.display) lookup(s, "display map");

    v.display_.reserve(n);
    for (const auto& s : framework.language) {
        auto it = framework.display.find(s);
        v.display_.push_back(it == framework.display.end() ? s : it->second);
    }
    v.source_ = std::move(framework);
    return v;
}

std::optional<SentenceId> ValidatedFramework::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SentenceId ValidatedFramework::require(std::string_view name) const {
    auto id = find(name);
    if (!id) throw LookupError("unknown sentence '" + std::string(name) + "'");
    return *id;
}

SentenceId ValidatedFramework::contrary(SentenceId assumption) const {
    const auto& c = contrary_[assumption.value];
    if (!c) throw ArgumentError("'" + name(assumption) + "' is not an assumption");
    return *c;
}

std::vector<SentenceId> Argument::premises(const ValidatedFramework& framework) const {
    std::set<SentenceId> out(support.begin(), support.end());
    for (std::size_t i = 1; i < tree.size(); ++i) {
        const auto& node = tree[i];
        if (node.sentence && node.rule && framework.rule(*node.rule).body.empty()) out.insert(*node.sentence);
    }
    return {out.begin(), out.end()};
}

std::size_t Argument::depth() const {
    std::size_t best = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [node, d] = stack.back();
        stack.pop_back();
        best = std::max(best, d);
        for (auto c : tree[node].children) stack.emplace_back(c, d + 1);
    }
    return best;
}

namespace {

struct Partial {
    std::vector<DeductionNode> nodes; // nodes[0] is the root
    std::set<SentenceId> support;
    std::set<std::size_t> rules;
};

class Deriver {
public:
    Deriver(const ValidatedFramework& framework, const DerivationOptions& options)
        : framework_(framework), options_(options), on_path_(framework.sentence_count(), 0) {}

    std::vector<Partial> expand_sentence(SentenceId s, std::size_t depth) {
        if (framework_.is_assumption(s)) {
            Partial leaf;
            leaf.nodes.push_back(DeductionNode{s, std::nullopt, {}});
            leaf.support.insert(s);
            return {std::move(leaf)};
        }
        std::vector<Partial> out;
        for (auto r : framework_.rules_for(s)) {
            auto more = expand_rule(r, depth);
            for (auto& p : more) out.push_back(std::move(p));
            check_budget(out.size());
        }
        return out;
    }

    std::vector<Partial> expand_rule(std::size_t r, std::size_t depth) {
        if (depth >= options_.max_depth) throw ResourceError("max_depth", options_.max_depth);
        const auto& rule = framework_.rule(r);
        if (rule.body.empty()) {
            Partial fact;
            fact.nodes.push_back(DeductionNode{rule.head, r, {1}});
            fact.nodes.push_back(DeductionNode{std::nullopt, std::nullopt, {}});
            fact.rules.insert(r);
            return {std::move(fact)};
        }

        on_path_[rule.head.value] = 1;
        std::vector<std::vector<Partial>> alternatives;
        bool dead = false;
        for (auto b : rule.body) {
            if (on_path_[b.value]) {
                dead = true;
                break;
            }
            alternatives.push_back(expand_sentence(b, depth + 1));
            if (alternatives.back().empty()) {
                dead = true;
                break;
            }
        }
        on_path_[rule.head.value] = 0;
        if (dead) return {};

        std::vector<Partial> out;
        std::vector<std::size_t> choice(alternatives.size(), 0);
        while (true) {
            Partial p;
            p.nodes.push_back(DeductionNode{rule.head, r, {}});
            p.rules.insert(r);
            for (std::size_t i = 0; i < alternatives.size(); ++i) {
                const auto& sub = alternatives[i][choice[i]];
                const std::size_t offset = p.nodes.size();
                p.nodes[0].children.push_back(offset);
                for (auto node : sub.nodes) {
                    for (auto& c : node.children) c += offset;
                    p.nodes.push_back(std::move(node));
                }
                p.support.insert(sub.support.begin(), sub.support.end());
                p.rules.insert(sub.rules.begin(), sub.rules.end());
            }
            out.push_back(std::move(p));
            check_budget(out.size());

            std::size_t k = 0;
            while (k < choice.size() && ++choice[k] == alternatives[k].size()) choice[k++] = 0;
            if (k == choice.size()) break;
        }
        return out;
    }

    void check_budget(std::size_t count) const {
        if (count > options_.max_arguments) throw ResourceError("max_arguments", options_.max_arguments);
    }

private:
    const ValidatedFramework& framework_;
    const DerivationOptions& options_;
    std::vector<char> on_path_;
};

} // namespace

std::vector<Argument> derive_arguments(const ValidatedFramework& framework, const DerivationOptions& options) {
    std::vector<Argument> out;
    std::set<std::tuple<std::vector<SentenceId>, SentenceId, std::vector<std::size_t>>> seen;
    auto emit = [&](Partial p) {
        Argument arg;
        arg.support.assign(p.support.begin(), p.support.end());
        arg.conclusion = *p.nodes[0].sentence;
        arg.rules_used.assign(p.rules.begin(), p.rules.end());
        if (options.omit_inert_arguments && arg.support.empty() && framework.contrary_of(arg.conclusion).empty()) {
            return;
        }
        if (!seen.emplace(arg.support, arg.conclusion, arg.rules_used).second) return;
        arg.tree = std::move(p.nodes);
        arg.id = out.size();
        out.push_back(std::move(arg));
        if (out.size() > options.max_arguments) throw ResourceError("max_arguments", options.max_arguments);
    };

    Deriver deriver(framework, options);
    if (options.include_assumption_arguments) {
        for (auto a : framework.assumptions()) {
            for (auto& p : deriver.expand_sentence(a, 0)) emit(std::move(p));
        }
    }
    for (std::size_t r = 0; r < framework.rule_count(); ++r) {
        for (auto& p : deriver.expand_rule(r, 0)) emit(std::move(p));
    }
    return out;
}

std::vector<Attack> compute_attacks(const std::vector<Argument>& arguments, const ValidatedFramework& framework) {
    std::vector<Attack> out;
    for (const auto& x : arguments) {
        const auto& targets = framework.contrary_of(x.conclusion);
        if (targets.empty()) continue;
        for (const auto& y : arguments) {
            bool hit = std::any_of(y.support.begin(), y.support.end(), [&](SentenceId a) {
                return std::find(targets.begin(), targets.end(), a) != targets.end();
            });
            if (hit) out.push_back(Attack{x.id, y.id});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Aaf to_aaf(std::vector<Argument> arguments, std::vector<Attack> attacks) {
    for (std::size_t i = 0; i < arguments.size(); ++i) {
        if (arguments[i].id != i) throw SchemaError("argument ids must be positions 0..n-1");
    }
    const auto n = arguments.size();
    return Aaf{std::move(arguments), AttackGraph(n, std::move(attacks))};
}

std::string format_argument(const Argument& argument, const ValidatedFramework& framework, PremiseStyle style) {
    const auto premises = style == PremiseStyle::Premises ? argument.premises(framework) : argument.support;
    std::string out = "{";
    for (std::size_t i = 0; i < premises.size(); ++i) {
        if (i) out += ", ";
        out += framework.display(premises[i]);
    }
    out += "} ⊢ ";
    out += framework.display(argument.conclusion);
    return out;
}

std::string format_rule(std::size_t rule, const ValidatedFramework& framework) {
    const auto& r = framework.rule(rule);
    std::string out = framework.display(r.head) + " ←";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
        out += i ? ", " : " ";
        out += framework.display(r.body[i]);
    }
    return out;
}

} // namespace vda::aba
