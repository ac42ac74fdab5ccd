#include "vda/semantics.hpp"

#include "vda/error.hpp"

#include <algorithm>
#include <cstdint>

namespace vda {

std::string_view to_string(Semantics semantics) {
    switch (semantics) {
    case Semantics::Grounded: return "grounded";
    case Semantics::Complete: return "complete";
    case Semantics::Preferred: return "preferred";
    case Semantics::Stable: return "stable";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
    for (auto s : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred, Semantics::Stable})
        if (to_string(s) == text) return s;
    return std::nullopt;
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::SkepticallyJustified: return "skeptically-justified";
    case Verdict::CredulouslyJustified: return "credulously-justified";
    case Verdict::SkepticallyRejected: return "skeptically-rejected";
    case Verdict::CredulouslyRejected: return "credulously-rejected";
    case Verdict::Undecided: return "undecided";
    }
    return "?";
}

bool Extension::contains(std::size_t argument) const {
    return std::binary_search(members.begin(), members.end(), argument);
}

bool conflict_free(const AttackGraph& graph, const std::vector<std::size_t>& members) {
    for (auto a : members)
        for (auto b : members)
            if (graph.attacks(a, b)) return false;
    return true;
}

bool defends(const AttackGraph& graph, const std::vector<std::size_t>& members, std::size_t argument) {
    for (auto y : graph.attackers(argument)) {
        bool countered = std::any_of(members.begin(), members.end(), [&](std::size_t z) { return graph.attacks(z, y); });
        if (!countered) return false;
    }
    return true;
}

bool admissible(const AttackGraph& graph, const std::vector<std::size_t>& members) {
    if (!conflict_free(graph, members)) return false;
    return std::all_of(members.begin(), members.end(), [&](std::size_t a) { return defends(graph, members, a); });
}

Extension grounded(const AttackGraph& graph) {
    enum : std::uint8_t { Unknown, In, Out };
    const auto n = graph.size();
    std::vector<std::uint8_t> label(n, Unknown);
    std::vector<std::size_t> pending_attackers(n);
    std::vector<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
        pending_attackers[x] = graph.attackers(x).size();
        if (pending_attackers[x] == 0) {
            label[x] = In;
            queue.push_back(x);
        }
    }
    // An argument is in once all attackers are out; out once some attacker is in.
    while (!queue.empty()) {
        auto x = queue.back();
        queue.pop_back();
        for (auto y : graph.targets(x)) {
            if (label[y] != Unknown) continue;
            label[y] = Out;
            for (auto z : graph.targets(y)) {
                if (label[z] == Unknown && --pending_attackers[z] == 0) {
                    label[z] = In;
                    queue.push_back(z);
                }
            }
        }
    }
    Extension e{Semantics::Grounded, {}};
    for (std::size_t x = 0; x < n; ++x)
        if (label[x] == In) e.members.push_back(x);
    return e;
}

namespace {

enum class Label : std::uint8_t { Unset, In, Out, Undec };

class LabellingSearch {
public:
    LabellingSearch(const AttackGraph& graph, const EnumerationLimits& limits, bool stable_only)
        : graph_(graph), limits_(limits), stable_only_(stable_only) {
        if (graph.size() > limits.max_arguments) throw ResourceError("max_arguments", limits.max_arguments);
    }

    std::vector<std::vector<std::size_t>> run() {
        std::vector<Label> labels(graph_.size(), Label::Unset);
        if (propagate(labels)) search(labels);
        std::sort(results_.begin(), results_.end());
        return std::move(results_);
    }

private:
    bool assign(std::vector<Label>& labels, std::size_t x, Label l, bool& changed) const {
        if (labels[x] == l) return true;
        if (labels[x] != Label::Unset) return false;
        if (l == Label::Undec && stable_only_) return false;
        labels[x] = l;
        changed = true;
        return true;
    }

    // Unit propagation of the complete-labelling conditions; false on conflict.
    bool propagate(std::vector<Label>& labels) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t x = 0; x < graph_.size(); ++x) {
                std::size_t in = 0, out = 0, undec = 0, unset = 0;
                std::size_t last_unset = 0;
                for (auto y : graph_.attackers(x)) {
                    switch (labels[y]) {
                    case Label::In: ++in; break;
                    case Label::Out: ++out; break;
                    case Label::Undec: ++undec; break;
                    case Label::Unset: ++unset; last_unset = y; break;
                    }
                }
                if (in > 0) {
                    if (!assign(labels, x, Label::Out, changed)) return false;
                } else if (undec == 0 && unset == 0) {
                    if (!assign(labels, x, Label::In, changed)) return false;
                }
                switch (labels[x]) {
                case Label::In:
                    for (auto y : graph_.attackers(x))
                        if (!assign(labels, y, Label::Out, changed)) return false;
                    break;
                case Label::Out:
                    if (in == 0 && unset == 0) return false;
                    if (in == 0 && unset == 1 && !assign(labels, last_unset, Label::In, changed)) return false;
                    break;
                case Label::Undec:
                    if (undec == 0 && unset == 0) return false;
                    if (undec == 0 && unset == 1 && !assign(labels, last_unset, Label::Undec, changed)) return false;
                    break;
                case Label::Unset: break;
                }
            }
        }
        return true;
    }

    bool legal(const std::vector<Label>& labels) const {
        for (std::size_t x = 0; x < graph_.size(); ++x) {
            bool some_in = false, all_out = true;
            for (auto y : graph_.attackers(x)) {
                some_in |= labels[y] == Label::In;
                all_out &= labels[y] == Label::Out;
            }
            switch (labels[x]) {
            case Label::In: if (!all_out) return false; break;
            case Label::Out: if (!some_in) return false; break;
            case Label::Undec: if (some_in || all_out) return false; break;
            case Label::Unset: return false;
            }
        }
        return true;
    }

    void search(std::vector<Label>& labels) {
        auto it = std::find(labels.begin(), labels.end(), Label::Unset);
        if (it == labels.end()) {
            if (!legal(labels)) return;
            std::vector<std::size_t> in;
            for (std::size_t x = 0; x < labels.size(); ++x)
                if (labels[x] == Label::In) in.push_back(x);
            results_.push_back(std::move(in));
            if (results_.size() > limits_.max_extensions) {
                throw ResourceError("max_extensions", limits_.max_extensions);
            }
            return;
        }
        const auto x = static_cast<std::size_t>(it - labels.begin());
        for (auto l : {Label::In, Label::Out, Label::Undec}) {
            if (l == Label::Undec && stable_only_) continue;
            auto branch = labels;
            branch[x] = l;
            if (propagate(branch)) search(branch);
        }
    }

    const AttackGraph& graph_;
    const EnumerationLimits& limits_;
    bool stable_only_;
    std::vector<std::vector<std::size_t>> results_;
};

std::vector<Extension> tag(std::vector<std::vector<std::size_t>> sets, Semantics semantics) {
    std::vector<Extension> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.push_back(Extension{semantics, std::move(s)});
    return out;
}

} // namespace

std::vector<Extension> complete(const AttackGraph& graph, const EnumerationLimits& limits) {
    return tag(LabellingSearch(graph, limits, false).run(), Semantics::Complete);
}

std::vector<Extension> preferred(const AttackGraph& graph, const EnumerationLimits& limits) {
    auto all = LabellingSearch(graph, limits, false).run();
    std::vector<std::vector<std::size_t>> maximal;
    for (const auto& e : all) {
        bool dominated = std::any_of(all.begin(), all.end(), [&](const std::vector<std::size_t>& f) {
            return f.size() > e.size() && std::includes(f.begin(), f.end(), e.begin(), e.end());
        });
        if (!dominated) maximal.push_back(e);
    }
    return tag(std::move(maximal), Semantics::Preferred);
}

std::vector<Extension> stable(const AttackGraph& graph, const EnumerationLimits& limits) {
    return tag(LabellingSearch(graph, limits, true).run(), Semantics::Stable);
}

std::vector<Extension> extensions(const AttackGraph& graph, Semantics semantics, const EnumerationLimits& limits) {
    switch (semantics) {
    case Semantics::Grounded: return {grounded(graph)};
    case Semantics::Complete: return complete(graph, limits);
    case Semantics::Preferred: return preferred(graph, limits);
    case Semantics::Stable: return stable(graph, limits);
    }
    return {};
}

Verdict ArgumentStatus::verdict() const noexcept {
    if (in_every) return Verdict::SkepticallyJustified;
    if (attacked_by_skeptical) return Verdict::SkepticallyRejected;
    if (in_some) return Verdict::CredulouslyJustified;
    if (attacked_by_credulous) return Verdict::CredulouslyRejected;
    return Verdict::Undecided;
}

AcceptanceReport acceptance_status(const AttackGraph& graph, Semantics semantics, const EnumerationLimits& limits) {
    AcceptanceReport report;
    report.semantics = semantics;
    report.extensions = extensions(graph, semantics, limits);
    report.statuses.assign(graph.size(), ArgumentStatus{});
    if (report.extensions.empty()) {
        report.vacuous = true;
        report.diagnostic = "no " + std::string(to_string(semantics)) +
                            " extension exists; every argument is reported undecided";
        return report;
    }
    for (std::size_t x = 0; x < graph.size(); ++x) {
        auto& s = report.statuses[x];
        std::size_t count = 0;
        for (const auto& e : report.extensions) count += e.contains(x) ? 1 : 0;
        s.in_every = count == report.extensions.size();
        s.in_some = count > 0;
    }
    for (std::size_t x = 0; x < graph.size(); ++x) {
        auto& s = report.statuses[x];
        for (auto y : graph.attackers(x)) {
            s.attacked_by_skeptical |= report.statuses[y].in_every;
            s.attacked_by_credulous |= report.statuses[y].in_some;
        }
    }
    return report;
}

} // namespace vda
