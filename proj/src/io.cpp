#include "vda/io.hpp"

#include "vda/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace vda::io {

using Json = nlohmann::ordered_json;

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + ": missing field '" + key + "'");
    return *it;
}

std::string text(const Json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(where + ": expected a string");
    return j.get<std::string>();
}

std::vector<std::string> texts(const Json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<int> integers(const Json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw SchemaError(where + ": expected integers, found " + v.dump());
        out.push_back(v.get<int>());
    }
    return out;
}

Literal literal(const Json& j, const std::string& where) {
    try {
        return parse_literal(text(j, where));
    } catch (const SchemaError& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

VdaAgent parse_agent(const Json& root, DutyNames& duty_names) {
    const auto& lang = field(root, "language", "document");
    VdaLanguage language(texts(field(lang, "atoms", "language"), "language.atoms"),
                         texts(field(lang, "actions", "language"), "language.actions"),
                         texts(field(lang, "duties", "language"), "language.duties"));
    const auto& duties = language.duties();

    if (auto it = root.find("duty_names"); it != root.end()) {
        if (!it->is_object()) throw SchemaError("duty_names: expected an object");
        for (const auto& [code, name] : it->items()) {
            if (!language.duty_index(code)) throw SchemaError("duty_names: unknown duty '" + code + "'");
            duty_names[code] = text(name, "duty_names." + code);
        }
    }

    DegreeRange range;
    if (auto it = root.find("degree_range"); it != root.end()) {
        auto r = integers(*it, "degree_range");
        if (r.size() != 2 || r[0] > r[1]) throw SchemaError("degree_range: expected [low, high] with low <= high");
        range = DegreeRange{r[0], r[1]};
    }

    std::vector<Situation> situations;
    const auto& sits = field(root, "situations", "document");
    if (!sits.is_array()) throw SchemaError("situations: expected an array");
    for (std::size_t i = 0; i < sits.size(); ++i) {
        const std::string where = "situations[" + std::to_string(i) + "]";
        auto id = text(field(sits[i], "id", where), where + ".id");
        auto p = texts(field(sits[i], "perceptions", where), where + ".perceptions");
        situations.emplace_back(id, language, std::set<std::string>(p.begin(), p.end()));
    }

    std::map<std::string, ActionMatrix> matrices;
    const auto& mats = field(root, "matrices", "document");
    if (!mats.is_array()) throw SchemaError("matrices: expected an array");
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const std::string where = "matrices[" + std::to_string(i) + "]";
        auto sid = text(field(mats[i], "situation", where), where + ".situation");
        const auto& rows = field(mats[i], "rows", where);
        if (!rows.is_object()) throw SchemaError(where + ".rows: expected an object of action rows");
        std::vector<DutyVector> vectors;
        for (const auto& [action, values] : rows.items()) {
            const std::string row = "row for action '" + action + "' in matrix of " + sid;
            auto v = integers(values, row);
            if (v.size() != duties.size()) {
                throw SchemaError("malformed " + row + ": expected " + std::to_string(duties.size()) +
                                  " degrees, found " + std::to_string(v.size()));
            }
            vectors.push_back(DutyVector{action, std::move(v)});
        }
        if (!matrices.emplace(sid, ActionMatrix(sid, language, std::move(vectors), range)).second) {
            throw SchemaError(where + ": second matrix for situation '" + sid + "'");
        }
    }

    std::vector<Disjunct> disjuncts;
    const auto& principle = field(root, "principle", "document");
    if (!principle.is_array()) throw SchemaError("principle: expected an array of disjuncts");
    for (std::size_t i = 0; i < principle.size(); ++i) {
        const std::string where = "principle[" + std::to_string(i) + "]";
        auto id = text(field(principle[i], "id", where), where + ".id");
        auto bounds = integers(field(principle[i], "bounds", where), "disjunct " + id);
        if (bounds.size() != duties.size()) {
            throw SchemaError("malformed disjunct " + id + ": expected " + std::to_string(duties.size()) +
                              " bounds, found " + std::to_string(bounds.size()));
        }
        disjuncts.push_back(Disjunct{id, std::move(bounds)});
    }
    return VdaAgent(std::move(language), std::move(situations), std::move(matrices),
                    Principle(std::move(disjuncts), duties.size()), range);
}

EpistemicSpec parse_epistemic(const Json& j, const VdaLanguage& language) {
    EpistemicSpec spec;
    if (auto it = j.find("assumptions"); it != j.end()) {
        for (std::size_t i = 0; i < it->size(); ++i)
            spec.assumptions.push_back(literal((*it)[i], "epistemic.assumptions[" + std::to_string(i) + "]"));
    }
    if (auto it = j.find("contraries"); it != j.end()) {
        if (!it->is_object()) throw SchemaError("epistemic.contraries: expected an object");
        for (const auto& [a, c] : it->items()) {
            spec.contraries[literal(Json(a), "epistemic.contraries")] = literal(c, "epistemic.contraries." + a);
        }
    }
    if (auto it = j.find("rules"); it != j.end()) {
        if (!it->is_array()) throw SchemaError("epistemic.rules: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "epistemic.rules[" + std::to_string(i) + "]";
            const auto& r = (*it)[i];
            EpistemicRule rule{text(field(r, "label", where), where + ".label"), literal(field(r, "head", where), where + ".head"), {}};
            if (auto b = r.find("body"); b != r.end()) {
                if (!b->is_array()) throw SchemaError(where + ".body: expected an array");
                for (const auto& x : *b) rule.body.push_back(literal(x, where + ".body"));
            }
            spec.rules.push_back(std::move(rule));
        }
    }
    auto framework = epistemic_framework(language, spec, {});
    if (!spec.assumptions.empty()) aba::validate_framework(std::move(framework));
    return spec;
}

aba::AbaFramework parse_framework(const Json& root) {
    aba::AbaFramework f;
    f.language = texts(field(root, "language", "document"), "language");
    f.assumptions = texts(field(root, "assumptions", "document"), "assumptions");
    const auto& contrary = field(root, "contrary", "document");
    if (!contrary.is_object()) throw SchemaError("contrary: expected an object");
    for (const auto& [a, c] : contrary.items()) f.contrary[a] = text(c, "contrary." + a);
    const auto& rules = field(root, "rules", "document");
    if (!rules.is_array()) throw SchemaError("rules: expected an array");
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const std::string where = "rules[" + std::to_string(i) + "]";
        aba::Rule r{text(field(rules[i], "label", where), where + ".label"),
                    text(field(rules[i], "head", where), where + ".head"), {}};
        if (auto b = rules[i].find("body"); b != rules[i].end()) r.body = texts(*b, where + ".body");
        f.rules.push_back(std::move(r));
    }
    if (auto it = root.find("display"); it != root.end()) {
        if (!it->is_object()) throw SchemaError("display: expected an object");
        for (const auto& [s, d] : it->items()) f.display[s] = text(d, "display." + s);
    }
    aba::validate_framework(f);
    return f;
}

Json literals(const std::vector<Literal>& ls) {
    Json out = Json::array();
    for (const auto& l : ls) out.push_back(l.to_string());
    return out;
}

} // namespace

AgentFile parse_agent_file(std::string_view input) {
    Json root;
    try {
        root = Json::parse(input.begin(), input.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, input.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (input[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        if (auto pos = what.find("syntax error while parsing value - "); pos != std::string::npos)
            what = what.substr(pos + 35);
        throw ParseError(what, line, column);
    }

    AgentFile out;
    const auto kind = text(field(root, "kind", "document"), "kind");
    if (auto it = root.find("name"); it != root.end()) out.name = text(*it, "name");
    if (kind == "vda-agent") {
        out.kind = FileKind::Agent;
        out.agent = parse_agent(root, out.duty_names);
        if (auto it = root.find("epistemic"); it != root.end()) {
            out.epistemic = parse_epistemic(*it, out.agent.language());
        }
    } else if (kind == "aba-framework") {
        out.kind = FileKind::Framework;
        out.framework = parse_framework(root);
    } else {
        throw SchemaError("kind: expected 'vda-agent' or 'aba-framework', found '" + kind + "'");
    }
    return out;
}

AgentFile load_agent_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LookupError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_agent_file(buffer.str());
}

std::string serialize_agent_file(const AgentFile& file) {
    Json root;
    if (file.kind == FileKind::Framework) {
        const auto& f = file.framework;
        root["kind"] = "aba-framework";
        if (!file.name.empty()) root["name"] = file.name;
        root["language"] = f.language;
        root["assumptions"] = f.assumptions;
        root["contrary"] = Json::object();
        for (const auto& [a, c] : f.contrary) root["contrary"][a] = c;
        root["rules"] = Json::array();
        for (const auto& r : f.rules) root["rules"].push_back(Json{{"label", r.label}, {"head", r.head}, {"body", r.body}});
        if (!f.display.empty()) {
            root["display"] = Json::object();
            for (const auto& [s, d] : f.display) root["display"][s] = d;
        }
        return root.dump(2) + "\n";
    }

    const auto& agent = file.agent;
    const auto& lang = agent.language();
    root["kind"] = "vda-agent";
    if (!file.name.empty()) root["name"] = file.name;
    root["language"] = Json{{"atoms", lang.atoms()}, {"actions", lang.actions()}, {"duties", lang.duties()}};
    if (!file.duty_names.empty()) {
        root["duty_names"] = Json::object();
        for (const auto& d : lang.duties()) {
            if (auto it = file.duty_names.find(d); it != file.duty_names.end()) root["duty_names"][d] = it->second;
        }
    }
    root["degree_range"] = Json::array({agent.degree_range().low, agent.degree_range().high});
    root["situations"] = Json::array();
    for (const auto& s : agent.situations()) {
        Json p = Json::array();
        for (const auto& l : s.literals())
            if (l.positive) p.push_back(l.atom);
        root["situations"].push_back(Json{{"id", s.id()}, {"perceptions", p}});
    }
    root["matrices"] = Json::array();
    for (const auto& s : agent.situations()) {
        auto it = agent.matrices().find(s.id());
        if (it == agent.matrices().end()) continue;
        Json rows = Json::object();
        for (const auto& v : it->second.rows()) rows[v.action] = v.values;
        root["matrices"].push_back(Json{{"situation", s.id()}, {"rows", rows}});
    }
    root["principle"] = Json::array();
    for (const auto& u : agent.principle().disjuncts()) root["principle"].push_back(Json{{"id", u.id}, {"bounds", u.bounds}});
    if (file.epistemic) {
        const auto& e = *file.epistemic;
        Json ep;
        ep["assumptions"] = literals(e.assumptions);
        if (!e.contraries.empty()) {
            ep["contraries"] = Json::object();
            for (const auto& [a, c] : e.contraries) ep["contraries"][a.to_string()] = c.to_string();
        }
        ep["rules"] = Json::array();
        for (const auto& r : e.rules)
            ep["rules"].push_back(Json{{"label", r.label}, {"head", r.head.to_string()}, {"body", literals(r.body)}});
        root["epistemic"] = ep;
    }
    return root.dump(2) + "\n";
}

} // namespace vda::io
