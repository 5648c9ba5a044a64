#include "fointerp/json_io.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "fointerp/error.hpp"
#include "fointerp/syntax.hpp"

namespace fointerp {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Format, std::string("invalid JSON: ") + e.what());
    }
}

const json& member(const json& obj, const char* key, const char* what) {
    if (!obj.is_object() || !obj.contains(key))
        fail(ErrorKind::Format, std::string(what) + " needs a \"" + key + "\" member");
    return obj.at(key);
}

int as_int(const json& v, const std::string& what) {
    if (!v.is_number_integer())
        fail(ErrorKind::Format, what + " must be an integer");
    return v.get<int>();
}

Signature signature_from(const json& j) {
    if (!j.is_object())
        fail(ErrorKind::Format, "signature must be an object mapping symbols to arities");
    Signature sig;
    for (const auto& [name, arity] : j.items()) {
        int a = as_int(arity, "arity of '" + name + "'");
        if (a < 1)
            fail(ErrorKind::Format, "arity of '" + name + "' must be at least 1");
        sig.add(name, a);
    }
    return sig;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string signature_text(const Signature& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& r : s.relations()) {
        out += (first ? "" : ", ") + quoted(r.name) + ": " + std::to_string(r.arity);
        first = false;
    }
    return out + "}";
}

// Hand-rolled layout: one line per relation, tuples inline.
std::string structure_body(const FiniteStructure& s, const std::map<std::string, Element>* params) {
    std::ostringstream out;
    out << "{\n  \"signature\": " << signature_text(s.signature()) << ",\n";
    out << "  \"size\": " << s.size() << ",\n";
    out << "  \"relations\": {";
    const auto& rels = s.signature().relations();
    for (std::size_t r = 0; r < rels.size(); ++r) {
        out << (r ? ",\n    " : "\n    ") << quoted(rels[r].name) << ": [";
        bool first = true;
        for (const auto& t : s.tuples(static_cast<int>(r))) {
            out << (first ? "[" : ", [");
            for (std::size_t i = 0; i < t.size(); ++i)
                out << (i ? "," : "") << t[i];
            out << "]";
            first = false;
        }
        out << "]";
    }
    out << (rels.empty() ? "}" : "\n  }");
    auto write_map = [&](const char* key, const std::map<std::string, Element>& m) {
        out << ",\n  \"" << key << "\": {";
        bool first = true;
        // Ordered by element, then name, so the table reads like the carrier.
        std::vector<std::pair<Element, std::string>> entries;
        for (const auto& [name, e] : m)
            entries.emplace_back(e, name);
        std::sort(entries.begin(), entries.end());
        for (const auto& [e, name] : entries) {
            out << (first ? "" : ", ") << quoted(name) << ": " << e;
            first = false;
        }
        out << "}";
    };
    if (!s.names().empty())
        write_map("names", s.names());
    if (params && !params->empty())
        write_map("params", *params);
    out << "\n}\n";
    return out.str();
}

FiniteStructure structure_from(const json& j) {
    if (!j.is_object())
        fail(ErrorKind::Format, "structure must be a JSON object");
    Signature sig = signature_from(member(j, "signature", "structure"));
    int size = as_int(member(j, "size", "structure"), "size");
    if (size < 1)
        fail(ErrorKind::Format, "size must be at least 1");
    FiniteStructure s(sig, size);
    const json& rels = member(j, "relations", "structure");
    if (!rels.is_object())
        fail(ErrorKind::Format, "\"relations\" must be an object");
    for (const auto& [name, tuples] : rels.items())
        if (!sig.contains(name))
            fail(ErrorKind::Format, "relation '" + name + "' is not in the signature");
    for (const auto& r : sig.relations()) {
        if (!rels.contains(r.name))
            fail(ErrorKind::Format, "relation '" + r.name + "' has no entry in \"relations\"");
        const json& tuples = rels.at(r.name);
        if (!tuples.is_array())
            fail(ErrorKind::Format, "tuples of '" + r.name + "' must be an array");
        const int rel = sig.index_of(r.name);
        for (const auto& t : tuples) {
            if (!t.is_array() || static_cast<int>(t.size()) != r.arity)
                fail(ErrorKind::Format, "tuple of '" + r.name + "' must be an array of " + std::to_string(r.arity) +
                                            " elements");
            Tuple tuple;
            for (const auto& e : t) {
                int v = as_int(e, "tuple entry of '" + r.name + "'");
                if (v < 0 || v >= size)
                    fail(ErrorKind::Format, "tuple entry " + std::to_string(v) + " of '" + r.name +
                                                "' is outside 0.." + std::to_string(size - 1));
                tuple.push_back(v);
            }
            s.set(rel, tuple);
        }
    }
    if (j.contains("names")) {
        const json& names = j.at("names");
        if (!names.is_object())
            fail(ErrorKind::Format, "\"names\" must be an object");
        for (const auto& [name, e] : names.items()) {
            int v = as_int(e, "element of name '" + name + "'");
            if (v < 0 || v >= size)
                fail(ErrorKind::Format, "name '" + name + "' refers to element " + std::to_string(v) +
                                            " outside the universe");
            s.set_name(name, v);
        }
    }
    return s;
}

Formula formula_member(const json& j, const char* key, const std::string& what) {
    const json& v = member(j, key, what.c_str());
    if (!v.is_string())
        fail(ErrorKind::Format, what + " member \"" + key + "\" must be formula text");
    return parse(v.get<std::string>());
}

} // namespace

std::string signature_to_json(const Signature& s) { return signature_text(s) + "\n"; }

Signature signature_from_json(const std::string& text) { return signature_from(parse_json(text)); }

std::string structure_to_json(const FiniteStructure& s) { return structure_body(s, nullptr); }

FiniteStructure structure_from_json(const std::string& text) { return structure_from(parse_json(text)); }

std::string witness_to_json(const Witness& w) { return structure_body(w.structure, &w.params); }

Witness witness_from_json(const std::string& text) {
    json j = parse_json(text);
    Witness w{structure_from(j), {}};
    if (j.contains("params")) {
        const json& p = j.at("params");
        if (!p.is_object())
            fail(ErrorKind::Format, "\"params\" must be an object");
        for (const auto& [name, e] : p.items()) {
            int v = as_int(e, "parameter '" + name + "'");
            if (v < 0 || v >= w.structure.size())
                fail(ErrorKind::Format, "parameter '" + name + "' is outside the universe");
            w.params[name] = v;
        }
    }
    return w;
}

std::string schema_to_json(const InterpretationSchema& schema) {
    auto sig = [](const Signature& s) {
        ordered_json o = ordered_json::object();
        for (const auto& r : s.relations())
            o[r.name] = r.arity;
        return o;
    };
    ordered_json j;
    j["source"] = sig(schema.source);
    j["target"] = sig(schema.target);
    j["params"] = schema.params;
    j["phiU"] = render(schema.phi_u);
    if (schema.phi_not_u)
        j["phiNotU"] = render(*schema.phi_not_u);
    ordered_json rels = ordered_json::object();
    for (const auto& r : schema.source.relations()) {
        const auto& rf = schema.relations.at(r.name);
        ordered_json entry;
        entry["pos"] = render(rf.pos);
        entry["neg"] = render(rf.neg);
        rels[r.name] = entry;
    }
    j["relations"] = rels;
    return j.dump(2) + "\n";
}

InterpretationSchema schema_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object())
        fail(ErrorKind::Format, "schema must be a JSON object");
    InterpretationSchema schema;
    schema.source = signature_from(member(j, "source", "schema"));
    schema.target = signature_from(member(j, "target", "schema"));
    if (j.contains("params")) {
        const json& p = j.at("params");
        if (!p.is_array())
            fail(ErrorKind::Format, "\"params\" must be an array of variable names");
        for (const auto& v : p) {
            if (!v.is_string())
                fail(ErrorKind::Format, "parameter names must be strings");
            schema.params.push_back(v.get<std::string>());
        }
    }
    schema.phi_u = formula_member(j, "phiU", "schema");
    if (j.contains("phiNotU"))
        schema.phi_not_u = formula_member(j, "phiNotU", "schema");
    const json& rels = member(j, "relations", "schema");
    if (!rels.is_object())
        fail(ErrorKind::Format, "\"relations\" must be an object");
    for (const auto& [name, entry] : rels.items())
        schema.relations.emplace(name, RelationFormulas{formula_member(entry, "pos", "relation '" + name + "'"),
                                                        formula_member(entry, "neg", "relation '" + name + "'")});
    check_schema(schema);
    return schema;
}

std::string verify_report_to_json(const VerifyReport& report) {
    const auto& c = report.conditions;
    ordered_json j;
    j["status"] = to_string(report.status);
    j["domainNonempty"] = c.domain_nonempty;
    j["complementConsistent"] = c.complement_consistent;
    j["domain"] = c.domain;
    ordered_json violations = ordered_json::array();
    for (const auto& [rel, t] : c.violations)
        violations.push_back({{"relation", rel}, {"tuple", t}});
    j["violations"] = violations;
    if (report.bijection)
        j["bijection"] = *report.bijection;
    return j.dump() + "\n";
}

} // namespace fointerp
