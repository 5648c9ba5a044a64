#include "fointerp/interpret.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fointerp/error.hpp"
#include "fointerp/eval.hpp"

namespace fointerp {

namespace {

void check_free(const Formula& f, const std::set<std::string>& allowed, const std::string& what) {
    for (const auto& v : free_vars(f))
        if (!allowed.count(v))
            fail(ErrorKind::Structural, what + " has unexpected free variable '" + v + "'");
}

void check_params(const InterpretationSchema& schema, const Witness& w) {
    if (!(w.structure.signature() == schema.target))
        fail(ErrorKind::Structural, "witness signature " + w.structure.signature().to_string() +
                                        " differs from the schema target " + schema.target.to_string());
    for (const auto& p : schema.params) {
        auto it = w.params.find(p);
        if (it == w.params.end())
            fail(ErrorKind::Structural, "witness has no value for parameter '" + p + "'");
        if (it->second < 0 || it->second >= w.structure.size())
            fail(ErrorKind::Structural, "parameter '" + p + "' is outside the witness universe");
    }
}

// Odometer over tuples of the given arity with entries from `pool`.
bool next_tuple(std::vector<std::size_t>& idx, std::size_t pool) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < pool)
            return true;
        idx[i] = 0;
    }
    return false;
}

std::string fresh_away(const std::string& v, const std::set<std::string>& avoid) {
    if (!avoid.count(v))
        return v;
    const std::string base = v.substr(0, v.find('\''));
    for (int k = 1;; ++k) {
        std::string candidate = base + "'" + std::to_string(k);
        if (!avoid.count(candidate))
            return candidate;
    }
}

struct Translator {
    const InterpretationSchema& schema;
    TranslateMode mode;
    std::set<std::string> taken; // parameters and every variable name already used

    Formula guard(bool existential, const std::string& v) {
        Formula u = substitute(schema.phi_u, {{"x", v}});
        if (existential)
            return u;
        if (mode == TranslateMode::Literal && schema.phi_not_u)
            return substitute(*schema.phi_not_u, {{"x", v}});
        return fo::neg(u);
    }

    Formula atom(const Formula& a, bool positive, bool existential_context,
                 const std::map<std::string, std::string>& scope) {
        const auto& rf = schema.relations.at(a.relation());
        std::map<std::string, std::string> ren;
        for (std::size_t i = 0; i < a.variables().size(); ++i)
            ren[argument_variable(static_cast<int>(i) + 1)] = scope.at(a.variables()[i]);
        if (mode == TranslateMode::Literal || existential_context)
            return substitute(positive ? rf.pos : rf.neg, ren);
        return fo::neg(substitute(positive ? rf.neg : rf.pos, ren));
    }

    Formula walk(const Formula& f, bool existential_context, const std::map<std::string, std::string>& scope) {
        switch (f.kind()) {
        case FormulaKind::True:
        case FormulaKind::False:
            return f;
        case FormulaKind::Atom:
            return atom(f, true, existential_context, scope);
        case FormulaKind::Equal:
            return fo::eq(scope.at(f.variables()[0]), scope.at(f.variables()[1]));
        case FormulaKind::Not:
            if (f.operand().kind() == FormulaKind::Atom)
                return atom(f.operand(), false, existential_context, scope);
            return fo::neg(walk(f.operand(), existential_context, scope));
        case FormulaKind::And:
        case FormulaKind::Or: {
            std::vector<Formula> parts;
            for (const auto& c : f.children())
                parts.push_back(walk(c, existential_context, scope));
            return f.kind() == FormulaKind::And ? fo::conj(std::move(parts)) : fo::disj(std::move(parts));
        }
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            const bool existential = f.kind() == FormulaKind::Exists;
            auto inner = scope;
            std::vector<std::string> vars;
            for (const auto& v : f.variables()) {
                std::string nv = fresh_away(v, taken);
                taken.insert(nv);
                inner[v] = nv;
                vars.push_back(nv);
            }
            Formula body = walk(f.operand(), existential, inner);
            std::vector<Formula> guards;
            for (const auto& v : vars)
                guards.push_back(guard(existential, v));
            if (existential) {
                guards.push_back(std::move(body));
                return fo::exists(vars, fo::conj(std::move(guards)));
            }
            guards.push_back(std::move(body));
            return fo::forall(vars, fo::disj(std::move(guards)));
        }
        default:
            fail(ErrorKind::Precondition, "translation expects negation normal form");
        }
    }
};

} // namespace

std::string argument_variable(int i) { return "x" + std::to_string(i); }

void check_schema(const InterpretationSchema& schema) {
    std::set<std::string> params(schema.params.begin(), schema.params.end());
    if (params.size() != schema.params.size())
        fail(ErrorKind::Structural, "schema parameters must be distinct");
    auto allowed_u = params;
    allowed_u.insert("x");
    check_signature(schema.phi_u, schema.target);
    check_free(schema.phi_u, allowed_u, "phiU");
    if (schema.phi_not_u) {
        check_signature(*schema.phi_not_u, schema.target);
        check_free(*schema.phi_not_u, allowed_u, "phiNotU");
    }
    for (const auto& r : schema.source.relations()) {
        auto it = schema.relations.find(r.name);
        if (it == schema.relations.end())
            fail(ErrorKind::Structural, "schema has no formulas for source relation '" + r.name + "'");
        auto allowed = params;
        for (int i = 1; i <= r.arity; ++i)
            allowed.insert(argument_variable(i));
        check_signature(it->second.pos, schema.target);
        check_signature(it->second.neg, schema.target);
        check_free(it->second.pos, allowed, "formula for " + r.name);
        check_free(it->second.neg, allowed, "negated formula for " + r.name);
    }
    for (const auto& [name, rf] : schema.relations)
        if (!schema.source.contains(name))
            fail(ErrorKind::Structural, "schema has formulas for '" + name + "', which is not in the source signature");
}

ConditionReport induce(const InterpretationSchema& schema, const Witness& w) {
    check_schema(schema);
    check_params(schema, w);
    const FiniteStructure& b = w.structure;
    ModelChecker checker(b);
    Assignment base(w.params.begin(), w.params.end());

    ConditionReport report;
    report.domain = checker.satisfying(schema.phi_u, "x", base);
    report.domain_nonempty = !report.domain.empty();
    if (!report.domain_nonempty)
        return report;

    const std::size_t d = report.domain.size();
    FiniteStructure induced(schema.source, static_cast<int>(d));
    for (std::size_t i = 0; i < d; ++i)
        if (auto name = b.name_of(report.domain[i]); name.front() != '#')
            induced.set_name(name, static_cast<Element>(i));

    report.complement_consistent = true;
    for (std::size_t r = 0; r < schema.source.size(); ++r) {
        const auto& symbol = schema.source.relations()[r];
        const auto& rf = schema.relations.at(symbol.name);
        std::vector<std::size_t> idx(symbol.arity, 0);
        Tuple local(symbol.arity);
        do {
            Assignment nu = base;
            Tuple global(symbol.arity);
            for (int i = 0; i < symbol.arity; ++i) {
                local[i] = static_cast<Element>(idx[i]);
                global[i] = report.domain[idx[i]];
                nu[argument_variable(i + 1)] = global[i];
            }
            const bool pos = checker.holds(rf.pos, nu);
            const bool neg = checker.holds(rf.neg, nu);
            if (pos == neg) {
                report.complement_consistent = false;
                if (report.violations.size() < ConditionReport::kMaxViolations)
                    report.violations.emplace_back(symbol.name, global);
            }
            if (pos)
                induced.set(static_cast<int>(r), local);
        } while (next_tuple(idx, d));
    }
    if (report.complement_consistent)
        report.induced = std::move(induced);
    return report;
}

std::string to_string(VerifyStatus s) {
    switch (s) {
    case VerifyStatus::Verified:
        return "verified";
    case VerifyStatus::EmptyDomain:
        return "empty domain";
    case VerifyStatus::InconsistentComplement:
        return "inconsistent complement";
    case VerifyStatus::NotIsomorphic:
        return "not isomorphic";
    }
    return "?";
}

VerifyReport verify(const InterpretationSchema& schema, const FiniteStructure& a, const Witness& w) {
    if (!(a.signature() == schema.source))
        fail(ErrorKind::Structural, "source structure signature " + a.signature().to_string() +
                                        " differs from the schema source " + schema.source.to_string());
    VerifyReport report;
    report.conditions = induce(schema, w);
    if (!report.conditions.domain_nonempty) {
        report.status = VerifyStatus::EmptyDomain;
        return report;
    }
    if (!report.conditions.complement_consistent) {
        report.status = VerifyStatus::InconsistentComplement;
        return report;
    }
    report.bijection = isomorphism(a, *report.conditions.induced);
    report.status = report.bijection ? VerifyStatus::Verified : VerifyStatus::NotIsomorphic;
    return report;
}

std::string describe(const VerifyReport& report, const Witness& w) {
    std::ostringstream out;
    const auto& b = w.structure;
    out << "witness size: " << b.size() << "\n";
    for (const auto& [p, e] : w.params)
        out << "parameter " << p << " = " << b.name_of(e) << "\n";
    out << "condition 1 (domain nonempty): " << (report.conditions.domain_nonempty ? "ok" : "FAILED") << "\n";
    if (report.conditions.domain_nonempty) {
        out << "domain (" << report.conditions.domain.size() << "):";
        for (Element e : report.conditions.domain)
            out << " " << b.name_of(e);
        out << "\n";
        out << "condition 2 (complement formulas): " << (report.conditions.complement_consistent ? "ok" : "FAILED")
            << "\n";
        for (const auto& [rel, t] : report.conditions.violations) {
            out << "  both or neither hold for " << rel << "(";
            for (std::size_t i = 0; i < t.size(); ++i)
                out << (i ? "," : "") << b.name_of(t[i]);
            out << ")\n";
        }
    }
    if (report.conditions.complement_consistent) {
        out << "condition 3 (isomorphism): " << (report.bijection ? "ok" : "FAILED") << "\n";
        if (report.bijection) {
            for (std::size_t a = 0; a < report.bijection->size(); ++a)
                out << "  " << a << " -> " << b.name_of(report.conditions.domain[(*report.bijection)[a]]) << "\n";
        }
    }
    out << "result: " << to_string(report.status) << "\n";
    return out.str();
}

Formula translate(const InterpretationSchema& schema, const Formula& sentence, TranslateMode mode,
                  ParamClosure closure) {
    check_schema(schema);
    if (!is_sentence(sentence)) {
        std::string names;
        for (const auto& v : free_vars(sentence))
            names += (names.empty() ? "" : ", ") + v;
        fail(ErrorKind::Structural, "translate needs a sentence; free variables: " + names);
    }
    check_signature(sentence, schema.source);
    // Bound variables keep their spelling unless it is a parameter name or
    // was already used by an earlier quantifier.
    Translator t{schema, mode, {schema.params.begin(), schema.params.end()}};
    Formula body = t.walk(to_nnf(sentence), true, {});
    if (closure == ParamClosure::Existential && !schema.params.empty())
        return fo::exists(schema.params, std::move(body));
    return body;
}

int schema_level(const InterpretationSchema& schema) {
    int k = 1;
    auto account = [&](const Formula& f, const std::string& what) {
        const PrefixClass c = classify(f);
        if (c.kind == PrefixKind::Pi)
            fail(ErrorKind::Precondition, what + " classifies as " + to_string(c) + "; schemas must be existential");
        k = std::max(k, c.k);
    };
    account(schema.phi_u, "phiU");
    if (schema.phi_not_u)
        account(*schema.phi_not_u, "phiNotU");
    for (const auto& [name, rf] : schema.relations) {
        account(rf.pos, "formula for " + name);
        account(rf.neg, "negated formula for " + name);
    }
    return k;
}

PrefixClass translation_class(const InterpretationSchema& schema, const PrefixClass& c) {
    const int k = schema_level(schema);
    if (c.k == 0)
        return c;
    return {c.kind, c.k + k - 1};
}

} // namespace fointerp
