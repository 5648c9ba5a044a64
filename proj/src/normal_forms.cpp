#include <algorithm>
#include <functional>

#include "fointerp/error.hpp"
#include "fointerp/syntax.hpp"

namespace fointerp {

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Equal:
        for (const auto& v : f.variables())
            if (!bound.count(v))
                out.insert(v);
        return;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        std::vector<std::string> added;
        for (const auto& v : f.variables())
            if (bound.insert(v).second)
                added.push_back(v);
        collect_free(f.operand(), bound, out);
        for (const auto& v : added)
            bound.erase(v);
        return;
    }
    default:
        for (const auto& c : f.children())
            collect_free(c, bound, out);
    }
}

void collect_names(const Formula& f, std::set<std::string>& out) {
    for (const auto& v : f.variables())
        out.insert(v);
    for (const auto& c : f.children())
        collect_names(c, out);
}

std::string fresh_name(const std::string& v, const std::set<std::string>& taken1, const std::set<std::string>& taken2) {
    const std::string base = v.substr(0, v.find('\''));
    for (int k = 1;; ++k) {
        std::string candidate = base + "'" + std::to_string(k);
        if (!taken1.count(candidate) && !taken2.count(candidate))
            return candidate;
    }
}

Formula rebuild(const Formula& f, std::vector<Formula> children) {
    return Formula::make(f.kind(), f.kind() == FormulaKind::Atom ? f.relation() : std::string{}, f.variables(),
                         std::move(children));
}

std::string lookup(const std::map<std::string, std::string>& m, const std::string& v) {
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
}

Formula subst(const Formula& f, const std::map<std::string, std::string>& ren, std::set<std::string>& names) {
    switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
        return f;
    case FormulaKind::Atom:
    case FormulaKind::Equal: {
        std::vector<std::string> args;
        for (const auto& v : f.variables())
            args.push_back(lookup(ren, v));
        return Formula::make(f.kind(), f.kind() == FormulaKind::Atom ? f.relation() : std::string{}, std::move(args), {});
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        std::map<std::string, std::string> inner = ren;
        for (const auto& v : f.variables())
            inner.erase(v);
        const auto body_free = free_vars(f.operand());
        std::set<std::string> images;
        for (const auto& [from, to] : inner)
            if (body_free.count(from))
                images.insert(to);
        std::vector<std::string> vars;
        for (const auto& v : f.variables()) {
            if (images.count(v)) {
                std::string nv = fresh_name(v, names, images);
                names.insert(nv);
                inner[v] = nv;
                vars.push_back(nv);
            } else {
                vars.push_back(v);
            }
        }
        return Formula::make(f.kind(), {}, std::move(vars), {subst(f.operand(), inner, names)});
    }
    default: {
        std::vector<Formula> children;
        for (const auto& c : f.children())
            children.push_back(subst(c, ren, names));
        return rebuild(f, std::move(children));
    }
    }
}

Formula nnf(const Formula& f, bool positive) {
    switch (f.kind()) {
    case FormulaKind::True:
        return positive ? f : fo::bottom();
    case FormulaKind::False:
        return positive ? f : fo::top();
    case FormulaKind::Atom:
    case FormulaKind::Equal:
        return positive ? f : fo::neg(f);
    case FormulaKind::Not:
        return nnf(f.operand(), !positive);
    case FormulaKind::And:
    case FormulaKind::Or: {
        std::vector<Formula> parts;
        for (const auto& c : f.children())
            parts.push_back(nnf(c, positive));
        bool conj = (f.kind() == FormulaKind::And) == positive;
        return conj ? fo::conj(std::move(parts)) : fo::disj(std::move(parts));
    }
    case FormulaKind::Implies:
        if (positive)
            return fo::disj({nnf(f.lhs(), false), nnf(f.rhs(), true)});
        return fo::conj({nnf(f.lhs(), true), nnf(f.rhs(), false)});
    case FormulaKind::Iff:
        if (positive)
            return fo::conj({fo::disj({nnf(f.lhs(), false), nnf(f.rhs(), true)}),
                             fo::disj({nnf(f.lhs(), true), nnf(f.rhs(), false)})});
        return fo::disj({fo::conj({nnf(f.lhs(), true), nnf(f.rhs(), false)}),
                         fo::conj({nnf(f.lhs(), false), nnf(f.rhs(), true)})});
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        bool existential = (f.kind() == FormulaKind::Exists) == positive;
        Formula body = nnf(f.operand(), positive);
        return existential ? fo::exists(f.variables(), std::move(body)) : fo::forall(f.variables(), std::move(body));
    }
    }
    return f;
}

// Quantifier prefix as a list of homogeneous blocks.
using Seq = std::vector<QuantifierBlock>;

// Blocks a sequence occupies when it is forced to start with the given type;
// a mismatching head costs one (empty) leading block.
std::size_t effective_length(const Seq& s, bool existential) {
    if (s.empty())
        return 0;
    return s.size() + (s.front().existential != existential ? 1 : 0);
}

Seq merge(const std::vector<const Seq*>& seqs, bool existential) {
    Seq out;
    std::vector<std::size_t> idx(seqs.size(), 0);
    bool cur = existential;
    for (;;) {
        bool remaining = false;
        QuantifierBlock block{cur, {}};
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            const Seq& s = *seqs[i];
            if (idx[i] < s.size() && s[idx[i]].existential == cur) {
                block.vars.insert(block.vars.end(), s[idx[i]].vars.begin(), s[idx[i]].vars.end());
                ++idx[i];
            }
            remaining = remaining || idx[i] < s.size();
        }
        if (!block.vars.empty())
            out.push_back(std::move(block));
        if (!remaining)
            return out;
        cur = !cur;
    }
}

struct Candidates {
    Seq starting[2]; // [0]: preferred existential start, [1]: universal start
};

const Seq& best_for(const Candidates& c, bool existential) {
    const Seq& same = c.starting[existential ? 0 : 1];
    const Seq& other = c.starting[existential ? 1 : 0];
    return effective_length(other, existential) < effective_length(same, existential) ? other : same;
}

Candidates prefixes(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        const bool existential = f.kind() == FormulaKind::Exists;
        Candidates inner = prefixes(f.operand());
        const Seq& tail = best_for(inner, existential);
        Seq seq{QuantifierBlock{existential, f.variables()}};
        std::size_t start = 0;
        if (!tail.empty() && tail.front().existential == existential) {
            seq.front().vars.insert(seq.front().vars.end(), tail.front().vars.begin(), tail.front().vars.end());
            start = 1;
        }
        seq.insert(seq.end(), tail.begin() + static_cast<std::ptrdiff_t>(start), tail.end());
        return Candidates{{seq, seq}};
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
        std::vector<Candidates> parts;
        for (const auto& c : f.children())
            parts.push_back(prefixes(c));
        Candidates out;
        for (int t = 0; t < 2; ++t) {
            const bool existential = t == 0;
            std::vector<const Seq*> chosen;
            for (const auto& p : parts)
                chosen.push_back(&best_for(p, existential));
            out.starting[t] = merge(chosen, existential);
        }
        return out;
    }
    case FormulaKind::Not:
    case FormulaKind::Atom:
    case FormulaKind::Equal:
    case FormulaKind::True:
    case FormulaKind::False:
        return {};
    default:
        fail(ErrorKind::Precondition, "prefix extraction needs a formula in negation normal form");
    }
}

Formula strip_quantifiers(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::Exists:
    case FormulaKind::Forall:
        return strip_quantifiers(f.operand());
    case FormulaKind::And:
    case FormulaKind::Or: {
        std::vector<Formula> parts;
        for (const auto& c : f.children())
            parts.push_back(strip_quantifiers(c));
        return rebuild(f, std::move(parts));
    }
    default:
        return f;
    }
}

void collect_relations(const Formula& f, std::map<std::string, int>& out) {
    if (f.kind() == FormulaKind::Atom) {
        auto [it, inserted] = out.emplace(f.relation(), static_cast<int>(f.variables().size()));
        if (!inserted && it->second != static_cast<int>(f.variables().size()))
            fail(ErrorKind::Structural, "relation symbol '" + f.relation() + "' used with arities " +
                                            std::to_string(it->second) + " and " +
                                            std::to_string(f.variables().size()));
    }
    for (const auto& c : f.children())
        collect_relations(c, out);
}

} // namespace

std::set<std::string> free_vars(const Formula& f) {
    std::set<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

int quantifier_rank(const Formula& f) {
    int inner = 0;
    for (const auto& c : f.children())
        inner = std::max(inner, quantifier_rank(c));
    if (f.is_quantifier())
        return inner + static_cast<int>(f.variables().size());
    return inner;
}

Signature infer_signature(const Formula& f) {
    std::map<std::string, int> rels;
    collect_relations(f, rels);
    Signature sig;
    for (const auto& [name, arity] : rels)
        sig.add(name, arity);
    return sig;
}

void check_signature(const Formula& f, const Signature& signature) {
    if (f.kind() == FormulaKind::Atom) {
        auto arity = signature.arity(f.relation());
        if (!arity)
            fail(ErrorKind::Structural, "unknown relation symbol '" + f.relation() + "' (signature " +
                                            signature.to_string() + ")");
        if (*arity != static_cast<int>(f.variables().size()))
            fail(ErrorKind::Structural, "arity mismatch for '" + f.relation() + "': expected " +
                                            std::to_string(*arity) + ", got " +
                                            std::to_string(f.variables().size()));
    }
    for (const auto& c : f.children())
        check_signature(c, signature);
}

Formula substitute(const Formula& f, const std::map<std::string, std::string>& renaming) {
    std::set<std::string> names;
    collect_names(f, names);
    for (const auto& [from, to] : renaming)
        names.insert(to);
    return subst(f, renaming, names);
}

Formula rename_apart(const Formula& f) {
    std::set<std::string> names;
    collect_names(f, names);
    std::set<std::string> used = free_vars(f);
    std::function<Formula(const Formula&, const std::map<std::string, std::string>&)> walk =
        [&](const Formula& g, const std::map<std::string, std::string>& scope) -> Formula {
        switch (g.kind()) {
        case FormulaKind::Atom:
        case FormulaKind::Equal: {
            std::vector<std::string> args;
            for (const auto& v : g.variables())
                args.push_back(lookup(scope, v));
            return Formula::make(g.kind(), g.kind() == FormulaKind::Atom ? g.relation() : std::string{},
                                 std::move(args), {});
        }
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            auto inner = scope;
            std::vector<std::string> vars;
            for (const auto& v : g.variables()) {
                std::string nv = v;
                if (used.count(v)) {
                    nv = fresh_name(v, names, used);
                    names.insert(nv);
                }
                used.insert(nv);
                inner[v] = nv;
                vars.push_back(nv);
            }
            return Formula::make(g.kind(), {}, std::move(vars), {walk(g.operand(), inner)});
        }
        case FormulaKind::True:
        case FormulaKind::False:
            return g;
        default: {
            std::vector<Formula> children;
            for (const auto& c : g.children())
                children.push_back(walk(c, scope));
            return rebuild(g, std::move(children));
        }
        }
    };
    return walk(f, {});
}

Formula to_nnf(const Formula& f) { return nnf(f, true); }

Formula to_prenex(const Formula& f, PrefixStart prefer) {
    const Formula prepared = rename_apart(to_nnf(f));
    const Candidates c = prefixes(prepared);
    const int first = prefer == PrefixStart::Existential ? 0 : 1;
    const Seq& seq = c.starting[1 - first].size() < c.starting[first].size() ? c.starting[1 - first] : c.starting[first];
    Formula out = strip_quantifiers(prepared);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        out = it->existential ? fo::exists(it->vars, std::move(out)) : fo::forall(it->vars, std::move(out));
    return out;
}

std::vector<QuantifierBlock> prefix_blocks(const Formula& prenex) {
    std::vector<QuantifierBlock> blocks;
    const Formula* cur = &prenex;
    while (cur->is_quantifier()) {
        bool existential = cur->kind() == FormulaKind::Exists;
        if (blocks.empty() || blocks.back().existential != existential)
            blocks.push_back({existential, {}});
        auto& vars = blocks.back().vars;
        vars.insert(vars.end(), cur->variables().begin(), cur->variables().end());
        cur = &cur->operand();
    }
    return blocks;
}

const Formula& matrix_of(const Formula& prenex) {
    const Formula* cur = &prenex;
    while (cur->is_quantifier())
        cur = &cur->operand();
    return *cur;
}

PrefixClass classify(const Formula& f) {
    const auto blocks = prefix_blocks(to_prenex(f));
    if (blocks.empty())
        return {PrefixKind::Both, 0};
    return {blocks.front().existential ? PrefixKind::Sigma : PrefixKind::Pi, static_cast<int>(blocks.size())};
}

std::string to_string(const PrefixClass& c) {
    const char* kind = c.kind == PrefixKind::Sigma ? "Sigma" : c.kind == PrefixKind::Pi ? "Pi" : "Both";
    return std::string(kind) + " " + std::to_string(c.k);
}

bool within(const PrefixClass& inner, const PrefixClass& outer) {
    if (inner.k < outer.k)
        return true;
    if (inner.k > outer.k)
        return false;
    return inner.kind == outer.kind || inner.kind == PrefixKind::Both;
}

} // namespace fointerp
