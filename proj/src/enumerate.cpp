#include "fointerp/enumerate.hpp"

#include <atomic>
#include <map>
#include <cstdlib>
#include <string>

#include "fointerp/error.hpp"
#include "fointerp/syntax.hpp"

namespace fointerp {

namespace {

std::atomic<std::size_t> cap_override{0};

std::size_t env_cap() {
    const char* v = std::getenv("FOINTERP_CAP");
    if (!v || !*v)
        return kDefaultEnumerationCap;
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (*end != '\0' || parsed == 0)
        fail(ErrorKind::Precondition, std::string("FOINTERP_CAP must be a positive integer, got '") + v + "'");
    return static_cast<std::size_t>(parsed);
}

// Kleene values.
constexpr int kFalse = 0;
constexpr int kTrue = 1;
constexpr int kUnknown = 2;

struct KNode {
    FormulaKind kind = FormulaKind::True;
    bool positive = true;
    int rel = -1;
    std::vector<int> args;
    int var = -1; // quantifiers bind one slot each after splitting
    std::vector<KNode> children;
};

bool mentions(const Formula& f, const std::string& v) { return free_vars(f).count(v) > 0; }

Formula quantify(FormulaKind kind, const std::string& v, const Formula& body) {
    return kind == FormulaKind::Exists ? fo::exists({v}, body) : fo::forall({v}, body);
}

// Pushes one quantifier of an NNF body with distinct bound names as far in as it goes.
Formula push(FormulaKind kind, const std::string& v, const Formula& body) {
    if (!mentions(body, v))
        return body;
    const FormulaKind bk = body.kind();
    if (bk == FormulaKind::And || bk == FormulaKind::Or) {
        std::vector<Formula> with, without;
        for (const auto& c : body.children())
            (mentions(c, v) ? with : without).push_back(c);
        const bool distributes = (kind == FormulaKind::Forall) == (bk == FormulaKind::And);
        if (distributes) {
            for (const auto& c : with)
                without.push_back(push(kind, v, c));
        } else if (with.size() == 1) {
            without.push_back(push(kind, v, with.front()));
        } else {
            without.push_back(quantify(kind, v, bk == FormulaKind::And ? fo::conj(with) : fo::disj(with)));
        }
        return bk == FormulaKind::And ? fo::conj(without) : fo::disj(without);
    }
    if (bk == kind && body.variables().size() == 1) {
        Formula inner = push(kind, v, body.operand());
        if (inner.kind() == kind && inner.variables().front() == v)
            return quantify(kind, v, body);
        return push(kind, body.variables().front(), inner);
    }
    return quantify(kind, v, body);
}

Formula miniscope(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::And:
    case FormulaKind::Or: {
        std::vector<Formula> kids;
        for (const auto& c : f.children())
            kids.push_back(miniscope(c));
        return f.kind() == FormulaKind::And ? fo::conj(kids) : fo::disj(kids);
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        Formula body = miniscope(f.operand());
        const auto& vars = f.variables();
        for (auto it = vars.rbegin(); it != vars.rend(); ++it)
            body = push(f.kind(), *it, body);
        return body;
    }
    default:
        return f;
    }
}

class PartialChecker {
public:
    PartialChecker(const Signature& sig, int size, const Formula& sentence) : sig_(sig), n_(size) {
        std::size_t offset = 0;
        for (const auto& r : sig.relations()) {
            offsets_.push_back(offset);
            std::size_t p = 1;
            for (int i = 0; i < r.arity; ++i)
                p *= static_cast<std::size_t>(size);
            offset += p;
        }
        values_.assign(offset, kUnknown);
        root_ = compile(miniscope(rename_apart(to_nnf(sentence))));
        env_.assign(slots_.size(), 0);
    }

    std::vector<std::uint8_t>& values() { return values_; }
    int evaluate() { return eval(root_); }

private:
    KNode compile(const Formula& f) {
        KNode k;
        k.kind = f.kind();
        switch (f.kind()) {
        case FormulaKind::Atom:
            k.rel = sig_.index_of(f.relation());
            [[fallthrough]];
        case FormulaKind::Equal:
            for (const auto& v : f.variables())
                k.args.push_back(slot(v));
            return k;
        case FormulaKind::Not:
            k = compile(f.operand());
            k.positive = false;
            return k;
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            const auto& vars = f.variables();
            KNode body = compile(f.operand());
            for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
                KNode q;
                q.kind = f.kind();
                q.var = slot(*it);
                q.children.push_back(std::move(body));
                body = std::move(q);
            }
            return body;
        }
        default:
            for (const auto& c : f.children())
                k.children.push_back(compile(c));
            return k;
        }
    }

    int slot(const std::string& v) {
        auto [it, inserted] = slots_.emplace(v, static_cast<int>(slots_.size()));
        return it->second;
    }

    int eval(const KNode& k) {
        switch (k.kind) {
        case FormulaKind::True:
            return kTrue;
        case FormulaKind::False:
            return kFalse;
        case FormulaKind::Atom: {
            std::size_t index = 0;
            for (int a : k.args)
                index = index * static_cast<std::size_t>(n_) + static_cast<std::size_t>(env_[a]);
            int v = values_[offsets_[k.rel] + index];
            if (v == kUnknown || k.positive)
                return v;
            return 1 - v;
        }
        case FormulaKind::Equal:
            return ((env_[k.args[0]] == env_[k.args[1]]) == k.positive) ? kTrue : kFalse;
        case FormulaKind::And:
        case FormulaKind::Exists:
        case FormulaKind::Forall:
        case FormulaKind::Or: {
            const bool conjunctive = k.kind == FormulaKind::And || k.kind == FormulaKind::Forall;
            const int absorbing = conjunctive ? kFalse : kTrue;
            int result = conjunctive ? kTrue : kFalse;
            auto step = [&](int v) {
                if (v == absorbing)
                    return true;
                if (v == kUnknown)
                    result = kUnknown;
                return false;
            };
            if (k.var >= 0) {
                for (int e = 0; e < n_; ++e) {
                    env_[k.var] = e;
                    if (step(eval(k.children.front())))
                        return absorbing;
                }
            } else {
                for (const auto& c : k.children)
                    if (step(eval(c)))
                        return absorbing;
            }
            return result;
        }
        default:
            fail(ErrorKind::Precondition, "three-valued evaluation expects negation normal form");
        }
    }

    const Signature& sig_;
    int n_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint8_t> values_;
    std::map<std::string, int> slots_;
    std::vector<int> env_;
    KNode root_;
};

} // namespace

std::size_t enumeration_cap() {
    std::size_t v = cap_override.load();
    return v ? v : env_cap();
}

void set_enumeration_cap(std::size_t cap) { cap_override.store(cap); }

StructureEnumerator::StructureEnumerator(const Signature& signature, int size) : current_(signature, size) {
    const std::size_t slots = slot_count(signature, size);
    const std::size_t cap = enumeration_cap();
    if (slots > cap || slots >= 64)
        fail(ErrorKind::CapExceeded, "enumeration of size-" + std::to_string(size) + " structures over " +
                                         signature.to_string() + " needs " + std::to_string(slots) +
                                         " slots, cap is " + std::to_string(cap));
}

bool StructureEnumerator::next() {
    if (!started_) {
        started_ = true;
        return true;
    }
    // Binary increment with the last slot least significant.
    for (std::size_t i = current_.slot_count(); i-- > 0;) {
        if (!current_.slot(i)) {
            current_.set_slot(i, true);
            return true;
        }
        current_.set_slot(i, false);
    }
    return false;
}

std::optional<FiniteStructure> find_model(const Signature& signature, int size, const Formula& sentence) {
    if (!is_sentence(sentence))
        fail(ErrorKind::Structural, "find_model needs a sentence");
    check_signature(sentence, signature);
    FiniteStructure result(signature, size);
    PartialChecker checker(signature, size, sentence);
    auto& values = checker.values();
    const std::size_t total = values.size();

    // Iterative depth-first search; values[i] tracks the branch taken at depth i.
    std::size_t depth = 0;
    int status = checker.evaluate();
    if (status == kFalse)
        return std::nullopt;
    for (;;) {
        if (status == kTrue) {
            for (std::size_t i = 0; i < total; ++i)
                result.set_slot(i, values[i] == kTrue);
            return result;
        }
        if (status == kUnknown && depth < total) {
            values[depth] = kFalse;
            ++depth;
            status = checker.evaluate();
            continue;
        }
        // Backtrack to the deepest slot still set to 0.
        for (;;) {
            if (depth == 0)
                return std::nullopt;
            --depth;
            if (values[depth] == kFalse) {
                values[depth] = kTrue;
                ++depth;
                status = checker.evaluate();
                break;
            }
            values[depth] = kUnknown;
        }
    }
}

} // namespace fointerp
