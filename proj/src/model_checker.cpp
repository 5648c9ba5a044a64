#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "fointerp/error.hpp"
#include "fointerp/eval.hpp"
#include "fointerp/syntax.hpp"

namespace fointerp {

namespace {

enum class Op { True, False, Atom, Eq, And, Or, Block };

// Candidate source for a variable: a literal that has to be true for the
// block to succeed, with every other argument already bound.
struct Generator {
    enum Kind { Equal, Unary, Out, In, Diagonal } kind;
    int rel = -1;
    int other = -1; // variable slot of the bound argument
};

struct Node {
    Op op = Op::True;
    bool positive = true;    // literals
    bool existential = true; // blocks
    int rel = -1;
    std::vector<int> args;   // literal arguments (variable slots)
    std::vector<int> vars;   // block variables in assignment order
    std::vector<Node> items; // operands; for a block: conjuncts (exists) or disjuncts (forall)

    // Block search plan.
    std::vector<int> pre;                       // items without block variables
    std::vector<std::vector<int>> at;           // items decided once vars[d] is bound
    std::vector<std::vector<Generator>> gens;   // candidate sources for vars[d]
    std::vector<int> free;                      // free variable slots in canonical order
    int memo = -1;
};

void collect_slots(const Node& n, std::set<int>& bound, std::set<int>& out) {
    switch (n.op) {
    case Op::Atom:
    case Op::Eq:
        for (int a : n.args)
            if (!bound.count(a))
                out.insert(a);
        return;
    case Op::Block: {
        std::vector<int> added;
        for (int v : n.vars)
            if (bound.insert(v).second)
                added.push_back(v);
        for (const auto& c : n.items)
            collect_slots(c, bound, out);
        for (int v : added)
            bound.erase(v);
        return;
    }
    default:
        for (const auto& c : n.items)
            collect_slots(c, bound, out);
    }
}

std::set<int> free_slots(const Node& n) {
    std::set<int> bound, out;
    collect_slots(n, bound, out);
    return out;
}

int item_rank(const Node& n) {
    switch (n.op) {
    case Op::True:
    case Op::False:
    case Op::Eq:
        return 0;
    case Op::Atom:
        return 1;
    case Op::And:
    case Op::Or:
        return 2;
    case Op::Block:
        return 3;
    }
    return 3;
}

// Variable naming for canonical keys: free slots by first occurrence, bound
// slots by binding order.
struct Canon {
    std::map<int, std::string> names;
    std::vector<int> free;
    int bound_count = 0;

    std::string name(int slot) {
        auto it = names.find(slot);
        if (it != names.end())
            return it->second;
        std::string n = "f" + std::to_string(free.size());
        free.push_back(slot);
        names.emplace(slot, n);
        return n;
    }

    void write(const Node& n, std::string& out) {
        switch (n.op) {
        case Op::True:
            out += 'T';
            return;
        case Op::False:
            out += 'F';
            return;
        case Op::Atom:
        case Op::Eq:
            out += n.positive ? '+' : '-';
            out += n.op == Op::Eq ? "=" : std::to_string(n.rel);
            out += '(';
            for (int a : n.args) {
                out += name(a);
                out += ',';
            }
            out += ')';
            return;
        case Op::And:
        case Op::Or:
            out += n.op == Op::And ? "&[" : "|[";
            for (const auto& c : n.items)
                write(c, out);
            out += ']';
            return;
        case Op::Block:
            out += n.existential ? "E{" : "A{";
            for (int v : n.vars) {
                std::string b = "b" + std::to_string(bound_count++);
                names[v] = b;
                out += b;
                out += ',';
            }
            out += ':';
            for (const auto& c : n.items)
                write(c, out);
            out += '}';
            return;
        }
    }
};

constexpr std::size_t kMaxMemoEntries = std::size_t{1} << 22;

} // namespace

struct ModelChecker::Impl {
    const FiniteStructure& s;
    int n;
    std::vector<std::vector<Element>> members;              // unary relations
    std::vector<std::vector<std::vector<Element>>> out, in; // binary relations
    std::vector<std::vector<Element>> diagonal;             // binary relations
    std::unordered_map<std::string, int> memo_ids;
    std::vector<std::vector<std::int8_t>> memo;
    std::vector<Element> env;

    explicit Impl(const FiniteStructure& st) : s(st), n(st.size()) {
        const auto& rels = s.signature().relations();
        members.resize(rels.size());
        out.resize(rels.size());
        in.resize(rels.size());
        diagonal.resize(rels.size());
        for (std::size_t r = 0; r < rels.size(); ++r) {
            const std::uint8_t* raw = s.raw(static_cast<int>(r));
            if (rels[r].arity == 1) {
                for (int a = 0; a < n; ++a)
                    if (raw[a])
                        members[r].push_back(a);
            } else if (rels[r].arity == 2) {
                out[r].resize(n);
                in[r].resize(n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (raw[a * n + b]) {
                            out[r][a].push_back(b);
                            in[r][b].push_back(a);
                            if (a == b)
                                diagonal[r].push_back(a);
                        }
            }
        }
    }

    // ---- compilation -------------------------------------------------------

    struct Scope {
        std::map<std::string, int> slots;
        int slot(const std::string& v) {
            auto [it, inserted] = slots.emplace(v, static_cast<int>(slots.size()));
            return it->second;
        }
    };

    Node compile(const Formula& f, Scope& scope) {
        Node node;
        switch (f.kind()) {
        case FormulaKind::True:
            node.op = Op::True;
            return node;
        case FormulaKind::False:
            node.op = Op::False;
            return node;
        case FormulaKind::Atom:
            node.op = Op::Atom;
            node.rel = s.signature().index_of(f.relation());
            for (const auto& v : f.variables())
                node.args.push_back(scope.slot(v));
            return node;
        case FormulaKind::Equal:
            node.op = Op::Eq;
            for (const auto& v : f.variables())
                node.args.push_back(scope.slot(v));
            return node;
        case FormulaKind::Not:
            node = compile(f.operand(), scope);
            node.positive = false;
            return node;
        case FormulaKind::And:
        case FormulaKind::Or: {
            node.op = f.kind() == FormulaKind::And ? Op::And : Op::Or;
            for (const auto& c : f.children()) {
                Node child = compile(c, scope);
                if (child.op == node.op)
                    for (auto& g : child.items)
                        node.items.push_back(std::move(g));
                else
                    node.items.push_back(std::move(child));
            }
            return node;
        }
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            std::vector<int> vars;
            for (const auto& v : f.variables())
                vars.push_back(scope.slot(v));
            return block(f.kind() == FormulaKind::Exists, std::move(vars), compile(f.operand(), scope));
        }
        default:
            fail(ErrorKind::Precondition, "model checker expects negation normal form");
        }
    }

    Node block(bool existential, std::vector<int> vars, Node body) {
        const Op spread = existential ? Op::Or : Op::And;
        const Op gather = existential ? Op::And : Op::Or;
        if (body.op == spread) {
            Node node;
            node.op = spread;
            for (auto& c : body.items) {
                const auto fs = free_slots(c);
                std::vector<int> used;
                for (int v : vars)
                    if (fs.count(v))
                        used.push_back(v);
                node.items.push_back(used.empty() ? std::move(c) : block(existential, used, std::move(c)));
            }
            return node;
        }
        std::vector<Node> pending;
        if (body.op == gather)
            pending = std::move(body.items);
        else
            pending.push_back(std::move(body));
        // A nested block of the same kind is merged only when it is the whole
        // body; otherwise it stays an item with its own memo table, so
        // independent witness searches are not multiplied together.
        bool chain = pending.size() == 1;
        std::vector<Node> items;
        while (!pending.empty()) {
            Node item = std::move(pending.back());
            pending.pop_back();
            if (chain && item.op == Op::Block && item.existential == existential) {
                chain = false;
                vars.insert(vars.end(), item.vars.begin(), item.vars.end());
                for (auto& g : item.items)
                    pending.push_back(std::move(g));
            } else if (item.op == gather) {
                for (auto& g : item.items)
                    pending.push_back(std::move(g));
            } else {
                items.push_back(std::move(item));
            }
        }
        std::reverse(items.begin(), items.end());

        std::set<int> mentioned;
        for (const auto& it : items)
            for (int v : free_slots(it))
                mentioned.insert(v);
        std::vector<int> kept;
        for (int v : vars)
            if (mentioned.count(v) && std::find(kept.begin(), kept.end(), v) == kept.end())
                kept.push_back(v);
        if (kept.empty()) {
            if (items.size() == 1)
                return std::move(items.front());
            Node node;
            node.op = items.empty() ? (existential ? Op::True : Op::False) : gather;
            node.items = std::move(items);
            return node;
        }

        Node node;
        node.op = Op::Block;
        node.existential = existential;
        node.items = std::move(items);
        plan(node, kept);

        Canon canon;
        std::string key;
        canon.write(node, key);
        node.free = canon.free;
        std::size_t entries = 1;
        bool small = node.free.size() <= 3;
        for (std::size_t i = 0; small && i < node.free.size(); ++i) {
            entries *= static_cast<std::size_t>(n);
            small = entries <= kMaxMemoEntries;
        }
        if (small) {
            auto [it, inserted] = memo_ids.emplace(key, static_cast<int>(memo.size()));
            if (inserted)
                memo.emplace_back(entries, std::int8_t{-1});
            node.memo = it->second;
        }
        return node;
    }

    // Whether the literal must have its atom true for the block to succeed.
    static bool needs_atom(const Node& item, bool existential) { return item.positive == existential; }

    std::vector<Generator> generators_for(const Node& item, int v, const std::set<int>& bound, bool existential) {
        std::vector<Generator> gens;
        if ((item.op != Op::Atom && item.op != Op::Eq) || !needs_atom(item, existential))
            return gens;
        const auto& args = item.args;
        for (int a : args)
            if (a != v && !bound.count(a))
                return gens;
        if (item.op == Op::Eq) {
            if (args[0] == v && args[1] != v)
                gens.push_back({Generator::Equal, -1, args[1]});
            else if (args[1] == v && args[0] != v)
                gens.push_back({Generator::Equal, -1, args[0]});
            return gens;
        }
        if (args.size() == 1 && args[0] == v) {
            gens.push_back({Generator::Unary, item.rel, -1});
        } else if (args.size() == 2) {
            if (args[0] == v && args[1] == v)
                gens.push_back({Generator::Diagonal, item.rel, -1});
            else if (args[0] == v)
                gens.push_back({Generator::In, item.rel, args[1]});
            else if (args[1] == v)
                gens.push_back({Generator::Out, item.rel, args[0]});
        }
        return gens;
    }

    // Greedy static order: prefer variables that get a candidate generator,
    // then those that complete the most items.
    void plan(Node& node, const std::vector<int>& vars) {
        const std::set<int> block_vars(vars.begin(), vars.end());
        std::vector<std::set<int>> uses;
        for (const auto& it : node.items) {
            std::set<int> u;
            for (int v : free_slots(it))
                if (block_vars.count(v))
                    u.insert(v);
            uses.push_back(std::move(u));
        }
        std::vector<bool> scheduled(node.items.size(), false);
        auto by_rank = [&](std::vector<int>& list) {
            std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
                return item_rank(node.items[a]) < item_rank(node.items[b]);
            });
        };
        for (std::size_t i = 0; i < node.items.size(); ++i)
            if (uses[i].empty()) {
                node.pre.push_back(static_cast<int>(i));
                scheduled[i] = true;
            }
        by_rank(node.pre);

        // Everything outside the block counts as bound.
        std::set<int> bound;
        for (const auto& it : node.items)
            for (int v : free_slots(it))
                if (!block_vars.count(v))
                    bound.insert(v);

        std::vector<int> remaining = vars;
        while (!remaining.empty()) {
            int best = -1;
            long best_score = -1;
            for (std::size_t r = 0; r < remaining.size(); ++r) {
                int v = remaining[r];
                std::set<int> with = bound;
                with.insert(v);
                long gens = 0, complete = 0, touching = 0;
                for (std::size_t i = 0; i < node.items.size(); ++i) {
                    if (scheduled[i] || !uses[i].count(v))
                        continue;
                    ++touching;
                    if (!generators_for(node.items[i], v, bound, node.existential).empty())
                        ++gens;
                    if (std::includes(with.begin(), with.end(), uses[i].begin(), uses[i].end()))
                        ++complete;
                }
                long score = (gens > 0 ? 1000000 : 0) + complete * 1000 + touching;
                if (score > best_score) {
                    best_score = score;
                    best = static_cast<int>(r);
                }
            }
            int v = remaining[best];
            remaining.erase(remaining.begin() + best);
            std::vector<int> now;
            std::vector<Generator> gens;
            for (std::size_t i = 0; i < node.items.size(); ++i) {
                if (scheduled[i] || !uses[i].count(v))
                    continue;
                for (const auto& g : generators_for(node.items[i], v, bound, node.existential))
                    gens.push_back(g);
            }
            bound.insert(v);
            for (std::size_t i = 0; i < node.items.size(); ++i) {
                if (scheduled[i])
                    continue;
                bool ready = true;
                for (int u : uses[i])
                    ready = ready && bound.count(u);
                if (ready) {
                    now.push_back(static_cast<int>(i));
                    scheduled[i] = true;
                }
            }
            by_rank(now);
            node.vars.push_back(v);
            node.at.push_back(std::move(now));
            node.gens.push_back(std::move(gens));
        }
    }

    // ---- evaluation --------------------------------------------------------

    bool atom_holds(const Node& nd) const {
        std::size_t index = 0;
        for (int a : nd.args)
            index = index * static_cast<std::size_t>(n) + static_cast<std::size_t>(env[a]);
        return s.raw(nd.rel)[index] != 0;
    }

    bool eval(const Node& nd) {
        switch (nd.op) {
        case Op::True:
            return true;
        case Op::False:
            return false;
        case Op::Atom:
            return atom_holds(nd) == nd.positive;
        case Op::Eq:
            return (env[nd.args[0]] == env[nd.args[1]]) == nd.positive;
        case Op::And:
            for (const auto& c : nd.items)
                if (!eval(c))
                    return false;
            return true;
        case Op::Or:
            for (const auto& c : nd.items)
                if (eval(c))
                    return true;
            return false;
        case Op::Block:
            return eval_block(nd);
        }
        return false;
    }

    bool eval_block(const Node& nd) {
        std::size_t index = 0;
        if (nd.memo >= 0) {
            for (int v : nd.free)
                index = index * static_cast<std::size_t>(n) + static_cast<std::size_t>(env[v]);
            std::int8_t cached = memo[nd.memo][index];
            if (cached >= 0)
                return cached != 0;
        }
        bool found = true;
        for (int i : nd.pre)
            if (eval(nd.items[i]) != nd.existential) {
                found = false;
                break;
            }
        if (found)
            found = search(nd, 0);
        bool result = nd.existential ? found : !found;
        if (nd.memo >= 0)
            memo[nd.memo][index] = result ? 1 : 0;
        return result;
    }

    bool accept(const Node& nd, std::size_t depth, Element value) {
        env[nd.vars[depth]] = value;
        for (int i : nd.at[depth])
            if (eval(nd.items[i]) != nd.existential)
                return false;
        return search(nd, depth + 1);
    }

    bool search(const Node& nd, std::size_t depth) {
        if (depth == nd.vars.size())
            return true;
        const std::vector<Element>* best = nullptr;
        for (const auto& g : nd.gens[depth]) {
            const std::vector<Element>* list = nullptr;
            switch (g.kind) {
            case Generator::Equal:
                return accept(nd, depth, env[g.other]);
            case Generator::Unary:
                list = &members[g.rel];
                break;
            case Generator::Diagonal:
                list = &diagonal[g.rel];
                break;
            case Generator::Out:
                list = &out[g.rel][env[g.other]];
                break;
            case Generator::In:
                list = &in[g.rel][env[g.other]];
                break;
            }
            if (!best || list->size() < best->size())
                best = list;
        }
        if (best) {
            for (Element e : *best)
                if (accept(nd, depth, e))
                    return true;
            return false;
        }
        for (Element e = 0; e < n; ++e)
            if (accept(nd, depth, e))
                return true;
        return false;
    }

    struct Compiled {
        Node root;
        Scope scope;
    };

    Compiled prepare(const Formula& f, const Assignment& nu, const std::string* open_var) {
        check_signature(f, s.signature());
        for (const auto& v : free_vars(f)) {
            if (open_var && v == *open_var)
                continue;
            auto it = nu.find(v);
            if (it == nu.end())
                fail(ErrorKind::Structural, "unbound variable '" + v + "'");
            if (it->second < 0 || it->second >= n)
                fail(ErrorKind::Structural, "variable '" + v + "' is assigned element " +
                                                std::to_string(it->second) + " outside the universe of size " +
                                                std::to_string(n));
        }
        Compiled c;
        // Free variables take the first slots so their names survive renaming.
        for (const auto& v : free_vars(f))
            c.scope.slot(v);
        c.root = compile(rename_apart(to_nnf(f)), c.scope);
        env.assign(c.scope.slots.size(), 0);
        for (const auto& [name, slot] : c.scope.slots) {
            auto it = nu.find(name);
            if (it != nu.end())
                env[slot] = it->second;
        }
        return c;
    }
};

ModelChecker::ModelChecker(const FiniteStructure& s) : impl_(std::make_unique<Impl>(s)) {}
ModelChecker::~ModelChecker() = default;

const FiniteStructure& ModelChecker::structure() const { return impl_->s; }

bool ModelChecker::holds(const Formula& f, const Assignment& nu) {
    auto c = impl_->prepare(f, nu, nullptr);
    return impl_->eval(c.root);
}

std::vector<Element> ModelChecker::satisfying(const Formula& f, const std::string& var, const Assignment& nu) {
    auto c = impl_->prepare(f, nu, &var);
    std::vector<Element> result;
    auto it = c.scope.slots.find(var);
    for (Element b = 0; b < impl_->n; ++b) {
        if (it != c.scope.slots.end())
            impl_->env[it->second] = b;
        if (impl_->eval(c.root))
            result.push_back(b);
    }
    return result;
}

bool eval(const FiniteStructure& s, const Formula& f, const Assignment& nu) {
    ModelChecker checker(s);
    return checker.holds(f, nu);
}

} // namespace fointerp
