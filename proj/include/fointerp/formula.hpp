#pragma once

#include <memory>
#include <string>
#include <vector>

namespace fointerp {

enum class FormulaKind { True, False, Atom, Equal, Not, And, Or, Implies, Iff, Exists, Forall };

/// Immutable first-order formula over variables only (no function or constant
/// symbols). Nodes are shared; copies are cheap and compare structurally.
///
/// And/Or are n-ary with at least two operands. Quantifier nodes bind a
/// non-empty list of variables.
class Formula {
public:
    FormulaKind kind() const { return node_->kind; }

    /// Relation symbol of an Atom.
    const std::string& relation() const { return node_->name; }
    /// Atom arguments, the two sides of Equal, or the bound variables of a quantifier.
    const std::vector<std::string>& variables() const { return node_->vars; }
    const std::vector<Formula>& children() const { return node_->children; }
    /// Single operand of Not or body of a quantifier.
    const Formula& operand() const { return node_->children.front(); }
    const Formula& lhs() const { return node_->children[0]; }
    const Formula& rhs() const { return node_->children[1]; }

    bool is_quantifier() const { return kind() == FormulaKind::Exists || kind() == FormulaKind::Forall; }
    bool is_literal() const;

    friend bool operator==(const Formula& a, const Formula& b);

    // Raw constructors; prefer the helpers in namespace fo.
    static Formula make(FormulaKind kind, std::string name, std::vector<std::string> vars,
                        std::vector<Formula> children);

private:
    struct Node {
        FormulaKind kind;
        std::string name;
        std::vector<std::string> vars;
        std::vector<Formula> children;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

namespace fo {

Formula top();
Formula bottom();
Formula atom(const std::string& relation, std::vector<std::string> args);
Formula eq(const std::string& a, const std::string& b);
Formula neg(Formula f);
/// Conjunction; an empty list gives top(), a single operand is returned as is.
Formula conj(std::vector<Formula> operands);
Formula disj(std::vector<Formula> operands);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula exists(std::vector<std::string> vars, Formula body);
Formula forall(std::vector<std::string> vars, Formula body);

} // namespace fo

} // namespace fointerp
