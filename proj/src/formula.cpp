#include "fointerp/formula.hpp"

#include "fointerp/error.hpp"

namespace fointerp {

Formula Formula::make(FormulaKind kind, std::string name, std::vector<std::string> vars,
                      std::vector<Formula> children) {
    return Formula(std::make_shared<const Node>(Node{kind, std::move(name), std::move(vars), std::move(children)}));
}

bool Formula::is_literal() const {
    switch (kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Equal:
    case FormulaKind::True:
    case FormulaKind::False:
        return true;
    case FormulaKind::Not:
        return operand().kind() == FormulaKind::Atom || operand().kind() == FormulaKind::Equal;
    default:
        return false;
    }
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_)
        return true;
    return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name && a.node_->vars == b.node_->vars &&
           a.node_->children == b.node_->children;
}

namespace fo {

Formula top() { return Formula::make(FormulaKind::True, {}, {}, {}); }
Formula bottom() { return Formula::make(FormulaKind::False, {}, {}, {}); }

Formula atom(const std::string& relation, std::vector<std::string> args) {
    if (args.empty())
        fail(ErrorKind::Structural, "atom '" + relation + "' needs at least one argument");
    return Formula::make(FormulaKind::Atom, relation, std::move(args), {});
}

Formula eq(const std::string& a, const std::string& b) { return Formula::make(FormulaKind::Equal, {}, {a, b}, {}); }

Formula neg(Formula f) { return Formula::make(FormulaKind::Not, {}, {}, {std::move(f)}); }

Formula conj(std::vector<Formula> operands) {
    if (operands.empty())
        return top();
    if (operands.size() == 1)
        return operands.front();
    return Formula::make(FormulaKind::And, {}, {}, std::move(operands));
}

Formula disj(std::vector<Formula> operands) {
    if (operands.empty())
        return bottom();
    if (operands.size() == 1)
        return operands.front();
    return Formula::make(FormulaKind::Or, {}, {}, std::move(operands));
}

Formula implies(Formula a, Formula b) {
    return Formula::make(FormulaKind::Implies, {}, {}, {std::move(a), std::move(b)});
}

Formula iff(Formula a, Formula b) { return Formula::make(FormulaKind::Iff, {}, {}, {std::move(a), std::move(b)}); }

Formula exists(std::vector<std::string> vars, Formula body) {
    if (vars.empty())
        fail(ErrorKind::Structural, "quantifier without variables");
    return Formula::make(FormulaKind::Exists, {}, std::move(vars), {std::move(body)});
}

Formula forall(std::vector<std::string> vars, Formula body) {
    if (vars.empty())
        fail(ErrorKind::Structural, "quantifier without variables");
    return Formula::make(FormulaKind::Forall, {}, std::move(vars), {std::move(body)});
}

} // namespace fo

} // namespace fointerp
