#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fointerp/formula.hpp"
#include "fointerp/structure.hpp"

namespace fointerp {

using Assignment = std::map<std::string, Element>;

/// Tarskian satisfaction. Throws Structural for unknown relation symbols,
/// arity mismatches and free variables that nu does not cover.
bool eval(const FiniteStructure& s, const Formula& f, const Assignment& nu = {});

/// Model checker bound to one structure.
///
/// Quantifier blocks are searched by backtracking; literals that must hold
/// for a witness narrow the candidates of their variable. Results of quantified
/// subformulas are cached per assignment of their free variables, and the
/// cache is shared by every formula checked through the same instance, keyed
/// by the subformula up to renaming of variables.
///
/// Not thread-safe; the structure must outlive the checker.
class ModelChecker {
public:
    explicit ModelChecker(const FiniteStructure& s);
    ~ModelChecker();
    ModelChecker(const ModelChecker&) = delete;
    ModelChecker& operator=(const ModelChecker&) = delete;

    const FiniteStructure& structure() const;

    bool holds(const Formula& f, const Assignment& nu = {});
    /// Elements b such that f holds with var := b and the rest taken from nu.
    std::vector<Element> satisfying(const Formula& f, const std::string& var, const Assignment& nu = {});

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace fointerp
