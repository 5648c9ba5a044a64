#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fointerp/formula.hpp"
#include "fointerp/isomorphism.hpp"
#include "fointerp/structure.hpp"
#include "fointerp/syntax.hpp"

namespace fointerp {

struct RelationFormulas {
    Formula pos; // free variables x1..xn plus parameters
    Formula neg;
};

/// A target-signature schema carving a source structure out of a target one.
/// phiU has free variable x, relation formulas x1..xn, all of them possibly
/// also the parameters.
struct InterpretationSchema {
    Signature source;
    Signature target;
    std::vector<std::string> params;
    Formula phi_u = fo::top();
    std::optional<Formula> phi_not_u;
    std::map<std::string, RelationFormulas> relations;
};

/// Throws Structural when a formula uses symbols outside the target, has free
/// variables outside the allowed set, or a source relation lacks formulas.
void check_schema(const InterpretationSchema& schema);

/// Variable name of argument i (1-based) of relation formulas: "x1", "x2", ...
std::string argument_variable(int i);

struct Witness {
    FiniteStructure structure;
    std::map<std::string, Element> params;
};

struct ConditionReport {
    bool domain_nonempty = false;
    bool complement_consistent = false;
    /// Tuples over the domain where pos and neg agree (relation, tuple in the
    /// witness structure); at most kMaxViolations are kept.
    std::vector<std::pair<std::string, Tuple>> violations;
    /// Domain in ascending order; induced element i is domain[i].
    std::vector<Element> domain;
    std::optional<FiniteStructure> induced;

    static constexpr std::size_t kMaxViolations = 16;
};

/// Definition conditions 1 and 2 and the induced structure; failures are
/// reported, not thrown.
ConditionReport induce(const InterpretationSchema& schema, const Witness& w);

enum class VerifyStatus { Verified, EmptyDomain, InconsistentComplement, NotIsomorphic };
std::string to_string(VerifyStatus s);

struct VerifyReport {
    VerifyStatus status = VerifyStatus::NotIsomorphic;
    ConditionReport conditions;
    /// Source element a goes to witness element conditions.domain[(*bijection)[a]].
    std::optional<Bijection> bijection;

    bool ok() const { return status == VerifyStatus::Verified; }
};

/// induce, then isomorphism between a and the induced structure. Throws
/// Structural on signature mismatches or missing parameter values.
VerifyReport verify(const InterpretationSchema& schema, const FiniteStructure& a, const Witness& w);

/// Human-readable multi-line report (element names taken from the witness).
std::string describe(const VerifyReport& report, const Witness& w);

enum class TranslateMode {
    /// Atoms and guards are chosen by the type of the nearest enclosing
    /// quantifier: under exists phi[R] / phiNeg[R] / phiU, under forall
    /// !phiNeg[R] / !phi[R] / !phiU. Keeps the prefix class of the input.
    PrefixAware,
    /// phi[R] for positive and phiNeg[R] for negated atoms everywhere; forall
    /// guards use phiNotU when the schema has one, else !phiU.
    Literal
};

enum class ParamClosure { Existential, Open };

/// Relativized translation of a source sentence. Equality is kept. With
/// ParamClosure::Existential the parameters are bound by a leading exists.
/// Throws Structural when the input is not a sentence over the source.
Formula translate(const InterpretationSchema& schema, const Formula& sentence,
                  TranslateMode mode = TranslateMode::PrefixAware,
                  ParamClosure closure = ParamClosure::Existential);

/// Largest classify().k over the schema formulas, at least 1. Throws
/// Precondition when a schema formula classifies as Pi.
int schema_level(const InterpretationSchema& schema);

/// Prefix class bound for translations: (Pi, m) -> (Pi, m + k - 1) and
/// (Sigma, m) -> (Sigma, m + k - 1) with k = schema_level(schema); (Both, 0)
/// stays.
PrefixClass translation_class(const InterpretationSchema& schema, const PrefixClass& c);

} // namespace fointerp
