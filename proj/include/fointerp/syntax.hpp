#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fointerp/formula.hpp"
#include "fointerp/signature.hpp"

namespace fointerp {

/// Formula text grammar:
///
///   formula := iff
///   iff     := imp [ "<->" iff ]
///   imp     := or  [ "->" imp ]
///   or      := and { "|" and }
///   and     := unary { "&" unary }
///   unary   := "!" unary | ("forall" | "exists") var {var} "." formula | primary
///   primary := "(" formula ")" | "true" | "false" | R "(" var {"," var} ")"
///            | var "=" var | var "<" var | var ">" var | var "~" var
///
/// Unicode aliases: ∀ ∃ ¬ ∧ ∨ → ↔, and ≈ for "~". The binary symbols "<" and
/// "~" are ordinary relation names written infix; "x > y" reads as "y < x".
Formula parse(const std::string& text);
std::string render(const Formula& f);

std::set<std::string> free_vars(const Formula& f);
bool is_sentence(const Formula& f);
int quantifier_rank(const Formula& f);

/// Relation symbols used by the formula with their arities; throws Structural
/// when one symbol is used with two arities.
Signature infer_signature(const Formula& f);
/// Throws Structural on unknown relation symbols or arity mismatches.
void check_signature(const Formula& f, const Signature& signature);

/// Simultaneous capture-avoiding replacement of free variables by variables.
Formula substitute(const Formula& f, const std::map<std::string, std::string>& renaming);

/// Renames bound variables so that every quantifier binds names that are
/// neither free in f nor bound elsewhere in f. Fresh names use the reserved
/// suffix "'" followed by a counter ("x'1").
Formula rename_apart(const Formula& f);

/// Negation normal form: no Implies/Iff, negation only on atoms and equalities.
Formula to_nnf(const Formula& f);

/// Prenex form Q1 v1 ... Qm vm. matrix with a quantifier-free matrix.
///
/// Works on the renamed-apart NNF. Quantifiers below And/Or are interleaved so
/// that the number of homogeneous blocks is minimal among the orders that
/// respect quantifier nesting; on ties the prefix starts with a block of the
/// preferred type.
enum class PrefixStart { Existential, Universal };
Formula to_prenex(const Formula& f, PrefixStart prefer = PrefixStart::Existential);

enum class PrefixKind { Sigma, Pi, Both };

struct PrefixClass {
    PrefixKind kind = PrefixKind::Both;
    int k = 0;

    friend bool operator==(const PrefixClass&, const PrefixClass&) = default;
};

std::string to_string(const PrefixClass& c);
/// Inclusion of prefix classes: Sigma_k, Pi_k are contained in every class of
/// level k+1 or higher; Both_0 is contained in everything.
bool within(const PrefixClass& inner, const PrefixClass& outer);

/// Class of the prenex form produced by to_prenex(): number of blocks and the
/// type of the leading block, (Both, 0) when quantifier-free.
PrefixClass classify(const Formula& f);

/// Blocks of an already prenex formula (type, variables), outermost first.
struct QuantifierBlock {
    bool existential = true;
    std::vector<std::string> vars;
};
std::vector<QuantifierBlock> prefix_blocks(const Formula& prenex);
/// Strips the quantifier prefix of a prenex formula.
const Formula& matrix_of(const Formula& prenex);

} // namespace fointerp
