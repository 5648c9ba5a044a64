#pragma once

#include <optional>
#include <string>

#include "fointerp/classes.hpp"
#include "fointerp/formula.hpp"
#include "fointerp/signature.hpp"
#include "fointerp/structure.hpp"

namespace fointerp {

enum class Outcome { Valid, Invalid };

/// Backtracking uses find_model and has no slot cap. Enumeration scans
/// StructureEnumerator and throws CapExceeded above enumeration_cap().
enum class Search { Backtracking, Enumeration };
std::string to_string(Outcome o);

struct Pi2Verdict {
    Outcome outcome = Outcome::Valid;
    int bound = 1;
    /// Present iff Invalid; falsifies the sentence and has the smallest size.
    std::optional<FiniteStructure> countermodel;
};

/// max(1, number of existential variables in the prenex form of !phi).
/// Throws Precondition unless phi is a sentence in Pi 2 (Sigma 1 included).
int bsr_bound(const Formula& phi);

/// Valid iff no structure over sig of size <= bsr_bound(phi) falsifies phi.
/// Sizes are searched in ascending order and the first falsifying structure
/// in enumeration order is returned; both search modes agree.
Pi2Verdict decide_pi2(const Signature& sig, const Formula& phi, Search mode = Search::Backtracking);

/// to_prenex(!theta | phi). Throws Precondition unless theta is in Sigma 2
/// and phi in Pi 2.
Formula relativize_to_class(const Formula& theta, const Formula& phi);

/// decide_pi2(sig, relativize_to_class(theta, phi)); a countermodel satisfies
/// theta and falsifies phi.
Pi2Verdict decide_pi2_in_class(const Signature& sig, const Formula& theta, const Formula& phi,
                               Search mode = Search::Backtracking);
/// Signature inferred from both sentences.
Pi2Verdict decide_pi2_in_class(const Formula& theta, const Formula& phi);

/// Smallest member of class c with at most max_size elements falsifying phi,
/// or nothing. Nothing only means phi holds on the members up to max_size.
std::optional<FiniteStructure> search_counterexample(ClassId c, const Formula& phi, int max_size,
                                                     Search mode = Search::Backtracking);

/// {"outcome": "valid" | "invalid", "bound": k, "countermodel": structure?}
std::string verdict_to_json(const Pi2Verdict& v);

} // namespace fointerp
