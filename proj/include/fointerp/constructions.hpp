#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fointerp/classes.hpp"
#include "fointerp/interpret.hpp"

namespace fointerp {

enum class ConstructionKind {
    Big2EqParam,    // bipartite graphs into two equivalences, parameters yL yR yP yN
    Big2Eq,         // the same without parameters
    TwoEq2LeqParam, // two equivalences into order + equivalence, parameter y
    TwoEq2Leq       // the same without parameters
};

/// CLI names: big2eq-param, big2eq, 2eq2leq-param, 2eq2leq.
std::string to_string(ConstructionKind k);
std::optional<ConstructionKind> construction_from_string(const std::string& name);

ClassId source_class(ConstructionKind k);
ClassId target_class(ConstructionKind k);

/// The target model built from a. Elements of a keep their indices in the
/// result; the added elements follow and are named in the structure's name
/// table (cL, sE_1_2, cP~3, s0_1, a*, a~2, r1_1, c4, ...). Elements of a are
/// named l1.., r1.. (graphs) or a1.. (two equivalences).
///
/// Big2EqParam needs a bipartite graph, Big2Eq one with at least three
/// vertices per side, the LEq kinds a model of two equivalences; otherwise
/// throws Precondition.
Witness build(ConstructionKind k, const FiniteStructure& a);

InterpretationSchema schema(ConstructionKind k);

/// P-bar(v1..vk): the conjunction of P(vi, vj) over all 1 <= i, j <= k.
Formula p_bar(const std::vector<std::string>& vars);

/// Theta_{k1,k2,k3}(x1..xk1; y1..yk2), quantifier-free. The pairwise !Q
/// conjuncts range over i != j. Throws Precondition unless
/// 1 <= k3 <= min(k1, k2).
Formula theta(int k1, int k2, int k3);

/// |(class_P(a) x class_P(b)) n Q|. Throws Precondition when a and b are
/// P-equivalent or s is not a model of two equivalences.
int q_link_count(const FiniteStructure& s, Element a, Element b);

enum class Marker { PsiL, PsiR, PsiP, PsiN, Psi, AStar };
std::string to_string(Marker m);
std::optional<Marker> marker_from_string(const std::string& name);

/// Free variable x, except AStar which uses y.
Formula marker_formula(Marker m);
std::string marker_variable(Marker m);

/// {b : s |= f[var := b]}. Throws Structural unless free_vars(f) == {var}.
std::vector<Element> definable_set(const FiniteStructure& s, const Formula& f, const std::string& var);

/// The example inputs used by demo(): the 2x2 graph with edges (l1,r1),
/// (l2,r2); the 3x3 graph with edges (li,ri); a 4-element model with two
/// P-classes and two Q-classes.
FiniteStructure example_graph_2x2();
FiniteStructure example_graph_3x3();
FiniteStructure example_two_eq();

/// Text rendering of the construction on its example input: the class lists
/// of both equivalences, or the order chain and the ~-classes.
std::string demo(ConstructionKind k);

} // namespace fointerp
