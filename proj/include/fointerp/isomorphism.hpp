#pragma once

#include <optional>
#include <vector>

#include "fointerp/structure.hpp"

namespace fointerp {

/// bijection[a] is the image in the second structure of element a of the first.
using Bijection = std::vector<Element>;

/// Backtracking search with degree-vector pruning. Throws Structural when the
/// signatures differ. Deterministic.
std::optional<Bijection> isomorphism(const FiniteStructure& a, const FiniteStructure& b);

/// Whether f maps every relation of a exactly onto the same relation of b.
bool is_isomorphism(const FiniteStructure& a, const FiniteStructure& b, const Bijection& f);

} // namespace fointerp
