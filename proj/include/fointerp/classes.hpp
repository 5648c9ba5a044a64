#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fointerp/formula.hpp"
#include "fointerp/structure.hpp"

namespace fointerp {

enum class ClassId { SimpleGraph, BipartiteGraph, BipartiteGraph3, TwoEq, LEq, All };

/// CLI names: graph, bigraph, bigraph3, 2eq, leq, all.
std::string to_string(ClassId c);
std::optional<ClassId> class_from_string(const std::string& name);

/// {E}, {L, R, E}, {P, Q}, {"<", "~"}; throws Precondition for All.
Signature class_signature(ClassId c);

/// Axiom sentence over class_signature(c); throws Precondition for All.
Formula axiom(ClassId c);

/// S |= axiom(c); always true for All. Throws Structural when the signature of
/// S is not the class signature.
bool validate(ClassId c, const FiniteStructure& s);

struct SizeSpec {
    int size = 5;     // graph, 2eq, leq
    int left = 3;     // bigraph, bigraph3
    int right = 3;
    double p = 0.5;   // edge probability
};

/// Random class member, deterministic in the seed (std::mt19937_64 raw output).
///   SimpleGraph: each unordered pair is an edge with probability p.
///   BipartiteGraph(3): L = 0..left-1, R = left..left+right-1, edges L x R with probability p.
///   TwoEq: two independent partitions, each element labelled uniformly in [0, size).
///   LEq: the natural order on 0..size-1 and one random partition.
/// Throws Precondition for invalid specs and for All.
FiniteStructure gen_random(ClassId c, const SizeSpec& spec, std::uint64_t seed);

} // namespace fointerp
