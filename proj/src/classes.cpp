#include "fointerp/classes.hpp"

#include <random>

#include "fointerp/error.hpp"
#include "fointerp/eval.hpp"
#include "fointerp/syntax.hpp"

namespace fointerp {

namespace {

const char* const kGraph = "forall x. !E(x,x) & forall x y. (E(x,y) <-> E(y,x))";
const char* const kBipartite = "forall x. (L(x) <-> !R(x)) & forall x y. (E(x,y) -> L(x) & R(y))";
const char* const kThreePerSide =
    "(exists x1 x2 x3. (L(x1) & L(x2) & L(x3) & !(x1 = x2) & !(x1 = x3) & !(x2 = x3)))"
    " & (exists y1 y2 y3. (R(y1) & R(y2) & R(y3) & !(y1 = y2) & !(y1 = y3) & !(y2 = y3)))";

std::string equivalence(const std::string& r) {
    auto at = [&](const char* a, const char* b) { return r + "(" + a + "," + b + ")"; };
    return "forall x. " + at("x", "x") + " & forall x y. (" + at("x", "y") + " -> " + at("y", "x") +
           ") & forall x y z. (" + at("x", "y") + " & " + at("y", "z") + " -> " + at("x", "z") + ")";
}

const char* const kLinearOrder =
    "forall x. !(x < x) & forall x y z. (x < y & y < z -> x < z) & forall x y. (x < y | x = y | y < x)";
const char* const kEquivalenceInfix =
    "forall x. x ~ x & forall x y. (x ~ y -> y ~ x) & forall x y z. (x ~ y & y ~ z -> x ~ z)";

void require_not_all(ClassId c) {
    if (c == ClassId::All)
        fail(ErrorKind::Precondition, "the class 'all' has no axiom or fixed signature");
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<int> random_labels(std::mt19937_64& rng, int size) {
    std::vector<int> labels(size);
    for (auto& l : labels)
        l = static_cast<int>(rng() % static_cast<std::uint64_t>(size));
    return labels;
}

} // namespace

std::string to_string(ClassId c) {
    switch (c) {
    case ClassId::SimpleGraph:
        return "graph";
    case ClassId::BipartiteGraph:
        return "bigraph";
    case ClassId::BipartiteGraph3:
        return "bigraph3";
    case ClassId::TwoEq:
        return "2eq";
    case ClassId::LEq:
        return "leq";
    case ClassId::All:
        return "all";
    }
    return "?";
}

std::optional<ClassId> class_from_string(const std::string& name) {
    for (ClassId c : {ClassId::SimpleGraph, ClassId::BipartiteGraph, ClassId::BipartiteGraph3, ClassId::TwoEq,
                      ClassId::LEq, ClassId::All})
        if (to_string(c) == name)
            return c;
    return std::nullopt;
}

Signature class_signature(ClassId c) {
    require_not_all(c);
    switch (c) {
    case ClassId::SimpleGraph:
        return Signature{{"E", 2}};
    case ClassId::BipartiteGraph:
    case ClassId::BipartiteGraph3:
        return Signature{{"L", 1}, {"R", 1}, {"E", 2}};
    case ClassId::TwoEq:
        return Signature{{"P", 2}, {"Q", 2}};
    default:
        return Signature{{"<", 2}, {"~", 2}};
    }
}

Formula axiom(ClassId c) {
    require_not_all(c);
    switch (c) {
    case ClassId::SimpleGraph:
        return parse(kGraph);
    case ClassId::BipartiteGraph:
        return parse(kBipartite);
    case ClassId::BipartiteGraph3:
        return fo::conj({parse(kBipartite), parse(kThreePerSide)});
    case ClassId::TwoEq:
        return fo::conj({parse(equivalence("P")), parse(equivalence("Q"))});
    default:
        return fo::conj({parse(kLinearOrder), parse(kEquivalenceInfix)});
    }
}

bool validate(ClassId c, const FiniteStructure& s) {
    if (c == ClassId::All)
        return true;
    const Signature sig = class_signature(c);
    if (!(s.signature() == sig))
        fail(ErrorKind::Structural, "class '" + to_string(c) + "' needs signature " + sig.to_string() + ", got " +
                                        s.signature().to_string());
    return eval(s, axiom(c));
}

FiniteStructure gen_random(ClassId c, const SizeSpec& spec, std::uint64_t seed) {
    require_not_all(c);
    if (!(spec.p >= 0.0 && spec.p <= 1.0))
        fail(ErrorKind::Precondition, "edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    switch (c) {
    case ClassId::SimpleGraph: {
        if (spec.size < 1)
            fail(ErrorKind::Precondition, "graph size must be at least 1");
        FiniteStructure s(class_signature(c), spec.size);
        for (int a = 0; a < spec.size; ++a)
            for (int b = a + 1; b < spec.size; ++b)
                if (unit(rng) < spec.p) {
                    s.set("E", {a, b});
                    s.set("E", {b, a});
                }
        return s;
    }
    case ClassId::BipartiteGraph:
    case ClassId::BipartiteGraph3: {
        const int minimum = c == ClassId::BipartiteGraph3 ? 3 : 0;
        if (spec.left < minimum || spec.right < minimum || spec.left + spec.right < 1)
            fail(ErrorKind::Precondition, "class '" + to_string(c) + "' needs left, right >= " +
                                              std::to_string(minimum) + " and a nonempty universe (got " +
                                              std::to_string(spec.left) + ", " + std::to_string(spec.right) + ")");
        FiniteStructure s(class_signature(c), spec.left + spec.right);
        for (int a = 0; a < spec.left; ++a)
            s.set("L", {a});
        for (int b = spec.left; b < spec.left + spec.right; ++b)
            s.set("R", {b});
        for (int a = 0; a < spec.left; ++a)
            for (int b = spec.left; b < spec.left + spec.right; ++b)
                if (unit(rng) < spec.p)
                    s.set("E", {a, b});
        return s;
    }
    case ClassId::TwoEq: {
        if (spec.size < 1)
            fail(ErrorKind::Precondition, "2eq size must be at least 1");
        FiniteStructure s(class_signature(c), spec.size);
        const auto p = random_labels(rng, spec.size);
        const auto q = random_labels(rng, spec.size);
        set_equivalence(s, "P", p);
        set_equivalence(s, "Q", q);
        return s;
    }
    default: {
        if (spec.size < 1)
            fail(ErrorKind::Precondition, "leq size must be at least 1");
        FiniteStructure s(class_signature(c), spec.size);
        for (int a = 0; a < spec.size; ++a)
            for (int b = a + 1; b < spec.size; ++b)
                s.set("<", {a, b});
        set_equivalence(s, "~", random_labels(rng, spec.size));
        return s;
    }
    }
}

} // namespace fointerp
