#include <gtest/gtest.h>

#include "fointerp/classes.hpp"
#include "fointerp/constructions.hpp"
#include "fointerp/error.hpp"
#include "fointerp/eval.hpp"
#include "fointerp/interpret.hpp"
#include "fointerp/json_io.hpp"
#include "oracles.hpp"

using namespace fointerp;

namespace {

std::vector<Element> elements(const FiniteStructure& s, std::initializer_list<const char*> names) {
    std::vector<Element> out;
    for (const char* n : names)
        out.push_back(s.at(n));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Induce, ParameterizedGraphExample) {
    const FiniteStructure g0 = example_graph_2x2();
    const Witness w = build(ConstructionKind::Big2EqParam, g0);
    const ConditionReport r = induce(schema(ConstructionKind::Big2EqParam), w);
    EXPECT_TRUE(r.domain_nonempty);
    EXPECT_TRUE(r.complement_consistent);
    EXPECT_EQ(r.domain, elements(w.structure, {"l1", "l2", "r1", "r2"}));
    ASSERT_TRUE(r.induced);
    EXPECT_TRUE(isomorphism(g0, *r.induced));
}

TEST(Induce, EmptyDomain) {
    InterpretationSchema s = schema(ConstructionKind::Big2EqParam);
    s.phi_u = parse("!(x = x)");
    const ConditionReport r = induce(s, build(ConstructionKind::Big2EqParam, example_graph_2x2()));
    EXPECT_FALSE(r.domain_nonempty);
    EXPECT_FALSE(r.induced);
}

TEST(Induce, SwappedParametersBreakACondition) {
    const FiniteStructure g0 = example_graph_2x2();
    Witness w = build(ConstructionKind::Big2EqParam, g0);
    const auto& b = w.structure;
    w.params = {{"yL", b.at("cP")}, {"yR", b.at("cR")}, {"yP", b.at("cL")}, {"yN", b.at("cN")}};
    const VerifyReport r = verify(schema(ConstructionKind::Big2EqParam), g0, w);
    EXPECT_FALSE(r.ok());
    // cP's P-class is {cP}; Q-class of cP is the edge class, so phiU keeps only the R side.
    EXPECT_EQ(r.conditions.domain, elements(b, {"r1", "r2"}));
    EXPECT_EQ(r.status, VerifyStatus::NotIsomorphic);
}

TEST(Verify, SuccessAndFailure) {
    const FiniteStructure g0 = example_graph_2x2();
    const auto sch = schema(ConstructionKind::Big2EqParam);
    const VerifyReport ok = verify(sch, g0, build(ConstructionKind::Big2EqParam, g0));
    EXPECT_TRUE(ok.ok());
    ASSERT_TRUE(ok.bijection);

    // A graph with the crossed edges is isomorphic to G0.
    FiniteStructure crossed = g0;
    crossed.set("E", {0, 2}, false);
    crossed.set("E", {1, 3}, false);
    crossed.set("E", {0, 3});
    crossed.set("E", {1, 2});
    EXPECT_TRUE(verify(sch, g0, build(ConstructionKind::Big2EqParam, crossed)).ok());

    FiniteStructure three = crossed;
    three.set("E", {0, 2});
    const VerifyReport bad = verify(sch, g0, build(ConstructionKind::Big2EqParam, three));
    EXPECT_EQ(bad.status, VerifyStatus::NotIsomorphic);
    EXPECT_NE(describe(bad, build(ConstructionKind::Big2EqParam, three)).find("not isomorphic"), std::string::npos);

    EXPECT_THROW(verify(sch, example_two_eq(), build(ConstructionKind::Big2EqParam, g0)), Error);
    Witness missing = build(ConstructionKind::Big2EqParam, g0);
    missing.params.erase("yN");
    EXPECT_THROW(verify(sch, g0, missing), Error);
}

TEST(Verify, LeqParameterFreeOnRandomModel) {
    const FiniteStructure a = gen_random(ClassId::TwoEq, {5, 3, 3, 0.5}, 12);
    EXPECT_TRUE(verify(schema(ConstructionKind::TwoEq2Leq), a, build(ConstructionKind::TwoEq2Leq, a)).ok());
}

// The P formulas of the parameter-free order construction as printed (z1 ~ x1
// without the x1 < z1 guard) also hold for pairs related only through the
// marker intervals, so condition 2 fails.
TEST(Verify, VerbatimOrderSchemaFailsComplementCondition) {
    InterpretationSchema s = schema(ConstructionKind::TwoEq2Leq);
    const std::string head = "exists y y0 y1 y2 z1 z2. ((exists x1 x2 x3. (y ~ x1 & x1 ~ x2 & x2 ~ x3 & y < x1 & "
                             "x1 < x2 & x2 < x3)) & y0 < y & y < y1 & y1 < y2 & y0 ~ y1 & y1 ~ y2 & z1 ~ x1 & "
                             "z2 ~ x2 & ";
    s.relations.at("P") = {parse(head + "y1 < z1 & z1 < y2 & y1 < z2 & z2 < y2)"),
                           parse(head + "((z1 < y2 & y2 < z2) | (z2 < y2 & y2 < z1)))")};
    const FiniteStructure a = example_two_eq();
    const VerifyReport r = verify(s, a, build(ConstructionKind::TwoEq2Leq, a));
    EXPECT_EQ(r.status, VerifyStatus::InconsistentComplement);
    EXPECT_FALSE(r.conditions.violations.empty());
}

TEST(Translate, ShapesAndErrors) {
    const auto sch = schema(ConstructionKind::Big2EqParam);
    EXPECT_EQ(translate(sch, parse("exists x. L(x)"), TranslateMode::Literal, ParamClosure::Open),
              fo::exists({"x"}, fo::conj({sch.phi_u, parse("P(x,yL)")})));
    Formula closed = translate(sch, parse("exists x. L(x)"));
    EXPECT_EQ(closed.kind(), FormulaKind::Exists);
    EXPECT_EQ(closed.variables(), sch.params);
    EXPECT_THROW(translate(sch, parse("L(x)")), Error);
    EXPECT_THROW(translate(sch, parse("exists x. P(x,x)")), Error);
}

TEST(Translate, BoundVariablesAvoidParameters) {
    const auto sch = schema(ConstructionKind::TwoEq2LeqParam);
    Formula t = translate(sch, parse("exists y. forall x. (P(x,y) | Q(x,y))"), TranslateMode::PrefixAware,
                          ParamClosure::Open);
    EXPECT_EQ(free_vars(t), (std::set<std::string>{"y"}));
    const FiniteStructure a = example_two_eq();
    const Witness w = build(ConstructionKind::TwoEq2LeqParam, a);
    Assignment nu(w.params.begin(), w.params.end());
    EXPECT_EQ(eval(w.structure, t, nu), oracle::naive_eval(a, parse("exists y. forall x. (P(x,y) | Q(x,y))")));
}

TEST(Translate, Examples) {
    const Witness w1 = build(ConstructionKind::Big2Eq, example_graph_3x3());
    const auto free_schema = schema(ConstructionKind::Big2Eq);
    EXPECT_TRUE(eval(w1.structure, translate(free_schema, parse("exists x. (x = x)"))));
    Formula t = translate(free_schema, parse("exists x. L(x)"));
    EXPECT_EQ(classify(t), (PrefixClass{PrefixKind::Sigma, 1}));
    EXPECT_TRUE(eval(w1.structure, t));

    const FiniteStructure g0 = example_graph_2x2();
    const Witness w0 = build(ConstructionKind::Big2EqParam, g0);
    const Formula phi = parse("forall x. (L(x) | R(x))");
    EXPECT_TRUE(oracle::naive_eval(g0, phi));
    EXPECT_TRUE(eval(w0.structure, translate(schema(ConstructionKind::Big2EqParam), phi)));
}

// Existential closure of the parameters is not truth preserving: a choice of
// parameters with an empty domain makes every universal sentence true.
TEST(Translate, ExistentialClosureCounterexample) {
    const FiniteStructure g0 = example_graph_2x2();
    const Witness w0 = build(ConstructionKind::Big2EqParam, g0);
    const auto sch = schema(ConstructionKind::Big2EqParam);
    const Formula phi = parse("forall x. !L(x)");
    EXPECT_FALSE(oracle::naive_eval(g0, phi));
    EXPECT_TRUE(eval(w0.structure, translate(sch, phi)));
    Assignment nu(w0.params.begin(), w0.params.end());
    EXPECT_FALSE(eval(w0.structure, translate(sch, phi, TranslateMode::PrefixAware, ParamClosure::Open), nu));
}

TEST(Translate, LiteralModeIsSoundToo) {
    oracle::Rng rng(31);
    for (auto k : {ConstructionKind::Big2EqParam, ConstructionKind::TwoEq2LeqParam, ConstructionKind::TwoEq2Leq}) {
        const auto sch = schema(k);
        for (int i = 0; i < 25; ++i) {
            FiniteStructure a = k == ConstructionKind::Big2EqParam
                                    ? gen_random(ClassId::BipartiteGraph, {0, 2, 2, 0.5}, rng())
                                    : gen_random(ClassId::TwoEq, {1 + i % 4, 0, 0, 0.5}, rng());
            const Witness w = build(k, a);
            Assignment nu(w.params.begin(), w.params.end());
            Formula phi = oracle::random_sentence(rng, sch.source, 2, 3);
            EXPECT_EQ(eval(w.structure, translate(sch, phi, TranslateMode::Literal, ParamClosure::Open), nu),
                      oracle::naive_eval(a, phi))
                << to_string(k) << ": " << render(phi);
        }
    }
}

TEST(TranslationClass, Arithmetic) {
    const auto one = schema(ConstructionKind::Big2Eq);
    EXPECT_EQ(schema_level(one), 1);
    EXPECT_EQ(translation_class(one, {PrefixKind::Sigma, 2}), (PrefixClass{PrefixKind::Sigma, 2}));
    EXPECT_EQ(translation_class(one, {PrefixKind::Pi, 2}), (PrefixClass{PrefixKind::Pi, 2}));
    EXPECT_EQ(translation_class(one, {PrefixKind::Both, 0}), (PrefixClass{PrefixKind::Both, 0}));

    InterpretationSchema two = one;
    two.phi_u = fo::exists({"t"}, fo::forall({"s"}, parse("P(x,t) & !Q(s,t)")));
    EXPECT_EQ(schema_level(two), 2);
    EXPECT_EQ(translation_class(two, {PrefixKind::Sigma, 3}), (PrefixClass{PrefixKind::Sigma, 4}));

    InterpretationSchema pi = one;
    pi.phi_u = fo::forall({"t"}, parse("P(x,t)"));
    EXPECT_THROW(schema_level(pi), Error);
}

TEST(Schema, CheckRejectsBadSchemas) {
    InterpretationSchema s = schema(ConstructionKind::Big2EqParam);
    s.phi_u = parse("P(x,z)");
    EXPECT_THROW(check_schema(s), Error);
    s = schema(ConstructionKind::Big2EqParam);
    s.relations.erase("E");
    EXPECT_THROW(check_schema(s), Error);
    s = schema(ConstructionKind::Big2EqParam);
    s.relations.at("L").pos = parse("F(x1)");
    EXPECT_THROW(check_schema(s), Error);
}

TEST(Schema, JsonRoundTrip) {
    for (auto k : {ConstructionKind::Big2EqParam, ConstructionKind::Big2Eq, ConstructionKind::TwoEq2LeqParam,
                   ConstructionKind::TwoEq2Leq}) {
        const auto sch = schema(k);
        const std::string text = schema_to_json(sch);
        const auto back = schema_from_json(text);
        EXPECT_EQ(back.source, sch.source);
        EXPECT_EQ(back.target, sch.target);
        EXPECT_EQ(back.params, sch.params);
        EXPECT_EQ(back.phi_u, sch.phi_u);
        EXPECT_EQ(back.phi_not_u.has_value(), sch.phi_not_u.has_value());
        for (const auto& [name, rf] : sch.relations) {
            EXPECT_EQ(back.relations.at(name).pos, rf.pos);
            EXPECT_EQ(back.relations.at(name).neg, rf.neg);
        }
        EXPECT_EQ(schema_to_json(back), text);
    }
}
