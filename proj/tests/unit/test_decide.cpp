#include <gtest/gtest.h>

#include "fointerp/classes.hpp"
#include "fointerp/decide.hpp"
#include "fointerp/enumerate.hpp"
#include "fointerp/error.hpp"
#include "fointerp/eval.hpp"
#include "fointerp/json_io.hpp"
#include "fointerp/syntax.hpp"
#include "oracles.hpp"

#include <json.hpp>

using namespace fointerp;

namespace {

// Smallest structure of size <= bound falsifying phi, by the naive oracles.
std::optional<FiniteStructure> naive_counter(const Signature& sig, const Formula& phi, int bound) {
    return oracle::first_structure(sig, bound, [&](const FiniteStructure& s) { return !oracle::naive_eval(s, phi); });
}

} // namespace

TEST(BsrBound, Examples) {
    EXPECT_EQ(bsr_bound(parse("forall x. exists y. (x = y)")), 1);
    EXPECT_EQ(bsr_bound(parse("forall x y. exists z. (E(x,z) & E(z,y))")), 2);
    EXPECT_EQ(bsr_bound(parse("forall x. E(x,x)")), 1);
    EXPECT_EQ(bsr_bound(parse("exists x. E(x,x)")), 1);
    EXPECT_EQ(bsr_bound(parse("true")), 1);
    EXPECT_THROW(bsr_bound(parse("exists x. forall y. E(x,y)")), Error);
    EXPECT_THROW(bsr_bound(parse("forall x. exists y. forall z. E(x,y)")), Error);
    EXPECT_THROW(bsr_bound(parse("E(x,x)")), Error);
}

TEST(DecidePi2, Examples) {
    const Pi2Verdict trivial = decide_pi2(Signature{}, parse("forall x. exists y. (x = y)"));
    EXPECT_EQ(trivial.outcome, Outcome::Valid);
    EXPECT_FALSE(trivial.countermodel);

    const Signature e{{"E", 2}};
    const Pi2Verdict serial = decide_pi2(e, parse("forall x. exists y. E(x,y)"));
    ASSERT_EQ(serial.outcome, Outcome::Invalid);
    ASSERT_TRUE(serial.countermodel);
    EXPECT_EQ(serial.countermodel->size(), 1);
    EXPECT_EQ(serial.countermodel->tuple_count(0), 0u);

    const Signature p{{"P", 2}};
    const Pi2Verdict sym = decide_pi2(p, parse("forall x y. (P(x,y) -> P(y,x))"));
    ASSERT_EQ(sym.outcome, Outcome::Invalid);
    EXPECT_EQ(sym.countermodel->size(), 2);
    EXPECT_EQ(sym.bound, 2);
}

TEST(DecidePi2, AgreesWithNaiveEnumerator) {
    oracle::Rng rng(404);
    const std::vector<Signature> sigs{Signature{{"E", 2}}, Signature{{"U", 1}, {"E", 2}}, Signature{{"U", 1}, {"V", 1}}};
    int invalid = 0, valid = 0;
    for (int i = 0; i < 60; ++i) {
        const Signature& sig = sigs[i % sigs.size()];
        const bool two_blocks = i % 4 != 0;
        Formula phi = oracle::random_prenex(rng, sig, two_blocks ? 2 : 1, false, i % 3 == 0 ? 2 : 1);
        const int bound = bsr_bound(phi);
        if (slot_count(sig, bound) > 12)
            continue;
        const Pi2Verdict v = decide_pi2(sig, phi);
        EXPECT_EQ(v.bound, bound);
        const auto expected = naive_counter(sig, phi, bound);
        const Pi2Verdict scanned = decide_pi2(sig, phi, Search::Enumeration);
        EXPECT_EQ(scanned.outcome, v.outcome);
        EXPECT_EQ(scanned.countermodel, v.countermodel);
        ASSERT_EQ(v.outcome == Outcome::Invalid, expected.has_value()) << render(phi);
        if (expected) {
            ++invalid;
            EXPECT_EQ(*v.countermodel, *expected) << render(phi);
            EXPECT_FALSE(oracle::naive_eval(*v.countermodel, phi));
            EXPECT_LE(v.countermodel->size(), v.bound);
        } else {
            ++valid;
        }
    }
    EXPECT_GT(invalid, 0);
    EXPECT_GT(valid, 0);
}

TEST(Relativize, Shapes) {
    const Formula sym = parse("forall x y. (P(x,y) -> P(y,x))");
    const Formula r = relativize_to_class(axiom(ClassId::TwoEq), sym);
    const PrefixClass c = classify(r);
    EXPECT_EQ(c.kind, PrefixKind::Pi);
    EXPECT_LE(c.k, 2);

    const Formula u = relativize_to_class(parse("exists x. U(x)"), parse("forall x. U(x)"));
    EXPECT_EQ(classify(u), (PrefixClass{PrefixKind::Pi, 1}));
    EXPECT_EQ(prefix_blocks(u)[0].vars.size(), 2u);

    EXPECT_EQ(classify(relativize_to_class(parse("true"), parse("false | true"))), (PrefixClass{PrefixKind::Both, 0}));
    EXPECT_THROW(relativize_to_class(parse("forall x. exists y. forall z. E(x,y)"), sym), Error);
    EXPECT_THROW(relativize_to_class(axiom(ClassId::TwoEq), parse("exists x. forall y. P(x,y)")), Error);
}

TEST(DecideInClass, Examples) {
    EXPECT_EQ(decide_pi2_in_class(axiom(ClassId::TwoEq), parse("forall x. forall y. (P(x,y) -> P(y,x))")).outcome,
              Outcome::Valid);
    const Pi2Verdict v = decide_pi2_in_class(axiom(ClassId::TwoEq), parse("forall x. exists y. (P(x,y) & !(x = y))"));
    ASSERT_EQ(v.outcome, Outcome::Invalid);
    EXPECT_EQ(v.countermodel->size(), 1);
    EXPECT_TRUE(validate(ClassId::TwoEq, *v.countermodel));
    EXPECT_EQ(decide_pi2_in_class(class_signature(ClassId::LEq), axiom(ClassId::LEq),
                                  parse("forall x y. (x < y | y < x | x = y)"))
                  .outcome,
              Outcome::Valid);
}

// Class batteries: the reduction against direct bounded search over class
// members (naive oracles) and against search_counterexample.
TEST(DecideInClass, MatchesBoundedClassSearch) {
    const std::vector<std::pair<ClassId, std::vector<const char*>>> batteries{
        {ClassId::TwoEq,
         {"forall x y. (P(x,y) -> P(y,x))", "forall x y. (P(x,y) -> Q(x,y))", "forall x. exists y. (P(x,y) & Q(x,y))",
          "forall x y. exists z. (P(x,z) & Q(z,y))", "forall x y. (P(x,y) & Q(x,y) -> x = y)",
          "forall x. exists y. (!(x = y))", "forall x y z. (P(x,y) & P(y,z) -> P(x,z))",
          "forall x y. (P(x,y) | Q(x,y))"}},
        {ClassId::LEq,
         {"forall x y. (x < y | y < x | x = y)", "forall x. exists y. (x < y | y < x | x = y)",
          "forall x. exists y. x < y", "forall x y. (x ~ y -> y ~ x)", "forall x y. (x < y -> !(x ~ y))",
          "forall x. exists y. (y < x | x ~ y)", "forall x y. exists z. (x < z & z < y | !(x < y))"}}};
    for (const auto& [cls, texts] : batteries) {
        const Signature sig = class_signature(cls);
        const Formula ax = axiom(cls);
        for (const char* text : texts) {
            const Formula phi = parse(text);
            const Pi2Verdict v = decide_pi2_in_class(sig, ax, phi);
            const auto direct = oracle::first_structure(sig, v.bound, [&](const FiniteStructure& s) {
                return oracle::naive_eval(s, ax) && !oracle::naive_eval(s, phi);
            });
            EXPECT_EQ(v.outcome == Outcome::Invalid, direct.has_value()) << text;
            const auto searched = search_counterexample(cls, phi, v.bound);
            EXPECT_EQ(searched.has_value(), direct.has_value()) << text;
            if (direct) {
                EXPECT_EQ(v.countermodel->size(), direct->size()) << text;
                EXPECT_TRUE(oracle::naive_eval(*v.countermodel, ax));
                EXPECT_FALSE(oracle::naive_eval(*v.countermodel, phi));
                EXPECT_EQ(*searched, *direct) << text;
            }
        }
    }
}

TEST(SearchCounterexample, Examples) {
    auto two = search_counterexample(ClassId::TwoEq, parse("forall x y. P(x,y)"), 3);
    ASSERT_TRUE(two);
    EXPECT_EQ(two->size(), 2);
    EXPECT_FALSE(search_counterexample(ClassId::TwoEq, axiom(ClassId::TwoEq), 3));
    EXPECT_FALSE(search_counterexample(ClassId::BipartiteGraph3, parse("exists x. L(x)"), 7));
    EXPECT_THROW(search_counterexample(ClassId::TwoEq, parse("exists x. E(x,x)"), 2), Error);
    set_enumeration_cap(10);
    try {
        search_counterexample(ClassId::BipartiteGraph3, parse("exists x. L(x)"), 7, Search::Enumeration);
        ADD_FAILURE() << "scan above the cap";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
    }
    set_enumeration_cap(0);
}

TEST(Verdict, Json) {
    const Pi2Verdict v = decide_pi2(Signature{{"E", 2}}, parse("forall x. exists y. E(x,y)"));
    const auto j = nlohmann::json::parse(verdict_to_json(v));
    EXPECT_EQ(j["outcome"], "invalid");
    EXPECT_EQ(j["bound"], 1);
    EXPECT_EQ(structure_from_json(j["countermodel"].dump()), *v.countermodel);
    const auto ok = nlohmann::json::parse(verdict_to_json(decide_pi2(Signature{}, parse("forall x. x = x"))));
    EXPECT_EQ(ok["outcome"], "valid");
    EXPECT_FALSE(ok.contains("countermodel"));
}
