// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "fointerp/classes.hpp"
#include "fointerp/constructions.hpp"
#include "fointerp/decide.hpp"
#include "fointerp/eval.hpp"
#include "fointerp/interpret.hpp"
#include "fointerp/syntax.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace fointerp;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
};

// Formulas met along the way; the syntax criterion runs over all of them.
std::vector<Formula> corpus;

void remember(const Formula& f) { corpus.push_back(f); }

std::vector<FiniteStructure> graphs_2x2_and_up() {
    std::vector<FiniteStructure> out{example_graph_2x2()};
    for (int seed = 1; seed <= 50; ++seed) {
        const int m = 3 + seed % 2;
        const int n = 3 + (seed / 2) % 2;
        const double p = 0.1 + 0.8 * ((seed * 37) % 100) / 100.0;
        out.push_back(gen_random(ClassId::BipartiteGraph, {0, m, n, p}, static_cast<std::uint64_t>(seed)));
    }
    // Edge cases: no edges and all edges.
    out.push_back(gen_random(ClassId::BipartiteGraph, {0, 3, 3, 0.0}, 101));
    out.push_back(gen_random(ClassId::BipartiteGraph, {0, 4, 4, 1.0}, 102));
    out.push_back(example_graph_3x3());
    return out;
}

std::vector<FiniteStructure> two_eq_models() {
    std::vector<FiniteStructure> out{example_two_eq()};
    for (int seed = 1; seed <= 60; ++seed)
        out.push_back(gen_random(ClassId::TwoEq, {1 + seed % 6, 0, 0, 0.5}, static_cast<std::uint64_t>(1000 + seed)));
    return out;
}

int side(const FiniteStructure& g, const char* rel) {
    int c = 0;
    for (Element e = 0; e < g.size(); ++e)
        c += g.holds(rel, {e});
    return c;
}

struct Built {
    FiniteStructure source;
    Witness witness;
};

std::vector<Built> build_all(ConstructionKind k, const std::vector<FiniteStructure>& inputs) {
    std::vector<Built> out;
    for (const auto& a : inputs)
        out.push_back({a, build(k, a)});
    return out;
}

// Graph corpus with both sides of size at least three.
std::vector<FiniteStructure> big_graphs() {
    std::vector<FiniteStructure> out;
    for (auto& g : graphs_2x2_and_up())
        if (side(g, "L") >= 3 && side(g, "R") >= 3)
            out.push_back(g);
    return out;
}

const std::vector<FiniteStructure>& graphs() {
    static const auto v = graphs_2x2_and_up();
    return v;
}
const std::vector<FiniteStructure>& graphs3() {
    static const auto v = big_graphs();
    return v;
}
const std::vector<FiniteStructure>& two_eqs() {
    static const auto v = two_eq_models();
    return v;
}
const std::vector<Built>& big2eq_builds() {
    static const auto v = build_all(ConstructionKind::Big2Eq, graphs3());
    return v;
}

Result verify_all(ConstructionKind k, const std::vector<FiniteStructure>& inputs) {
    const auto sch = schema(k);
    int ok = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const VerifyReport r = verify(sch, inputs[i], build(k, inputs[i]));
        if (r.ok())
            ++ok;
        else if (first_failure.empty())
            first_failure = " first failure: input " + std::to_string(i) + " " + to_string(r.status);
    }
    return {ok == static_cast<int>(inputs.size()),
            to_string(k) + " " + std::to_string(ok) + "/" + std::to_string(inputs.size()) + " verified" + first_failure};
}

Result crit1() { return verify_all(ConstructionKind::Big2EqParam, graphs()); }

Result crit2() { return verify_all(ConstructionKind::Big2Eq, graphs3()); }

Result crit3() {
    Result a = verify_all(ConstructionKind::TwoEq2LeqParam, two_eqs());
    Result b = verify_all(ConstructionKind::TwoEq2Leq, two_eqs());
    return {a.pass && b.pass, a.detail + ", " + b.detail};
}

Result crit4() {
    int ok = 0, total = 0;
    const std::pair<const char*, int> pairs[] = {{"cL", 4}, {"cR", 3}, {"cP", 2}, {"cN", 1}};
    for (const auto& [source, w] : big2eq_builds()) {
        const auto& b = w.structure;
        for (const auto& [marker, links] : pairs) {
            ++total;
            const std::string m = marker;
            ok += q_link_count(b, b.at(m + "1"), b.at(m + "~1")) == links;
        }
    }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " marker pairs with links 4/3/2/1"};
}

std::vector<Element> members(const FiniteStructure& a, const char* rel) {
    std::vector<Element> out;
    for (Element e = 0; e < a.size(); ++e)
        if (a.holds(rel, {e}))
            out.push_back(e);
    return out;
}

std::vector<Element> theta_set(const FiniteStructure& b, int k1, int k2, int k3, std::vector<int> positions) {
    std::vector<Element> out;
    for (Element e = 0; e < b.size(); ++e)
        for (int p : positions)
            if (oracle::theta_witness(b, e, k1, k2, k3, p)) {
                out.push_back(e);
                break;
            }
    return out;
}

Result crit5() {
    int ok = 0, total = 0;
    auto check = [&](bool good) {
        ++total;
        ok += good;
    };
    for (const auto& [a, w] : big2eq_builds()) {
        const auto& b = w.structure;
        const auto l = definable_set(b, marker_formula(Marker::PsiL), "x");
        const auto r = definable_set(b, marker_formula(Marker::PsiR), "x");
        const auto p = definable_set(b, marker_formula(Marker::PsiP), "x");
        const auto n = definable_set(b, marker_formula(Marker::PsiN), "x");
        check(l == members(a, "L"));
        check(r == members(a, "R"));
        check(p == oracle::named(b, "cP"));
        check(n == oracle::named(b, "cN"));
        // The same sets from Q-class counting.
        check(l == theta_set(b, 5, 4, 4, {5}));
        check(r == theta_set(b, 6, 5, 3, {6}));
        check(p == theta_set(b, 6, 6, 2, {1, 6}));
        check(n == theta_set(b, 7, 7, 1, {1, 7}));
    }
    for (const auto& a : two_eqs()) {
        const Witness free = build(ConstructionKind::TwoEq2Leq, a);
        check(definable_set(free.structure, marker_formula(Marker::Psi), "x") ==
              std::vector<Element>{free.structure.at("c1")});
        const Witness param = build(ConstructionKind::TwoEq2LeqParam, a);
        check(definable_set(param.structure, marker_formula(Marker::AStar), "y") ==
              std::vector<Element>{param.structure.at("a*")});
    }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " definable sets match"};
}

Result crit6() {
    oracle::Rng rng(6006);
    const int per_schema = 120;
    std::ostringstream detail;
    bool pass = true;
    for (auto k : {ConstructionKind::Big2EqParam, ConstructionKind::Big2Eq, ConstructionKind::TwoEq2LeqParam,
                   ConstructionKind::TwoEq2Leq}) {
        const auto sch = schema(k);
        std::vector<FiniteStructure> pool;
        if (k == ConstructionKind::Big2EqParam)
            pool = {graphs()[0], graphs()[1], graphs()[2], graphs()[3], graphs()[4], graphs()[5]};
        else if (k == ConstructionKind::Big2Eq)
            pool = {graphs3()[0], graphs3()[1], graphs3()[2], graphs3()[3], graphs3()[4], graphs3()[5]};
        else
            pool = {two_eqs()[0], two_eqs()[3], two_eqs()[4], two_eqs()[5], two_eqs()[6], two_eqs()[11]};
        const auto built = build_all(k, pool);
        int agree = 0;
        for (int i = 0; i < per_schema; ++i) {
            const Built& pair = built[i % built.size()];
            const Formula phi = oracle::random_sentence(rng, sch.source, 2, 3);
            remember(phi);
            const Formula t = translate(sch, phi, i % 2 ? TranslateMode::Literal : TranslateMode::PrefixAware,
                                        ParamClosure::Open);
            Assignment nu(pair.witness.params.begin(), pair.witness.params.end());
            agree += oracle::naive_eval(pair.source, phi) == eval(pair.witness.structure, t, nu);
        }
        pass = pass && agree == per_schema;
        detail << (detail.tellp() ? ", " : "") << to_string(k) << " " << agree << "/" << per_schema;
    }
    return {pass, detail.str()};
}

bool inside_bound(const PrefixClass& got, const PrefixClass& bound) {
    if (got.kind == PrefixKind::Both)
        return true;
    return got.kind == bound.kind ? got.k <= bound.k : got.k < bound.k;
}

Result crit7() {
    oracle::Rng rng(7007);
    int ok = 0, total = 0;
    std::string failure;
    for (auto k : {ConstructionKind::Big2Eq, ConstructionKind::TwoEq2Leq}) {
        const auto sch = schema(k);
        const struct {
            int blocks;
            bool existential;
        } shapes[] = {{1, true}, {2, true}, {2, false}};
        for (const auto& shape : shapes) {
            for (int i = 0; i < 40; ++i) {
                const Formula phi = oracle::random_prenex(rng, sch.source, shape.blocks, shape.existential);
                remember(phi);
                const PrefixClass in = classify(phi);
                const PrefixClass bound = translation_class(sch, in);
                const PrefixClass got = classify(translate(sch, phi));
                ++total;
                if (inside_bound(got, bound))
                    ++ok;
                else if (failure.empty())
                    failure = "; " + render(phi) + " gave " + to_string(got) + ", bound " + to_string(bound);
            }
        }
    }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                             " translations within the bound (Sigma 1, Sigma 2, Pi 2 corpora)" + failure};
}

Result crit8() {
    oracle::Rng rng(8008);
    const std::vector<Signature> sigs{Signature{{"E", 2}}, Signature{{"U", 1}, {"E", 2}},
                                      Signature{{"U", 1}, {"V", 1}}, Signature{{"U", 1}, {"V", 1}, {"W", 1}}};
    int agree = 0, tried = 0, invalid = 0;
    for (int i = 0; tried < 40; ++i) {
        const Signature& sig = sigs[i % sigs.size()];
        const Formula phi = oracle::random_prenex(rng, sig, i % 3 == 0 ? 1 : 2, false, 1 + i % 2);
        const int bound = bsr_bound(phi);
        if (slot_count(sig, bound) > 12)
            continue;
        remember(phi);
        ++tried;
        const Pi2Verdict v = decide_pi2(sig, phi);
        const auto naive = oracle::first_structure(
            sig, bound, [&](const FiniteStructure& s) { return !oracle::naive_eval(s, phi); });
        invalid += naive.has_value();
        agree += (v.outcome == Outcome::Invalid) == naive.has_value() && v.bound == bound &&
                 (!naive || (v.countermodel && *v.countermodel == *naive));
    }

    const std::vector<std::pair<ClassId, std::vector<const char*>>> batteries{
        {ClassId::TwoEq,
         {"forall x y. (P(x,y) -> P(y,x))", "forall x y. (P(x,y) -> Q(x,y))", "forall x. exists y. (P(x,y) & Q(x,y))",
          "forall x y. exists z. (P(x,z) & Q(z,y))", "forall x y. (P(x,y) & Q(x,y) -> x = y)",
          "forall x. exists y. !(x = y)", "forall x y z. (P(x,y) & P(y,z) -> P(x,z))", "forall x y. (P(x,y) | Q(x,y))",
          "forall x. exists y. (P(x,y) & !(x = y))", "forall y. exists x. (P(x,y) & !Q(x,y))", "forall x y. exists z. (Q(x,z) & !P(z,y))"}},
        {ClassId::LEq,
         {"forall x y. (x < y | y < x | x = y)", "forall x. exists y. (x < y | y < x | x = y)",
          "forall x. exists y. x < y", "forall x y. (x ~ y -> y ~ x)", "forall x y. (x < y -> !(x ~ y))",
          "forall x. exists y. (y < x | x ~ y)", "forall x y. exists z. (x < z & z < y | !(x < y))",
          "forall x y z. (x < y & y < z -> x < z)", "forall y. exists x. (x < y | x = y)",
          "forall x y. (x ~ y | x < y)"}}};
    int class_agree = 0, class_total = 0;
    for (const auto& [cls, texts] : batteries) {
        const Signature sig = class_signature(cls);
        const Formula ax = axiom(cls);
        for (const char* text : texts) {
            const Formula phi = parse(text);
            remember(phi);
            ++class_total;
            const Pi2Verdict v = decide_pi2_in_class(sig, ax, phi);
            const auto direct = oracle::first_structure(sig, v.bound, [&](const FiniteStructure& s) {
                return oracle::naive_eval(s, ax) && !oracle::naive_eval(s, phi);
            });
            const auto searched = search_counterexample(cls, phi, v.bound);
            class_agree += (v.outcome == Outcome::Invalid) == direct.has_value() &&
                           searched.has_value() == direct.has_value() &&
                           (!direct || (v.countermodel->size() == direct->size() && *searched == *direct &&
                                        oracle::naive_eval(*v.countermodel, ax) &&
                                        !oracle::naive_eval(*v.countermodel, phi)));
        }
    }
    return {agree == tried && tried >= 30 && class_agree == class_total,
            std::to_string(agree) + "/" + std::to_string(tried) + " Pi2 verdicts agree (" + std::to_string(invalid) +
                " invalid), " + std::to_string(class_agree) + "/" + std::to_string(class_total) +
                " in-class verdicts agree"};
}

Result crit9() {
    long long pairs = 0, bad = 0;
    auto scan = [&](const FiniteStructure& b) {
        for (Element u = 0; u < b.size(); ++u)
            for (Element v = 0; v < b.size(); ++v)
                if (u != v) {
                    ++pairs;
                    bad += b.holds("P", {u, v}) && b.holds("Q", {u, v});
                }
    };
    int builds = 0;
    for (const auto& [a, w] : big2eq_builds()) {
        scan(w.structure);
        ++builds;
    }
    for (const auto& a : graphs()) {
        scan(build(ConstructionKind::Big2EqParam, a).structure);
        ++builds;
    }
    return {bad == 0, std::to_string(builds) + " builds, " + std::to_string(pairs) + " ordered pairs, " +
                          std::to_string(bad) + " related by both P and Q"};
}

// All structures of sizes 1 and 2 plus seeded random ones of size 3.
std::vector<FiniteStructure> small_structures(const Signature& sig) {
    std::vector<FiniteStructure> out;
    for (int n = 1; n <= 2; ++n)
        oracle::for_each_structure(sig, n, [&](const FiniteStructure& s) {
            out.push_back(s);
            return true;
        });
    oracle::Rng rng(1010);
    for (int i = 0; i < 12; ++i) {
        FiniteStructure s(sig, 3);
        for (std::size_t j = 0; j < s.slot_count(); ++j)
            s.set_slot(j, rng() & 1);
        out.push_back(s);
    }
    return out;
}

std::vector<Assignment> assignments(const std::set<std::string>& vars, int size) {
    std::vector<Assignment> out{{}};
    for (const auto& v : vars) {
        std::vector<Assignment> next;
        for (const auto& nu : out)
            for (Element e = 0; e < size; ++e) {
                Assignment m = nu;
                m[v] = e;
                next.push_back(m);
            }
        out = std::move(next);
    }
    return out;
}

Result crit10() {
    // Schema, marker and axiom formulas join the random corpus.
    for (auto k : {ConstructionKind::Big2EqParam, ConstructionKind::Big2Eq, ConstructionKind::TwoEq2LeqParam,
                   ConstructionKind::TwoEq2Leq}) {
        const auto sch = schema(k);
        remember(sch.phi_u);
        if (sch.phi_not_u)
            remember(*sch.phi_not_u);
        for (const auto& [name, rf] : sch.relations) {
            remember(rf.pos);
            remember(rf.neg);
        }
    }
    for (Marker m : {Marker::PsiL, Marker::PsiR, Marker::PsiP, Marker::PsiN, Marker::Psi, Marker::AStar})
        remember(marker_formula(m));
    for (ClassId c : {ClassId::SimpleGraph, ClassId::BipartiteGraph, ClassId::BipartiteGraph3, ClassId::TwoEq,
                      ClassId::LEq})
        remember(axiom(c));

    std::map<std::string, std::vector<FiniteStructure>> by_signature;
    int round_trips = 0, equivalent = 0;
    long long evaluations = 0;
    std::string failure;
    for (const Formula& f : corpus) {
        const bool round = parse(render(f)) == f;
        round_trips += round;
        const Signature sig = infer_signature(f);
        auto& structures = by_signature[sig.to_string()];
        if (structures.empty())
            structures = small_structures(sig);
        const Formula nnf = to_nnf(f);
        const Formula prenex = to_prenex(f);
        bool same = true;
        const auto fv = free_vars(f);
        for (const auto& s : structures) {
            // Heavy open formulas are checked on fewer assignments at size 3.
            auto nus = assignments(fv, s.size());
            if (s.size() == 3 && nus.size() > 9)
                nus.resize(9);
            ModelChecker mc(s);
            for (const auto& nu : nus) {
                const bool v = mc.holds(f, nu);
                same = same && v == mc.holds(nnf, nu) && v == mc.holds(prenex, nu);
                ++evaluations;
            }
            if (!same)
                break;
        }
        equivalent += same;
        if ((!round || !same) && failure.empty())
            failure = "; first failure: " + render(f);
    }
    const int n = static_cast<int>(corpus.size());
    return {round_trips == n && equivalent == n,
            std::to_string(n) + " formulas, " + std::to_string(round_trips) + " round trips, " +
                std::to_string(equivalent) + " NNF/prenex equivalent over " + std::to_string(evaluations) +
                " evaluations" + failure};
}

struct Criterion {
    int id;
    const char* title;
    std::function<Result()> run;
    double limit_seconds; // 0 means no time limit
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "parameterized graph construction verifies", crit1, 60},
        {2, "parameter-free graph construction verifies", crit2, 300},
        {3, "order constructions verify", crit3, 60},
        {4, "Q-link counts of marker classes", crit4, 0},
        {5, "marker formulas define the marker sets", crit5, 0},
        {6, "translation preserves truth", crit6, 300},
        {7, "translated prefix classes within the bound", crit7, 0},
        {8, "Pi2 decider agrees with naive search", crit8, 120},
        {9, "distinct elements differ in P or Q", crit9, 0},
        {10, "round trip and normal form equivalence", crit10, 0},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
        const bool pass = r.pass && in_time;
        all = all && pass;
        char timing[64];
        if (c.limit_seconds > 0)
            std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", seconds, c.limit_seconds);
        else
            std::snprintf(timing, sizeof timing, "%.2f s", seconds);
        std::printf("%s crit%d %s: %s (%s)\n", pass ? "PASS" : "FAIL", c.id, c.title, r.detail.c_str(), timing);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
