#include "fointerp/decide.hpp"

#include "fointerp/enumerate.hpp"
#include "fointerp/error.hpp"
#include "fointerp/eval.hpp"
#include "fointerp/json_io.hpp"
#include "fointerp/syntax.hpp"

namespace fointerp {

namespace {

void require_sentence(const Formula& f, const std::string& what) {
    if (!is_sentence(f))
        fail(ErrorKind::Precondition, what + " must be a sentence");
}

bool in_pi2(const PrefixClass& c) {
    return c.kind == PrefixKind::Both || (c.kind == PrefixKind::Pi && c.k <= 2) ||
           (c.kind == PrefixKind::Sigma && c.k <= 1);
}

bool in_sigma2(const PrefixClass& c) {
    return c.kind == PrefixKind::Both || (c.kind == PrefixKind::Sigma && c.k <= 2) ||
           (c.kind == PrefixKind::Pi && c.k <= 1);
}

// First model of `sentence` of exactly this size in enumeration order.
std::optional<FiniteStructure> first_model(const Signature& sig, int size, const Formula& sentence, Search mode) {
    if (mode == Search::Backtracking)
        return find_model(sig, size, sentence);
    StructureEnumerator it(sig, size);
    while (it.next())
        if (eval(it.current(), sentence))
            return it.current();
    return std::nullopt;
}

} // namespace

std::string to_string(Outcome o) { return o == Outcome::Valid ? "valid" : "invalid"; }

int bsr_bound(const Formula& phi) {
    require_sentence(phi, "bsr_bound input");
    const PrefixClass c = classify(to_prenex(phi, PrefixStart::Universal));
    if (!in_pi2(c))
        fail(ErrorKind::Precondition, "sentence classifies as " + to_string(c) + ", outside Pi 2");
    int count = 0;
    for (const auto& block : prefix_blocks(to_prenex(fo::neg(phi))))
        if (block.existential)
            count += static_cast<int>(block.vars.size());
    return std::max(1, count);
}

Pi2Verdict decide_pi2(const Signature& sig, const Formula& phi, Search mode) {
    check_signature(phi, sig);
    Pi2Verdict v;
    v.bound = bsr_bound(phi);
    const Formula negation = fo::neg(phi);
    for (int size = 1; size <= v.bound; ++size) {
        if (auto m = first_model(sig, size, negation, mode)) {
            v.outcome = Outcome::Invalid;
            v.countermodel = std::move(m);
            return v;
        }
    }
    return v;
}

Formula relativize_to_class(const Formula& theta, const Formula& phi) {
    require_sentence(theta, "class axiom");
    require_sentence(phi, "query");
    if (const PrefixClass c = classify(to_prenex(theta)); !in_sigma2(c))
        fail(ErrorKind::Precondition, "class axiom classifies as " + to_string(c) + ", outside Sigma 2");
    if (const PrefixClass c = classify(to_prenex(phi, PrefixStart::Universal)); !in_pi2(c))
        fail(ErrorKind::Precondition, "query classifies as " + to_string(c) + ", outside Pi 2");
    return to_prenex(fo::disj({fo::neg(theta), phi}), PrefixStart::Universal);
}

Pi2Verdict decide_pi2_in_class(const Signature& sig, const Formula& theta, const Formula& phi, Search mode) {
    return decide_pi2(sig, relativize_to_class(theta, phi), mode);
}

Pi2Verdict decide_pi2_in_class(const Formula& theta, const Formula& phi) {
    return decide_pi2_in_class(infer_signature(fo::conj({theta, phi})), theta, phi);
}

std::optional<FiniteStructure> search_counterexample(ClassId c, const Formula& phi, int max_size, Search mode) {
    require_sentence(phi, "search formula");
    const Signature sig = class_signature(c);
    check_signature(phi, sig);
    const Formula target = fo::conj({axiom(c), fo::neg(phi)});
    for (int size = 1; size <= max_size; ++size)
        if (auto m = first_model(sig, size, target, mode))
            return m;
    return std::nullopt;
}

std::string verdict_to_json(const Pi2Verdict& v) {
    std::string out = "{\n  \"outcome\": \"" + to_string(v.outcome) + "\",\n  \"bound\": " + std::to_string(v.bound);
    if (v.countermodel) {
        std::string body = structure_to_json(*v.countermodel);
        body.pop_back();
        std::string indented;
        for (char c : body) {
            indented += c;
            if (c == '\n')
                indented += "  ";
        }
        out += ",\n  \"countermodel\": " + indented;
    }
    return out + "\n}\n";
}

} // namespace fointerp
