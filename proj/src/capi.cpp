#include "fointerp/fointerp.h"

#include <cstring>
#include <json.hpp>
#include <new>
#include <string>

#include "fointerp/constructions.hpp"
#include "fointerp/decide.hpp"
#include "fointerp/enumerate.hpp"
#include "fointerp/error.hpp"
#include "fointerp/eval.hpp"
#include "fointerp/json_io.hpp"
#include "fointerp/syntax.hpp"

struct fi_formula {
    fointerp::Formula f;
};
struct fi_structure {
    fointerp::FiniteStructure s;
};
struct fi_witness {
    fointerp::Witness w;
};

namespace {

using namespace fointerp;

thread_local std::string last_error;

struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

fi_status status_of(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse:
        return FI_ERR_PARSE;
    case ErrorKind::Structural:
        return FI_ERR_STRUCTURAL;
    case ErrorKind::Format:
        return FI_ERR_FORMAT;
    case ErrorKind::CapExceeded:
        return FI_ERR_CAP;
    case ErrorKind::Precondition:
        return FI_ERR_PRECONDITION;
    }
    return FI_ERR_INTERNAL;
}

template <class F>
fi_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return FI_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const ArgumentError& e) {
        last_error = e.what();
        return FI_ERR_ARGUMENT;
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return FI_ERR_FORMAT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return FI_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return FI_ERR_INTERNAL;
    }
}

template <class T>
const T& need(const T* p, const char* what) {
    if (!p)
        throw ArgumentError(std::string(what) + " is null");
    return *p;
}

template <class T>
T& out_ptr(T* p, const char* what) {
    if (!p)
        throw ArgumentError(std::string(what) + " output pointer is null");
    return *p;
}

const char* need_text(const char* p, const char* what) {
    if (!p)
        throw ArgumentError(std::string(what) + " is null");
    return p;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ConstructionKind kind_of(const char* name) {
    auto k = construction_from_string(need_text(name, "construction kind"));
    if (!k)
        throw ArgumentError(std::string("unknown construction kind '") + name +
                            "' (expected big2eq, big2eq-param, 2eq2leq or 2eq2leq-param)");
    return *k;
}

ClassId class_of(const char* name) {
    auto c = class_from_string(need_text(name, "class name"));
    if (!c)
        throw ArgumentError(std::string("unknown class '") + name +
                            "' (expected graph, bigraph, bigraph3, 2eq, leq or all)");
    return *c;
}

void write_verdict(const Pi2Verdict& v, int* valid, char** verdict) {
    if (valid)
        *valid = v.outcome == Outcome::Valid;
    if (verdict)
        *verdict = copy_string(verdict_to_json(v));
}

} // namespace

extern "C" {

const char* fi_last_error(void) { return last_error.c_str(); }

const char* fi_status_name(fi_status s) {
    switch (s) {
    case FI_OK:
        return "ok";
    case FI_ERR_PARSE:
        return "parse error";
    case FI_ERR_STRUCTURAL:
        return "structural error";
    case FI_ERR_FORMAT:
        return "format error";
    case FI_ERR_CAP:
        return "cap exceeded";
    case FI_ERR_PRECONDITION:
        return "precondition violated";
    case FI_ERR_ARGUMENT:
        return "invalid argument";
    case FI_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

void fi_string_free(char* s) { std::free(s); }

fi_status fi_formula_parse(const char* text, fi_formula** out) {
    return guarded([&] { out_ptr(out, "formula") = new fi_formula{parse(need_text(text, "formula text"))}; });
}

void fi_formula_free(fi_formula* f) { delete f; }

fi_status fi_formula_render(const fi_formula* f, char** out) {
    return guarded([&] { out_ptr(out, "string") = copy_string(render(need(f, "formula").f)); });
}

fi_status fi_formula_classify(const fi_formula* f, fi_prefix_kind* kind, int* k) {
    return guarded([&] {
        const PrefixClass c = classify(need(f, "formula").f);
        out_ptr(kind, "kind") = c.kind == PrefixKind::Sigma ? FI_PREFIX_SIGMA
                                : c.kind == PrefixKind::Pi  ? FI_PREFIX_PI
                                                            : FI_PREFIX_BOTH;
        out_ptr(k, "k") = c.k;
    });
}

fi_status fi_formula_class_name(const fi_formula* f, char** out) {
    return guarded([&] { out_ptr(out, "string") = copy_string(to_string(classify(need(f, "formula").f))); });
}

fi_status fi_formula_nnf(const fi_formula* f, fi_formula** out) {
    return guarded([&] { out_ptr(out, "formula") = new fi_formula{to_nnf(need(f, "formula").f)}; });
}

fi_status fi_formula_prenex(const fi_formula* f, fi_formula** out) {
    return guarded([&] { out_ptr(out, "formula") = new fi_formula{to_prenex(need(f, "formula").f)}; });
}

fi_status fi_formula_is_sentence(const fi_formula* f, int* result) {
    return guarded([&] { out_ptr(result, "result") = is_sentence(need(f, "formula").f); });
}

fi_status fi_structure_from_json(const char* json, fi_structure** out) {
    return guarded(
        [&] { out_ptr(out, "structure") = new fi_structure{structure_from_json(need_text(json, "JSON text"))}; });
}

fi_status fi_structure_to_json(const fi_structure* s, char** out) {
    return guarded([&] { out_ptr(out, "string") = copy_string(structure_to_json(need(s, "structure").s)); });
}

void fi_structure_free(fi_structure* s) { delete s; }

int fi_structure_size(const fi_structure* s) { return s ? s->s.size() : -1; }

fi_status fi_eval(const fi_structure* s, const fi_formula* f, int* result) {
    return guarded([&] {
        const Formula& sentence = need(f, "formula").f;
        if (!is_sentence(sentence))
            fail(ErrorKind::Structural, "eval needs a sentence");
        out_ptr(result, "result") = eval(need(s, "structure").s, sentence);
    });
}

fi_status fi_validate(const char* class_name, const fi_structure* s, int* result) {
    return guarded([&] { out_ptr(result, "result") = validate(class_of(class_name), need(s, "structure").s); });
}

fi_status fi_generate(const char* class_name, uint64_t seed, int size, int left, int right, double p,
                      fi_structure** out) {
    return guarded([&] {
        SizeSpec spec{size, left, right, p};
        out_ptr(out, "structure") = new fi_structure{gen_random(class_of(class_name), spec, seed)};
    });
}

fi_status fi_build(const char* kind, const fi_structure* a, fi_witness** out) {
    return guarded([&] { out_ptr(out, "witness") = new fi_witness{build(kind_of(kind), need(a, "structure").s)}; });
}

void fi_witness_free(fi_witness* w) { delete w; }

fi_status fi_witness_from_json(const char* json, fi_witness** out) {
    return guarded(
        [&] { out_ptr(out, "witness") = new fi_witness{witness_from_json(need_text(json, "JSON text"))}; });
}

fi_status fi_witness_to_json(const fi_witness* w, char** out) {
    return guarded([&] { out_ptr(out, "string") = copy_string(witness_to_json(need(w, "witness").w)); });
}

fi_status fi_witness_structure(const fi_witness* w, fi_structure** out) {
    return guarded([&] { out_ptr(out, "structure") = new fi_structure{need(w, "witness").w.structure}; });
}

fi_status fi_schema_to_json(const char* kind, char** out) {
    return guarded([&] { out_ptr(out, "string") = copy_string(schema_to_json(schema(kind_of(kind)))); });
}

fi_status fi_verify(const char* kind, const fi_structure* a, const fi_witness* w, int json, int* verified,
                    char** report) {
    return guarded([&] {
        const Witness& witness = need(w, "witness").w;
        const VerifyReport r = verify(schema(kind_of(kind)), need(a, "structure").s, witness);
        if (verified)
            *verified = r.ok();
        if (report)
            *report = copy_string(json ? verify_report_to_json(r) : describe(r, witness));
    });
}

fi_status fi_demo(const char* kind, char** out) {
    return guarded([&] { out_ptr(out, "string") = copy_string(demo(kind_of(kind))); });
}

fi_status fi_translate(const char* kind, const fi_formula* sentence, int literal, int open, fi_formula** out) {
    return guarded([&] {
        out_ptr(out, "formula") = new fi_formula{
            translate(schema(kind_of(kind)), need(sentence, "formula").f,
                      literal ? TranslateMode::Literal : TranslateMode::PrefixAware,
                      open ? ParamClosure::Open : ParamClosure::Existential)};
    });
}

Search mode_of(int exhaustive) { return exhaustive ? Search::Enumeration : Search::Backtracking; }

fi_status fi_decide_pi2(const char* signature_json, const fi_formula* sentence, int exhaustive, int* valid,
                        char** verdict) {
    return guarded([&] {
        const Signature sig = signature_from_json(need_text(signature_json, "signature JSON"));
        write_verdict(decide_pi2(sig, need(sentence, "formula").f, mode_of(exhaustive)), valid, verdict);
    });
}

fi_status fi_decide_pi2_class(const char* class_name, const fi_formula* sentence, int exhaustive, int* valid,
                              char** verdict) {
    return guarded([&] {
        const ClassId c = class_of(class_name);
        const Formula& phi = need(sentence, "formula").f;
        write_verdict(decide_pi2_in_class(class_signature(c), axiom(c), phi, mode_of(exhaustive)), valid, verdict);
    });
}

fi_status fi_search_counterexample(const char* class_name, const fi_formula* sentence, int max_size, int exhaustive,
                                   fi_structure** out) {
    return guarded([&] {
        fi_structure*& slot = out_ptr(out, "structure");
        slot = nullptr;
        if (auto m = search_counterexample(class_of(class_name), need(sentence, "formula").f, max_size,
                                          mode_of(exhaustive)))
            slot = new fi_structure{std::move(*m)};
    });
}

size_t fi_enumeration_cap(void) {
    try {
        return enumeration_cap();
    } catch (const std::exception& e) {
        last_error = e.what();
        return kDefaultEnumerationCap;
    }
}

void fi_set_enumeration_cap(size_t cap) { set_enumeration_cap(cap); }

} // extern "C"
