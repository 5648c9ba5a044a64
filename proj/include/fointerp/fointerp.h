/* C interface of the fointerp library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returning fi_status leaves a message in fi_last_error() (per
 * thread) when it fails. Strings written to char** outputs are owned by the
 * caller and released with fi_string_free. */
#ifndef FOINTERP_H
#define FOINTERP_H

#include <stddef.h>
#include <stdint.h>

#if defined(FOINTERP_BUILDING)
#define FI_API __attribute__((visibility("default")))
#else
#define FI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fi_status {
    FI_OK = 0,
    FI_ERR_PARSE = 1,        /* formula syntax */
    FI_ERR_STRUCTURAL = 2,   /* unknown symbol, arity or signature mismatch, free variables */
    FI_ERR_FORMAT = 3,       /* malformed JSON input */
    FI_ERR_CAP = 4,          /* enumeration slot cap exceeded */
    FI_ERR_PRECONDITION = 5, /* operation outside its domain */
    FI_ERR_ARGUMENT = 6,     /* null pointer, unknown kind or class name */
    FI_ERR_INTERNAL = 7
} fi_status;

typedef enum fi_prefix_kind { FI_PREFIX_SIGMA = 0, FI_PREFIX_PI = 1, FI_PREFIX_BOTH = 2 } fi_prefix_kind;

typedef struct fi_formula fi_formula;
typedef struct fi_structure fi_structure;
typedef struct fi_witness fi_witness;

FI_API const char* fi_last_error(void);
FI_API const char* fi_status_name(fi_status s);
FI_API void fi_string_free(char* s);

/* formulas */
FI_API fi_status fi_formula_parse(const char* text, fi_formula** out);
FI_API void fi_formula_free(fi_formula* f);
FI_API fi_status fi_formula_render(const fi_formula* f, char** out);
FI_API fi_status fi_formula_classify(const fi_formula* f, fi_prefix_kind* kind, int* k);
/* "Sigma 2", "Pi 1", "Both 0" */
FI_API fi_status fi_formula_class_name(const fi_formula* f, char** out);
FI_API fi_status fi_formula_nnf(const fi_formula* f, fi_formula** out);
FI_API fi_status fi_formula_prenex(const fi_formula* f, fi_formula** out);
FI_API fi_status fi_formula_is_sentence(const fi_formula* f, int* result);

/* structures */
FI_API fi_status fi_structure_from_json(const char* json, fi_structure** out);
FI_API fi_status fi_structure_to_json(const fi_structure* s, char** out);
FI_API void fi_structure_free(fi_structure* s);
FI_API int fi_structure_size(const fi_structure* s);

/* s |= f for a sentence f */
FI_API fi_status fi_eval(const fi_structure* s, const fi_formula* f, int* result);
/* class names: graph, bigraph, bigraph3, 2eq, leq, all */
FI_API fi_status fi_validate(const char* class_name, const fi_structure* s, int* result);
FI_API fi_status fi_generate(const char* class_name, uint64_t seed, int size, int left, int right, double p,
                             fi_structure** out);

/* constructions: kind names big2eq-param, big2eq, 2eq2leq-param, 2eq2leq */
FI_API fi_status fi_build(const char* kind, const fi_structure* a, fi_witness** out);
FI_API void fi_witness_free(fi_witness* w);
FI_API fi_status fi_witness_from_json(const char* json, fi_witness** out);
FI_API fi_status fi_witness_to_json(const fi_witness* w, char** out);
/* copy of the witness structure */
FI_API fi_status fi_witness_structure(const fi_witness* w, fi_structure** out);
FI_API fi_status fi_schema_to_json(const char* kind, char** out);
/* *verified is 1 when all three conditions hold; report is text, or JSON when
 * json is nonzero */
FI_API fi_status fi_verify(const char* kind, const fi_structure* a, const fi_witness* w, int json, int* verified,
                           char** report);
FI_API fi_status fi_demo(const char* kind, char** out);

/* translation: literal selects the literal atom rule, open keeps the schema
 * parameters free */
FI_API fi_status fi_translate(const char* kind, const fi_formula* sentence, int literal, int open,
                              fi_formula** out);

/* decision procedures; verdict is the verdict JSON. exhaustive scans every
 * structure instead of backtracking and fails with FI_ERR_CAP above the cap */
FI_API fi_status fi_decide_pi2(const char* signature_json, const fi_formula* sentence, int exhaustive, int* valid,
                               char** verdict);
FI_API fi_status fi_decide_pi2_class(const char* class_name, const fi_formula* sentence, int exhaustive, int* valid,
                                     char** verdict);
/* *out is NULL when no class member up to max_size falsifies the sentence */
FI_API fi_status fi_search_counterexample(const char* class_name, const fi_formula* sentence, int max_size,
                                          int exhaustive, fi_structure** out);

FI_API size_t fi_enumeration_cap(void);
/* 0 restores FOINTERP_CAP or the default */
FI_API void fi_set_enumeration_cap(size_t cap);

#ifdef __cplusplus
}
#endif

#endif
