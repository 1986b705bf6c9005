#ifndef BELIEF_H
#define BELIEF_H

/* C interface to the belief toolkit. Documents are opaque handles holding
 * a parsed structure (model, type space, family, space, or morphism) in
 * the JSON formats described in the README.
 *
 * Every function returns a bt_status. On failure the optional char** out
 * parameter receives a JSON error report; on BT_VIOLATION it receives the
 * validation report. All returned strings are heap-allocated and must be
 * released with bt_string_free; documents with bt_doc_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bt_doc bt_doc;

typedef enum {
  BT_OK = 0,
  BT_INPUT_ERROR = 1, /* malformed input: syntax, schema, unknown names */
  BT_VIOLATION = 2,   /* well-formed input that fails a semantic check */
  BT_REFUSAL = 3      /* construction declined: no unique result exists */
} bt_status;

bt_status bt_doc_parse(const char* json_text, bt_doc** out, char** report);
bt_status bt_doc_read_file(const char* path, bt_doc** out, char** report);
/* Returns "model", "typespace", "family", "space", or "morphism"; the
 * pointer is owned by the document. */
const char* bt_doc_kind(const bt_doc* doc);
bt_status bt_doc_to_json(const bt_doc* doc, char** out_json);
void bt_doc_free(bt_doc* doc);
void bt_string_free(char* s);

/* thresholds: NULL to use the document's declared set (default dense),
 * otherwise "dense" or a comma-separated list of rationals. */

/* Checks the defining conditions of the document's structure. BT_OK with
 * {"ok":true,...} when clean, BT_VIOLATION with the witnesses otherwise. */
bt_status bt_validate(const bt_doc* doc, const char* thresholds, char** report);

/* Evaluates a formula in a model or type space document. The report lists
 * the points satisfying it plus validity and satisfiability flags. */
bt_status bt_eval(const bt_doc* doc, const char* thresholds, const char* formula,
                  char** report);

/* Description partitions of a model: propositional classes, full classes,
 * and the per-agent classes. */
bt_status bt_describe(const bt_doc* doc, const char* thresholds, char** report);

/* direction "t2m": type space document to model document.
 * direction "m2t": model document to type space document; BT_REFUSAL when
 * the explicit threshold set leaves the beliefs underdetermined, with both
 * candidate measures in the report. */
bt_status bt_translate(const bt_doc* doc, const char* direction,
                       const char* thresholds, bt_doc** out, char** report);

/* Merged model witnessing joint satisfiability of partial descriptions.
 * targets has agents+1 world names: the propositional source followed by
 * one belief source per agent. The report names the fresh world. */
bt_status bt_witness_merge(const bt_doc* doc, const char* const* targets,
                           size_t n_targets, bt_doc** out, char** report);

/* Universal model of a family of models over a shared vocabulary. members
 * may mix "model" and "family" documents. Dense thresholds only. */
bt_status bt_universal_model(const bt_doc* const* members, size_t n_members,
                             bt_doc** out, char** report);

/* Family-relative universal type space. members are "typespace" documents
 * sharing a state space; states is an optional "space" document for it
 * (NULL: taken from the first member). The report carries the per-member
 * morphisms and uniqueness certificates; searches larger than budget
 * leave a certificate unverified rather than failing. */
bt_status bt_universal_typespace(const bt_doc* const* members, size_t n_members,
                                 const bt_doc* states, uint64_t budget,
                                 bt_doc** out, char** report);

/* Checks a morphism document between two type space documents. */
bt_status bt_morphism_check(const bt_doc* src, const bt_doc* dst,
                            const bt_doc* morphism, char** report);

#ifdef __cplusplus
}
#endif

#endif
