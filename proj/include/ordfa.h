/*
 * Copyright 2026 The ordfa Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * ordfa: lexicographic well-order analysis of binary DFAs.
 *
 * C interface. All objects are opaque handles created by ordfa_* functions
 * and released with the matching *_free function. Functions returning
 * ordfa_status report failures by code; ordfa_last_error() then holds a
 * message for the calling thread. Strings returned through `char**` are
 * heap-allocated and must be released with ordfa_string_free(). Accessors
 * returning `const` pointers borrow from their owner.
 *
 * Words are NUL-terminated strings over '0' and '1'; the empty word is "".
 */
#ifndef ORDFA_H_
#define ORDFA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ORDFA_BUILDING)
#    define ORDFA_API __declspec(dllexport)
#  else
#    define ORDFA_API __declspec(dllimport)
#  endif
#else
#  define ORDFA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ordfa_status {
  ORDFA_OK = 0,
  ORDFA_ERR_INVALID_ARGUMENT = 1,
  ORDFA_ERR_INVALID_DFA = 2,
  ORDFA_ERR_PARSE = 3,
  ORDFA_ERR_MULTIPLE_SINKS = 4,
  ORDFA_ERR_NOT_SIMPLE_CYCLE = 5,
  ORDFA_ERR_NO_MINIMUM = 6,
  ORDFA_ERR_NOT_DESCENDING = 7,
  ORDFA_ERR_NOT_STRICT_CHAIN = 8,
  ORDFA_ERR_NOT_TRIM = 9,
  ORDFA_ERR_DEGREE_OVERFLOW = 10,
  ORDFA_ERR_SYNTAX = 11,
  ORDFA_ERR_NOT_WELL_ORDERED = 12,
  ORDFA_ERR_EMPTY_LANGUAGE = 13,
  ORDFA_ERR_BOUND_TOO_LARGE = 14,
  ORDFA_ERR_IO = 15,
  ORDFA_ERR_INTERNAL = 99
} ordfa_status;

typedef enum ordfa_lex_relation {
  ORDFA_LEX_EQUAL = 0,
  ORDFA_LEX_PREFIX_LESS = 1,
  ORDFA_LEX_PREFIX_GREATER = 2,
  ORDFA_LEX_STRICT_LESS = 3,
  ORDFA_LEX_STRICT_GREATER = 4
} ordfa_lex_relation;

typedef struct ordfa_dfa ordfa_dfa;
typedef struct ordfa_ordinal ordfa_ordinal;
typedef struct ordfa_witness ordfa_witness;
typedef struct ordfa_words ordfa_words;
typedef struct ordfa_type_table ordfa_type_table;
typedef struct ordfa_trim_report ordfa_trim_report;
typedef struct ordfa_chain_analysis ordfa_chain_analysis;

/* ---- errors and memory ------------------------------------------------ */

ORDFA_API const char* ordfa_last_error(void);
ORDFA_API const char* ordfa_status_name(ordfa_status status);
ORDFA_API void ordfa_string_free(char* s);

/* ---- automata ---------------------------------------------------------- */

/* delta holds 2*state_count targets: delta[2q] on 0, delta[2q+1] on 1. */
ORDFA_API ordfa_status ordfa_dfa_create(size_t state_count, uint32_t start,
                                        const uint32_t* delta,
                                        const uint32_t* finals,
                                        size_t final_count, ordfa_dfa** out);
ORDFA_API ordfa_status ordfa_dfa_from_json(const char* text, size_t length,
                                           ordfa_dfa** out);
/* Parse errors name the file and line. */
ORDFA_API ordfa_status ordfa_dfa_load(const char* path, ordfa_dfa** out);
ORDFA_API ordfa_status ordfa_dfa_to_json(const ordfa_dfa* m, char** out);
ORDFA_API ordfa_status ordfa_dfa_save(const ordfa_dfa* m, const char* path);
ORDFA_API ordfa_status ordfa_dfa_clone(const ordfa_dfa* m, ordfa_dfa** out);
ORDFA_API void ordfa_dfa_free(ordfa_dfa* m);

ORDFA_API size_t ordfa_dfa_state_count(const ordfa_dfa* m);
ORDFA_API uint32_t ordfa_dfa_start(const ordfa_dfa* m);
ORDFA_API ordfa_status ordfa_dfa_next(const ordfa_dfa* m, uint32_t q, int letter,
                                      uint32_t* out);
ORDFA_API ordfa_status ordfa_dfa_is_final(const ordfa_dfa* m, uint32_t q, int* out);

ORDFA_API ordfa_status ordfa_run(const ordfa_dfa* m, uint32_t q, const char* word,
                                 uint32_t* out);
ORDFA_API ordfa_status ordfa_accepts(const ordfa_dfa* m, const char* word, int* out);
ORDFA_API ordfa_status ordfa_dfa_to_dot(const ordfa_dfa* m, char** out);

/* ---- trimming and structure ------------------------------------------- */

ORDFA_API ordfa_status ordfa_trim(const ordfa_dfa* m, ordfa_trim_report** out);
ORDFA_API const ordfa_dfa* ordfa_trim_report_result(const ordfa_trim_report* r);
ORDFA_API size_t ordfa_trim_report_removed_count(const ordfa_trim_report* r);
ORDFA_API uint32_t ordfa_trim_report_removed_at(const ordfa_trim_report* r, size_t i);
ORDFA_API size_t ordfa_trim_report_merged_count(const ordfa_trim_report* r);
ORDFA_API uint32_t ordfa_trim_report_merged_at(const ordfa_trim_report* r, size_t i);
/* Returns 1 and stores the new sink index if there is one, else 0. */
ORDFA_API int ordfa_trim_report_sink(const ordfa_trim_report* r, uint32_t* sink);
/* Stores the new index of old state q; returns 0 if q was removed. */
ORDFA_API int ordfa_trim_report_map(const ordfa_trim_report* r, uint32_t q, uint32_t* out);
ORDFA_API void ordfa_trim_report_free(ordfa_trim_report* r);

ORDFA_API ordfa_status ordfa_is_trim(const ordfa_dfa* m, int* out);
ORDFA_API ordfa_status ordfa_sink(const ordfa_dfa* m, int* has_sink, uint32_t* sink);
ORDFA_API ordfa_status ordfa_component_of(const ordfa_dfa* m, uint32_t q, size_t* out);
ORDFA_API ordfa_status ordfa_height(const ordfa_dfa* m, uint32_t q, size_t* out);
ORDFA_API ordfa_status ordfa_is_recursive(const ordfa_dfa* m, uint32_t q, int* out);
ORDFA_API ordfa_status ordfa_loop_word(const ordfa_dfa* m, uint32_t q, char** out);

/* ---- well-order decision ---------------------------------------------- */

/* *well_ordered receives 1 or 0. When 0 and witness is non-NULL, *witness
 * receives a new handle; otherwise *witness is set to NULL. */
ORDFA_API ordfa_status ordfa_check(const ordfa_dfa* m, int* well_ordered,
                                   ordfa_witness** witness);
ORDFA_API ordfa_status ordfa_naive_check(const ordfa_dfa* m, int* well_ordered,
                                         ordfa_witness** witness);

ORDFA_API ordfa_status ordfa_witness_create(const char* x, const char* u, const char* v,
                                            uint32_t q, ordfa_witness** out);
ORDFA_API const char* ordfa_witness_x(const ordfa_witness* w);
ORDFA_API const char* ordfa_witness_u(const ordfa_witness* w);
ORDFA_API const char* ordfa_witness_v(const ordfa_witness* w);
ORDFA_API uint32_t ordfa_witness_q(const ordfa_witness* w);
/* x (0u)^n 1 v */
ORDFA_API ordfa_status ordfa_witness_chain(const ordfa_witness* w, size_t n, char** out);
/* *ok receives 1 or 0; on 0, *failed_at (if non-NULL) receives the first
 * failing index and *reason (if non-NULL) a message to free. */
ORDFA_API ordfa_status ordfa_verify_witness(const ordfa_dfa* m, const ordfa_witness* w,
                                            size_t upto, int* ok, size_t* failed_at,
                                            char** reason);
ORDFA_API void ordfa_witness_free(ordfa_witness* w);

/* ---- lexicographic order ---------------------------------------------- */

ORDFA_API ordfa_status ordfa_compare_lex(const char* u, const char* v,
                                         ordfa_lex_relation* out);
/* *found receives 0 when the language is empty / no successor exists. */
ORDFA_API ordfa_status ordfa_min_word(const ordfa_dfa* m, int* found, char** out);
ORDFA_API ordfa_status ordfa_successor(const ordfa_dfa* m, const char* w, int* found,
                                       char** out);
ORDFA_API ordfa_status ordfa_enumerate(const ordfa_dfa* m, size_t n, ordfa_words** out);
ORDFA_API ordfa_status ordfa_embed3to2(const char* ternary, char** out);
ORDFA_API ordfa_status ordfa_extract_strict_chain(const char* const* words, size_t count,
                                                  ordfa_words** out);
ORDFA_API ordfa_status ordfa_analyze_chain(const char* const* words, size_t count,
                                           ordfa_chain_analysis** out);

ORDFA_API size_t ordfa_words_count(const ordfa_words* ws);
ORDFA_API const char* ordfa_words_at(const ordfa_words* ws, size_t i);
ORDFA_API void ordfa_words_free(ordfa_words* ws);

/* Positions are 0-based, times 1-based. */
ORDFA_API size_t ordfa_chain_active_count(const ordfa_chain_analysis* a);
ORDFA_API void ordfa_chain_active_at(const ordfa_chain_analysis* a, size_t i,
                                     size_t* position, size_t* time);
ORDFA_API size_t ordfa_chain_sequence_count(const ordfa_chain_analysis* a);
ORDFA_API void ordfa_chain_sequence_at(const ordfa_chain_analysis* a, size_t k,
                                       size_t* position, size_t* time);
ORDFA_API void ordfa_chain_analysis_free(ordfa_chain_analysis* a);

/* ---- ordinals below w^w ----------------------------------------------- */

ORDFA_API ordfa_status ordfa_ordinal_parse(const char* text, ordfa_ordinal** out);
ORDFA_API ordfa_status ordfa_ordinal_format(const ordfa_ordinal* a, char** out);
ORDFA_API ordfa_status ordfa_ordinal_add(const ordfa_ordinal* a, const ordfa_ordinal* b,
                                         ordfa_ordinal** out);
ORDFA_API ordfa_status ordfa_ordinal_mul_omega(const ordfa_ordinal* a, ordfa_ordinal** out);
/* -1, 0 or 1 */
ORDFA_API int ordfa_ordinal_cmp(const ordfa_ordinal* a, const ordfa_ordinal* b);
/* -1 for zero */
ORDFA_API int ordfa_ordinal_degree(const ordfa_ordinal* a);
ORDFA_API void ordfa_ordinal_free(ordfa_ordinal* a);

/* ---- order types ------------------------------------------------------ */

ORDFA_API ordfa_status ordfa_order_type(const ordfa_dfa* m, ordfa_type_table** out);
ORDFA_API size_t ordfa_type_table_size(const ordfa_type_table* t);
ORDFA_API const ordfa_ordinal* ordfa_type_table_at(const ordfa_type_table* t, uint32_t q);
ORDFA_API size_t ordfa_type_table_height(const ordfa_type_table* t, uint32_t q);
ORDFA_API const ordfa_ordinal* ordfa_type_table_overall(const ordfa_type_table* t);
ORDFA_API void ordfa_type_table_free(ordfa_type_table* t);
ORDFA_API ordfa_status ordfa_rank(const ordfa_dfa* m, const char* w, ordfa_ordinal** out);

/* ---- synthesis -------------------------------------------------------- */

ORDFA_API ordfa_status ordfa_synth(const ordfa_ordinal* a, ordfa_dfa** out);
ORDFA_API ordfa_status ordfa_synth_zero(ordfa_dfa** out);
ORDFA_API ordfa_status ordfa_synth_one(ordfa_dfa** out);
ORDFA_API ordfa_status ordfa_synth_sum(const ordfa_dfa* m1, const ordfa_dfa* m2,
                                       ordfa_dfa** out);
ORDFA_API ordfa_status ordfa_synth_mul_omega(const ordfa_dfa* m, ordfa_dfa** out);

/* ---- oracles and fuzzing ---------------------------------------------- */

/* cap == 0 selects the default cap (20). */
ORDFA_API ordfa_status ordfa_enum_bounded(const ordfa_dfa* m, size_t bound, size_t cap,
                                          ordfa_words** out);
ORDFA_API ordfa_status ordfa_brute_rank(const ordfa_dfa* m, const char* w, size_t bound,
                                        size_t cap, uint64_t* out);
ORDFA_API ordfa_status ordfa_random_trim_dfa(uint64_t seed, size_t states, ordfa_dfa** out);

typedef struct ordfa_fuzz_options {
  uint64_t seeds;
  uint64_t first_seed;
  size_t states;
  int exhaustive;
  size_t witness_depth;
  size_t rank_word_length;
  size_t bound_cap;
  int failures_only; /* report lists failing cases only */
} ordfa_fuzz_options;

ORDFA_API void ordfa_fuzz_options_init(ordfa_fuzz_options* options);
/* *report receives the TSV report; *failures the number of failing cases. */
ORDFA_API ordfa_status ordfa_fuzz(const ordfa_fuzz_options* options, char** report,
                                  size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* ORDFA_H_ */
