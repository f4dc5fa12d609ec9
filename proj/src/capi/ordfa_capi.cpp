// Copyright 2026 The ordfa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// extern "C" surface over the C++ core. Every entry point converts
// exceptions into ordfa_status codes and stores the message per thread.

#include "ordfa.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "ordfa/dfa.hpp"
#include "ordfa/dot.hpp"
#include "ordfa/error.hpp"
#include "ordfa/lexorder.hpp"
#include "ordfa/oracle.hpp"
#include "ordfa/ordinal.hpp"
#include "ordfa/ordtype.hpp"
#include "ordfa/synth.hpp"
#include "ordfa/wellorder.hpp"

struct ordfa_dfa {
  ordfa::Dfa value;
};
struct ordfa_ordinal {
  ordfa::Ordinal value;
};
struct ordfa_witness {
  ordfa::Witness value;
  std::string x, u, v;  // NUL-terminated views for the accessors
};
struct ordfa_words {
  std::vector<std::string> words;
};
struct ordfa_type_table {
  std::vector<ordfa_ordinal> per_state;
  ordfa_ordinal overall;
  std::vector<std::size_t> heights;
};
struct ordfa_trim_report {
  ordfa::TrimReport report;
  ordfa_dfa result;
};
struct ordfa_chain_analysis {
  ordfa::ChainAnalysis value;
};

namespace {

thread_local std::string g_last_error;

ordfa_status fail(ordfa_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
ordfa_status guarded(F&& body) {
  try {
    body();
    return ORDFA_OK;
  } catch (const ordfa::Error& e) {
    return fail(static_cast<ordfa_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ORDFA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ORDFA_ERR_INTERNAL, e.what());
  }
}

#define ORDFA_REQUIRE(cond)                                                    \
  do {                                                                         \
    if (!(cond)) return fail(ORDFA_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ordfa::Word word_arg(const char* text) { return ordfa::Word::parse(text); }

ordfa_witness* make_witness(const ordfa::Witness& w) {
  return new ordfa_witness{w, w.x.str(), w.u.str(), w.v.str()};
}

std::vector<ordfa::Word> word_list(const char* const* words, std::size_t count) {
  std::vector<ordfa::Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!words[i]) throw ordfa::Error(ordfa::ErrorCode::kInvalidArgument, "null word");
    out.push_back(word_arg(words[i]));
  }
  return out;
}

ordfa_words* make_words(const std::vector<ordfa::Word>& ws) {
  auto* out = new ordfa_words;
  for (const auto& w : ws) out->words.push_back(w.str());
  return out;
}

void check_state(const ordfa::Dfa& m, uint32_t q) {
  if (q >= m.state_count()) {
    throw ordfa::Error(ordfa::ErrorCode::kInvalidArgument,
                       "state " + std::to_string(q) + " out of range");
  }
}

ordfa_status check_impl(ordfa::CheckResult (*fn)(const ordfa::Dfa&), const ordfa_dfa* m,
                        int* well_ordered, ordfa_witness** witness) {
  ORDFA_REQUIRE(m && well_ordered);
  if (witness) *witness = nullptr;
  return guarded([&] {
    auto r = fn(m->value);
    *well_ordered = r.well_ordered() ? 1 : 0;
    if (!r.well_ordered() && witness) *witness = make_witness(*r.witness);
  });
}

}  // namespace

extern "C" {

const char* ordfa_last_error(void) { return g_last_error.c_str(); }

const char* ordfa_status_name(ordfa_status status) {
  if (status == ORDFA_OK) return "OK";
  if (status == ORDFA_ERR_INTERNAL) return "InternalError";
  return ordfa::error_code_name(static_cast<ordfa::ErrorCode>(status));
}

void ordfa_string_free(char* s) { std::free(s); }

// ---- automata ---------------------------------------------------------------

ordfa_status ordfa_dfa_create(size_t state_count, uint32_t start, const uint32_t* delta,
                              const uint32_t* finals, size_t final_count, ordfa_dfa** out) {
  ORDFA_REQUIRE(out && (delta || state_count == 0) && (finals || final_count == 0));
  return guarded([&] {
    std::vector<ordfa::Dfa::Row> rows(state_count);
    for (size_t q = 0; q < state_count; ++q) rows[q] = {delta[2 * q], delta[2 * q + 1]};
    std::vector<ordfa::State> fs(finals, finals + final_count);
    *out = new ordfa_dfa{ordfa::Dfa(start, std::move(rows), fs)};
  });
}

ordfa_status ordfa_dfa_from_json(const char* text, size_t length, ordfa_dfa** out) {
  ORDFA_REQUIRE(text && out);
  return guarded([&] {
    *out = new ordfa_dfa{ordfa::dfa_from_json(std::string_view(text, length))};
  });
}

ordfa_status ordfa_dfa_load(const char* path, ordfa_dfa** out) {
  ORDFA_REQUIRE(path && out);
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(ORDFA_ERR_IO, std::string(path) + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  auto status = guarded([&] { *out = new ordfa_dfa{ordfa::dfa_from_json(text)}; });
  if (status != ORDFA_OK) g_last_error = std::string(path) + ": " + g_last_error;
  return status;
}

ordfa_status ordfa_dfa_to_json(const ordfa_dfa* m, char** out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] { *out = dup_string(ordfa::dfa_to_json(m->value)); });
}

ordfa_status ordfa_dfa_save(const ordfa_dfa* m, const char* path) {
  ORDFA_REQUIRE(m && path);
  std::ofstream outf(path, std::ios::binary | std::ios::trunc);
  if (!outf) return fail(ORDFA_ERR_IO, std::string(path) + ": cannot write file");
  outf << ordfa::dfa_to_json(m->value);
  if (!outf) return fail(ORDFA_ERR_IO, std::string(path) + ": write failed");
  return ORDFA_OK;
}

ordfa_status ordfa_dfa_clone(const ordfa_dfa* m, ordfa_dfa** out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] { *out = new ordfa_dfa{m->value}; });
}

void ordfa_dfa_free(ordfa_dfa* m) { delete m; }

size_t ordfa_dfa_state_count(const ordfa_dfa* m) { return m ? m->value.state_count() : 0; }
uint32_t ordfa_dfa_start(const ordfa_dfa* m) { return m ? m->value.start() : 0; }

ordfa_status ordfa_dfa_next(const ordfa_dfa* m, uint32_t q, int letter, uint32_t* out) {
  ORDFA_REQUIRE(m && out);
  if (letter != 0 && letter != 1) return fail(ORDFA_ERR_INVALID_ARGUMENT, "letter must be 0 or 1");
  return guarded([&] {
    check_state(m->value, q);
    *out = m->value.next(q, letter);
  });
}

ordfa_status ordfa_dfa_is_final(const ordfa_dfa* m, uint32_t q, int* out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] {
    check_state(m->value, q);
    *out = m->value.is_final(q) ? 1 : 0;
  });
}

ordfa_status ordfa_run(const ordfa_dfa* m, uint32_t q, const char* word, uint32_t* out) {
  ORDFA_REQUIRE(m && word && out);
  return guarded([&] {
    check_state(m->value, q);
    *out = ordfa::run(m->value, q, word_arg(word));
  });
}

ordfa_status ordfa_accepts(const ordfa_dfa* m, const char* word, int* out) {
  ORDFA_REQUIRE(m && word && out);
  return guarded([&] { *out = ordfa::accepts(m->value, word_arg(word)) ? 1 : 0; });
}

ordfa_status ordfa_dfa_to_dot(const ordfa_dfa* m, char** out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] { *out = dup_string(ordfa::to_dot(m->value)); });
}

// ---- trimming and structure -------------------------------------------------

ordfa_status ordfa_trim(const ordfa_dfa* m, ordfa_trim_report** out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] {
    auto report = ordfa::trim(m->value);
    ordfa::Dfa result = report.trimmed;
    *out = new ordfa_trim_report{std::move(report), ordfa_dfa{std::move(result)}};
  });
}

const ordfa_dfa* ordfa_trim_report_result(const ordfa_trim_report* r) {
  return r ? &r->result : nullptr;
}
size_t ordfa_trim_report_removed_count(const ordfa_trim_report* r) {
  return r ? r->report.removed_unreachable.size() : 0;
}
uint32_t ordfa_trim_report_removed_at(const ordfa_trim_report* r, size_t i) {
  return r->report.removed_unreachable.at(i);
}
size_t ordfa_trim_report_merged_count(const ordfa_trim_report* r) {
  return r ? r->report.merged_into_sink.size() : 0;
}
uint32_t ordfa_trim_report_merged_at(const ordfa_trim_report* r, size_t i) {
  return r->report.merged_into_sink.at(i);
}
int ordfa_trim_report_sink(const ordfa_trim_report* r, uint32_t* sink) {
  if (!r || !r->report.sink) return 0;
  if (sink) *sink = *r->report.sink;
  return 1;
}
int ordfa_trim_report_map(const ordfa_trim_report* r, uint32_t q, uint32_t* out) {
  if (!r || q >= r->report.state_map.size() || !r->report.state_map[q]) return 0;
  if (out) *out = *r->report.state_map[q];
  return 1;
}
void ordfa_trim_report_free(ordfa_trim_report* r) { delete r; }

ordfa_status ordfa_is_trim(const ordfa_dfa* m, int* out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] { *out = ordfa::is_trim(m->value) ? 1 : 0; });
}

ordfa_status ordfa_sink(const ordfa_dfa* m, int* has_sink, uint32_t* sink) {
  ORDFA_REQUIRE(m && has_sink);
  return guarded([&] {
    auto s = ordfa::sink_of(m->value);
    *has_sink = s ? 1 : 0;
    if (s && sink) *sink = *s;
  });
}

ordfa_status ordfa_component_of(const ordfa_dfa* m, uint32_t q, size_t* out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] {
    check_state(m->value, q);
    *out = ordfa::condense(m->value).component_of[q];
  });
}

ordfa_status ordfa_height(const ordfa_dfa* m, uint32_t q, size_t* out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] {
    check_state(m->value, q);
    *out = ordfa::condense(m->value).height_of[q];
  });
}

ordfa_status ordfa_is_recursive(const ordfa_dfa* m, uint32_t q, int* out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] {
    check_state(m->value, q);
    *out = ordfa::is_recursive(m->value, q) ? 1 : 0;
  });
}

ordfa_status ordfa_loop_word(const ordfa_dfa* m, uint32_t q, char** out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] {
    check_state(m->value, q);
    *out = dup_string(ordfa::loop_word(m->value, q).str());
  });
}

// ---- well-order decision ----------------------------------------------------

ordfa_status ordfa_check(const ordfa_dfa* m, int* well_ordered, ordfa_witness** witness) {
  return check_impl(&ordfa::check, m, well_ordered, witness);
}

ordfa_status ordfa_naive_check(const ordfa_dfa* m, int* well_ordered,
                               ordfa_witness** witness) {
  return check_impl(&ordfa::oracle::naive_check, m, well_ordered, witness);
}

ordfa_status ordfa_witness_create(const char* x, const char* u, const char* v, uint32_t q,
                                  ordfa_witness** out) {
  ORDFA_REQUIRE(x && u && v && out);
  return guarded([&] {
    *out = make_witness(ordfa::Witness{word_arg(x), word_arg(u), word_arg(v), q});
  });
}

const char* ordfa_witness_x(const ordfa_witness* w) { return w ? w->x.c_str() : nullptr; }
const char* ordfa_witness_u(const ordfa_witness* w) { return w ? w->u.c_str() : nullptr; }
const char* ordfa_witness_v(const ordfa_witness* w) { return w ? w->v.c_str() : nullptr; }
uint32_t ordfa_witness_q(const ordfa_witness* w) { return w ? w->value.q : 0; }

ordfa_status ordfa_witness_chain(const ordfa_witness* w, size_t n, char** out) {
  ORDFA_REQUIRE(w && out);
  return guarded([&] { *out = dup_string(ordfa::witness_chain(w->value, n).str()); });
}

ordfa_status ordfa_verify_witness(const ordfa_dfa* m, const ordfa_witness* w, size_t upto,
                                  int* ok, size_t* failed_at, char** reason) {
  ORDFA_REQUIRE(m && w && ok);
  if (reason) *reason = nullptr;
  return guarded([&] {
    auto v = ordfa::verify_witness(m->value, w->value, upto);
    *ok = v.ok ? 1 : 0;
    if (!v.ok && failed_at) *failed_at = *v.failed_at;
    if (!v.ok && reason) *reason = dup_string(v.reason);
  });
}

void ordfa_witness_free(ordfa_witness* w) { delete w; }

// ---- lexicographic order ----------------------------------------------------

ordfa_status ordfa_compare_lex(const char* u, const char* v, ordfa_lex_relation* out) {
  ORDFA_REQUIRE(u && v && out);
  return guarded([&] {
    switch (ordfa::compare_lex(word_arg(u), word_arg(v))) {
      case ordfa::LexRelation::kEqual: *out = ORDFA_LEX_EQUAL; break;
      case ordfa::LexRelation::kPrefixLess: *out = ORDFA_LEX_PREFIX_LESS; break;
      case ordfa::LexRelation::kPrefixGreater: *out = ORDFA_LEX_PREFIX_GREATER; break;
      case ordfa::LexRelation::kStrictLess: *out = ORDFA_LEX_STRICT_LESS; break;
      case ordfa::LexRelation::kStrictGreater: *out = ORDFA_LEX_STRICT_GREATER; break;
    }
  });
}

ordfa_status ordfa_min_word(const ordfa_dfa* m, int* found, char** out) {
  ORDFA_REQUIRE(m && found && out);
  *out = nullptr;
  return guarded([&] {
    auto w = ordfa::min_word(m->value);
    *found = w ? 1 : 0;
    if (w) *out = dup_string(w->str());
  });
}

ordfa_status ordfa_successor(const ordfa_dfa* m, const char* w, int* found, char** out) {
  ORDFA_REQUIRE(m && w && found && out);
  *out = nullptr;
  return guarded([&] {
    auto s = ordfa::successor(m->value, word_arg(w));
    *found = s ? 1 : 0;
    if (s) *out = dup_string(s->str());
  });
}

ordfa_status ordfa_enumerate(const ordfa_dfa* m, size_t n, ordfa_words** out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] { *out = make_words(ordfa::enumerate(m->value, n)); });
}

ordfa_status ordfa_embed3to2(const char* ternary, char** out) {
  ORDFA_REQUIRE(ternary && out);
  return guarded([&] { *out = dup_string(ordfa::embed3to2(ternary).str()); });
}

ordfa_status ordfa_extract_strict_chain(const char* const* words, size_t count,
                                        ordfa_words** out) {
  ORDFA_REQUIRE((words || count == 0) && out);
  return guarded([&] { *out = make_words(ordfa::extract_strict_chain(word_list(words, count))); });
}

ordfa_status ordfa_analyze_chain(const char* const* words, size_t count,
                                 ordfa_chain_analysis** out) {
  ORDFA_REQUIRE((words || count == 0) && out);
  return guarded([&] {
    *out = new ordfa_chain_analysis{ordfa::analyze_chain(word_list(words, count))};
  });
}

size_t ordfa_words_count(const ordfa_words* ws) { return ws ? ws->words.size() : 0; }
const char* ordfa_words_at(const ordfa_words* ws, size_t i) {
  return ws && i < ws->words.size() ? ws->words[i].c_str() : nullptr;
}
void ordfa_words_free(ordfa_words* ws) { delete ws; }

size_t ordfa_chain_active_count(const ordfa_chain_analysis* a) {
  return a ? a->value.active.size() : 0;
}
void ordfa_chain_active_at(const ordfa_chain_analysis* a, size_t i, size_t* position,
                           size_t* time) {
  const auto& p = a->value.active.at(i);
  if (position) *position = p.position;
  if (time) *time = p.time;
}
size_t ordfa_chain_sequence_count(const ordfa_chain_analysis* a) {
  return a ? a->value.sequence.size() : 0;
}
void ordfa_chain_sequence_at(const ordfa_chain_analysis* a, size_t k, size_t* position,
                             size_t* time) {
  const auto& p = a->value.sequence.at(k);
  if (position) *position = p.position;
  if (time) *time = p.time;
}
void ordfa_chain_analysis_free(ordfa_chain_analysis* a) { delete a; }

// ---- ordinals ---------------------------------------------------------------

ordfa_status ordfa_ordinal_parse(const char* text, ordfa_ordinal** out) {
  ORDFA_REQUIRE(text && out);
  return guarded([&] { *out = new ordfa_ordinal{ordfa::parse_ord(text)}; });
}

ordfa_status ordfa_ordinal_format(const ordfa_ordinal* a, char** out) {
  ORDFA_REQUIRE(a && out);
  return guarded([&] { *out = dup_string(ordfa::format_ord(a->value)); });
}

ordfa_status ordfa_ordinal_add(const ordfa_ordinal* a, const ordfa_ordinal* b,
                               ordfa_ordinal** out) {
  ORDFA_REQUIRE(a && b && out);
  return guarded([&] { *out = new ordfa_ordinal{ordfa::ord_add(a->value, b->value)}; });
}

ordfa_status ordfa_ordinal_mul_omega(const ordfa_ordinal* a, ordfa_ordinal** out) {
  ORDFA_REQUIRE(a && out);
  return guarded([&] { *out = new ordfa_ordinal{ordfa::ord_mul_omega(a->value)}; });
}

int ordfa_ordinal_cmp(const ordfa_ordinal* a, const ordfa_ordinal* b) {
  auto c = ordfa::ord_cmp(a->value, b->value);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

int ordfa_ordinal_degree(const ordfa_ordinal* a) { return a ? a->value.degree() : -1; }
void ordfa_ordinal_free(ordfa_ordinal* a) { delete a; }

// ---- order types ------------------------------------------------------------

ordfa_status ordfa_order_type(const ordfa_dfa* m, ordfa_type_table** out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] {
    auto table = ordfa::order_type(m->value);
    auto* t = new ordfa_type_table{{}, ordfa_ordinal{table.overall},
                                   ordfa::condense(m->value).height_of};
    for (auto& o : table.per_state) t->per_state.push_back(ordfa_ordinal{std::move(o)});
    *out = t;
  });
}

size_t ordfa_type_table_size(const ordfa_type_table* t) { return t ? t->per_state.size() : 0; }
const ordfa_ordinal* ordfa_type_table_at(const ordfa_type_table* t, uint32_t q) {
  return t && q < t->per_state.size() ? &t->per_state[q] : nullptr;
}
size_t ordfa_type_table_height(const ordfa_type_table* t, uint32_t q) {
  return t && q < t->heights.size() ? t->heights[q] : 0;
}
const ordfa_ordinal* ordfa_type_table_overall(const ordfa_type_table* t) {
  return t ? &t->overall : nullptr;
}
void ordfa_type_table_free(ordfa_type_table* t) { delete t; }

ordfa_status ordfa_rank(const ordfa_dfa* m, const char* w, ordfa_ordinal** out) {
  ORDFA_REQUIRE(m && w && out);
  return guarded([&] { *out = new ordfa_ordinal{ordfa::rank(m->value, word_arg(w))}; });
}

// ---- synthesis --------------------------------------------------------------

ordfa_status ordfa_synth(const ordfa_ordinal* a, ordfa_dfa** out) {
  ORDFA_REQUIRE(a && out);
  return guarded([&] { *out = new ordfa_dfa{ordfa::synth(a->value)}; });
}
ordfa_status ordfa_synth_zero(ordfa_dfa** out) {
  ORDFA_REQUIRE(out);
  return guarded([&] { *out = new ordfa_dfa{ordfa::synth_zero()}; });
}
ordfa_status ordfa_synth_one(ordfa_dfa** out) {
  ORDFA_REQUIRE(out);
  return guarded([&] { *out = new ordfa_dfa{ordfa::synth_one()}; });
}
ordfa_status ordfa_synth_sum(const ordfa_dfa* m1, const ordfa_dfa* m2, ordfa_dfa** out) {
  ORDFA_REQUIRE(m1 && m2 && out);
  return guarded([&] { *out = new ordfa_dfa{ordfa::synth_sum(m1->value, m2->value)}; });
}
ordfa_status ordfa_synth_mul_omega(const ordfa_dfa* m, ordfa_dfa** out) {
  ORDFA_REQUIRE(m && out);
  return guarded([&] { *out = new ordfa_dfa{ordfa::synth_mul_omega(m->value)}; });
}

// ---- oracles and fuzzing ----------------------------------------------------

ordfa_status ordfa_enum_bounded(const ordfa_dfa* m, size_t bound, size_t cap,
                                ordfa_words** out) {
  ORDFA_REQUIRE(m && out);
  if (cap == 0) cap = ordfa::oracle::kDefaultBoundCap;
  return guarded([&] { *out = make_words(ordfa::oracle::enum_bounded(m->value, bound, cap)); });
}

ordfa_status ordfa_brute_rank(const ordfa_dfa* m, const char* w, size_t bound, size_t cap,
                              uint64_t* out) {
  ORDFA_REQUIRE(m && w && out);
  if (cap == 0) cap = ordfa::oracle::kDefaultBoundCap;
  return guarded([&] { *out = ordfa::oracle::brute_rank(m->value, word_arg(w), bound, cap); });
}

ordfa_status ordfa_random_trim_dfa(uint64_t seed, size_t states, ordfa_dfa** out) {
  ORDFA_REQUIRE(out);
  return guarded([&] { *out = new ordfa_dfa{ordfa::oracle::random_trim_dfa(seed, states)}; });
}

void ordfa_fuzz_options_init(ordfa_fuzz_options* options) {
  if (!options) return;
  const ordfa::oracle::FuzzConfig defaults;
  options->seeds = defaults.seeds;
  options->first_seed = defaults.first_seed;
  options->states = defaults.states;
  options->exhaustive = defaults.exhaustive ? 1 : 0;
  options->witness_depth = defaults.witness_depth;
  options->rank_word_length = defaults.rank_word_length;
  options->bound_cap = defaults.bound_cap;
  options->failures_only = 0;
}

ordfa_status ordfa_fuzz(const ordfa_fuzz_options* options, char** report, size_t* failures) {
  ORDFA_REQUIRE(options && report);
  if (options->states == 0) return fail(ORDFA_ERR_INVALID_ARGUMENT, "state count must be positive");
  if (options->exhaustive && options->states > 4) {
    return fail(ORDFA_ERR_INVALID_ARGUMENT, "exhaustive mode supports at most 4 states");
  }
  return guarded([&] {
    ordfa::oracle::FuzzConfig config;
    config.seeds = options->seeds;
    config.first_seed = options->first_seed;
    config.states = options->states;
    config.exhaustive = options->exhaustive != 0;
    config.witness_depth = options->witness_depth;
    config.rank_word_length = options->rank_word_length;
    config.bound_cap = options->bound_cap ? options->bound_cap : ordfa::oracle::kDefaultBoundCap;
    config.record_passing = options->failures_only == 0;
    auto r = ordfa::oracle::fuzz(config);
    *report = dup_string(ordfa::oracle::format_report(r, options->failures_only != 0));
    if (failures) *failures = r.failures;
  });
}

}  // extern "C"
