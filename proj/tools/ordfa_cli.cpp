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

// ordfa: command-line front end. Talks to the library only through ordfa.h.
//
// Exit codes: 0 success / well-ordered, 1 verification or fuzz failure,
// 2 malformed input or usage error, 3 not well-ordered.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordfa.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotWellOrdered = 3;

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using DfaPtr = std::unique_ptr<ordfa_dfa, Deleter<ordfa_dfa, ordfa_dfa_free>>;
using OrdinalPtr = std::unique_ptr<ordfa_ordinal, Deleter<ordfa_ordinal, ordfa_ordinal_free>>;
using WitnessPtr = std::unique_ptr<ordfa_witness, Deleter<ordfa_witness, ordfa_witness_free>>;
using WordsPtr = std::unique_ptr<ordfa_words, Deleter<ordfa_words, ordfa_words_free>>;
using TablePtr = std::unique_ptr<ordfa_type_table, Deleter<ordfa_type_table, ordfa_type_table_free>>;
using TrimPtr =
    std::unique_ptr<ordfa_trim_report, Deleter<ordfa_trim_report, ordfa_trim_report_free>>;
using ChainPtr = std::unique_ptr<ordfa_chain_analysis,
                                 Deleter<ordfa_chain_analysis, ordfa_chain_analysis_free>>;

// Carries the exit code out of a subcommand.
struct Exit {
  int code;
};

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "ordfa: " << message << "\n";
  throw Exit{code};
}

void ok_or_die(ordfa_status status, const std::string& context = {}) {
  if (status == ORDFA_OK) return;
  std::string msg = context.empty() ? "" : context + ": ";
  msg += ordfa_last_error();
  die(kExitInput, msg);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ordfa_string_free(s);
  return out;
}

std::string display(const std::string& word) { return word.empty() ? "(eps)" : word; }

// "(eps)" and "eps" are accepted for the empty word on the command line.
std::string word_arg(const std::string& text) {
  return text == "(eps)" || text == "eps" ? std::string() : text;
}

DfaPtr load(const std::string& path) {
  ordfa_dfa* m = nullptr;
  ok_or_die(ordfa_dfa_load(path.c_str(), &m));
  return DfaPtr(m);
}

std::string format(const ordfa_ordinal* a) {
  char* s = nullptr;
  ok_or_die(ordfa_ordinal_format(a, &s));
  return take(s);
}

void print_witness(const ordfa_witness* w, std::size_t chain_words) {
  std::cout << "witness state q = " << ordfa_witness_q(w) << "\n"
            << "  x = " << display(ordfa_witness_x(w)) << "\n"
            << "  u = " << display(ordfa_witness_u(w)) << "\n"
            << "  v = " << display(ordfa_witness_v(w)) << "\n"
            << "descending chain x (0u)^n 1 v:\n";
  for (std::size_t n = 0; n < chain_words; ++n) {
    char* s = nullptr;
    ok_or_die(ordfa_witness_chain(w, n, &s));
    std::cout << "  w_" << n << " = " << display(take(s)) << "\n";
  }
}

std::optional<std::size_t> env_bound_cap() {
  const char* text = std::getenv("ORDFA_BOUND_CAP");
  if (!text || !*text) return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoul(text));
  } catch (const std::exception&) {
    die(kExitInput, std::string("ORDFA_BOUND_CAP: not a number: ") + text);
  }
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& path) {
  auto m = load(path);
  int wo = 0;
  ordfa_witness* raw = nullptr;
  ok_or_die(ordfa_check(m.get(), &wo, &raw), path);
  WitnessPtr w(raw);
  if (wo) {
    std::cout << "well-ordered\n";
    return kExitOk;
  }
  std::cout << "not well-ordered\n";
  print_witness(w.get(), 5);
  return kExitNotWellOrdered;
}

int cmd_ordtype(const std::string& path, bool table) {
  auto m = load(path);
  ordfa_type_table* raw = nullptr;
  ok_or_die(ordfa_order_type(m.get(), &raw), path);
  TablePtr t(raw);
  std::cout << format(ordfa_type_table_overall(t.get())) << "\n";
  if (table) {
    std::cout << "state\theight\tordinal\n";
    for (uint32_t q = 0; q < ordfa_type_table_size(t.get()); ++q) {
      std::cout << q << '\t' << ordfa_type_table_height(t.get(), q) << '\t'
                << format(ordfa_type_table_at(t.get(), q)) << "\n";
    }
  }
  return kExitOk;
}

int cmd_synth(const std::string& text, const std::string& out_path) {
  ordfa_ordinal* a = nullptr;
  ok_or_die(ordfa_ordinal_parse(text.c_str(), &a), "ordinal \"" + text + "\"");
  OrdinalPtr alpha(a);
  ordfa_dfa* raw = nullptr;
  ok_or_die(ordfa_synth(alpha.get(), &raw));
  DfaPtr m(raw);
  if (out_path.empty()) {
    char* json = nullptr;
    ok_or_die(ordfa_dfa_to_json(m.get(), &json));
    std::cout << take(json);
  } else {
    ok_or_die(ordfa_dfa_save(m.get(), out_path.c_str()));
  }
  return kExitOk;
}

int cmd_enum(const std::string& path, std::size_t n) {
  auto m = load(path);
  ordfa_words* raw = nullptr;
  ok_or_die(ordfa_enumerate(m.get(), n, &raw), path);
  WordsPtr ws(raw);
  for (std::size_t i = 0; i < ordfa_words_count(ws.get()); ++i) {
    std::cout << display(ordfa_words_at(ws.get(), i)) << "\n";
  }
  return kExitOk;
}

int cmd_rank(const std::string& path, const std::string& word) {
  auto m = load(path);
  ordfa_ordinal* raw = nullptr;
  ok_or_die(ordfa_rank(m.get(), word_arg(word).c_str(), &raw), path);
  OrdinalPtr r(raw);
  std::cout << format(r.get()) << "\n";
  return kExitOk;
}

int print_optional_word(ordfa_status status, int found, char* word, const std::string& path) {
  if (status == ORDFA_ERR_NO_MINIMUM) {
    std::cerr << "ordfa: " << path << ": " << ordfa_last_error() << "\n";
    return kExitNotWellOrdered;
  }
  ok_or_die(status, path);
  std::cout << (found ? display(take(word)) : "(none)") << "\n";
  return kExitOk;
}

int cmd_min(const std::string& path) {
  auto m = load(path);
  int found = 0;
  char* w = nullptr;
  ordfa_status status = ordfa_min_word(m.get(), &found, &w);
  return print_optional_word(status, found, w, path);
}

int cmd_succ(const std::string& path, const std::string& word) {
  auto m = load(path);
  int found = 0;
  char* w = nullptr;
  ordfa_status status = ordfa_successor(m.get(), word_arg(word).c_str(), &found, &w);
  return print_optional_word(status, found, w, path);
}

int cmd_trim(const std::string& path, const std::string& out_path) {
  auto m = load(path);
  ordfa_trim_report* raw = nullptr;
  ok_or_die(ordfa_trim(m.get(), &raw), path);
  TrimPtr r(raw);
  const ordfa_dfa* t = ordfa_trim_report_result(r.get());

  std::ostream& report = out_path.empty() ? std::cerr : std::cout;
  report << "states: " << ordfa_dfa_state_count(m.get()) << " -> "
         << ordfa_dfa_state_count(t) << "\n";
  report << "removed unreachable:";
  for (std::size_t i = 0; i < ordfa_trim_report_removed_count(r.get()); ++i) {
    report << ' ' << ordfa_trim_report_removed_at(r.get(), i);
  }
  report << "\nmerged into sink:";
  for (std::size_t i = 0; i < ordfa_trim_report_merged_count(r.get()); ++i) {
    report << ' ' << ordfa_trim_report_merged_at(r.get(), i);
  }
  uint32_t sink = 0;
  report << "\nsink: ";
  if (ordfa_trim_report_sink(r.get(), &sink)) {
    report << sink << "\n";
  } else {
    report << "(none)\n";
  }

  if (out_path.empty()) {
    char* json = nullptr;
    ok_or_die(ordfa_dfa_to_json(t, &json));
    std::cout << take(json);
  } else {
    ok_or_die(ordfa_dfa_save(t, out_path.c_str()));
  }
  return kExitOk;
}

struct WitnessArgs {
  std::size_t depth = 32;
  std::optional<std::string> x, u, v;
  uint32_t q = 0;
};

int cmd_witness(const std::string& path, const WitnessArgs& args) {
  auto m = load(path);
  WitnessPtr w;
  if (args.x || args.u || args.v) {
    ordfa_witness* raw = nullptr;
    ok_or_die(ordfa_witness_create(word_arg(args.x.value_or("")).c_str(),
                                   word_arg(args.u.value_or("")).c_str(),
                                   word_arg(args.v.value_or("")).c_str(), args.q, &raw));
    w.reset(raw);
  } else {
    int wo = 0;
    ordfa_witness* raw = nullptr;
    ok_or_die(ordfa_check(m.get(), &wo, &raw), path);
    w.reset(raw);
    if (wo) {
      std::cout << "well-ordered: no witness exists\n";
      return kExitOk;
    }
  }
  print_witness(w.get(), std::min<std::size_t>(args.depth, 5));
  int ok = 0;
  std::size_t failed_at = 0;
  char* reason = nullptr;
  ok_or_die(ordfa_verify_witness(m.get(), w.get(), args.depth, &ok, &failed_at, &reason));
  if (ok) {
    std::cout << "verified to depth " << args.depth << "\n";
    return kExitOk;
  }
  std::cout << "verification failed at n = " << failed_at << ": " << take(reason) << "\n";
  return kExitFailure;
}

int cmd_analyze_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) die(kExitInput, path + ": cannot open file");
  std::vector<std::string> words;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    line = word_arg(line.substr(first));
    if (line.find_first_not_of("01") != std::string::npos) {
      die(kExitInput, path + ": line " + std::to_string(lineno) +
                          ": words must consist of 0 and 1 (or \"(eps)\")");
    }
    words.push_back(line);
  }
  std::vector<const char*> ptrs;
  for (const auto& w : words) ptrs.push_back(w.c_str());
  ordfa_chain_analysis* raw = nullptr;
  ok_or_die(ordfa_analyze_chain(ptrs.data(), ptrs.size(), &raw), path);
  ChainPtr a(raw);

  std::cout << "# positions are 0-based; time n compares w_n with w_(n+1), n from 1\n"
            << "active (position, time):\n";
  for (std::size_t i = 0; i < ordfa_chain_active_count(a.get()); ++i) {
    std::size_t pos = 0, time = 0;
    ordfa_chain_active_at(a.get(), i, &pos, &time);
    std::cout << "  (" << pos << ", " << time << ")\n";
  }
  std::cout << "sequence:\n";
  for (std::size_t k = 0; k < ordfa_chain_sequence_count(a.get()); ++k) {
    std::size_t pos = 0, time = 0;
    ordfa_chain_sequence_at(a.get(), k, &pos, &time);
    std::cout << "  i_" << k << " = " << pos << ", t_" << k << " = " << time << "\n";
  }
  return kExitOk;
}

int cmd_dot(const std::string& path) {
  auto m = load(path);
  char* s = nullptr;
  ok_or_die(ordfa_dfa_to_dot(m.get(), &s));
  std::cout << take(s);
  return kExitOk;
}

int cmd_fuzz(ordfa_fuzz_options options) {
  if (auto cap = env_bound_cap()) options.bound_cap = *cap;
  char* report = nullptr;
  std::size_t failures = 0;
  ok_or_die(ordfa_fuzz(&options, &report, &failures));
  std::cout << take(report);
  return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_embed(const std::string& ternary) {
  char* s = nullptr;
  ok_or_die(ordfa_embed3to2(word_arg(ternary).c_str(), &s));
  std::cout << display(take(s)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicographic well-order analysis of binary DFAs"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file, out_path, word, ordinal_text;

  auto* check = app.add_subcommand("check", "Decide whether the language is well-ordered");
  check->add_option("file", file, "Automaton JSON")->required();
  check->callback([&] { action = [&] { return cmd_check(file); }; });

  bool table = false;
  auto* ordtype = app.add_subcommand("ordtype", "Order type of the language");
  ordtype->add_option("file", file, "Automaton JSON")->required();
  ordtype->add_flag("--table", table, "Also print per-state order types as TSV");
  ordtype->callback([&] { action = [&] { return cmd_ordtype(file, table); }; });

  auto* synth = app.add_subcommand("synth", "Build an automaton of a given order type");
  synth->add_option("ordinal", ordinal_text, "Ordinal, e.g. \"w^2*3 + w + 4\"")->required();
  synth->add_option("-o,--output", out_path, "Output file (default: stdout)");
  synth->callback([&] { action = [&] { return cmd_synth(ordinal_text, out_path); }; });

  std::size_t count = 10;
  auto* en = app.add_subcommand("enum", "First words of the language in lexicographic order");
  en->add_option("file", file, "Automaton JSON")->required();
  en->add_option("-n", count, "Number of words")->capture_default_str();
  en->callback([&] { action = [&] { return cmd_enum(file, count); }; });

  auto* rank = app.add_subcommand("rank", "Order type of the accepted words below a word");
  rank->add_option("file", file, "Automaton JSON")->required();
  rank->add_option("-w,--word", word, "Word over 0/1 (\"(eps)\" for empty)")->required();
  rank->callback([&] { action = [&] { return cmd_rank(file, word); }; });

  auto* min = app.add_subcommand("min", "Least word of the language");
  min->add_option("file", file, "Automaton JSON")->required();
  min->callback([&] { action = [&] { return cmd_min(file); }; });

  auto* succ = app.add_subcommand("succ", "Least accepted word above a word");
  succ->add_option("file", file, "Automaton JSON")->required();
  succ->add_option("-w,--word", word, "Word over 0/1 (\"(eps)\" for empty)")->required();
  succ->callback([&] { action = [&] { return cmd_succ(file, word); }; });

  auto* trim = app.add_subcommand("trim", "Remove unreachable states and merge sinks");
  trim->add_option("file", file, "Automaton JSON")->required();
  trim->add_option("-o,--output", out_path, "Output file (default: stdout)");
  trim->callback([&] { action = [&] { return cmd_trim(file, out_path); }; });

  WitnessArgs wargs;
  std::string wx, wu, wv;
  auto* witness = app.add_subcommand("witness", "Verify a descending-chain witness");
  witness->add_option("file", file, "Automaton JSON")->required();
  witness->add_option("--verify", wargs.depth, "Number of chain steps to check")
      ->capture_default_str();
  auto* ox = witness->add_option("--x", wx, "Use this witness instead of the computed one");
  auto* ou = witness->add_option("--u", wu);
  auto* ov = witness->add_option("--v", wv);
  witness->add_option("--q", wargs.q);
  witness->callback([&] {
    if (ox->count()) wargs.x = wx;
    if (ou->count()) wargs.u = wu;
    if (ov->count()) wargs.v = wv;
    action = [&] { return cmd_witness(file, wargs); };
  });

  auto* chain = app.add_subcommand("analyze-chain",
                                   "Active positions of a strictly descending chain");
  chain->add_option("file", file, "Text file, one word per line")->required();
  chain->callback([&] { action = [&] { return cmd_analyze_chain(file); }; });

  auto* dot = app.add_subcommand("dot", "Graphviz rendering of automaton and condensation");
  dot->add_option("file", file, "Automaton JSON")->required();
  dot->callback([&] { action = [&] { return cmd_dot(file); }; });

  ordfa_fuzz_options fopts;
  ordfa_fuzz_options_init(&fopts);
  bool exhaustive = false, failures_only = false;
  auto* fuzz = app.add_subcommand("fuzz", "Differential fuzzing against brute-force oracles");
  fuzz->add_option("--seeds", fopts.seeds, "Number of random instances")->capture_default_str();
  fuzz->add_option("--first-seed", fopts.first_seed)->capture_default_str();
  fuzz->add_option("--states", fopts.states, "States per instance")->capture_default_str();
  fuzz->add_option("--rank-length", fopts.rank_word_length,
                   "Max accepted word length for rank checks (0 disables)")
      ->capture_default_str();
  fuzz->add_flag("--exhaustive", exhaustive, "All automata with up to --states states");
  fuzz->add_flag("--failures-only", failures_only, "List failing cases only");
  fuzz->callback([&] {
    fopts.exhaustive = exhaustive ? 1 : 0;
    fopts.failures_only = failures_only ? 1 : 0;
    action = [&] { return cmd_fuzz(fopts); };
  });

  std::string ternary;
  auto* embed = app.add_subcommand("embed", "Embed a word over {0,1,2} into {0,1}*");
  embed->add_option("word", ternary, "Word over 0/1/2")->required();
  embed->callback([&] { action = [&] { return cmd_embed(ternary); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  try {
    return action ? action() : kExitInput;
  } catch (const Exit& e) {
    return e.code;
  }
}
