/* Copyright 2026 The cfpump Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cfpump/cfpump.hpp"
#include "cfpump/json.hpp"

namespace cfpump::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Grammar load_grammar(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_grammar(buf.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline Sentence read_sentence(const std::string& text, bool tokens) {
  try {
    return tokens ? sentence_from_tokens(text) : sentence_from_chars(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad input string: ") + e.what());
  }
}

inline std::string show(const Sentence& s, bool tokens) {
  if (s.empty()) return "_";
  return to_string(s, tokens ? " " : "");
}

}  // namespace detail

/// Runs one command line (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chomsky normal form and pumping decompositions for context-free grammars",
               "cfpump"};
  app.require_subcommand(1);

  std::string file, text;
  bool tokens = false, json = false;
  std::size_t i_max = 4, refute_i_max = 2, max_len = 0, m = 5;
  std::string language = "abc";

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "grammar file")->required();
  };
  auto add_string = [&](CLI::App* sub) {
    sub->add_option("string", text, "input sentence, one terminal per character")->required();
    sub->add_flag("--tokens", tokens, "split the input sentence on whitespace instead");
  };

  auto* simplify_cmd = app.add_subcommand("simplify", "print the simplified grammar");
  add_file(simplify_cmd);

  auto* cnf_cmd = app.add_subcommand("cnf", "print the CNF grammar with k and n = 2^k");
  add_file(cnf_cmd);

  auto* member_cmd = app.add_subcommand("member", "exit 0 iff the string is in the language");
  add_file(member_cmd);
  add_string(member_cmd);

  auto* parse_cmd = app.add_subcommand("parse", "print a derivation tree of the string");
  add_file(parse_cmd);
  add_string(parse_cmd);
  parse_cmd->add_flag("--json", json, "JSON output");

  auto* pump_cmd = app.add_subcommand("pump", "decompose the string and verify pumping");
  add_file(pump_cmd);
  add_string(pump_cmd);
  pump_cmd->add_option("--imax", i_max, "largest pumping exponent checked")->capture_default_str();
  pump_cmd->add_flag("--json", json, "JSON output");

  auto* enum_cmd = app.add_subcommand("enumerate", "list every sentence up to a length");
  add_file(enum_cmd);
  enum_cmd->add_option("--max-len", max_len, "maximum sentence length")->required();
  enum_cmd->add_flag("--tokens", tokens, "separate terminals by spaces");

  auto* refute_cmd = app.add_subcommand("refute-demo", "refute a^m b^m c^m by exhaustive splits");
  refute_cmd->add_option("--m", m, "exponent m, also used as n")->capture_default_str();
  refute_cmd->add_option("--imax", refute_i_max, "largest pumping exponent tried")
      ->capture_default_str();
  refute_cmd->add_option("--language", language, "abc (a^i b^i c^i) or ab (a^i b^i control)")
      ->check(CLI::IsMember({"abc", "ab"}))
      ->capture_default_str();
  refute_cmd->add_flag("--json", json, "JSON output");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (simplify_cmd->parsed()) {
      out << print_grammar(simplify(detail::load_grammar(file)));
      return kOk;
    }

    if (cnf_cmd->parsed()) {
      CnfGrammar g = to_cnf(detail::load_grammar(file));
      out << print_grammar(g.base());
      out << "k = " << g.base().nonterminals().size() << "\n";
      out << "n = " << pumping_constant(g) << "\n";
      return kOk;
    }

    if (member_cmd->parsed()) {
      CnfGrammar g = to_cnf(detail::load_grammar(file));
      bool yes = cyk_member(g, detail::read_sentence(text, tokens));
      out << (yes ? "member" : "not a member") << "\n";
      return yes ? kOk : kDomainError;
    }

    if (parse_cmd->parsed()) {
      CnfGrammar g = to_cnf(detail::load_grammar(file));
      auto t = cyk_tree(g, detail::read_sentence(text, tokens));
      if (!t) {
        err << "not a member (or empty)\n";
        return kDomainError;
      }
      out << (json ? to_json(*t).dump(2) : to_text(*t)) << "\n";
      return kOk;
    }

    if (pump_cmd->parsed()) {
      CnfGrammar g = to_cnf(detail::load_grammar(file));
      Decomposition d = decompose_sentence(g, detail::read_sentence(text, tokens));
      PumpReport report = verify_pumping(g, d, i_max);
      if (json) {
        Json doc;
        doc["k"] = g.base().nonterminals().size();
        doc["decomposition"] = to_json(d);
        doc["report"] = to_json(report);
        out << doc.dump(2) << "\n";
      } else {
        out << "n = " << d.n << " (k = " << g.base().nonterminals().size() << ")\n";
        out << "u = " << detail::show(d.u, tokens) << "\n";
        out << "v = " << detail::show(d.v, tokens) << "\n";
        out << "w = " << detail::show(d.w, tokens) << "\n";
        out << "x = " << detail::show(d.x, tokens) << "\n";
        out << "y = " << detail::show(d.y, tokens) << "\n";
        out << "repeated = " << d.repeated.name() << ", outer code = "
            << format_code(d.outer_code) << ", inner code = " << format_code(d.inner_code)
            << "\n";
        for (const PumpRow& row : report.rows) {
          out << "i = " << row.i << "  tree " << (row.tree_route ? "ok" : "FAIL") << "  cyk "
              << (row.cyk_route ? "ok" : "FAIL") << "  " << detail::show(row.sentence, tokens)
              << "\n";
        }
        out << "overall: " << (report.overall ? "true" : "false") << "\n";
      }
      return report.overall ? kOk : kDomainError;
    }

    if (enum_cmd->parsed()) {
      auto lang = enumerate_language(detail::load_grammar(file), max_len);
      std::vector<Sentence> sorted(lang.begin(), lang.end());
      std::stable_sort(sorted.begin(), sorted.end(), [](const Sentence& a, const Sentence& b) {
        return a.size() < b.size();
      });
      for (const Sentence& s : sorted) out << detail::show(s, tokens) << "\n";
      return kOk;
    }

    if (refute_cmd->parsed()) {
      if (m == 0) throw detail::UsageError("--m must be positive");
      Sentence s = repeat(sentence_from_chars("a"), m);
      const auto& tail = repeat(sentence_from_chars("b"), m);
      s.insert(s.end(), tail.begin(), tail.end());
      Membership member = in_equal_ab;
      if (language == "abc") {
        const auto& c = repeat(sentence_from_chars("c"), m);
        s.insert(s.end(), c.begin(), c.end());
        member = in_equal_abc;
      }
      RefutationReport report = refute_candidate(member, s, m, refute_i_max);
      if (json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        std::size_t survivors = static_cast<std::size_t>(
            std::count_if(report.splits.begin(), report.splits.end(),
                          [](const SplitOutcome& o) { return !o.failing_i; }));
        out << "sentence = " << to_string(s) << ", n = " << m << ", imax = " << refute_i_max
            << "\n";
        out << "splits = " << report.splits.size() << ", surviving = " << survivors << "\n";
        out << outcome_name(report.outcome) << "\n";
      }
      return report.outcome == RefutationReport::Outcome::Refuted ? kOk : kDomainError;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace cfpump::cli
