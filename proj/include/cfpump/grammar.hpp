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

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <ranges>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cfpump/error.hpp"
#include "cfpump/symbol.hpp"

namespace cfpump {

struct Rule {
  Symbol lhs;
  SententialForm rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
  friend std::strong_ordering operator<=>(const Rule&, const Rule&) = default;
};

/// A context-free grammar: start symbol, finite rule set, and the
/// nonterminal and terminal inventories. The inventories hold exactly the
/// symbols mentioned by the rules plus the start symbol, so every rule is
/// built from finite, known alphabets.
class Grammar {
 public:
  using RuleSet = std::set<Rule>;

  template <std::ranges::input_range Rules = std::vector<Rule>>
  Grammar(Symbol start, const Rules& rules) : start_(std::move(start)) {
    if (!start_.is_nonterminal()) {
      throw std::invalid_argument("start symbol must be a nonterminal: " + start_.name());
    }
    nonterminals_.insert(start_);
    for (const Rule& r : rules) {
      if (!r.lhs.is_nonterminal()) {
        throw std::invalid_argument("rule lhs must be a nonterminal: " + r.lhs.name());
      }
      nonterminals_.insert(r.lhs);
      for (const Symbol& s : r.rhs) (s.is_terminal() ? terminals_ : nonterminals_).insert(s);
      rules_.insert(r);
    }
  }

  Grammar(Symbol start, std::initializer_list<Rule> rules)
      : Grammar(std::move(start), std::vector<Rule>(rules)) {}

  const Symbol& start() const noexcept { return start_; }
  const RuleSet& rules() const noexcept { return rules_; }
  const std::set<Symbol>& nonterminals() const noexcept { return nonterminals_; }
  const std::set<Symbol>& terminals() const noexcept { return terminals_; }

  /// Rules with the given left-hand side, in rule-set order.
  auto rules_for(const Symbol& lhs) const {
    auto first = rules_.lower_bound(Rule{lhs, {}});
    auto last = first;
    while (last != rules_.end() && last->lhs == lhs) ++last;
    return std::ranges::subrange(first, last);
  }

  /// Longest right-hand side, in symbols.
  std::size_t max_rhs_length() const {
    std::size_t m = 0;
    for (const Rule& r : rules_) m = std::max(m, r.rhs.size());
    return m;
  }

  friend bool operator==(const Grammar& a, const Grammar& b) {
    return a.start_ == b.start_ && a.rules_ == b.rules_;
  }

 private:
  Symbol start_;
  RuleSet rules_;
  std::set<Symbol> nonterminals_;
  std::set<Symbol> terminals_;
};

// ---------------------------------------------------------------------------
// Text format

namespace detail {

struct Token {
  std::string text;
  bool quoted = false;
};

inline std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '#') {
      break;
    } else if (ch == '|') {
      out.push_back({"|", false});
      ++i;
    } else if (ch == '\'') {
      auto close = line.find('\'', i + 1);
      if (close == std::string_view::npos) throw ParseError(line_no, "unterminated quote");
      if (close == i + 1) throw ParseError(line_no, "empty quoted terminal");
      out.push_back({std::string(line.substr(i + 1, close - i - 1)), true});
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
             line[j] != '#' && line[j] != '|') {
        ++j;
      }
      out.push_back({std::string(line.substr(i, j - i)), false});
      i = j;
    }
  }
  return out;
}

inline Symbol symbol_of(const Token& tok, std::size_t line_no) {
  try {
    if (tok.quoted) return Symbol::terminal(tok.text);
    if (std::isupper(static_cast<unsigned char>(tok.text.front()))) {
      return Symbol::nonterminal(tok.text);
    }
    return Symbol::terminal(tok.text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

inline bool needs_quotes(const Symbol& s) {
  const std::string& n = s.name();
  return std::isupper(static_cast<unsigned char>(n.front())) || n == "_" || n == "->";
}

}  // namespace detail

/// Reads a grammar from its line-oriented text form:
///
///     # comment
///     start: S            (optional, must be the first non-comment line)
///     S -> a S b | a b
///     A -> _              (ε)
///     B -> 'X' c          (quotes force a terminal)
///
/// Without a `start:` line the start symbol is the lhs of the first rule.
inline Grammar parse_grammar(std::string_view text) {
  std::optional<Symbol> start;
  std::size_t start_line = 0;
  std::vector<Rule> rules;
  bool seen_content = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = detail::tokenize_line(line, line_no);
    if (tokens.empty()) continue;

    const detail::Token& head = tokens.front();
    if (!head.quoted && head.text.starts_with("start:")) {
      if (seen_content) throw ParseError(line_no, "start declaration must come first");
      seen_content = true;
      std::vector<detail::Token> rest(tokens.begin() + 1, tokens.end());
      if (head.text.size() > 6) rest.insert(rest.begin(), {head.text.substr(6), false});
      if (rest.size() != 1 || rest[0].quoted || rest[0].text == "|") {
        throw ParseError(line_no, "expected `start: <Nonterminal>`");
      }
      Symbol s = detail::symbol_of(rest[0], line_no);
      if (!s.is_nonterminal()) throw ParseError(line_no, "start symbol must be a nonterminal");
      start = s;
      start_line = line_no;
      continue;
    }
    seen_content = true;

    if (tokens.size() < 2 || tokens[1].quoted || tokens[1].text != "->") {
      throw ParseError(line_no, "expected `Nonterminal -> alternatives`");
    }
    if (head.quoted || head.text == "|") throw ParseError(line_no, "rule lhs must be a nonterminal");
    Symbol lhs = detail::symbol_of(head, line_no);
    if (!lhs.is_nonterminal()) throw ParseError(line_no, "rule lhs must be a nonterminal");

    std::vector<std::vector<detail::Token>> alternatives(1);
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      if (!tokens[i].quoted && tokens[i].text == "|") {
        alternatives.emplace_back();
      } else {
        alternatives.back().push_back(tokens[i]);
      }
    }
    for (const auto& alt : alternatives) {
      if (alt.empty()) throw ParseError(line_no, "empty alternative (write `_` for epsilon)");
      SententialForm rhs;
      bool epsilon = false;
      for (const detail::Token& tok : alt) {
        if (!tok.quoted && tok.text == "_") {
          epsilon = true;
        } else {
          rhs.push_back(detail::symbol_of(tok, line_no));
        }
      }
      if (epsilon && (alt.size() != 1)) {
        throw ParseError(line_no, "`_` must stand alone in its alternative");
      }
      rules.push_back(Rule{lhs, std::move(rhs)});
    }
  }

  if (rules.empty()) throw ParseError(line_no, "grammar has no rules");
  if (!start) {
    start = rules.front().lhs;
  } else if (std::none_of(rules.begin(), rules.end(),
                          [&](const Rule& r) { return r.lhs == *start; })) {
    throw ParseError(start_line, "start symbol " + start->name() + " has no rules");
  }
  return Grammar(*start, rules);
}

/// Writes one symbol the way parse_grammar reads it back.
inline std::string format_symbol(const Symbol& s) {
  if (s.is_terminal() && detail::needs_quotes(s)) return "'" + s.name() + "'";
  return s.name();
}

inline std::string format_rhs(const SententialForm& rhs) {
  if (rhs.empty()) return "_";
  std::string out;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (i != 0) out += ' ';
    out += format_symbol(rhs[i]);
  }
  return out;
}

inline std::string format_rule(const Rule& r) {
  return r.lhs.name() + " -> " + format_rhs(r.rhs);
}

/// Canonical text form: a `start:` line, then one line per nonterminal with
/// all its alternatives, start symbol first and the rest in sorted order.
inline std::string print_grammar(const Grammar& g) {
  std::string out = "start: " + g.start().name() + "\n";
  auto emit = [&](const Symbol& lhs) {
    auto alts = g.rules_for(lhs);
    if (alts.empty()) return;
    out += lhs.name() + " ->";
    bool first = true;
    for (const Rule& r : alts) {
      out += first ? " " : " | ";
      out += format_rhs(r.rhs);
      first = false;
    }
    out += '\n';
  };
  emit(g.start());
  for (const Symbol& nt : g.nonterminals()) {
    if (nt != g.start()) emit(nt);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixpoint analyses

/// Nonterminals that derive the empty string.
inline std::set<Symbol> nullable_nonterminals(const Grammar& g) {
  std::set<Symbol> nullable;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Rule& r : g.rules()) {
      if (nullable.contains(r.lhs)) continue;
      if (std::all_of(r.rhs.begin(), r.rhs.end(),
                      [&](const Symbol& s) { return nullable.contains(s); })) {
        nullable.insert(r.lhs);
        changed = true;
      }
    }
  }
  return nullable;
}

/// Nonterminals that derive at least one terminal string.
inline std::set<Symbol> productive_nonterminals(const Grammar& g) {
  std::set<Symbol> productive;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Rule& r : g.rules()) {
      if (productive.contains(r.lhs)) continue;
      if (std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
            return s.is_terminal() || productive.contains(s);
          })) {
        productive.insert(r.lhs);
        changed = true;
      }
    }
  }
  return productive;
}

/// Symbols (of both kinds) reachable from the start symbol.
inline std::set<Symbol> reachable_symbols(const Grammar& g) {
  std::set<Symbol> seen{g.start()};
  std::vector<Symbol> stack{g.start()};
  while (!stack.empty()) {
    Symbol cur = stack.back();
    stack.pop_back();
    for (const Rule& r : g.rules_for(cur)) {
      for (const Symbol& s : r.rhs) {
        if (seen.insert(s).second && s.is_nonterminal()) stack.push_back(s);
      }
    }
  }
  return seen;
}

/// True iff the empty sentence is in L(g).
inline bool decide_produces_empty(const Grammar& g) {
  return nullable_nonterminals(g).contains(g.start());
}

/// True iff L(g) contains a sentence of length at least one.
inline bool decide_produces_non_empty(const Grammar& g) {
  auto productive = productive_nonterminals(g);
  // Nonterminals that derive some nonempty terminal string.
  std::set<Symbol> nonempty;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Rule& r : g.rules()) {
      if (nonempty.contains(r.lhs)) continue;
      bool all_productive = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
        return s.is_terminal() || productive.contains(s);
      });
      bool some_nonempty = std::any_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
        return s.is_terminal() || nonempty.contains(s);
      });
      if (all_productive && some_nonempty) {
        nonempty.insert(r.lhs);
        changed = true;
      }
    }
  }
  return nonempty.contains(g.start());
}

// ---------------------------------------------------------------------------
// Brute-force language enumeration

struct EnumerateOptions {
  /// Sentential forms longer than max_len + slack are dropped. When unset the
  /// slack is (|N| + 1) * max(r - 1, 1), r the longest rhs, which is enough
  /// for every sentence of length <= max_len to keep a derivation under it.
  std::optional<std::size_t> slack;
  /// Maximum number of distinct sentential forms visited.
  std::size_t node_budget = 4'000'000;
};

/// Every sentence of length <= max_len derivable from the start symbol.
///
/// Breadth-first search over sentential forms. The leftmost nonterminal may
/// be rewritten by any of its rules; any other nonterminal only by rules
/// whose right-hand side can vanish, which lets ε-subtrees be erased as soon
/// as they appear. Forms whose minimal possible yield exceeds max_len are
/// pruned, as are forms over the length cap.
///
/// Throws ResourceCapExceeded when the node budget runs out.
inline std::set<Sentence> enumerate_language(const Grammar& g, std::size_t max_len,
                                             const EnumerateOptions& opts = {}) {
  using Id = std::uint16_t;
  using Form = std::vector<Id>;
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

  std::vector<Symbol> symbols(g.nonterminals().begin(), g.nonterminals().end());
  const std::size_t num_nt = symbols.size();
  symbols.insert(symbols.end(), g.terminals().begin(), g.terminals().end());
  std::map<Symbol, Id> id_of;
  for (std::size_t i = 0; i < symbols.size(); ++i) id_of.emplace(symbols[i], static_cast<Id>(i));

  std::vector<std::vector<Form>> alts(num_nt);
  for (const Rule& r : g.rules()) {
    Form rhs;
    for (const Symbol& s : r.rhs) rhs.push_back(id_of.at(s));
    alts[id_of.at(r.lhs)].push_back(std::move(rhs));
  }

  // Shortest terminal yield of each symbol; kInf for non-productive ones.
  std::vector<std::size_t> min_yield(symbols.size(), kInf);
  for (std::size_t i = num_nt; i < symbols.size(); ++i) min_yield[i] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < num_nt; ++a) {
      for (const Form& rhs : alts[a]) {
        std::size_t sum = 0;
        for (Id s : rhs) sum = std::min(kInf, sum + min_yield[s]);
        if (sum < min_yield[a]) {
          min_yield[a] = sum;
          changed = true;
        }
      }
    }
  }

  const std::size_t r = std::max<std::size_t>(g.max_rhs_length(), 2);
  const std::size_t slack = opts.slack.value_or((num_nt + 1) * (r - 1));
  const std::size_t cap = max_len + slack;

  struct FormHash {
    std::size_t operator()(const Form& f) const noexcept {
      std::uint64_t h = 1469598103934665603ull;
      for (Id x : f) h = (h ^ x) * 1099511628211ull;
      return static_cast<std::size_t>(h);
    }
  };

  std::set<Sentence> result;
  const Id start = id_of.at(g.start());
  if (min_yield[start] > max_len) return result;

  std::unordered_set<Form, FormHash> visited;
  std::deque<std::pair<Form, std::size_t>> queue;
  visited.insert(Form{start});
  queue.emplace_back(Form{start}, min_yield[start]);

  while (!queue.empty()) {
    auto [form, yield] = std::move(queue.front());
    queue.pop_front();

    bool any_nt = false;
    for (std::size_t p = 0; p < form.size(); ++p) {
      const Id a = form[p];
      if (a >= num_nt) continue;
      const bool leftmost = !any_nt;
      any_nt = true;
      if (!leftmost && min_yield[a] != 0) continue;
      for (const Form& rhs : alts[a]) {
        std::size_t rhs_yield = 0;
        for (Id s : rhs) rhs_yield = std::min(kInf, rhs_yield + min_yield[s]);
        if (!leftmost && rhs_yield != 0) continue;
        const std::size_t y = yield - min_yield[a] + rhs_yield;
        if (y > max_len) continue;
        if (form.size() - 1 + rhs.size() > cap) continue;
        Form next;
        next.reserve(form.size() - 1 + rhs.size());
        next.insert(next.end(), form.begin(), form.begin() + static_cast<std::ptrdiff_t>(p));
        next.insert(next.end(), rhs.begin(), rhs.end());
        next.insert(next.end(), form.begin() + static_cast<std::ptrdiff_t>(p) + 1, form.end());
        if (visited.insert(next).second) {
          if (visited.size() > opts.node_budget) {
            throw ResourceCapExceeded("enumeration exceeded node budget of " +
                                      std::to_string(opts.node_budget) + " sentential forms");
          }
          queue.emplace_back(std::move(next), y);
        }
      }
    }
    if (!any_nt) {
      Sentence s;
      s.reserve(form.size());
      for (Id x : form) s.push_back(symbols[x]);
      result.insert(std::move(s));
    }
  }
  return result;
}

}  // namespace cfpump
