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

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfpump/error.hpp"
#include "cfpump/grammar.hpp"

namespace cfpump {

// ---------------------------------------------------------------------------
// CNF classification

enum class CnfClass { Cnf, CnfWithEmptyRule, NotCnf };

struct CnfCheck {
  CnfClass kind;
  /// First offending rule, set only for NotCnf.
  std::optional<Rule> offending;
};

inline bool is_cnf_rule(const Rule& r) {
  return (r.rhs.size() == 2 && r.rhs[0].is_nonterminal() && r.rhs[1].is_nonterminal()) ||
         (r.rhs.size() == 1 && r.rhs[0].is_terminal());
}

inline bool occurs_in_rhs(const Grammar& g, const Symbol& s) {
  for (const Rule& r : g.rules()) {
    if (std::find(r.rhs.begin(), r.rhs.end(), s) != r.rhs.end()) return true;
  }
  return false;
}

/// Classifies g as CNF, CNF plus a lone `start -> ε` (start absent from
/// every rhs), or neither.
inline CnfCheck check_cnf(const Grammar& g) {
  std::optional<Rule> empty_rule;
  for (const Rule& r : g.rules()) {
    if (is_cnf_rule(r)) continue;
    if (r.rhs.empty() && r.lhs == g.start()) {
      empty_rule = r;
      continue;
    }
    return {CnfClass::NotCnf, r};
  }
  if (!empty_rule) return {CnfClass::Cnf, std::nullopt};
  if (occurs_in_rhs(g, g.start())) return {CnfClass::NotCnf, empty_rule};
  return {CnfClass::CnfWithEmptyRule, std::nullopt};
}

/// A grammar in Chomsky Normal Form whose start symbol never occurs on a
/// right-hand side. The only permitted ε-rule is `start -> ε`.
class CnfGrammar {
 public:
  explicit CnfGrammar(Grammar base) : base_(std::move(base)) {
    auto check = check_cnf(base_);
    if (check.kind == CnfClass::NotCnf) {
      throw std::invalid_argument("not in CNF: " + format_rule(*check.offending));
    }
    if (occurs_in_rhs(base_, base_.start())) {
      throw std::invalid_argument("start symbol occurs in a right-hand side");
    }
    has_empty_rule_ = check.kind == CnfClass::CnfWithEmptyRule;
  }

  const Grammar& base() const noexcept { return base_; }
  bool has_empty_rule() const noexcept { return has_empty_rule_; }
  const Symbol& fresh_start() const noexcept { return base_.start(); }

 private:
  Grammar base_;
  bool has_empty_rule_ = false;
};

// ---------------------------------------------------------------------------
// Passes

namespace detail {

inline Symbol fresh_nonterminal(std::string name, const std::set<Symbol>& taken) {
  Symbol s = Symbol::nonterminal(name);
  while (taken.contains(s)) {
    name += '\'';
    s = Symbol::nonterminal(name);
  }
  return s;
}

inline void drop_nullable_variants(const SententialForm& rhs, std::size_t pos,
                                   const std::set<Symbol>& nullable, SententialForm& acc,
                                   std::vector<SententialForm>& out) {
  if (pos == rhs.size()) {
    out.push_back(acc);
    return;
  }
  acc.push_back(rhs[pos]);
  drop_nullable_variants(rhs, pos + 1, nullable, acc, out);
  acc.pop_back();
  if (nullable.contains(rhs[pos])) drop_nullable_variants(rhs, pos + 1, nullable, acc, out);
}

}  // namespace detail

/// Adds `S' -> S` for a new start symbol S' (the old start's name primed
/// until unused).
inline Grammar with_fresh_start(const Grammar& g) {
  Symbol fresh = detail::fresh_nonterminal(g.start().name() + "'", g.nonterminals());
  std::vector<Rule> rules(g.rules().begin(), g.rules().end());
  rules.push_back(Rule{fresh, {g.start()}});
  return Grammar(fresh, rules);
}

/// Removes every ε-rule except `start -> ε` when ε is in the language. A
/// fresh start symbol is introduced first if the start occurs on some rhs.
inline Grammar remove_empty_rules(const Grammar& g) {
  Grammar src = occurs_in_rhs(g, g.start()) ? with_fresh_start(g) : g;
  auto nullable = nullable_nonterminals(src);
  std::vector<Rule> rules;
  for (const Rule& r : src.rules()) {
    std::vector<SententialForm> variants;
    SententialForm acc;
    detail::drop_nullable_variants(r.rhs, 0, nullable, acc, variants);
    for (auto& v : variants) {
      if (!v.empty()) rules.push_back(Rule{r.lhs, std::move(v)});
    }
  }
  if (nullable.contains(src.start())) rules.push_back(Rule{src.start(), {}});
  return Grammar(src.start(), rules);
}

/// Replaces unit rules `A -> B` by the non-unit rules of every B reachable
/// from A through unit rules. Cycles are handled by the closure.
inline Grammar remove_unit_rules(const Grammar& g) {
  auto is_unit = [](const Rule& r) { return r.rhs.size() == 1 && r.rhs[0].is_nonterminal(); };
  std::vector<Rule> rules;
  for (const Symbol& a : g.nonterminals()) {
    std::set<Symbol> reach{a};
    std::vector<Symbol> stack{a};
    while (!stack.empty()) {
      Symbol b = stack.back();
      stack.pop_back();
      for (const Rule& r : g.rules_for(b)) {
        if (is_unit(r) && reach.insert(r.rhs[0]).second) stack.push_back(r.rhs[0]);
      }
    }
    for (const Symbol& b : reach) {
      for (const Rule& r : g.rules_for(b)) {
        if (!is_unit(r)) rules.push_back(Rule{a, r.rhs});
      }
    }
  }
  return Grammar(g.start(), rules);
}

/// Drops every rule that mentions a non-productive nonterminal.
/// Throws EmptyLanguage when the start symbol itself is non-productive.
inline Grammar remove_useless(const Grammar& g) {
  auto productive = productive_nonterminals(g);
  if (!productive.contains(g.start())) {
    throw EmptyLanguage("start symbol " + g.start().name() + " derives no terminal string");
  }
  std::vector<Rule> rules;
  for (const Rule& r : g.rules()) {
    bool keep = productive.contains(r.lhs) &&
                std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
                  return s.is_terminal() || productive.contains(s);
                });
    if (keep) rules.push_back(r);
  }
  return Grammar(g.start(), rules);
}

/// Drops rules whose lhs is unreachable from the start symbol.
inline Grammar remove_inaccessible(const Grammar& g) {
  auto reachable = reachable_symbols(g);
  std::vector<Rule> rules;
  for (const Rule& r : g.rules()) {
    if (reachable.contains(r.lhs)) rules.push_back(r);
  }
  return Grammar(g.start(), rules);
}

/// ε-rules, unit rules, useless and inaccessible symbols, in that order.
inline Grammar simplify(const Grammar& g) {
  return remove_inaccessible(remove_useless(remove_unit_rules(remove_empty_rules(g))));
}

/// In every rhs of length >= 2, replaces terminal a by a new T_a with T_a -> a.
inline Grammar isolate_terminals(const Grammar& g) {
  std::set<Symbol> taken = g.nonterminals();
  std::map<Symbol, Symbol> proxy;
  for (const Symbol& t : g.terminals()) {
    Symbol p = detail::fresh_nonterminal("T_" + t.name(), taken);
    taken.insert(p);
    proxy.emplace(t, p);
  }
  std::vector<Rule> rules;
  std::set<Symbol> used;
  for (const Rule& r : g.rules()) {
    if (r.rhs.size() < 2) {
      rules.push_back(r);
      continue;
    }
    SententialForm rhs;
    for (const Symbol& s : r.rhs) {
      if (s.is_terminal()) {
        rhs.push_back(proxy.at(s));
        used.insert(s);
      } else {
        rhs.push_back(s);
      }
    }
    rules.push_back(Rule{r.lhs, std::move(rhs)});
  }
  for (const Symbol& t : used) rules.push_back(Rule{proxy.at(t), {t}});
  return Grammar(g.start(), rules);
}

/// Splits every rhs longer than two into a chain of pairs through fresh
/// X1, X2, ... symbols. Rules are visited in sorted order, suffixes left to
/// right, and a suffix already given a symbol reuses it.
inline Grammar binarize(const Grammar& g) {
  std::set<Symbol> taken = g.nonterminals();
  std::map<SententialForm, Symbol> for_suffix;
  std::size_t counter = 0;
  std::vector<Rule> rules;

  auto mint = [&]() {
    for (;;) {
      Symbol s = Symbol::nonterminal("X" + std::to_string(++counter));
      if (!taken.contains(s)) {
        taken.insert(s);
        return s;
      }
    }
  };

  for (const Rule& r : g.rules()) {
    if (r.rhs.size() <= 2) {
      rules.push_back(r);
      continue;
    }
    Symbol lhs = r.lhs;
    bool closed = false;
    for (std::size_t i = 0; i + 2 < r.rhs.size(); ++i) {
      SententialForm suffix(r.rhs.begin() + static_cast<std::ptrdiff_t>(i) + 1, r.rhs.end());
      auto it = for_suffix.find(suffix);
      if (it != for_suffix.end()) {
        rules.push_back(Rule{lhs, {r.rhs[i], it->second}});
        closed = true;
        break;
      }
      Symbol x = mint();
      for_suffix.emplace(std::move(suffix), x);
      rules.push_back(Rule{lhs, {r.rhs[i], x}});
      lhs = x;
    }
    if (!closed) {
      rules.push_back(Rule{lhs, {r.rhs[r.rhs.size() - 2], r.rhs.back()}});
    }
  }
  return Grammar(g.start(), rules);
}

/// Converts g to an equivalent CNF grammar. Pass order: fresh start,
/// ε-rules, unit rules, useless, inaccessible, terminal isolation,
/// binarization.
///
/// Throws EmptyLanguage when L(g) is empty.
inline CnfGrammar to_cnf(const Grammar& g) {
  Grammar h = with_fresh_start(g);
  h = remove_empty_rules(h);
  h = remove_unit_rules(h);
  h = remove_useless(h);
  h = remove_inaccessible(h);
  h = isolate_terminals(h);
  h = binarize(h);
  return CnfGrammar(std::move(h));
}

}  // namespace cfpump
