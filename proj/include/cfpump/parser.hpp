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
#include <vector>

#include "cfpump/transform.hpp"
#include "cfpump/tree.hpp"

namespace cfpump {

namespace detail {

/// CYK chart with one backpointer per (span, nonterminal). The first rule
/// in rule-set order that fits wins, and for that rule the shortest left
/// split.
class CykChart {
 public:
  CykChart(const CnfGrammar& g, const Sentence& s) : n_(s.size()) {
    const Grammar& base = g.base();
    nts_.assign(base.nonterminals().begin(), base.nonterminals().end());
    for (std::size_t i = 0; i < nts_.size(); ++i) id_.emplace(nts_[i], static_cast<int>(i));

    rules_.assign(base.rules().begin(), base.rules().end());
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      const Rule& rule = rules_[r];
      if (rule.rhs.size() == 2) {
        binary_.push_back({static_cast<int>(r), id_.at(rule.lhs), id_.at(rule.rhs[0]),
                           id_.at(rule.rhs[1])});
      }
    }
    cells_.assign(n_ * (n_ + 1) / 2 * nts_.size(), Back{});

    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        const Rule& rule = rules_[r];
        if (rule.rhs.size() == 1 && rule.rhs[0] == s[i]) {
          Back& b = at(i, 1, id_.at(rule.lhs));
          if (b.rule < 0) b = Back{static_cast<int>(r), 0};
        }
      }
    }
    for (std::size_t len = 2; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        for (const Binary& br : binary_) {
          Back& b = at(i, len, br.lhs);
          if (b.rule >= 0) continue;
          for (std::size_t k = 1; k < len; ++k) {
            if (at(i, k, br.left).rule >= 0 && at(i + k, len - k, br.right).rule >= 0) {
              b = Back{br.rule, static_cast<int>(k)};
              break;
            }
          }
        }
      }
    }
  }

  bool derives(const Symbol& nt) const {
    auto it = id_.find(nt);
    return n_ > 0 && it != id_.end() && at(0, n_, it->second).rule >= 0;
  }

  DerivationTree tree(const Symbol& nt) const { return build(0, n_, id_.at(nt)); }

 private:
  struct Back {
    int rule = -1;
    int split = 0;
  };
  struct Binary {
    int rule, lhs, left, right;
  };

  // Spans are stored by length, then start.
  std::size_t offset(std::size_t start, std::size_t len) const {
    std::size_t before = (len - 1) * n_ - (len - 1) * (len - 2) / 2;
    return before + start;
  }
  Back& at(std::size_t start, std::size_t len, int nt) {
    return cells_[offset(start, len) * nts_.size() + static_cast<std::size_t>(nt)];
  }
  const Back& at(std::size_t start, std::size_t len, int nt) const {
    return cells_[offset(start, len) * nts_.size() + static_cast<std::size_t>(nt)];
  }

  DerivationTree build(std::size_t start, std::size_t len, int nt) const {
    const Back& b = at(start, len, nt);
    const Rule& rule = rules_[static_cast<std::size_t>(b.rule)];
    if (len == 1) return DerivationTree::leaf(rule.lhs, rule.rhs[0]);
    const auto k = static_cast<std::size_t>(b.split);
    return DerivationTree::node(rule.lhs, build(start, k, id_.at(rule.rhs[0])),
                                build(start + k, len - k, id_.at(rule.rhs[1])));
  }

  std::size_t n_;
  std::vector<Symbol> nts_;
  std::map<Symbol, int> id_;
  std::vector<Rule> rules_;
  std::vector<Binary> binary_;
  std::vector<Back> cells_;
};

}  // namespace detail

/// True iff s is in L(g). The empty sentence is a member iff g has its
/// start -> ε rule.
inline bool cyk_member(const CnfGrammar& g, const Sentence& s) {
  if (s.empty()) return g.has_empty_rule();
  return detail::CykChart(g, s).derives(g.fresh_start());
}

/// A derivation tree rooted at the start symbol with frontier s, or nothing
/// when s is not in L(g) or is empty.
inline std::optional<DerivationTree> cyk_tree(const CnfGrammar& g, const Sentence& s) {
  if (s.empty()) return std::nullopt;
  detail::CykChart chart(g, s);
  if (!chart.derives(g.fresh_start())) return std::nullopt;
  return chart.tree(g.fresh_start());
}

/// True iff every node of t is licensed by a rule of g.
inline bool validate_tree(const CnfGrammar& g, const DerivationTree& t) {
  const auto& rules = g.base().rules();
  if (t.is_leaf()) return rules.contains(Rule{t.label(), {t.terminal()}});
  return rules.contains(Rule{t.label(), {t.left().label(), t.right().label()}}) &&
         validate_tree(g, t.left()) && validate_tree(g, t.right());
}

}  // namespace cfpump
