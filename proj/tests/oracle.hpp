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

// Reference computations used only by tests. None of them calls into the
// code paths they are compared against.

#include <map>
#include <set>
#include <vector>

#include "cfpump/grammar.hpp"
#include "cfpump/tree.hpp"

namespace cfpump::oracle {

/// Language up to max_len by a memo table lang[X][len] filled top-down from
/// the rules and iterated to a fixpoint.
inline std::set<Sentence> language_by_length(const Grammar& g, std::size_t max_len) {
  using Table = std::vector<std::set<Sentence>>;
  std::map<Symbol, Table> lang;
  for (const Symbol& nt : g.nonterminals()) lang[nt] = Table(max_len + 1);

  auto of = [&](const Symbol& s, std::size_t len) -> std::set<Sentence> {
    if (s.is_terminal()) return len == 1 ? std::set<Sentence>{{s}} : std::set<Sentence>{};
    return lang[s][len];
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (const Rule& r : g.rules()) {
      Table partial(max_len + 1);
      partial[0].insert(Sentence{});
      for (const Symbol& x : r.rhs) {
        Table next(max_len + 1);
        for (std::size_t a = 0; a <= max_len; ++a) {
          if (partial[a].empty()) continue;
          for (std::size_t b = 0; a + b <= max_len; ++b) {
            auto tails = of(x, b);
            for (const Sentence& head : partial[a]) {
              for (const Sentence& tail : tails) next[a + b].insert(concat(head, tail));
            }
          }
        }
        partial = std::move(next);
      }
      for (std::size_t len = 0; len <= max_len; ++len) {
        for (const Sentence& s : partial[len]) changed |= lang[r.lhs][len].insert(s).second;
      }
    }
  }

  std::set<Sentence> out;
  for (const auto& bucket : lang[g.start()]) out.insert(bucket.begin(), bucket.end());
  return out;
}

/// Every root-to-leaf path with its code, left subtree visited first.
inline void all_paths(const DerivationTree& t, TreePath& path, TreeCode& code,
                      std::vector<std::pair<TreePath, TreeCode>>& out) {
  path.push_back(t.label());
  if (t.is_leaf()) {
    path.push_back(t.terminal());
    out.emplace_back(path, code);
    path.pop_back();
  } else {
    code.push_back(Direction::Left);
    all_paths(t.left(), path, code, out);
    code.back() = Direction::Right;
    all_paths(t.right(), path, code, out);
    code.pop_back();
  }
  path.pop_back();
}

inline std::vector<std::pair<TreePath, TreeCode>> all_paths(const DerivationTree& t) {
  std::vector<std::pair<TreePath, TreeCode>> out;
  TreePath p;
  TreeCode c;
  all_paths(t, p, c, out);
  return out;
}

/// Recursive height from the definition.
inline std::size_t height_of(const DerivationTree& t) {
  if (t.is_leaf()) return 1;
  return 1 + std::max(height_of(t.left()), height_of(t.right()));
}

/// Frontier by walking the whole tree on an explicit stack.
inline Sentence frontier_of(const DerivationTree& t) {
  Sentence out;
  std::vector<DerivationTree> stack{t};
  while (!stack.empty()) {
    DerivationTree cur = stack.back();
    stack.pop_back();
    if (cur.is_leaf()) {
      out.push_back(cur.terminal());
    } else {
      stack.push_back(cur.right());
      stack.push_back(cur.left());
    }
  }
  return out;
}

struct Pair {
  std::size_t first, second;
};

/// Every (i, j), i < j, with xs[i] == xs[j].
inline std::vector<Pair> duplicate_pairs(const SententialForm& xs) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) out.push_back({i, j});
    }
  }
  return out;
}

/// The pair the documented tie-break selects: the symbol whose repeat is
/// reached first, from its first occurrence to its last one.
inline std::optional<Pair> chosen_pair(const SententialForm& xs) {
  auto pairs = duplicate_pairs(xs);
  if (pairs.empty()) return std::nullopt;
  auto earliest = std::min_element(pairs.begin(), pairs.end(), [](Pair a, Pair b) {
    return a.second < b.second;
  });
  const Symbol d = xs[earliest->first];
  Pair best{xs.size(), 0};
  for (Pair p : pairs) {
    if (xs[p.first] != d) continue;
    best.first = std::min(best.first, p.first);
    best.second = std::max(best.second, p.second);
  }
  return best;
}

}  // namespace cfpump::oracle
