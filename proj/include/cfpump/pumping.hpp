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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cfpump/error.hpp"
#include "cfpump/parser.hpp"
#include "cfpump/transform.hpp"
#include "cfpump/tree.hpp"

namespace cfpump {

/// s = u v w x y together with the derivation tree that witnesses it.
///
/// t1 is the subtree of `tree` at `outer_code`, t2 the subtree of t1 at
/// `inner_code`; both are labelled `repeated`. frontier(t1) = v w x and
/// frontier(t2) = w.
struct Decomposition {
  Sentence u, v, w, x, y;
  Symbol repeated;
  TreeCode outer_code;
  TreeCode inner_code;
  std::uint64_t n;
  DerivationTree tree;

  Sentence sentence() const { return concat(u, v, w, x, y); }
};

struct PumpRow {
  std::size_t i;
  Sentence sentence;
  /// Grafting the i-th pumped subtree back into the tree gives a valid
  /// derivation of `sentence`.
  bool tree_route;
  /// CYK accepts `sentence`.
  bool cyk_route;
  bool member;
};

struct PumpReport {
  std::vector<PumpRow> rows;
  bool overall = true;
  /// Both routes returned the same answer on every row.
  bool routes_agree = true;
};

/// 2^k for k the number of nonterminals of g. Refuses k > 30.
inline std::uint64_t pumping_constant(const CnfGrammar& g) {
  const std::size_t k = g.base().nonterminals().size();
  if (k > 30) {
    throw PreconditionViolated("pumping constant 2^" + std::to_string(k) +
                               " is beyond the supported range (k <= 30)");
  }
  return std::uint64_t{1} << k;
}

/// Splits a sentence of length >= 2^k into u v w x y with |vx| >= 1,
/// |vwx| <= 2^k by locating a repeated nonterminal on a longest path of its
/// CYK derivation tree.
///
/// Throws PreconditionViolated when s is too short or not in L(g).
inline Decomposition decompose_sentence(const CnfGrammar& g, const Sentence& s) {
  const std::uint64_t n = pumping_constant(g);
  const std::size_t k = g.base().nonterminals().size();
  if (s.size() < n) {
    throw PreconditionViolated("sentence length " + std::to_string(s.size()) +
                               " is below the pumping constant " + std::to_string(n));
  }
  auto t = cyk_tree(g, s);
  if (!t) throw PreconditionViolated("sentence is not in the language");

  // |s| <= 2^(h-1) and |s| >= 2^k give h >= k + 1.
  const std::size_t h = t->height();
  if (h < k + 1) throw InvariantFailure("tree too shallow for its frontier");
  const TreePath z = longest_path(*t);

  // The last k + 1 nonterminals of the path repeat one of the k symbols.
  const std::size_t tail = h - (k + 1);
  SententialForm window(z.begin() + static_cast<std::ptrdiff_t>(tail),
                        z.begin() + static_cast<std::ptrdiff_t>(h));
  SententialForm universe(g.base().nonterminals().begin(), g.base().nonterminals().end());
  const DuplicateSplit dup = find_duplicate(window, universe);
  const std::size_t first = tail + dup.before.size();
  const std::size_t second = first + 1 + dup.between.size();

  const TreeCode code = code_of_path(*t, z);
  auto slice = [&](std::size_t from, std::size_t to) {
    return TreePath(z.begin() + static_cast<std::ptrdiff_t>(from),
                    z.begin() + static_cast<std::ptrdiff_t>(to));
  };

  // t1 sits at the first occurrence, t2 at the second.
  TreeCode outer_code;
  TreeCode rest = code;
  Sentence u, y;
  std::optional<DerivationTree> t1 = *t;
  if (first > 0) {
    CodeSplit outer = split_code(*t, slice(0, first), slice(first, z.size()), code);
    outer_code = std::move(outer.prefix);
    rest = std::move(outer.suffix);
    u = std::move(outer.left);
    y = std::move(outer.right);
    t1 = outer.subtree;
  }
  CodeSplit inner = split_code(*t1, slice(first, second), slice(second, z.size()), rest);

  Decomposition d{std::move(u),
                  std::move(inner.left),
                  frontier(inner.subtree),
                  std::move(inner.right),
                  std::move(y),
                  dup.repeated,
                  std::move(outer_code),
                  std::move(inner.prefix),
                  n,
                  *t};

  if (d.sentence() != s) throw InvariantFailure("u v w x y does not reassemble the sentence");
  if (d.v.size() + d.x.size() < 1) throw InvariantFailure("|vx| = 0");
  if (d.v.size() + d.w.size() + d.x.size() > n) throw InvariantFailure("|vwx| exceeds n");
  if (t1->label() != d.repeated || inner.subtree.label() != d.repeated) {
    throw InvariantFailure("subtree roots differ from the repeated nonterminal");
  }
  if (t1->height() > k + 1) throw InvariantFailure("outer subtree taller than k + 1");
  return d;
}

/// u v^i w x^i y.
inline Sentence pump(const Decomposition& d, std::size_t i) {
  return concat(d.u, repeat(d.v, i), d.w, repeat(d.x, i), d.y);
}

namespace detail {

inline bool pumped_tree_ok(const CnfGrammar& g, const Decomposition& d, std::size_t i,
                           const Sentence& expected) {
  try {
    auto outer = decompose(d.tree, d.outer_code);
    if (!outer || outer->tree.label() != d.repeated) return false;
    const DerivationTree& t1 = outer->tree;
    DerivationTree pumped = pump_tree(t1, d.inner_code, i);

    TreeCode deep = repeat(d.inner_code, i);
    auto inner = decompose(pumped, deep);
    auto t2 = decompose(t1, d.inner_code);
    if (!inner || !t2 || inner->tree != t2->tree || inner->left != repeat(d.v, i) ||
        inner->right != repeat(d.x, i) || label_at(pumped, deep) != d.repeated) {
      return false;
    }

    DerivationTree whole = replace_at(d.tree, d.outer_code, pumped);
    return whole.label() == g.fresh_start() && validate_tree(g, whole) &&
           frontier(whole) == expected;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace detail

/// Checks u v^i w x^i y for i = 0..i_max two ways: by tree surgery on the
/// witness tree, and by CYK.
inline PumpReport verify_pumping(const CnfGrammar& g, const Decomposition& d, std::size_t i_max) {
  PumpReport report;
  for (std::size_t i = 0; i <= i_max; ++i) {
    Sentence s = pump(d, i);
    bool by_tree = detail::pumped_tree_ok(g, d, i, s);
    bool by_cyk = cyk_member(g, s);
    report.rows.push_back(PumpRow{i, std::move(s), by_tree, by_cyk, by_tree && by_cyk});
    report.overall = report.overall && by_tree && by_cyk;
    report.routes_agree = report.routes_agree && by_tree == by_cyk;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Refutation

using Membership = std::function<bool(const Sentence&)>;

struct SplitOutcome {
  Sentence u, v, w, x, y;
  /// Smallest i in [0, i_max] with u v^i w x^i y outside the language.
  std::optional<std::size_t> failing_i;
};

struct RefutationReport {
  enum class Outcome { Refuted, NotRefuted };
  Outcome outcome = Outcome::Refuted;
  /// Every admissible split, ordered by the cut positions.
  std::vector<SplitOutcome> splits;
};

/// Tries every split s = u v w x y with |vx| >= 1 and |vwx| <= n. The
/// language is refuted when each split leaves the language for some
/// i <= i_max. A surviving split makes the result inconclusive.
///
/// Throws PreconditionViolated unless member(s) and |s| >= n.
inline RefutationReport refute_candidate(const Membership& member, const Sentence& s,
                                         std::size_t n, std::size_t i_max) {
  if (s.size() < n) throw PreconditionViolated("sentence shorter than n");
  if (!member(s)) throw PreconditionViolated("sentence is not in the candidate language");

  RefutationReport report;
  const std::size_t len = s.size();
  auto piece = [&](std::size_t from, std::size_t to) {
    return Sentence(s.begin() + static_cast<std::ptrdiff_t>(from),
                    s.begin() + static_cast<std::ptrdiff_t>(to));
  };
  for (std::size_t a = 0; a <= len; ++a) {
    for (std::size_t b = a; b <= len; ++b) {
      for (std::size_t c = b; c <= len; ++c) {
        for (std::size_t e = c; e <= len && e - a <= n; ++e) {
          if ((b - a) + (e - c) == 0) continue;
          SplitOutcome out{piece(0, a), piece(a, b), piece(b, c), piece(c, e), piece(e, len), {}};
          for (std::size_t i = 0; i <= i_max; ++i) {
            if (!member(concat(out.u, repeat(out.v, i), out.w, repeat(out.x, i), out.y))) {
              out.failing_i = i;
              break;
            }
          }
          if (!out.failing_i) report.outcome = RefutationReport::Outcome::NotRefuted;
          report.splits.push_back(std::move(out));
        }
      }
    }
  }
  return report;
}

/// Membership in { a^i b^i c^i | i >= 1 }.
inline bool in_equal_abc(const Sentence& s) {
  const std::size_t m = s.size() / 3;
  if (m == 0 || s.size() != 3 * m) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char want = i < m ? 'a' : i < 2 * m ? 'b' : 'c';
    if (s[i].name() != std::string(1, want)) return false;
  }
  return true;
}

/// Membership in { a^i b^i | i >= 1 }.
inline bool in_equal_ab(const Sentence& s) {
  const std::size_t m = s.size() / 2;
  if (m == 0 || s.size() != 2 * m) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].name() != (i < m ? "a" : "b")) return false;
  }
  return true;
}

}  // namespace cfpump
