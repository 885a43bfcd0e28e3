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
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfpump/error.hpp"
#include "cfpump/symbol.hpp"

namespace cfpump {

/// Binary derivation tree of a CNF grammar. A leaf is `(A a)` for a rule
/// A -> a, a node is `(A left right)` for a rule A -> B C.
///
/// Trees are immutable and share structure, so copies are cheap and surgery
/// only rebuilds the spine above the edited position.
class DerivationTree {
 public:
  static DerivationTree leaf(Symbol label, Symbol terminal) {
    if (!label.is_nonterminal()) throw std::invalid_argument("leaf label must be a nonterminal");
    if (!terminal.is_terminal()) throw std::invalid_argument("leaf yield must be a terminal");
    auto impl = std::make_shared<Impl>(Impl{std::move(label), std::move(terminal), {}, {}, 1, 1});
    return DerivationTree(std::move(impl));
  }

  static DerivationTree node(Symbol label, const DerivationTree& left,
                             const DerivationTree& right) {
    if (!label.is_nonterminal()) throw std::invalid_argument("node label must be a nonterminal");
    auto impl = std::make_shared<Impl>(Impl{std::move(label), std::nullopt, left.impl_,
                                            right.impl_,
                                            1 + std::max(left.height(), right.height()),
                                            left.width() + right.width()});
    return DerivationTree(std::move(impl));
  }

  bool is_leaf() const noexcept { return impl_->terminal.has_value(); }
  const Symbol& label() const noexcept { return impl_->label; }
  /// Only valid on leaves.
  const Symbol& terminal() const { return impl_->terminal.value(); }
  /// Only valid on nodes.
  DerivationTree left() const { return child(impl_->left); }
  DerivationTree right() const { return child(impl_->right); }
  DerivationTree child(bool go_right) const { return go_right ? right() : left(); }

  /// Leaves have height 1.
  std::size_t height() const noexcept { return impl_->height; }
  /// Number of leaves, i.e. the frontier length.
  std::size_t width() const noexcept { return impl_->width; }

  friend bool operator==(const DerivationTree& a, const DerivationTree& b) {
    return equal(a.impl_.get(), b.impl_.get());
  }

 private:
  struct Impl {
    Symbol label;
    std::optional<Symbol> terminal;
    std::shared_ptr<const Impl> left;
    std::shared_ptr<const Impl> right;
    std::size_t height;
    std::size_t width;
  };

  explicit DerivationTree(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  DerivationTree child(const std::shared_ptr<const Impl>& p) const {
    if (!p) throw std::logic_error("leaf has no children");
    return DerivationTree(p);
  }

  static bool equal(const Impl* a, const Impl* b) {
    if (a == b) return true;
    if (a->label != b->label || a->terminal != b->terminal || a->height != b->height ||
        a->width != b->width) {
      return false;
    }
    if (a->terminal) return true;
    return equal(a->left.get(), b->left.get()) && equal(a->right.get(), b->right.get());
  }

  std::shared_ptr<const Impl> impl_;
};

/// Left = false, Right = true.
enum class Direction : bool { Left = false, Right = true };

/// Directions from a root to a subtree; empty addresses the root.
using TreeCode = std::vector<Direction>;

/// Labels met on a root-to-leaf walk, ending with the leaf's terminal.
using TreePath = SententialForm;

inline std::size_t height(const DerivationTree& t) { return t.height(); }
inline const Symbol& root(const DerivationTree& t) { return t.label(); }

inline void append_frontier(const DerivationTree& t, Sentence& out) {
  if (t.is_leaf()) {
    out.push_back(t.terminal());
    return;
  }
  append_frontier(t.left(), out);
  append_frontier(t.right(), out);
}

inline Sentence frontier(const DerivationTree& t) {
  Sentence out;
  out.reserve(t.width());
  append_frontier(t, out);
  return out;
}

inline std::set<Symbol> nonterminals_of(const DerivationTree& t) {
  std::set<Symbol> out;
  std::vector<DerivationTree> stack{t};
  while (!stack.empty()) {
    DerivationTree cur = stack.back();
    stack.pop_back();
    out.insert(cur.label());
    if (!cur.is_leaf()) {
      stack.push_back(cur.left());
      stack.push_back(cur.right());
    }
  }
  return out;
}

/// A root-to-leaf path of maximal length height(t) + 1. Ties go left.
inline TreePath longest_path(const DerivationTree& t) {
  TreePath out;
  DerivationTree cur = t;
  while (!cur.is_leaf()) {
    out.push_back(cur.label());
    DerivationTree l = cur.left(), r = cur.right();
    cur = l.height() >= r.height() ? l : r;
  }
  out.push_back(cur.label());
  out.push_back(cur.terminal());
  return out;
}

// ---------------------------------------------------------------------------
// Pigeonhole

struct DuplicateSplit {
  Symbol repeated;
  SententialForm before;
  SententialForm between;
  SententialForm after;
};

/// Finds xs = before ++ [d] ++ between ++ [d] ++ after.
///
/// d is the first symbol whose repeat is met scanning left to right; it is
/// paired from its first occurrence to its last one. Succeeds whenever xs
/// has a repeat. When it has none, the pigeonhole precondition (every
/// element drawn from `universe`, |xs| > |distinct universe|) must be
/// broken, and NoDuplicate is thrown.
inline DuplicateSplit find_duplicate(const SententialForm& xs, const SententialForm& universe) {
  std::map<Symbol, std::size_t> first_seen;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    auto [it, fresh] = first_seen.emplace(xs[j], j);
    if (fresh) continue;
    const std::size_t a = it->second;
    std::size_t b = xs.size() - 1;
    while (xs[b] != xs[j]) --b;
    auto at = [&](std::size_t i) { return xs.begin() + static_cast<std::ptrdiff_t>(i); };
    return DuplicateSplit{xs[j], SententialForm(xs.begin(), at(a)),
                          SententialForm(at(a + 1), at(b)), SententialForm(at(b + 1), xs.end())};
  }
  std::set<Symbol> distinct(universe.begin(), universe.end());
  throw NoDuplicate("no repeated symbol among " + std::to_string(xs.size()) +
                    " elements drawn against a universe of " + std::to_string(distinct.size()));
}

// ---------------------------------------------------------------------------
// Codes and decomposition

struct Subtree {
  Sentence left;
  DerivationTree tree;
  Sentence right;
};

/// Subtree at code c with the frontier parts to its left and right, so that
/// frontier(t) = left ++ frontier(tree) ++ right. Empty when c walks off t.
inline std::optional<Subtree> decompose(const DerivationTree& t, const TreeCode& c) {
  Sentence left;
  std::vector<DerivationTree> right_siblings;
  DerivationTree cur = t;
  for (Direction d : c) {
    if (cur.is_leaf()) return std::nullopt;
    if (d == Direction::Left) {
      right_siblings.push_back(cur.right());
      cur = cur.left();
    } else {
      append_frontier(cur.left(), left);
      cur = cur.right();
    }
  }
  Sentence right;
  for (auto it = right_siblings.rbegin(); it != right_siblings.rend(); ++it) {
    append_frontier(*it, right);
  }
  return Subtree{std::move(left), cur, std::move(right)};
}

/// Label of the node at c, if any.
inline std::optional<Symbol> label_at(const DerivationTree& t, const TreeCode& c) {
  auto sub = decompose(t, c);
  if (!sub) return std::nullopt;
  return sub->tree.label();
}

/// The path visited by following c from the root, when c ends on a leaf.
inline std::optional<TreePath> path_of_code(const DerivationTree& t, const TreeCode& c) {
  TreePath out;
  DerivationTree cur = t;
  for (Direction d : c) {
    if (cur.is_leaf()) return std::nullopt;
    out.push_back(cur.label());
    cur = cur.child(d == Direction::Right);
  }
  if (!cur.is_leaf()) return std::nullopt;
  out.push_back(cur.label());
  out.push_back(cur.terminal());
  return out;
}

/// True iff following c from the root visits exactly the labels of p.
inline bool code_realizes_path(const DerivationTree& t, const TreePath& p, const TreeCode& c) {
  auto visited = path_of_code(t, c);
  return visited && *visited == p;
}

namespace detail {

inline bool find_code(const DerivationTree& t, const TreePath& p, std::size_t i, TreeCode& acc) {
  if (i >= p.size() || t.label() != p[i]) return false;
  if (t.is_leaf()) return i + 2 == p.size() && p[i + 1] == t.terminal();
  for (Direction d : {Direction::Left, Direction::Right}) {
    acc.push_back(d);
    if (find_code(t.child(d == Direction::Right), p, i + 1, acc)) return true;
    acc.pop_back();
  }
  return false;
}

}  // namespace detail

/// The leftmost code whose walk visits the labels of p.
/// Throws PathNotFound when p is not a root-to-leaf path of t.
inline TreeCode code_of_path(const DerivationTree& t, const TreePath& p) {
  TreeCode acc;
  if (!detail::find_code(t, p, 0, acc)) throw PathNotFound("path " + to_string(p, " ") + " not in tree");
  return acc;
}

struct CodeSplit {
  TreeCode prefix;
  TreeCode suffix;
  DerivationTree subtree;
  Sentence left;
  Sentence right;
};

/// Cuts a maximal path p1 ++ p2, realized by code c, after its first |p1|
/// labels. Returns c = prefix ++ suffix, the subtree at prefix together with
/// the frontier parts beside it; p2 is the subtree's path under suffix and
/// its height is |p2| - 1.
///
/// Throws CodePathMismatch when c does not realize p1 ++ p2, and
/// PreconditionViolated when |p1| = 0, |p2| < 2 or the path is not maximal.
inline CodeSplit split_code(const DerivationTree& t, const TreePath& p1, const TreePath& p2,
                            const TreeCode& c) {
  if (p1.empty()) throw PreconditionViolated("split_code: empty path prefix");
  if (p2.size() < 2) throw PreconditionViolated("split_code: path suffix shorter than 2");
  if (!code_realizes_path(t, concat(p1, p2), c)) {
    throw CodePathMismatch("code does not realize the given path");
  }
  if (t.height() + 1 != p1.size() + p2.size()) {
    throw PreconditionViolated("split_code: path is not of maximal length");
  }
  auto mid = c.begin() + static_cast<std::ptrdiff_t>(p1.size());
  TreeCode prefix(c.begin(), mid), suffix(mid, c.end());
  auto sub = decompose(t, prefix);
  if (!sub || sub->tree.height() + 1 != p2.size() || !code_realizes_path(sub->tree, p2, suffix)) {
    throw InvariantFailure("split_code postcondition");
  }
  return CodeSplit{std::move(prefix), std::move(suffix), sub->tree, std::move(sub->left),
                   std::move(sub->right)};
}

// ---------------------------------------------------------------------------
// Surgery

namespace detail {

inline DerivationTree replace_from(const DerivationTree& t, const TreeCode& c, std::size_t i,
                                   const DerivationTree& replacement) {
  if (i == c.size()) return replacement;
  if (t.is_leaf()) throw InvalidCode("code walks off the tree");
  if (c[i] == Direction::Left) {
    return DerivationTree::node(t.label(), replace_from(t.left(), c, i + 1, replacement),
                                t.right());
  }
  return DerivationTree::node(t.label(), t.left(),
                              replace_from(t.right(), c, i + 1, replacement));
}

}  // namespace detail

/// t with the subtree at c replaced. Throws InvalidCode if c walks off t.
inline DerivationTree replace_at(const DerivationTree& t, const TreeCode& c,
                                 const DerivationTree& replacement) {
  return detail::replace_from(t, c, 0, replacement);
}

/// The i-th pumped tree: p(0) is the subtree t2 at c1, p(j) is t1 with t2
/// replaced by p(j-1). Its frontier is v^i ++ frontier(t2) ++ x^i where
/// (v, t2, x) = decompose(t1, c1).
inline DerivationTree pump_tree(const DerivationTree& t1, const TreeCode& c1, std::size_t i) {
  if (c1.empty()) throw PreconditionViolated("pump_tree: empty code");
  auto sub = decompose(t1, c1);
  if (!sub) throw PreconditionViolated("pump_tree: code walks off the tree");
  if (sub->tree.label() != t1.label()) {
    throw PreconditionViolated("pump_tree: inner root " + sub->tree.label().name() +
                               " differs from outer root " + t1.label().name());
  }
  DerivationTree cur = sub->tree;
  for (std::size_t j = 0; j < i; ++j) cur = replace_at(t1, c1, cur);
  return cur;
}

// ---------------------------------------------------------------------------
// Text form

inline std::string format_code(const TreeCode& c) {
  std::string out;
  for (Direction d : c) out += d == Direction::Left ? 'L' : 'R';
  return out;
}

namespace detail {

inline std::string tree_atom(const std::string& name) {
  if (name.find_first_of("() \t") != std::string::npos) return "'" + name + "'";
  return name;
}

inline void append_text(const DerivationTree& t, std::string& out) {
  out += '(';
  out += tree_atom(t.label().name());
  out += ' ';
  if (t.is_leaf()) {
    out += tree_atom(t.terminal().name());
  } else {
    append_text(t.left(), out);
    out += ' ';
    append_text(t.right(), out);
  }
  out += ')';
}

}  // namespace detail

/// Parenthesized form, e.g. `(S (A a) (B b))`.
inline std::string to_text(const DerivationTree& t) {
  std::string out;
  detail::append_text(t, out);
  return out;
}

}  // namespace cfpump
