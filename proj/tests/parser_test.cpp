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


#include <gtest/gtest.h>

#include "cfpump/parser.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

namespace cfpump {
namespace {

using testing::chars;
using testing::load_corpus;

Symbol nt(const char* n) { return Symbol::nonterminal(n); }
Symbol tm(const char* n) { return Symbol::terminal(n); }

// Every sentence over `alphabet` of length at most max_len.
std::vector<Sentence> all_strings(const std::set<Symbol>& alphabet, std::size_t max_len) {
  std::vector<Sentence> out{Sentence{}};
  for (std::size_t from = 0; from < out.size(); ++from) {
    if (out[from].size() == max_len) continue;
    for (const Symbol& a : alphabet) out.push_back(concat(out[from], Sentence{a}));
  }
  return out;
}

TEST(CykMember, AnBn) {
  CnfGrammar g = to_cnf(load_corpus("anbn"));
  EXPECT_TRUE(cyk_member(g, chars("aabb")));
  EXPECT_FALSE(cyk_member(g, chars("aab")));
  EXPECT_FALSE(cyk_member(g, chars("ba")));
  EXPECT_FALSE(cyk_member(g, Sentence{}));
  EXPECT_FALSE(cyk_member(g, chars("c")));
}

TEST(CykMember, EmptySentenceFollowsEmptyRule) {
  for (const auto& name : testing::corpus_names()) {
    CnfGrammar g = to_cnf(load_corpus(name));
    EXPECT_EQ(cyk_member(g, Sentence{}), g.has_empty_rule()) << name;
  }
}

TEST(CykTree, AbGolden) {
  CnfGrammar g = to_cnf(load_corpus("anbn"));
  auto t = cyk_tree(g, chars("ab"));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, DerivationTree::node(nt("S'"), DerivationTree::leaf(nt("T_a"), tm("a")),
                                     DerivationTree::leaf(nt("T_b"), tm("b"))));
  EXPECT_EQ(to_text(*t), "(S' (T_a a) (T_b b))");
  EXPECT_FALSE(cyk_tree(g, chars("ba")).has_value());
  EXPECT_FALSE(cyk_tree(to_cnf(load_corpus("parens")), Sentence{}).has_value());
}

// S -> S S | a: the first rule (S' -> S S) and the shortest left split win.
TEST(CykTree, AmbiguousTieBreak) {
  CnfGrammar g = to_cnf(load_corpus("ambiguous"));
  auto t = cyk_tree(g, chars("aaa"));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(to_text(*t), "(S' (S a) (S (S a) (S a)))");
}

TEST(ValidateTree, Mutations) {
  CnfGrammar g = to_cnf(load_corpus("anbn"));
  auto t = cyk_tree(g, chars("aabb"));
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(validate_tree(g, *t));
  DerivationTree swapped = DerivationTree::node(t->label(), t->right(), t->left());
  EXPECT_FALSE(validate_tree(g, swapped));
  DerivationTree bad_leaf = DerivationTree::node(
      nt("S'"), DerivationTree::leaf(nt("T_a"), tm("b")), DerivationTree::leaf(nt("T_b"), tm("b")));
  EXPECT_FALSE(validate_tree(g, bad_leaf));
  EXPECT_FALSE(validate_tree(g, DerivationTree::leaf(nt("S'"), tm("a"))));
}

// CYK accepts exactly the enumerated language, checked on every string over
// the alphabet, and every tree it returns is a valid derivation of its input.
TEST(CykMember, AgreesWithEnumerationOnCorpus) {
  constexpr std::size_t kMaxLen = 6;
  for (const auto& name : testing::corpus_names()) {
    Grammar g = load_corpus(name);
    CnfGrammar cnf = to_cnf(g);
    const auto lang = oracle::language_by_length(g, kMaxLen);
    for (const Sentence& s : all_strings(g.terminals(), kMaxLen)) {
      const bool in = lang.contains(s);
      ASSERT_EQ(cyk_member(cnf, s), in) << name << ": " << to_string(s);
      auto t = cyk_tree(cnf, s);
      ASSERT_EQ(t.has_value(), in && !s.empty()) << name << ": " << to_string(s);
      if (!t) continue;
      EXPECT_TRUE(validate_tree(cnf, *t)) << name << ": " << to_string(s);
      EXPECT_EQ(root(*t), cnf.fresh_start());
      EXPECT_EQ(oracle::frontier_of(*t), s);
    }
  }
}

TEST(CykTree, LongSentences) {
  CnfGrammar g = to_cnf(load_corpus("anbn"));
  Sentence s = concat(repeat(chars("a"), 40), repeat(chars("b"), 40));
  auto t = cyk_tree(g, s);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(validate_tree(g, *t));
  EXPECT_EQ(frontier(*t), s);
  EXPECT_FALSE(cyk_member(g, concat(s, chars("b"))));
}

TEST(CykTree, Deterministic) {
  CnfGrammar g = to_cnf(load_corpus("expr"));
  Sentence s = chars("a+a*(a+a)");
  EXPECT_EQ(to_text(*cyk_tree(g, s)), to_text(*cyk_tree(to_cnf(load_corpus("expr")), s)));
}

}  // namespace
}  // namespace cfpump
