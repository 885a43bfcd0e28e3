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

#include "cfpump/transform.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

namespace cfpump {
namespace {

using testing::load_corpus;

Symbol nt(const char* n) { return Symbol::nonterminal(n); }

Grammar::RuleSet rules_of(const char* text) { return parse_grammar(text).rules(); }

bool has_empty_rhs(const Grammar& g) {
  return std::any_of(g.rules().begin(), g.rules().end(),
                     [](const Rule& r) { return r.rhs.empty(); });
}

TEST(FreshStart, PrimesUntilUnused) {
  Grammar g = with_fresh_start(parse_grammar("S -> S' a | a\nS' -> b"));
  EXPECT_EQ(g.start(), nt("S''"));
  EXPECT_TRUE(g.rules().contains(Rule{nt("S''"), {nt("S")}}));
}

TEST(RemoveEmptyRules, AnBnWithEpsilon) {
  Grammar in = parse_grammar("S -> a S b | _");
  Grammar out = remove_empty_rules(in);
  EXPECT_EQ(out.start(), nt("S'"));
  EXPECT_EQ(out.rules(), rules_of("S' -> S | _\nS -> a S b | a b"));
  EXPECT_EQ(enumerate_language(out, 8), enumerate_language(in, 8));
}

TEST(RemoveEmptyRules, NothingNullable) {
  Grammar in = parse_grammar("S -> a S b | a b");
  Grammar out = remove_empty_rules(in);
  EXPECT_FALSE(has_empty_rhs(out));
  EXPECT_EQ(enumerate_language(out, 10), enumerate_language(in, 10));
}

TEST(RemoveEmptyRules, DropsNullableOccurrences) {
  Grammar in = parse_grammar("S -> A B\nA -> a | _\nB -> b");
  Grammar out = remove_empty_rules(in);
  EXPECT_EQ(out.start(), nt("S"));
  EXPECT_TRUE(out.rules().contains(Rule{nt("S"), {nt("A"), nt("B")}}));
  EXPECT_TRUE(out.rules().contains(Rule{nt("S"), {nt("B")}}));
  EXPECT_FALSE(has_empty_rhs(out));
  EXPECT_EQ(enumerate_language(out, 6), oracle::language_by_length(in, 6));
}

TEST(RemoveEmptyRules, StartNeverOnRhs) {
  for (const auto& name : testing::corpus_names()) {
    Grammar out = remove_empty_rules(load_corpus(name));
    EXPECT_FALSE(occurs_in_rhs(out, out.start())) << name;
    for (const Rule& r : out.rules()) {
      if (r.rhs.empty()) {
        EXPECT_EQ(r.lhs, out.start()) << name;
      }
    }
  }
}

TEST(RemoveUnitRules, OneLink) {
  EXPECT_EQ(remove_unit_rules(parse_grammar("S -> A\nA -> a")).rules(),
            rules_of("S -> a\nA -> a"));
}

TEST(RemoveUnitRules, Cycle) {
  Grammar in = parse_grammar("S -> A\nA -> S | a");
  Grammar out = remove_unit_rules(in);
  EXPECT_EQ(out.rules(), rules_of("S -> a\nA -> a"));
  EXPECT_EQ(enumerate_language(out, 4), oracle::language_by_length(in, 4));
}

TEST(RemoveUnitRules, NoUnitRulesIsIdentity) {
  Grammar in = parse_grammar("S -> a S b | a b");
  EXPECT_EQ(remove_unit_rules(in), in);
}

TEST(RemoveUseless, DropsNonProductive) {
  Grammar in = parse_grammar("S -> a | A B\nA -> a");
  Grammar out = remove_useless(in);
  EXPECT_EQ(out.rules(), rules_of("S -> a\nA -> a"));
  EXPECT_FALSE(out.nonterminals().contains(nt("B")));
  EXPECT_EQ(enumerate_language(out, 5), oracle::language_by_length(in, 5));
}

TEST(RemoveUseless, AllProductiveIsIdentity) {
  Grammar in = load_corpus("expr");
  EXPECT_EQ(remove_useless(in), in);
}

TEST(RemoveUseless, EmptyLanguage) {
  EXPECT_THROW(remove_useless(parse_grammar("S -> S S")), EmptyLanguage);
}

TEST(RemoveInaccessible, Examples) {
  EXPECT_EQ(remove_inaccessible(parse_grammar("S -> a\nB -> b")).rules(), rules_of("S -> a"));
  Grammar all = load_corpus("anbncm");
  EXPECT_EQ(remove_inaccessible(all), all);
  Grammar chain = parse_grammar("S -> A\nA -> a\nC -> c");
  Grammar out = remove_inaccessible(chain);
  EXPECT_EQ(out.rules(), rules_of("S -> A\nA -> a"));
  EXPECT_EQ(enumerate_language(out, 3), oracle::language_by_length(chain, 3));
}

TEST(CheckCnf, Classification) {
  EXPECT_EQ(check_cnf(parse_grammar("S -> A B\nA -> a\nB -> b")).kind, CnfClass::Cnf);
  EXPECT_EQ(check_cnf(parse_grammar("S -> _ | A B\nA -> a\nB -> b")).kind,
            CnfClass::CnfWithEmptyRule);
  auto bad = check_cnf(parse_grammar("S -> a S"));
  EXPECT_EQ(bad.kind, CnfClass::NotCnf);
  ASSERT_TRUE(bad.offending.has_value());
  EXPECT_EQ(format_rule(*bad.offending), "S -> a S");
  // An ε-rule on a start symbol that also appears on a rhs is not allowed.
  EXPECT_EQ(check_cnf(parse_grammar("S -> _ | S S | a")).kind, CnfClass::NotCnf);
  EXPECT_EQ(check_cnf(parse_grammar("S -> A B\nA -> _\nB -> b")).kind, CnfClass::NotCnf);
}

TEST(CnfGrammar, RejectsNonCnf) {
  EXPECT_THROW(CnfGrammar(parse_grammar("S -> a S")), std::invalid_argument);
  EXPECT_THROW(CnfGrammar(parse_grammar("S -> S S | a")), std::invalid_argument);
}

TEST(ToCnf, AnBnGolden) {
  CnfGrammar g = to_cnf(load_corpus("anbn"));
  EXPECT_EQ(g.fresh_start(), nt("S'"));
  EXPECT_FALSE(g.has_empty_rule());
  EXPECT_EQ(g.base().rules(), rules_of("S' -> T_a X1 | T_a T_b\n"
                                       "S -> T_a X1 | T_a T_b\n"
                                       "X1 -> S T_b\n"
                                       "T_a -> a\n"
                                       "T_b -> b"));
  EXPECT_EQ(g.base().nonterminals().size(), 5u);
}

TEST(ToCnf, AlreadyCnf) {
  CnfGrammar g = to_cnf(parse_grammar("S -> a"));
  EXPECT_EQ(g.base().rules(), rules_of("S' -> a"));
  EXPECT_FALSE(g.has_empty_rule());
}

TEST(ToCnf, OnlyEpsilon) {
  CnfGrammar g = to_cnf(parse_grammar("S -> _"));
  EXPECT_EQ(g.base().rules(), rules_of("S' -> _"));
  EXPECT_TRUE(g.has_empty_rule());
}

TEST(ToCnf, EmptyLanguage) {
  EXPECT_THROW(to_cnf(parse_grammar("S -> S S")), EmptyLanguage);
  EXPECT_THROW(to_cnf(parse_grammar("S -> A b\nA -> A a")), EmptyLanguage);
}

TEST(Binarize, SharesSuffixesAndNumbersInOrder) {
  Grammar g = binarize(parse_grammar("S -> A B C D | B C D\nA -> a\nB -> b\nC -> c\nD -> d"));
  EXPECT_EQ(g.rules(), rules_of("S -> A X1 | B X2\n"
                                "X1 -> B X2\n"
                                "X2 -> C D\n"
                                "A -> a\nB -> b\nC -> c\nD -> d"));
}

TEST(Binarize, SkipsTakenNames) {
  Grammar g = binarize(parse_grammar("S -> X1 X1 X1\nX1 -> a"));
  EXPECT_TRUE(g.nonterminals().contains(nt("X2")));
  EXPECT_EQ(check_cnf(g).kind, CnfClass::Cnf);
}

TEST(IsolateTerminals, OnlyInLongRules) {
  Grammar g = isolate_terminals(parse_grammar("S -> a S | b\nT_a -> c"));
  EXPECT_EQ(g.rules(), rules_of("S -> T_a' S | b\nT_a -> c\nT_a' -> a"));
}

// Every pass preserves the language on the whole corpus.
TEST(Passes, PreserveLanguageOnCorpus) {
  for (const auto& name : testing::corpus_names()) {
    Grammar g = load_corpus(name);
    auto expected = enumerate_language(g, 10);
    EXPECT_EQ(enumerate_language(remove_empty_rules(g), 10), expected) << name;
    EXPECT_EQ(enumerate_language(remove_unit_rules(g), 10), expected) << name;
    EXPECT_EQ(enumerate_language(remove_useless(g), 10), expected) << name;
    EXPECT_EQ(enumerate_language(remove_inaccessible(g), 10), expected) << name;
    EXPECT_EQ(enumerate_language(isolate_terminals(g), 10), expected) << name;
    EXPECT_EQ(enumerate_language(binarize(g), 10), expected) << name;
    EXPECT_EQ(enumerate_language(simplify(g), 10), expected) << name;
    EXPECT_EQ(enumerate_language(to_cnf(g).base(), 10), expected) << name;
  }
}

TEST(ToCnf, ShapeFreshStartAndEmptyFlagOnCorpus) {
  for (const auto& name : testing::corpus_names()) {
    Grammar g = load_corpus(name);
    CnfGrammar c = to_cnf(g);
    EXPECT_NE(check_cnf(c.base()).kind, CnfClass::NotCnf) << name;
    EXPECT_FALSE(occurs_in_rhs(c.base(), c.fresh_start())) << name;
    EXPECT_EQ(c.has_empty_rule(), decide_produces_empty(g)) << name;
  }
}

TEST(ToCnf, Deterministic) {
  for (const auto& name : testing::corpus_names()) {
    Grammar g = load_corpus(name);
    EXPECT_EQ(print_grammar(to_cnf(g).base()), print_grammar(to_cnf(g).base())) << name;
  }
}

}  // namespace
}  // namespace cfpump
