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
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cfpump {

/// A grammar atom: either a terminal or a nonterminal, identified by name.
///
/// Names never contain whitespace, `|` or `#`. Nonterminal names start with
/// an uppercase ASCII letter; terminal names never contain `'` so that any
/// terminal can be written quoted in grammar files.
class Symbol {
 public:
  enum class Kind { Terminal, NonTerminal };

  static Symbol terminal(std::string name) {
    check_common(name);
    if (name.find('\'') != std::string::npos) {
      throw std::invalid_argument("terminal name may not contain a quote: " + name);
    }
    return Symbol(Kind::Terminal, std::move(name));
  }

  static Symbol nonterminal(std::string name) {
    check_common(name);
    if (!std::isupper(static_cast<unsigned char>(name.front()))) {
      throw std::invalid_argument("nonterminal name must start uppercase: " + name);
    }
    return Symbol(Kind::NonTerminal, std::move(name));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_terminal() const noexcept { return kind_ == Kind::Terminal; }
  bool is_nonterminal() const noexcept { return kind_ == Kind::NonTerminal; }
  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.name_.compare(b.name_) <=> 0;
  }

 private:
  Symbol(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  static void check_common(std::string_view name) {
    if (name.empty()) throw std::invalid_argument("symbol name is empty");
    for (char ch : name) {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == '|' || ch == '#') {
        throw std::invalid_argument("symbol name has reserved character: " +
                                    std::string(name));
      }
    }
  }

  Kind kind_;
  std::string name_;
};

/// Sequence of symbols; empty means epsilon.
using SententialForm = std::vector<Symbol>;

/// Sequence of terminal symbols.
using Sentence = std::vector<Symbol>;

inline bool is_sentence(const SententialForm& form) {
  return std::all_of(form.begin(), form.end(),
                     [](const Symbol& s) { return s.is_terminal(); });
}

/// Builds a sentence with one terminal per character of `text`.
inline Sentence sentence_from_chars(std::string_view text) {
  Sentence out;
  out.reserve(text.size());
  for (char ch : text) out.push_back(Symbol::terminal(std::string(1, ch)));
  return out;
}

/// Builds a sentence from whitespace-separated terminal names.
inline Sentence sentence_from_tokens(std::string_view text) {
  Sentence out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(Symbol::terminal(std::string(text.substr(i, j - i))));
    i = j;
  }
  return out;
}

/// Concatenated names, with `sep` between symbols.
inline std::string to_string(const SententialForm& form, std::string_view sep = "") {
  std::string out;
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (i != 0) out += sep;
    out += form[i].name();
  }
  return out;
}

/// `piece` repeated `times` times.
template <class T>
std::vector<T> repeat(const std::vector<T>& piece, std::size_t times) {
  std::vector<T> out;
  out.reserve(piece.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), piece.begin(), piece.end());
  return out;
}

template <class... Forms>
SententialForm concat(const Forms&... parts) {
  SententialForm out;
  out.reserve((parts.size() + ... + 0));
  (out.insert(out.end(), parts.begin(), parts.end()), ...);
  return out;
}

}  // namespace cfpump
