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

// JSON encodings of trees, decompositions and reports.
//
//   sentence       ["a", "b", ...]                  terminal names
//   code           "LRL"
//   tree           {"label": "S", "terminal": "a"}
//                  {"label": "S", "left": tree, "right": tree}
//   decomposition  {"u".."y": sentence, "repeated", "outer_code",
//                   "inner_code", "n", "tree"}
//   pump report    {"rows": [{"i", "sentence", "member", "tree_route",
//                   "cyk_route"}], "overall", "routes_agree"}
//   refutation     {"outcome": "Refuted" | "NotRefuted",
//                   "splits": [{"split": {"u".."y"}, "failing_i": int | null}]}

#include <json.hpp>

#include "cfpump/pumping.hpp"
#include "cfpump/tree.hpp"

namespace cfpump {

using Json = nlohmann::ordered_json;

inline Json to_json(const Sentence& s) {
  Json out = Json::array();
  for (const Symbol& t : s) out.push_back(t.name());
  return out;
}

inline Sentence sentence_from_json(const Json& j) {
  Sentence out;
  for (const auto& e : j) out.push_back(Symbol::terminal(e.get<std::string>()));
  return out;
}

inline Json to_json(const TreeCode& c) { return format_code(c); }

inline TreeCode code_from_json(const Json& j) {
  TreeCode out;
  for (char ch : j.get<std::string>()) {
    if (ch != 'L' && ch != 'R') throw std::invalid_argument("bad code character");
    out.push_back(ch == 'L' ? Direction::Left : Direction::Right);
  }
  return out;
}

inline Json to_json(const DerivationTree& t) {
  Json out;
  out["label"] = t.label().name();
  if (t.is_leaf()) {
    out["terminal"] = t.terminal().name();
  } else {
    out["left"] = to_json(t.left());
    out["right"] = to_json(t.right());
  }
  return out;
}

inline DerivationTree tree_from_json(const Json& j) {
  Symbol label = Symbol::nonterminal(j.at("label").get<std::string>());
  if (j.contains("terminal")) {
    return DerivationTree::leaf(label, Symbol::terminal(j.at("terminal").get<std::string>()));
  }
  return DerivationTree::node(label, tree_from_json(j.at("left")),
                              tree_from_json(j.at("right")));
}

inline Json to_json(const Decomposition& d) {
  Json out;
  out["u"] = to_json(d.u);
  out["v"] = to_json(d.v);
  out["w"] = to_json(d.w);
  out["x"] = to_json(d.x);
  out["y"] = to_json(d.y);
  out["repeated"] = d.repeated.name();
  out["outer_code"] = to_json(d.outer_code);
  out["inner_code"] = to_json(d.inner_code);
  out["n"] = d.n;
  out["tree"] = to_json(d.tree);
  return out;
}

inline Decomposition decomposition_from_json(const Json& j) {
  return Decomposition{sentence_from_json(j.at("u")),
                       sentence_from_json(j.at("v")),
                       sentence_from_json(j.at("w")),
                       sentence_from_json(j.at("x")),
                       sentence_from_json(j.at("y")),
                       Symbol::nonterminal(j.at("repeated").get<std::string>()),
                       code_from_json(j.at("outer_code")),
                       code_from_json(j.at("inner_code")),
                       j.at("n").get<std::uint64_t>(),
                       tree_from_json(j.at("tree"))};
}

inline Json to_json(const PumpReport& r) {
  Json rows = Json::array();
  for (const PumpRow& row : r.rows) {
    Json e;
    e["i"] = row.i;
    e["sentence"] = to_json(row.sentence);
    e["member"] = row.member;
    e["tree_route"] = row.tree_route;
    e["cyk_route"] = row.cyk_route;
    rows.push_back(std::move(e));
  }
  Json out;
  out["rows"] = std::move(rows);
  out["overall"] = r.overall;
  out["routes_agree"] = r.routes_agree;
  return out;
}

inline PumpReport pump_report_from_json(const Json& j) {
  PumpReport r;
  for (const auto& e : j.at("rows")) {
    r.rows.push_back(PumpRow{e.at("i").get<std::size_t>(), sentence_from_json(e.at("sentence")),
                             e.at("tree_route").get<bool>(), e.at("cyk_route").get<bool>(),
                             e.at("member").get<bool>()});
  }
  r.overall = j.at("overall").get<bool>();
  r.routes_agree = j.at("routes_agree").get<bool>();
  return r;
}

inline std::string outcome_name(RefutationReport::Outcome o) {
  return o == RefutationReport::Outcome::Refuted ? "Refuted" : "NotRefuted";
}

inline Json to_json(const RefutationReport& r) {
  Json splits = Json::array();
  for (const SplitOutcome& s : r.splits) {
    Json parts;
    parts["u"] = to_json(s.u);
    parts["v"] = to_json(s.v);
    parts["w"] = to_json(s.w);
    parts["x"] = to_json(s.x);
    parts["y"] = to_json(s.y);
    Json e;
    e["split"] = std::move(parts);
    e["failing_i"] = s.failing_i ? Json(*s.failing_i) : Json(nullptr);
    splits.push_back(std::move(e));
  }
  Json out;
  out["outcome"] = outcome_name(r.outcome);
  out["splits"] = std::move(splits);
  return out;
}

inline RefutationReport refutation_from_json(const Json& j) {
  RefutationReport r;
  const auto outcome = j.at("outcome").get<std::string>();
  if (outcome != "Refuted" && outcome != "NotRefuted") {
    throw std::invalid_argument("unknown outcome " + outcome);
  }
  r.outcome = outcome == "Refuted" ? RefutationReport::Outcome::Refuted
                                   : RefutationReport::Outcome::NotRefuted;
  for (const auto& e : j.at("splits")) {
    const Json& p = e.at("split");
    SplitOutcome s{sentence_from_json(p.at("u")), sentence_from_json(p.at("v")),
                   sentence_from_json(p.at("w")), sentence_from_json(p.at("x")),
                   sentence_from_json(p.at("y")), std::nullopt};
    if (!e.at("failing_i").is_null()) s.failing_i = e.at("failing_i").get<std::size_t>();
    r.splits.push_back(std::move(s));
  }
  return r;
}

}  // namespace cfpump
