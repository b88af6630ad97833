// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON views of library values. Keys keep insertion order so output is
// byte-stable.

#ifndef ESSPLIT_JSON_HPP_
#define ESSPLIT_JSON_HPP_

#include <optional>
#include <vector>

#include <json.hpp>

#include "essplit/es_splitting.hpp"
#include "essplit/gf2.hpp"
#include "essplit/label_set.hpp"

namespace essplit {

using Json = nlohmann::ordered_json;

inline Json to_json(const Ground& ground, LabelSet set) { return Json(ground.names(set)); }

inline Json to_json(const Ground& ground, const std::optional<LabelSet>& set) {
  if (!set) return nullptr;
  return to_json(ground, *set);
}

inline Json to_json(const Ground& ground, const std::vector<LabelSet>& sets) {
  Json out = Json::array();
  for (LabelSet s : sets) out.push_back(to_json(ground, s));
  return out;
}

// {"matched": [...], "formula": [...]|null, "oracle": [...]|null,
//  "agree": bool|null}
inline Json to_json(const SplitContext& ctx, const ClosureCaseReport& report) {
  const Ground& g = ctx.split_ground();
  Json matched = Json::array();
  for (ClosureCase c : report.matched) matched.push_back(case_id(c));
  Json out;
  out["matched"] = std::move(matched);
  out["formula"] = to_json(g, report.formula_result);
  out["oracle"] = to_json(g, report.oracle_result);
  out["agree"] = report.agreement ? Json(*report.agreement) : Json(nullptr);
  return out;
}

inline Json to_json(const gf2::GF2Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.n_cols(); ++c) row.push_back(m.at(r, c) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  Json out;
  out["labels"] = m.col_labels();
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace essplit

#endif  // ESSPLIT_JSON_HPP_
