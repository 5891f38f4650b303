/*
 * Copyright 2026 The upkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <json.hpp>

#include "upkit/params.hpp"
#include "upkit/pieces.hpp"
#include "upkit/springer.hpp"
#include "upkit/verify.hpp"

namespace upkit {

using Json = nlohmann::json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const IntSet& s) { return Json(s); }

inline Json to_json(const CharFn& e) { return Json(e.set); }

inline Json to_json(const Bipartition& b) {
  return Json{{"alpha", to_json(b.alpha)}, {"beta", to_json(b.beta)}};
}

inline Json to_json(const ATable& m) {
  Json rows = Json::array();
  for (const auto& e : m.canonical()) rows.push_back({{"a", e.a}, {"b", e.b}});
  return Json{{"entries", rows}, {"z", m.z}};
}

inline Json to_json(const LParam& phi) {
  Json rows = Json::array();
  for (const auto& s : phi.summands) rows.push_back({{"z", s.z}, {"j2", s.j2}, {"k", s.k}});
  return rows;
}

inline Json to_json(const BlockStructure& bs) {
  Json out = Json::array();
  for (const auto& b : bs.blocks) out.push_back(to_json(b.elems));
  return out;
}

inline Json to_json(const SpringerIndexData& sd, const GreenTableau& t) {
  Bipartition b = tableau_bipartition(sd, t);
  return Json{{"rows", t.rows}, {"alpha", to_json(b.alpha)}, {"beta", to_json(b.beta)}};
}

inline Json to_json(const SuiteReport& r) {
  return Json{{"suite", r.name},         {"pass", r.pass()},       {"checked", r.checked},
              {"failures", r.failures},  {"samples", r.samples},   {"counts", r.counts},
              {"seconds", r.seconds}};
}

}  // namespace upkit
