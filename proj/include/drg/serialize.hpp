// Copyright 2026 The drgkit Authors.
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

#ifndef DRG_SERIALIZE_HPP_
#define DRG_SERIALIZE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "drg/classifier.hpp"
#include "drg/dual.hpp"
#include "drg/error.hpp"
#include "drg/geometry.hpp"
#include "drg/motion.hpp"
#include "drg/params.hpp"
#include "drg/report.hpp"
#include "drg/spectral.hpp"

namespace drg {

using Json = nlohmann::ordered_json;

namespace detail {

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

}  // namespace detail

inline void to_json(Json& j, const InequalityReport& r) {
  j = Json{{"name", r.name},   {"applicable", r.applicable}, {"holds", r.holds},
           {"lhs", r.lhs},     {"rhs", r.rhs},               {"slack", r.slack},
           {"note", r.note},   {"witness", r.witness}};
}

inline void to_json(Json& j, const IntersectionArray& arr) {
  j = Json{{"d", arr.d()}, {"b", arr.b_sequence()}, {"c", arr.c_sequence()}};
}

/// Parses {"d": int, "b": [ints], "c": [ints]}; `d` must match both lengths.
inline IntersectionArray array_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("b") || !j.contains("c")) {
    fail(ErrorKind::kParse, "intersection array JSON needs keys \"d\", \"b\" and \"c\"");
  }
  try {
    const auto d = j.at("d").get<int>();
    const auto b = j.at("b").get<std::vector<std::int64_t>>();
    const auto c = j.at("c").get<std::vector<std::int64_t>>();
    if (static_cast<int>(b.size()) != d || static_cast<int>(c.size()) != d) {
      fail(ErrorKind::kParse, "\"d\" = " + std::to_string(d) + " but b has " +
                                  std::to_string(b.size()) + " and c has " +
                                  std::to_string(c.size()) + " entries");
    }
    return IntersectionArray::from_sequences(b, c);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kParse, std::string("intersection array JSON: ") + e.what());
  }
}

inline IntersectionArray array_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::kParse, std::string("malformed JSON: ") + e.what());
  }
  return array_from_json(j);
}

inline void to_json(Json& j, const SpectralProfile& p) {
  Json plus = p.b_plus ? Json(*p.b_plus) : Json(nullptr);
  Json minus = p.b_minus ? Json(*p.b_minus) : Json(nullptr);
  j = Json{{"n", p.n},
           {"k", p.k},
           {"eigenvalues", p.eigenvalues},
           {"integral", p.integral},
           {"multiplicities", p.multiplicities},
           {"raw_multiplicities", p.raw_multiplicities},
           {"standard_sequences", p.standard_sequences},
           {"b_plus", plus},
           {"b_minus", minus},
           {"xi", p.xi}};
}

inline void to_json(Json& j, const CliqueGeometryReport& g) {
  j = Json{{"is_geometric", g.is_geometric},
           {"source", g.source == GeometrySource::kGraph ? "graph" : "array"},
           {"m", g.m},
           {"delsarte_size", g.delsarte_size},
           {"delsarte_value", g.delsarte_value},
           {"psi", g.psi},
           {"tau", g.tau},
           {"neighborhood_kind", std::string(to_string(g.neighborhood_kind))},
           {"cliques", g.cliques},
           {"note", g.note}};
}

inline void to_json(Json& j, const MetschReport& r) {
  j = Json{{"m", r.m},
           {"lambda1", r.lambda1},
           {"lambda2", r.lambda2},
           {"mu_bound", r.mu_bound},
           {"k", r.k},
           {"conditions_hold", r.conditions_hold},
           {"condition3", {{"lhs", r.condition3_lhs}, {"rhs", r.condition3_rhs}}},
           {"condition4", {{"lhs", r.condition4_lhs}, {"rhs", r.condition4_rhs}}},
           {"line_threshold", r.line_threshold},
           {"all_hold", r.all_hold()}};
}

inline void to_json(Json& j, const MotionBound& b) {
  j = Json{{"name", b.name}, {"value", b.value}, {"provenance", b.provenance}, {"note", b.note}};
}

inline void to_json(Json& j, const MotionReport& r) {
  Json exact = r.exact && !r.rigid ? Json(*r.exact) : Json(nullptr);
  j = Json{{"n", r.n},
           {"exact", exact},
           {"rigid", r.rigid},
           {"group_order", detail::optional_json(r.group_order)},
           {"upper_bound", detail::optional_json(r.upper_bound)},
           {"bounds", r.bounds},
           {"thickness_bound", detail::optional_json(r.thickness)},
           {"primitivity_unchecked", r.primitivity_unchecked},
           {"notes", r.notes}};
}

inline void to_json(Json& j, const ClassificationOutcome& o) {
  Json family = nullptr;
  if (o.label == OutcomeLabel::kJohnson || o.label == OutcomeLabel::kHamming ||
      o.label == OutcomeLabel::kDoobPossible) {
    family = Json{{"s", o.family_s}, {"d", o.family_d}};
  }
  j = Json{{"label", std::string(to_string(o.label))},
           {"label_text", o.label_text()},
           {"family", family},
           {"motion_fraction", detail::optional_json(o.motion_fraction)},
           {"case_tag", o.case_tag.empty() ? Json(nullptr) : Json(o.case_tag)},
           {"gamma_d", detail::optional_json(o.gamma_d)},
           {"severity", std::string(to_string(o.severity))},
           {"checklist", o.checklist},
           {"flags", o.flags},
           {"notes", o.notes}};
}

inline void to_json(Json& j, const MultiplicityVerdict& v) {
  j = Json{{"applicable", v.applicable}, {"hypotheses_hold", v.hypotheses_hold},
           {"branch", v.branch},         {"f1", v.f1},
           {"t", v.t},                   {"contradiction", v.contradiction},
           {"checklist", v.checklist},   {"note", v.note}};
}

inline void to_json(Json& j, const AppendixReport& r) {
  j = Json{{"triples", r.triples},
           {"violations", r.violations},
           {"min_slack", r.min_slack},
           {"argmin", {{"m", r.argmin_m}, {"x", r.argmin_x}, {"t", r.argmin_t}}},
           {"report", r.report}};
}

/// Sidecar for an exported dual: dual vertex i is the clique `cliques[i]`.
inline Json dual_mapping_json(const DualGraph& dual) {
  return Json{{"kind", "dual_mapping"},
              {"k_tilde", dual.k_tilde},
              {"lambda_tilde", dual.lambda_tilde},
              {"diameter", dual.diameter},
              {"cliques", dual.clique_of_vertex}};
}

}  // namespace drg

#endif  // DRG_SERIALIZE_HPP_
