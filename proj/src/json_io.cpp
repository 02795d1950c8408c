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

#include "polymat/json_io.hpp"

#include "polymat/error.hpp"

namespace polymat {
namespace {

int require_n(const Json& j) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw InvalidInput("missing integer field \"n\"");
  }
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxGroundSize) throw InvalidInput("\"n\" out of range: " + std::to_string(n));
  return n;
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const Presentation& p) {
  Json sets = Json::array();
  for (const auto& s : p.sets()) sets.push_back(s.members());
  return Json{{"n", p.n()}, {"sets", sets}};
}

Json to_json(const BaseSet& b) {
  Json points = Json::array();
  for (const auto& v : b.points()) points.push_back(std::vector<int>(v.coords().begin(), v.coords().end()));
  return Json{{"n", b.n()}, {"points", points}};
}

Json to_json(const ConeDescription& c) {
  Json normals = Json::array();
  for (const auto& a : c.normals()) normals.push_back(a.primitive);
  return Json{{"n", c.n()}, {"normals", normals}};
}

Json to_json(const HilbertData& h) {
  Json out{{"n", h.n}, {"H", h.values}, {"h", h.h.h},
           {"gorenstein_symmetric", h.gorenstein_symmetric}};
  out["a_invariant"] = h.a_invariant ? Json(*h.a_invariant) : Json(nullptr);
  if (!h.h.consistent()) out["h_residual"] = h.h.residual;
  return out;
}

Json to_json(const PairParams& p, const DecisionOutcome& d) {
  Json out{{"n", p.n},
           {"i1", p.i1},
           {"i2", p.i2},
           {"t2", p.t2},
           {"is_base_ring", d.is_base_ring},
           {"condition", to_string(d.condition)}};
  if (d.is_base_ring) {
    out["lemma_case"] = d.lemma_case;
    out["witness"] = to_json(*d.witness);
  }
  return out;
}

Json to_json(const RecognitionResult& r) {
  Json out{{"transversal", r.transversal}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  if (r.certificate) out["certificate"] = r.certificate->describe();
  return out;
}

Presentation presentation_from_json(const Json& j) {
  const int n = require_n(j);
  if (!j.contains("sets") || !j["sets"].is_array()) throw InvalidInput("missing array \"sets\"");
  std::vector<std::vector<int>> sets;
  for (const auto& s : j["sets"]) sets.push_back(int_list(s, "each set"));
  return Presentation::from_lists(n, sets);
}

BaseSet base_set_from_json(const Json& j) {
  const int n = require_n(j);
  if (!j.contains("points") || !j["points"].is_array()) {
    throw InvalidInput("missing array \"points\"");
  }
  std::vector<LatticeVector> points;
  for (const auto& p : j["points"]) points.emplace_back(int_list(p, "each point"));
  return BaseSet(n, std::move(points));
}

}  // namespace polymat
