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

// JSON documents exchanged by the command line tool. Object keys come out in
// sorted order and point lists are lexicographically sorted, so a document is
// byte-identical for identical inputs.
//
//   Presentation  {"n": 4, "sets": [[1,2,3,4],[2,3,4],[2,3,4],[1,2,3,4]]}
//   BaseSet       {"n": 4, "points": [[0,0,0,4], ...]}
//   Cone          {"n": 4, "normals": [[-1,1,1,1],[0,0,0,1], ...]}
//   HilbertData   {"H": [...], "a_invariant": -1, "gorenstein_symmetric": true,
//                  "h": [...], "n": 3}
//   Decision      {"condition": "d", "i1": ..., "i2": ..., "is_base_ring": true,
//                  "lemma_case": "d.1", "n": ..., "t2": ..., "witness": {...}}

#ifndef POLYMAT_JSON_IO_HPP_
#define POLYMAT_JSON_IO_HPP_

#include <json.hpp>

#include "polymat/cone.hpp"
#include "polymat/core.hpp"
#include "polymat/hilbert.hpp"
#include "polymat/intersect.hpp"
#include "polymat/polymatroid.hpp"

namespace polymat {

using Json = nlohmann::json;

Json to_json(const Presentation& p);
Json to_json(const BaseSet& b);
Json to_json(const ConeDescription& c);
Json to_json(const HilbertData& h);
Json to_json(const PairParams& p, const DecisionOutcome& d);
Json to_json(const RecognitionResult& r);

// Throw InvalidInput with a description of the first problem found.
Presentation presentation_from_json(const Json& j);
BaseSet base_set_from_json(const Json& j);

}  // namespace polymat

#endif  // POLYMAT_JSON_IO_HPP_
