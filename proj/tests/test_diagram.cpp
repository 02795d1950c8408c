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

#include <doctest.h>

#include <random>

#include "polymat/core.hpp"
#include "polymat/diagram.hpp"
#include "polymat/error.hpp"
#include "polymat/intersect.hpp"

using namespace polymat;

TEST_CASE("all white grid") {
  const Presentation p = Presentation::from_lists(3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
  CHECK(render(p, DiagramFormat::kAscii) == "...\n...\n...\n");
}

TEST_CASE("family (4,2,0)") {
  CHECK(render(family_presentation({4, 2, 0}), DiagramFormat::kAscii) == "....\n....\n##..\n....\n");
}

TEST_CASE("witness diagram for (5,2,1,1)") {
  // Column 2 is black in rows 2..4 and column 1 in rows 3..4.
  const std::string art = render(witness({5, 2, 1, 1}), DiagramFormat::kAscii);
  CHECK(art == ".....\n.#...\n##...\n##...\n.....\n");
}

TEST_CASE("ascii round trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 6;
    std::uniform_int_distribution<std::uint64_t> mask(1, (1ULL << n) - 1);
    std::vector<IndexSet> sets;
    for (int k = 0; k < n; ++k) sets.emplace_back(n, mask(rng));
    const Presentation p(n, sets);
    CHECK(parse_ascii_diagram(render(p, DiagramFormat::kAscii)) == p);
    CHECK(Diagram::of(p).presentation() == p);
  }
}

TEST_CASE("svg output") {
  const std::string svg = render(family_presentation({4, 2, 0}), DiagramFormat::kSvg);
  CHECK(svg.rfind("<svg", 0) == 0);
  auto count = [&](const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++c;
    return c;
  };
  CHECK(count("<rect") == 16);
  CHECK(count("fill=\"black\"") == 2);
}

TEST_CASE("format names and bad diagrams") {
  CHECK(parse_diagram_format("ascii") == DiagramFormat::kAscii);
  CHECK(parse_diagram_format("svg") == DiagramFormat::kSvg);
  CHECK_THROWS_AS(parse_diagram_format("png"), InvalidInput);
  CHECK_THROWS_AS(parse_ascii_diagram(""), InvalidInput);
  CHECK_THROWS_AS(parse_ascii_diagram("..\n.\n"), InvalidInput);
  CHECK_THROWS_AS(parse_ascii_diagram(".x\n..\n"), InvalidInput);
  CHECK_THROWS(parse_ascii_diagram("##\n..\n"));
}
