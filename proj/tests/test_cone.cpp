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

#include "oracles.hpp"
#include "polymat/cone.hpp"
#include "polymat/core.hpp"
#include "polymat/error.hpp"
#include "polymat/polymatroid.hpp"

using namespace polymat;

namespace {

ConeDescription cone_of(std::vector<FamilyParams> families) {
  return build_cone(families, families.front().n);
}

oracle::PointSet as_points(const std::vector<LatticeVector>& v) {
  oracle::PointSet out;
  for (const auto& p : v) out.emplace(p.coords().begin(), p.coords().end());
  return out;
}

std::vector<std::vector<int>> primitives(const ConeDescription& c) {
  std::vector<std::vector<int>> out;
  for (const auto& a : c.normals()) out.push_back(a.primitive);
  return out;
}

}  // namespace

TEST_CASE("single family cone") {
  const ConeDescription c = cone_of({{4, 1, 0}});
  CHECK(c.normals().size() == 5);
  const auto p = primitives(c);
  CHECK(std::count(p.begin(), p.end(), std::vector<int>{-1, 1, 1, 1}) == 1);
  for (int j = 0; j < 4; ++j) {
    std::vector<int> e(4, 0);
    e[j] = 1;
    CHECK(std::count(p.begin(), p.end(), e) == 1);
  }
}

TEST_CASE("pair cone and duplicates") {
  CHECK(cone_of({{4, 2, 0}, {4, 2, 1}}).normals().size() == 6);
  CHECK(primitives(cone_of({{4, 1, 2}, {4, 1, 2}})) == primitives(cone_of({{4, 1, 2}})));
  CHECK_THROWS(cone_of({{4, 1, 0}, {5, 1, 0}}));
}

TEST_CASE("evaluate uses the primitive normal") {
  CHECK(evaluate(nu_vector(4, 0, 1), LatticeVector{1, 1, 1, 1}) == 2);
  CHECK(evaluate(nu_vector(4, 0, 3), LatticeVector{0, 4, 0, 0}) == 0);
  CHECK(evaluate(nu_vector(3, 0, 1), LatticeVector{3, 0, 0}) == -3);
  CHECK_THROWS(evaluate(nu_vector(3, 0, 1), LatticeVector{1, 1}));
}

TEST_CASE("cone sections") {
  const ConeDescription c = cone_of({{3, 1, 0}});
  const DegreeSection zero = cone_section(c, 0);
  REQUIRE(zero.points.size() == 1);
  CHECK(zero.points.front() == LatticeVector::zero(3));
  CHECK(cone_section(c, 1).points.size() == 9);
  CHECK(cone_section(c, 2).points.size() == 25);
}

TEST_CASE("cone sections agree with the inequality oracle") {
  const std::vector<std::vector<std::pair<int, int>>> corpus = {
      {{1, 0}}, {{2, 1}}, {{1, 0}, {1, 1}}, {{2, 0}, {2, 1}}, {{1, 0}, {2, 3}, {3, 1}}};
  for (int n = 4; n <= 5; ++n) {
    for (const auto& fam : corpus) {
      std::vector<FamilyParams> fs;
      bool ok = true;
      for (const auto& [i, t] : fam) {
        ok = ok && i <= n - 2;
        fs.push_back({n, i, t});
      }
      if (!ok) continue;
      for (int d = 0; d <= 2; ++d) {
        CHECK(as_points(cone_section(build_cone(fs, n), d).points) == oracle::cone_points(n, fam, d));
      }
    }
  }
}

TEST_CASE("degree one section of a family is its base set") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i <= n - 2; ++i) {
      for (int t = 0; t < n; ++t) {
        const FamilyParams f{n, i, t};
        CHECK(BaseSet(n, cone_section(cone_of({f}), 1).points) ==
              enumerate_bases(family_presentation(f)));
      }
    }
  }
}

TEST_CASE("exact rank") {
  std::vector<LatticeVector> units;
  for (int j = 1; j <= 4; ++j) units.push_back(LatticeVector::unit(4, j));
  CHECK(rank_exact(units) == 4);

  const auto deg1 = cone_section(cone_of({{4, 1, 0}}), 1).points;
  CHECK(rank_exact(deg1) == 4);

  const FacetNormal a = nu_vector(4, 0, 1);
  std::vector<LatticeVector> on;
  for (const auto& p : deg1) {
    if (evaluate(a, p) == 0) on.push_back(p);
  }
  CHECK(rank_exact(on) == 3);

  CHECK(rank_exact(std::vector<std::vector<long long>>{{2, 4}, {1, 2}}) == 1);
  CHECK(rank_exact(std::vector<std::vector<long long>>{}) == 0);
  // Entries large enough to overflow 64-bit intermediate products.
  CHECK(rank_exact(std::vector<std::vector<long long>>{{3037000499LL, 3037000498LL},
                                                       {3037000498LL, 3037000497LL}}) == 2);
}

TEST_CASE("facet verification on window families") {
  const ConeDescription a = cone_of({{4, 1, 0}});
  const FacetReport ra = verify_facets(a, cone_section(a, 1));
  CHECK(ra.normals.size() == 5);
  CHECK(ra.pass());

  const ConeDescription b = cone_of({{4, 2, 0}, {4, 2, 1}});
  const BaseSet gens = enumerate_bases(family_presentation({4, 2, 0}))
                           .intersect(enumerate_bases(family_presentation({4, 2, 1})));
  const FacetReport rb = verify_facets(b, cone_section(b, 1));
  CHECK(rb.normals.size() == 6);
  CHECK(rb.pass());
  CHECK(verify_facets(b, DegreeSection{1, gens.points()}).pass());
}

TEST_CASE("a redundant halfspace fails irredundancy") {
  const ConeDescription a = cone_of({{4, 1, 0}});
  const ConeDescription padded = a.with(FacetNormal::from_vector({2, 2, 0, 0}));
  REQUIRE(padded.normals().size() == 6);
  const FacetReport r = verify_facets(padded, cone_section(padded, 1));
  CHECK_FALSE(r.pass());
  int failing = 0;
  for (const auto& c : r.normals) {
    if (!c.pass()) {
      ++failing;
      CHECK(c.normal.primitive == std::vector<int>{1, 1, 0, 0});
      CHECK_FALSE(c.irredundant());
    }
  }
  CHECK(failing == 1);
}

TEST_CASE("dropping a normal strictly enlarges a low degree section") {
  const ConeDescription c = cone_of({{5, 2, 0}, {5, 1, 3}});
  for (std::size_t k = 0; k < c.normals().size(); ++k) {
    const ConeDescription dropped = c.without(k);
    bool grew = false;
    for (int d = 1; d <= kIrredundancyDegree && !grew; ++d) {
      grew = relaxed_section_size(dropped, c.n() * d, c.n() * d) >
             relaxed_section_size(c, c.n() * d, c.n() * d);
    }
    CHECK(grew);
  }
}

TEST_CASE("relaxed section without slack is the cone section") {
  const ConeDescription c = cone_of({{4, 1, 0}, {4, 2, 2}});
  for (int d = 0; d <= 3; ++d) {
    CHECK(relaxed_section_size(c, 4 * d, 0) == cone_section(c, d).points.size());
  }
}
