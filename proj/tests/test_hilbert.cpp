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
#include "polymat/hilbert.hpp"
#include "polymat/polymatroid.hpp"

using namespace polymat;

namespace {

oracle::PointSet as_points(const std::vector<LatticeVector>& v) {
  oracle::PointSet out;
  for (const auto& p : v) out.emplace(p.coords().begin(), p.coords().end());
  return out;
}

BaseSet family(int n, int i, int t) { return enumerate_bases(family_presentation({n, i, t})); }

HVector make_h(std::vector<long long> h, int n) {
  HVector out;
  out.n = n;
  out.h = std::move(h);
  return out;
}

}  // namespace

TEST_CASE("composition index is a dense lexicographic rank") {
  for (int n = 1; n <= 5; ++n) {
    for (int total = 0; total <= 6; ++total) {
      const CompositionIndex idx(n, total);
      const auto all = oracle::compositions(n, total);
      REQUIRE(idx.size() == all.size());
      for (std::size_t k = 0; k < all.size(); ++k) CHECK(idx.rank(all[k]) == k);
    }
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK_THROWS_AS(binomial(200, 100), CapacityError);
}

TEST_CASE("semigroup sections") {
  const BaseSet g = family(3, 1, 0);
  const auto zero = semigroup_section(g, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero.front() == LatticeVector::zero(3));
  CHECK(BaseSet(3, semigroup_section(g, 1)) == g);
  CHECK(semigroup_section(g, 2).size() == 25);
}

TEST_CASE("semigroup sections agree with the sum oracle") {
  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i <= n - 2; ++i) {
      const BaseSet g = family(n, i, n - 1);
      const oracle::PointSet gens = as_points(g.points());
      for (int d = 0; d <= (n == 5 ? 2 : 3); ++d) {
        CHECK(as_points(semigroup_section(g, d)) == oracle::sums(gens, n, d));
      }
    }
  }
}

TEST_CASE("non-homogeneous generators use the sparse path") {
  const BaseSet g(2, {LatticeVector{2, 0}, LatticeVector{0, 3}});
  const auto s = semigroup_section(g, 2);
  CHECK(as_points(s) == oracle::PointSet{{4, 0}, {2, 3}, {0, 6}});
}

TEST_CASE("hilbert function of the smallest family") {
  const BaseSet g = family(3, 1, 0);
  CHECK(hilbert_function(g, 0) == 1);
  CHECK(hilbert_function(g, 1) == 9);
  CHECK(hilbert_function(g, 3) == 49);
  CHECK(hilbert_values(g, 3) == std::vector<long long>{1, 9, 25, 49});
}

TEST_CASE("h-vector transform") {
  const std::vector<long long> H{1, 9, 25, 49};
  const HVector h = h_vector(H, 3);
  CHECK(h.h == std::vector<long long>{1, 6, 1});
  CHECK(h.consistent());
  CHECK(oracle::numerator(H, 3) == std::vector<long long>{1, 6, 1, 0});

  // Polynomial ring in 4 variables: H(d) = C(d + 3, 3).
  const std::vector<long long> free{1, 4, 10, 20, 35};
  const HVector hf = h_vector(free, 4);
  CHECK(hf.h == std::vector<long long>{1, 0, 0, 0});
  CHECK(hf.consistent());

  const HVector bad = h_vector(std::vector<long long>{1, 9, 26, 49}, 3);
  CHECK_FALSE(bad.consistent());
  CHECK_THROWS_AS(a_invariant(bad), ContractError);
  CHECK_THROWS(h_vector(std::vector<long long>{1, 9, 25}, 3));
}

TEST_CASE("a-invariant") {
  CHECK(a_invariant(make_h({1, 6, 1}, 3)) == -1);
  CHECK(a_invariant(make_h({1, 0, 0}, 3)) == -3);

  const BaseSet c = family(4, 1, 0).intersect(family(4, 1, 1));
  const HilbertData d = compute_hilbert(c, 4);
  REQUIRE(d.a_invariant);
  CHECK(*d.a_invariant == -1);
}

TEST_CASE("binomial prediction reproduces enumeration") {
  const BaseSet g = family(3, 1, 0);
  const HVector h = h_vector(hilbert_values(g, 3), 3);
  for (int d = 0; d <= 5; ++d) CHECK(predicted_hilbert(h, d) == hilbert_function(g, d));
  const BaseSet c = family(5, 2, 0).intersect(family(5, 1, 3));
  const HVector hc = h_vector(hilbert_values(c, 5), 5);
  CHECK(predicted_hilbert(hc, 5) == hilbert_function(c, 5));
}

TEST_CASE("normality checks") {
  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i <= n - 2; ++i) {
      const FamilyParams f{n, i, 1};
      const std::vector<FamilyParams> fs{f};
      CHECK(check_normality(family(n, i, 1), build_cone(fs, n), 3).pass);
    }
  }
  const BaseSet bad(2, {LatticeVector{2, 0}, LatticeVector{0, 3}});
  const ConeDescription quadrant(2, {FacetNormal::from_vector({1, 0}), FacetNormal::from_vector({0, 1})});
  const DegreeCheck r = check_normality(bad, quadrant, 3);
  CHECK_FALSE(r.pass);
  REQUIRE(r.failing_degree);
  CHECK(*r.failing_degree <= 3);
}

TEST_CASE("canonical shift") {
  const std::vector<FamilyParams> single{{4, 1, 0}};
  CHECK(check_canonical_shift(build_cone(single, 4), 4).pass);
  const std::vector<FamilyParams> pair{{4, 2, 0}, {4, 2, 1}};
  CHECK(check_canonical_shift(build_cone(pair, 4), 3).pass);

  // The quadrant is smooth, so its interior is (1,1) + cone.
  const ConeDescription quadrant(2, {FacetNormal::from_vector({1, 0}), FacetNormal::from_vector({0, 1})});
  CHECK(check_canonical_shift(quadrant, 4).pass);
}

TEST_CASE("gorenstein symmetry") {
  CHECK(check_gorenstein_symmetry(make_h({1, 6, 1}, 3)));
  CHECK(check_gorenstein_symmetry(make_h({1, 0}, 2)));
  CHECK_FALSE(check_gorenstein_symmetry(make_h({1, 2, 0, 1}, 4)));
}

TEST_CASE("compute_hilbert bundles the data") {
  const HilbertData d = compute_hilbert(family(3, 1, 0), 3);
  CHECK(d.values == std::vector<long long>{1, 9, 25, 49});
  CHECK(d.h.h == std::vector<long long>{1, 6, 1});
  CHECK(d.a_invariant == -1);
  CHECK(d.gorenstein_symmetric);

  // A request below n is raised to n so the h-vector is determined.
  CHECK(compute_hilbert(family(4, 2, 0), 1).values.size() == 5);
}

TEST_CASE("hilbert values agree with the oracle on small intersections") {
  const BaseSet c = family(4, 2, 0).intersect(family(4, 2, 1));
  const oracle::PointSet gens = as_points(c.points());
  const auto values = hilbert_values(c, 4);
  for (int d = 0; d <= 4; ++d) {
    CHECK(values[d] == static_cast<long long>(oracle::sums(gens, 4, d).size()));
  }
}
