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

#include "oracles.hpp"
#include "polymat/core.hpp"
#include "polymat/error.hpp"
#include "polymat/intersect.hpp"
#include "polymat/polymatroid.hpp"

using namespace polymat;

namespace {

oracle::PointSet as_points(const BaseSet& b) {
  oracle::PointSet out;
  for (const auto& v : b.points()) out.emplace(v.coords().begin(), v.coords().end());
  return out;
}

BaseSet from_points(int n, const oracle::PointSet& pts) {
  std::vector<LatticeVector> v;
  for (const auto& p : pts) v.emplace_back(p);
  return BaseSet(n, v);
}

std::vector<std::vector<int>> lists(const Presentation& p) {
  std::vector<std::vector<int>> out;
  for (const auto& s : p.sets()) out.push_back(s.members());
  return out;
}

Presentation random_presentation(int n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint64_t> mask(1, (1ULL << n) - 1);
  std::vector<IndexSet> sets;
  for (int k = 0; k < n; ++k) sets.emplace_back(n, mask(rng));
  return Presentation(n, sets);
}

}  // namespace

TEST_CASE("singletons give the all-ones point") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<IndexSet> sets;
    for (int j = 1; j <= n; ++j) sets.push_back(IndexSet(n, 1ULL << (j - 1)));
    const BaseSet b = enumerate_bases(Presentation(n, sets));
    REQUIRE(b.size() == 1);
    CHECK(b.points().front() == LatticeVector::all_ones(n));
  }
}

TEST_CASE("base sets of the (4,1,t) families") {
  const BaseSet a = enumerate_bases(family_presentation({4, 1, 0}));
  CHECK(a.size() == 31);
  CHECK(as_points(a) == oracle::window_description(4, {{1, 0}}));

  const BaseSet c = a.intersect(enumerate_bases(family_presentation({4, 1, 1})));
  CHECK(c.size() == 27);
  CHECK(as_points(c) == oracle::window_description(4, {{1, 0}, {1, 1}}));
  CHECK(enumerate_bases(Presentation::from_lists(4, {{1, 3, 4}, {2, 3, 4}, {2, 3, 4}, {1, 3, 4}})) == c);
}

TEST_CASE("enumeration agrees with the product oracle") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const Presentation p = random_presentation(n, rng);
    CHECK(as_points(enumerate_bases(p)) == oracle::product_bases(n, lists(p)));
  }
}

TEST_CASE("base set bookkeeping") {
  const BaseSet b(3, {LatticeVector{0, 1, 2}, LatticeVector{1, 1, 1}, LatticeVector{0, 1, 2}});
  CHECK(b.size() == 2);
  CHECK(b.points().front() == LatticeVector{0, 1, 2});
  CHECK(b.uniform_modulus() == 3);
  CHECK(b.contains(LatticeVector{1, 1, 1}));
  CHECK_FALSE(b.contains(LatticeVector{3, 0, 0}));
  CHECK_FALSE(BaseSet(2, {LatticeVector{1, 0}, LatticeVector{1, 1}}).uniform_modulus());
}

TEST_CASE("exchange axiom") {
  CHECK(check_base_exchange(BaseSet(4, {LatticeVector{1, 1, 1, 1}})).pass);

  const ExchangeResult bad = check_base_exchange(BaseSet(2, {LatticeVector{2, 0}, LatticeVector{0, 2}}));
  REQUIRE_FALSE(bad.pass);
  CHECK(bad.violation->u == LatticeVector{2, 0});
  CHECK(bad.violation->v == LatticeVector{0, 2});
  CHECK(bad.violation->index == 1);

  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i <= n - 2; ++i) {
      for (int t = 0; t < n; ++t) {
        CHECK(check_base_exchange(enumerate_bases(family_presentation({n, i, t}))).pass);
      }
    }
  }
  CHECK_THROWS(check_base_exchange(BaseSet(2, {})));
  CHECK_THROWS(check_base_exchange(BaseSet(2, {LatticeVector{1, 0}, LatticeVector{1, 1}})));
}

TEST_CASE("rank function") {
  const BaseSet ones(4, {LatticeVector{1, 1, 1, 1}});
  CHECK(rank_of(ones, IndexSet(4, {1, 3})) == 2);
  const BaseSet a = enumerate_bases(family_presentation({4, 1, 0}));
  CHECK(rank_of(a, IndexSet(4, {1})) == 2);
  CHECK(rank_of(a, IndexSet(4, {2, 3, 4})) == 4);
  CHECK(rank_of(a, IndexSet::empty(4)) == 0);
}

TEST_CASE("recognition of small transversal sets") {
  const RecognitionResult ones = recognize_transversal(BaseSet(4, {LatticeVector{1, 1, 1, 1}}));
  REQUIRE(ones.transversal);
  CHECK(lists(*ones.witness) == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});

  const RecognitionResult ex1 = recognize_transversal(intersection_base_set({4, 1, 1, 1}));
  REQUIRE(ex1.transversal);
  CHECK(lists(*ex1.witness) ==
        std::vector<std::vector<int>>{{1, 3, 4}, {1, 3, 4}, {2, 3, 4}, {2, 3, 4}});

  const RecognitionResult ex2 = recognize_transversal(intersection_base_set({4, 2, 2, 1}));
  CHECK_FALSE(ex2.transversal);
  REQUIRE(ex2.certificate);
  CHECK_FALSE(ex2.certificate->describe().empty());
}

TEST_CASE("exhaustive search agrees on (4,1,1,1) and (4,2,2,1)") {
  CHECK(exhaustive_recognize(intersection_base_set({4, 1, 1, 1})).transversal);
  const RecognitionResult ex2 = exhaustive_recognize(intersection_base_set({4, 2, 2, 1}));
  CHECK_FALSE(ex2.transversal);
  REQUIRE(ex2.certificate);
  CHECK(ex2.certificate->kind == RecognitionCertificate::Kind::kNoCandidate);
  CHECK(exhaustive_recognize(BaseSet(4, {LatticeVector{1, 1, 1, 1}})).transversal);
}

TEST_CASE("recognition round trips random presentations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 5;
    const Presentation p = random_presentation(n, rng);
    const BaseSet b = enumerate_bases(p);
    const RecognitionResult r = recognize_transversal(b);
    REQUIRE(r.transversal);
    CHECK(enumerate_bases(*r.witness) == b);
  }
}

TEST_CASE("both recognizers agree on random intersections") {
  std::mt19937 rng(11);
  int negatives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 2;
    const BaseSet b = enumerate_bases(random_presentation(n, rng))
                          .intersect(enumerate_bases(random_presentation(n, rng)));
    if (b.empty()) continue;
    const bool fast = recognize_transversal(b).transversal;
    CHECK(fast == exhaustive_recognize(b).transversal);
    if (!fast) ++negatives;
  }
  CHECK(negatives > 0);
}

TEST_CASE("non-transversal certificates") {
  // (2,0),(0,2) is not even a polymatroid base set.
  const RecognitionResult r = recognize_transversal(BaseSet(2, {LatticeVector{2, 0}, LatticeVector{0, 2}}));
  CHECK_FALSE(r.transversal);
  REQUIRE(r.certificate);
}

TEST_CASE("recognition preconditions") {
  CHECK_THROWS(recognize_transversal(BaseSet(3, {LatticeVector{1, 1, 0}})));
  const BaseSet big(6, {LatticeVector{1, 1, 1, 1, 1, 1}});
  CHECK(recognize_transversal(big).transversal);
  CHECK_THROWS_AS(exhaustive_recognize(big), CapacityError);
}

TEST_CASE("mismatched points are flagged in the certificate") {
  // A transversal set minus one point keeps the rank function in some cases;
  // the enumeration step must then catch it.
  const BaseSet full = enumerate_bases(family_presentation({4, 1, 0}));
  std::vector<LatticeVector> pts(full.points().begin(), full.points().end());
  pts.erase(std::find(pts.begin(), pts.end(), LatticeVector{1, 1, 1, 1}));
  const RecognitionResult r = recognize_transversal(BaseSet(4, pts));
  CHECK_FALSE(r.transversal);
  REQUIRE(r.certificate);
  CHECK(r.certificate->kind == RecognitionCertificate::Kind::kEnumerationMismatch);
  CHECK(r.certificate->missing.empty());
  CHECK(r.certificate->extra == std::vector<LatticeVector>{LatticeVector{1, 1, 1, 1}});
}
