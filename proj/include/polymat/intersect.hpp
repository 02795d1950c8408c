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

// When is A n B, for A = family(n, i1, 0) and B = family(n, i2, t2), again the
// base set of a transversal polymatroid? `decide` answers with the five
// conditions a)-e) on (i1, i2, t2) and `witness` builds the presentation.
//
// Witness constructions, with P = [i1], W = sigma^t2[i2], F = [n] and
// positions listed as C_lo..C_hi:
//
//   identical  t2 = 0, i1 = i2: the family presentation itself.
//   a.1  i1 = 1, t2 = 0, i2 > 1: as b.2.
//   a.2  i1 = 1, t2 > 0, i2 + t2 <= n, i2 not in {n-2, n-3}:
//          C_1, C_n = F\W; C_2..C_{i2+2} = F\{1}; C_{i2+3}..C_{n-1} = F\({1} u W)
//   a.3  i1 = 1, t2 > 0, i2 + t2 <= n, i2 = n-2:
//          C_1 = F\W; C_n = F; C_2..C_{n-1} = F\{1}
//   a.4  i1 = 1, t2 > 0, i2 + t2 <= n, i2 = n-3:
//          C_1, C_n = F\W; C_2..C_{n-1} = F\{1}
//   a.5  i1 = 1, t2 > 0, i2 + t2 > n:
//          C_1, C_n = F; C_2..C_{n-i2} = F\W; C_{n-i2+1}..C_{n-1} = F\{1}
//   b.1  t2 = 0, i2 <= i1: C_1..C_{i2}, C_n = F; C_{i2+1}..C_{i1} = F\[i2];
//          C_{i1+1}..C_{n-1} = F\P
//   b.2  t2 = 0, i2 > i1: C_1..C_{i1}, C_n = F; C_{i1+1}..C_{i2} = F\P;
//          C_{i2+1}..C_{n-1} = F\[i2]
//   c.1  t2 = i1, i2 + t2 < n-1: as e.1 (F\(P u W) = F\[i1+i2])
//   c.2  t2 = i1, i2 + t2 = n-1: as e.2
//   c.3  t2 = i1, i2 + t2 >= n:  as d.2
//   d.1  1 <= t2 < i1, i2 + t2 <= i1: C_1..C_{i2}, C_n = F;
//          C_{i2+1}..C_{i1} = F\W; C_{i1+1}..C_{n-1} = F\P
//   d.2  1 <= t2 < i1, i2 + t2 > i1: C_1..C_{n-i2-1} = F\W;
//          C_{n-i2}..C_{i1}, C_n = F; C_{i1+1}..C_{n-1} = F\P
//   e.1  t2 > i1, i2 + t2 <= n, i1 + 1 + i2 != n: C_1..C_{i1}, C_n = F\W;
//          C_{i1+1}..C_{i1+i2+1} = F\P; C_{i1+i2+2}..C_{n-1} = F\(P u W)
//   e.2  t2 > i1, i2 + t2 <= n, i1 + 1 + i2 = n: C_1..C_{i1} = F\W;
//          C_{i1+1}..C_{n-1} = F\P; C_n = F
//   e.3  t2 > i1, i2 + t2 > n: C_1..C_{i1}, C_n = F;
//          C_{i1+1}..C_{i1+n-i2-1} = F\W; C_{i1+n-i2}..C_{n-1} = F\P

#ifndef POLYMAT_INTERSECT_HPP_
#define POLYMAT_INTERSECT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polymat/core.hpp"
#include "polymat/polymatroid.hpp"

namespace polymat {

// A pair of family windows normalized to t1 = 0.
struct PairParams {
  int n = 0;
  int i1 = 0;
  int i2 = 0;
  int t2 = 0;

  // 1 <= i1, i2 <= n-2 and 0 <= t2 <= n-1.
  void validate() const;
  FamilyParams first() const { return {n, i1, 0}; }
  FamilyParams second() const { return {n, i2, t2}; }

  friend bool operator==(const PairParams&, const PairParams&) = default;
  friend auto operator<=>(const PairParams&, const PairParams&) = default;
};

// Rotates both windows by -t1 so that the first one starts at 1.
PairParams normalize_pair(const FamilyParams& first, const FamilyParams& second);

enum class Condition { kA, kB, kC, kD, kE, kNone };

// "a".."e" or "none".
std::string to_string(Condition c);

struct DecisionOutcome {
  bool is_base_ring = false;
  Condition condition = Condition::kNone;
  std::optional<Presentation> witness;
  std::string lemma_case;  // construction label, see the table above
};

// {alpha : |alpha| = n, sum over [i1] <= i1+1, sum over W <= i2+1}.
BaseSet intersection_base_set(const PairParams& p);

// Which condition holds, checked in the order a, b, c, d, e.
Condition matching_condition(const PairParams& p);

DecisionOutcome decide(const PairParams& p);

// The construction label for a yes-instance. Throws ContractError otherwise.
std::string witness_case(const PairParams& p);

// Throws ContractError on a no-instance.
Presentation witness(const PairParams& p);

// enumerate_bases(witness(p)) == intersection_base_set(p).
bool verify_witness(const PairParams& p);

// Sum over blocks of "all monomials of degree e in the variables of S".
// Throws InvalidInput on a negative exponent.
BaseSet expand_monomial_family(int n, const std::vector<std::pair<IndexSet, int>>& blocks);

// The explicit generator family (a union of block products over the two
// level parameters) describing the witness's base set, or nullopt for the
// identical-window case.
std::optional<BaseSet> witness_monomial_family(const PairParams& p);

struct SweepEntry {
  PairParams params;
  bool decided = false;     // decide(p).is_base_ring
  bool recognized = false;  // recognize_transversal(A n B).transversal
  std::string condition;
  std::string lemma_case;
  bool witness_ok = true;   // verify_witness(p), yes-instances only
  bool agrees() const { return decided == recognized && witness_ok; }
};

struct SweepReport {
  int n = 0;
  std::vector<SweepEntry> entries;  // ordered by (i1, i2, t2)
  int disagreements() const;
  int witness_failures() const;
  int yes_instances() const;
};

inline constexpr int kMaxSweepSize = 5;

// Every (i1, i2, t2) for this n: decide vs recognize_transversal, and each
// yes-witness re-enumerated. Work is spread over `jobs` threads; the report
// order does not depend on it. Throws CapacityError if n > max_n.
SweepReport sweep_theorem(int n, int jobs = 1, int max_n = kMaxSweepSize);

}  // namespace polymat

#endif  // POLYMAT_INTERSECT_HPP_
