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

// Base sets of transversal polymatroids: enumeration from a presentation,
// the discrete base-exchange axiom, rank functions and recognition of
// transversal base sets.

#ifndef POLYMAT_POLYMATROID_HPP_
#define POLYMAT_POLYMATROID_HPP_

#include <optional>
#include <string>
#include <vector>

#include "polymat/core.hpp"

namespace polymat {

// A deduplicated, lexicographically sorted set of lattice vectors in N^n.
class BaseSet {
 public:
  BaseSet() = default;
  // Sorts and deduplicates. Throws InvalidInput on a dimension mismatch.
  BaseSet(int n, std::vector<LatticeVector> points);

  int n() const { return n_; }
  const std::vector<LatticeVector>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const LatticeVector& v) const;

  // The common modulus, or nullopt when the set is empty or mixed.
  std::optional<int> uniform_modulus() const;

  BaseSet intersect(const BaseSet& other) const;

  friend bool operator==(const BaseSet&, const BaseSet&) = default;

 private:
  int n_ = 0;
  std::vector<LatticeVector> points_;
};

// { sum_k e_{j_k} : j_k in P[k] }.
BaseSet enumerate_bases(const Presentation& p);

struct ExchangeViolation {
  LatticeVector u;
  LatticeVector v;
  int index = 0;  // 1-indexed a with u_a > v_a and no repairing b
};

struct ExchangeResult {
  bool pass = true;
  std::optional<ExchangeViolation> violation;
};

// Checks: for all u, v in B and a with u_a > v_a there is b with u_b < v_b and
// u - e_a + e_b in B. Scans u and v in descending lexicographic order and a
// ascending; reports the first violation. Throws InvalidInput on an empty
// set or mixed moduli.
ExchangeResult check_base_exchange(const BaseSet& b);

// max over alpha in B of sum_{j in S} alpha_j; 0 for an empty B.
int rank_of(const BaseSet& b, const IndexSet& s);

struct RecognitionCertificate {
  enum class Kind {
    kNegativeMultiplicity,   // some m(T) < 0
    kEmptySetMultiplicity,   // m({}) != 0
    kTotalMismatch,          // sum of m(T) != n
    kEnumerationMismatch,    // candidate enumerates to a different set
    kNoCandidate,            // exhaustive search found nothing
  };
  Kind kind = Kind::kNoCandidate;
  std::optional<IndexSet> subset;  // offending T, when applicable
  int value = 0;                   // m(T) or the total
  std::vector<LatticeVector> missing;  // in B but not produced by the candidate
  std::vector<LatticeVector> extra;    // produced by the candidate but not in B

  std::string describe() const;
};

struct RecognitionResult {
  bool transversal = false;
  std::optional<Presentation> witness;  // canonical form
  std::optional<RecognitionCertificate> certificate;
};

// Reconstructs the candidate multiset of presentation sets from the rank
// function (f(T) = n - rank([n] \ T) counts sets contained in T, Moebius
// inversion gives multiplicities) and confirms it by re-enumeration.
// Requires every point to have modulus n; n <= 20.
RecognitionResult recognize_transversal(const BaseSet& b);

// Independent oracle: pruned search over multisets of n nonempty subsets of
// [n] whose per-element counts match rank_of(B, {j}). n <= 5.
RecognitionResult exhaustive_recognize(const BaseSet& b);

inline constexpr int kMaxRecognitionSize = 20;
inline constexpr int kMaxExhaustiveSize = 5;

}  // namespace polymat

#endif  // POLYMAT_POLYMATROID_HPP_
