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

// Hilbert functions of the semigroup rings K[G] spanned by a generator set G,
// their h-vectors and a-invariants, plus the normality, canonical-module and
// symmetry checks that certify the Gorenstein property.

#ifndef POLYMAT_HILBERT_HPP_
#define POLYMAT_HILBERT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polymat/cone.hpp"
#include "polymat/core.hpp"
#include "polymat/polymatroid.hpp"

namespace polymat {

// Lexicographic ranking of weak compositions of `total` into n parts.
class CompositionIndex {
 public:
  CompositionIndex(int n, int total);

  int parts() const { return n_; }
  int total() const { return total_; }
  std::uint64_t size() const { return size_; }
  // Number of compositions lexicographically smaller than c. c must be a
  // composition of total() into parts() parts.
  std::uint64_t rank(std::span<const int> c) const;

 private:
  int n_;
  int total_;
  std::uint64_t size_;
  // less_[p][r][c]: compositions of r into p parts whose first part is < c.
  std::vector<std::uint64_t> less_;
  std::uint64_t& less(int p, int r, int c);
  std::uint64_t less(int p, int r, int c) const;
};

// C(n, k) in 64 bits; throws CapacityError on overflow.
std::uint64_t binomial(int n, int k);

// All sums of exactly d generators (with repetition), sorted.
std::vector<LatticeVector> semigroup_section(const BaseSet& gens, int d);

// |semigroup_section(gens, d)|.
long long hilbert_function(const BaseSet& gens, int d);

// H(0), ..., H(max_degree), computed level by level.
std::vector<long long> hilbert_values(const BaseSet& gens, int max_degree);

struct HVector {
  int n = 0;
  std::vector<long long> h;  // h_0 .. h_{n-1}
  long long residual = 0;    // h_n, zero for a numerator of degree <= n-1
  bool consistent() const { return residual == 0; }
};

// h_k = sum_{j<=k} (-1)^{k-j} C(n, k-j) H(j) for k = 0..n; needs H(0..n) with
// H(0) = 1. Throws InvalidInput otherwise.
HVector h_vector(std::span<const long long> values, int n);

// (index of the last nonzero h_k) - n. Throws ContractError on an
// inconsistent h-vector.
int a_invariant(const HVector& h);

// sum_k h_k C(n-1+d-k, n-1): the Hilbert function the h-vector predicts.
long long predicted_hilbert(const HVector& h, int d);

struct DegreeCheck {
  bool pass = true;
  std::optional<int> failing_degree;
};

// semigroup_section(gens, d) == cone_section(cone, d) for 1 <= d <= max_degree.
DegreeCheck check_normality(const BaseSet& gens, const ConeDescription& cone, int max_degree);

// For 1 <= d <= max_degree: the interior points of cone_section(cone, d)
// (every normal >= 1) are exactly (1,...,1) + cone_section(cone, d-1).
DegreeCheck check_canonical_shift(const ConeDescription& cone, int max_degree);

// h_k == h_{s-k} with s the index of the last nonzero coefficient.
bool check_gorenstein_symmetry(const HVector& h);

struct HilbertData {
  int n = 0;
  std::vector<long long> values;  // H(0..max(n, requested))
  HVector h;
  std::optional<int> a_invariant;  // absent when h is inconsistent
  bool gorenstein_symmetric = false;
};

HilbertData compute_hilbert(const BaseSet& gens, int max_degree);

inline constexpr int kDefaultNormalityDegree = 3;
inline constexpr int kDefaultShiftDegree = 4;

}  // namespace polymat

#endif  // POLYMAT_HILBERT_HPP_
