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

// Ground types shared by every module: index sets over [n], presentations,
// lattice vectors, and the cyclic window combinatorics of the Gorenstein
// presentation family.
//
// Ground elements are 1-indexed in every public signature. The cyclic shift
// sigma is fixed as sigma(k) = k + 1 for k < n and sigma(n) = 1, so
// sigma^t(k) = ((k + t - 1) mod n) + 1.

#ifndef POLYMAT_CORE_HPP_
#define POLYMAT_CORE_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polymat {

// Largest ground set an IndexSet bitmask can hold.
inline constexpr int kMaxGroundSize = 62;

// (n, i, t): ground-set size, window length and rotation offset.
struct FamilyParams {
  int n = 0;
  int i = 0;
  int t = 0;

  // Throws InvalidParameter unless 1 <= i <= n-1, 0 <= t <= n-1, n >= 2.
  void validate() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
  friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

// sigma^t(k) for 1 <= k <= n.
inline int sigma_power(int n, int t, int k) { return ((k + t - 1) % n + n) % n + 1; }

// A subset of [n], stored as a bitmask (bit j-1 set iff j is a member).
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int n, std::uint64_t mask);
  IndexSet(int n, std::initializer_list<int> members);
  static IndexSet from_members(int n, std::span<const int> members);
  static IndexSet full(int n);
  static IndexSet empty(int n) { return IndexSet(n, 0); }
  // {lo, ..., hi} (1-indexed, inclusive); empty when lo > hi.
  static IndexSet range(int n, int lo, int hi);

  int ground_size() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int j) const { return j >= 1 && j <= n_ && ((mask_ >> (j - 1)) & 1U); }
  bool is_empty() const { return mask_ == 0; }
  int size() const;
  // Ascending, 1-indexed.
  std::vector<int> members() const;

  IndexSet complement() const;
  IndexSet operator|(const IndexSet& other) const;
  IndexSet operator&(const IndexSet& other) const;
  // Set difference.
  IndexSet operator-(const IndexSet& other) const;

  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  // Orders by ground size, then by ascending member list lexicographically.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b);

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

// An ordered list of exactly n nonempty subsets of [n].
class Presentation {
 public:
  Presentation() = default;
  // Throws InvalidInput if sets.size() != n, a set is empty, or a set lives on
  // a different ground size.
  Presentation(int n, std::vector<IndexSet> sets);
  // Convenience: each inner list is a 1-indexed member list.
  static Presentation from_lists(int n, const std::vector<std::vector<int>>& sets);

  int n() const { return n_; }
  const std::vector<IndexSet>& sets() const { return sets_; }
  const IndexSet& operator[](std::size_t k) const { return sets_[k]; }

  // Sets sorted by the IndexSet total order; two presentations describe the
  // same multiset iff their canonical forms compare equal.
  Presentation canonical() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  int n_ = 0;
  std::vector<IndexSet> sets_;
};

// A nonnegative integer vector; an exponent vector / polymatroid base point.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<int> coords);
  LatticeVector(std::initializer_list<int> coords);
  static LatticeVector zero(int n) { return LatticeVector(std::vector<int>(n, 0)); }
  static LatticeVector all_ones(int n) { return LatticeVector(std::vector<int>(n, 1)); }
  // e_j, 1-indexed.
  static LatticeVector unit(int n, int j);

  int dimension() const { return static_cast<int>(coords_.size()); }
  int modulus() const;
  std::span<const int> coords() const { return coords_; }
  int operator[](std::size_t k) const { return coords_[k]; }
  // 1-indexed coordinate access.
  int at(int j) const { return coords_.at(j - 1); }
  // Sum of the coordinates indexed by s.
  int sum_over(const IndexSet& s) const;

  LatticeVector operator+(const LatticeVector& other) const;

  std::string to_string() const;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::vector<int> coords_;
};

// The window sigma^t[i] = {t+1, ..., t+i} (cyclically in [n]) together with
// its bound i+1.
struct CyclicWindow {
  int n = 0;
  int t = 0;
  int i = 0;
  int bound = 0;

  IndexSet members() const;
  // The wrapping form applies exactly when i + t > n.
  bool wraps() const { return i + t > n; }
  int sum(const LatticeVector& v) const;
  bool admits(const LatticeVector& v) const { return sum(v) <= bound; }
};

// nu with its divisor d = gcd of the entries of nu (for the family normals
// this is gcd(n, i+1)) and the primitive vector nu / d.
struct FacetNormal {
  std::vector<int> nu;
  int divisor = 1;
  std::vector<int> primitive;

  static FacetNormal from_vector(std::vector<int> nu);
  int dimension() const { return static_cast<int>(nu.size()); }

  friend bool operator==(const FacetNormal&, const FacetNormal&) = default;
};

// sigma^t[i] as an index set.
IndexSet sigma_window(int n, int t, int i);

// The n-set presentation with [n] at positions sigma^t(k), k in [i] u {n},
// and [n] \ sigma^t[i] elsewhere. Requires n >= 3.
Presentation family_presentation(const FamilyParams& p);

// -(n-i-1) on sigma^t[i], (i+1) off it.
FacetNormal nu_vector(int n, int t, int i);

CyclicWindow membership_window(const FamilyParams& p);

// Relabels ground elements j -> sigma^s(j) and moves the set at position k
// to position sigma^s(k).
Presentation rotate_presentation(const Presentation& p, int shift);

// Same relabeling applied to a single vector: coordinate j moves to sigma^s(j).
LatticeVector rotate_vector(const LatticeVector& v, int shift);

// Weak compositions of `total` into n parts, in lexicographically ascending
// order.
std::vector<LatticeVector> weak_compositions(int n, int total);

}  // namespace polymat

#endif  // POLYMAT_CORE_HPP_
