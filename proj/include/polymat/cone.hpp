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

// H-descriptions of the cones spanned by (intersections of) family base
// sets, their lattice sections by degree, and facet verification.

#ifndef POLYMAT_CONE_HPP_
#define POLYMAT_CONE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "polymat/core.hpp"

namespace polymat {

// The cone { x : <a, x> >= 0 for every normal a }, normals kept in primitive
// form, deduplicated and sorted lexicographically by primitive vector.
class ConeDescription {
 public:
  ConeDescription() = default;
  ConeDescription(int n, std::vector<FacetNormal> normals);

  int n() const { return n_; }
  const std::vector<FacetNormal>& normals() const { return normals_; }

  // The same cone description with normal `index` dropped.
  ConeDescription without(std::size_t index) const;
  // The description with one more halfspace (kept even if redundant).
  ConeDescription with(FacetNormal extra) const;

 private:
  int n_ = 0;
  std::vector<FacetNormal> normals_;
};

struct DegreeSection {
  int degree = 0;
  std::vector<LatticeVector> points;  // sorted ascending
};

// Window normals of every family plus the n coordinate normals. Throws
// InvalidParameter if a family does not live on [n] or families is empty.
ConeDescription build_cone(std::span<const FamilyParams> families, int n);

// <primitive(normal), v>. Throws InvalidInput on a dimension mismatch.
long long evaluate(const FacetNormal& normal, const LatticeVector& v);
long long evaluate(const FacetNormal& normal, std::span<const int> v);

// Lattice points of N^n with |alpha| = degree * n on the cone.
DegreeSection cone_section(const ConeDescription& cone, int degree);

// Number of integer points alpha with |alpha| = total and every normal >= 0,
// where coordinates not fenced by a coordinate normal e_k may drop down to
// -slack. With slack = 0 this counts the N^n section at level `total`.
std::size_t relaxed_section_size(const ConeDescription& cone, int total, int slack);

// Rank over Q by fraction-free (Bareiss) elimination in arbitrary precision.
int rank_exact(std::span<const LatticeVector> vectors);
int rank_exact(const std::vector<std::vector<long long>>& rows);

struct NormalCheck {
  FacetNormal normal;
  bool nonnegative = false;         // every generator evaluates >= 0
  int hyperplane_rank = 0;          // rank of generators with <a, g> = 0
  bool facet_rank = false;          // hyperplane_rank == n - 1
  std::optional<int> witness_degree;  // smallest d at which dropping a enlarges the section
  bool irredundant() const { return witness_degree.has_value(); }
  bool pass() const { return nonnegative && facet_rank && irredundant(); }
};

struct FacetReport {
  std::vector<NormalCheck> normals;
  bool pass() const;
};

// For every normal: generators on its side, generators on its hyperplane of
// rank n-1, and a degree d <= 2 (escalating to 3) at which dropping it
// strictly enlarges the section.
FacetReport verify_facets(const ConeDescription& cone, const DegreeSection& generators);

inline constexpr int kIrredundancyDegree = 2;
inline constexpr int kIrredundancyEscalation = 3;

}  // namespace polymat

#endif  // POLYMAT_CONE_HPP_
