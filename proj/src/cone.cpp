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

#include "polymat/cone.hpp"

#include <algorithm>
#include <limits>
#include <boost/multiprecision/cpp_int.hpp>

#include "polymat/error.hpp"

namespace polymat {
namespace {

using BigInt = boost::multiprecision::cpp_int;

// Index k if `primitive` is e_{k+1}, otherwise -1.
int coordinate_index(const std::vector<int>& primitive) {
  int found = -1;
  for (std::size_t k = 0; k < primitive.size(); ++k) {
    if (primitive[k] == 0) continue;
    if (primitive[k] != 1 || found >= 0) return -1;
    found = static_cast<int>(k);
  }
  return found;
}

}  // namespace

ConeDescription::ConeDescription(int n, std::vector<FacetNormal> normals)
    : n_(n), normals_(std::move(normals)) {
  for (const auto& a : normals_) {
    if (a.dimension() != n) throw InvalidInput("normal dimension does not match the cone");
  }
  std::sort(normals_.begin(), normals_.end(),
            [](const FacetNormal& a, const FacetNormal& b) { return a.primitive < b.primitive; });
  normals_.erase(std::unique(normals_.begin(), normals_.end(),
                             [](const FacetNormal& a, const FacetNormal& b) {
                               return a.primitive == b.primitive;
                             }),
                 normals_.end());
}

ConeDescription ConeDescription::without(std::size_t index) const {
  ConeDescription out = *this;
  out.normals_.erase(out.normals_.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

ConeDescription ConeDescription::with(FacetNormal extra) const {
  auto normals = normals_;
  normals.push_back(std::move(extra));
  return ConeDescription(n_, std::move(normals));
}

ConeDescription build_cone(std::span<const FamilyParams> families, int n) {
  if (families.empty()) throw InvalidParameter("build_cone needs at least one family");
  std::vector<FacetNormal> normals;
  for (const auto& p : families) {
    if (p.n != n) {
      throw InvalidParameter("family on [" + std::to_string(p.n) + "] does not match n=" +
                             std::to_string(n));
    }
    p.validate();
    normals.push_back(nu_vector(p.n, p.t, p.i));
  }
  // nu of sigma^k[n-1] is n * e_{sigma^k(n)}: the coordinate normals.
  for (int k = 0; k < n; ++k) normals.push_back(nu_vector(n, k, n - 1));
  return ConeDescription(n, std::move(normals));
}

long long evaluate(const FacetNormal& normal, std::span<const int> v) {
  if (static_cast<int>(v.size()) != normal.dimension()) {
    throw InvalidInput("evaluate: dimension mismatch");
  }
  long long total = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    total += static_cast<long long>(normal.primitive[k]) * v[k];
  }
  return total;
}

long long evaluate(const FacetNormal& normal, const LatticeVector& v) {
  return evaluate(normal, v.coords());
}

namespace {

// Calls visit(y) for every shifted point y = x + slack * 1_free in N^n.
template <typename Visit>
void for_each_section_point(const ConeDescription& cone, int total, int slack, Visit&& visit) {
  const int n = cone.n();
  if (n == 0 || total < 0) return;

  std::vector<bool> fenced(static_cast<std::size_t>(n), false);
  for (const auto& a : cone.normals()) {
    if (int k = coordinate_index(a.primitive); k >= 0) fenced[static_cast<std::size_t>(k)] = true;
  }
  // Shift free coordinates by `slack` so that the search runs over N^n:
  // y = x + slack * 1_free, |y| = total + slack * #free.
  std::vector<int> offset(static_cast<std::size_t>(n), 0);
  int shifted_total = total;
  for (int k = 0; k < n; ++k) {
    if (!fenced[static_cast<std::size_t>(k)]) {
      offset[static_cast<std::size_t>(k)] = slack;
      shifted_total += slack;
    }
  }

  const std::size_t m = cone.normals().size();
  // base[a] = <a, -offset>, the value of normal a at y = 0.
  std::vector<long long> base(m, 0);
  // suffix_max[a][k] = max_{j >= k} a_j, bounding what the tail can add.
  std::vector<std::vector<long long>> suffix_max(m, std::vector<long long>(n + 1, 0));
  for (std::size_t a = 0; a < m; ++a) {
    const auto& p = cone.normals()[a].primitive;
    for (int k = 0; k < n; ++k) base[a] -= static_cast<long long>(p[static_cast<std::size_t>(k)]) * offset[static_cast<std::size_t>(k)];
    long long best = std::numeric_limits<long long>::min();
    for (int k = n - 1; k >= 0; --k) {
      best = std::max(best, static_cast<long long>(p[static_cast<std::size_t>(k)]));
      suffix_max[a][static_cast<std::size_t>(k)] = best;
    }
  }

  std::vector<int> y(static_cast<std::size_t>(n), 0);
  std::vector<long long> partial(base);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    for (std::size_t a = 0; a < m; ++a) {
      // Distribute all of `remaining` onto the best remaining coordinate.
      if (partial[a] + remaining * suffix_max[a][static_cast<std::size_t>(pos)] < 0) return;
    }
    if (pos == n - 1) {
      y[static_cast<std::size_t>(pos)] = remaining;
      for (std::size_t a = 0; a < m; ++a) {
        if (partial[a] + static_cast<long long>(cone.normals()[a].primitive[static_cast<std::size_t>(pos)]) * remaining < 0) return;
      }
      visit(y);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      y[static_cast<std::size_t>(pos)] = v;
      for (std::size_t a = 0; a < m; ++a) {
        partial[a] += static_cast<long long>(cone.normals()[a].primitive[static_cast<std::size_t>(pos)]) * v;
      }
      self(self, pos + 1, remaining - v);
      for (std::size_t a = 0; a < m; ++a) {
        partial[a] -= static_cast<long long>(cone.normals()[a].primitive[static_cast<std::size_t>(pos)]) * v;
      }
    }
  };
  rec(rec, 0, shifted_total);
}

}  // namespace

std::size_t relaxed_section_size(const ConeDescription& cone, int total, int slack) {
  std::size_t count = 0;
  for_each_section_point(cone, total, slack, [&](const std::vector<int>&) { ++count; });
  return count;
}

DegreeSection cone_section(const ConeDescription& cone, int degree) {
  if (degree < 0) throw InvalidParameter("degree must be nonnegative");
  DegreeSection s;
  s.degree = degree;
  for_each_section_point(cone, degree * cone.n(), 0,
                         [&](const std::vector<int>& y) { s.points.emplace_back(y); });
  return s;
}

int rank_exact(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<BigInt>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidInput("rank_exact: rows of unequal length");
    m.emplace_back(r.begin(), r.end());
  }
  // Bareiss: after step k every entry of the trailing block is a (k+1)-minor,
  // so the division by the previous pivot is exact.
  BigInt previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / previous;
      }
      m[r][col] = 0;
    }
    previous = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_exact(std::span<const LatticeVector> vectors) {
  std::vector<std::vector<long long>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.emplace_back(v.coords().begin(), v.coords().end());
  return rank_exact(rows);
}

bool FacetReport::pass() const {
  return !normals.empty() &&
         std::all_of(normals.begin(), normals.end(), [](const NormalCheck& c) { return c.pass(); });
}

FacetReport verify_facets(const ConeDescription& cone, const DegreeSection& generators) {
  const int n = cone.n();
  FacetReport report;
  std::vector<std::size_t> base_sizes;
  for (int d = 1; d <= kIrredundancyEscalation; ++d) {
    base_sizes.push_back(relaxed_section_size(cone, d * n, 0));
  }
  for (std::size_t idx = 0; idx < cone.normals().size(); ++idx) {
    const FacetNormal& a = cone.normals()[idx];
    NormalCheck check;
    check.normal = a;
    check.nonnegative = true;
    std::vector<LatticeVector> on_hyperplane;
    for (const auto& g : generators.points) {
      const long long value = evaluate(a, g);
      if (value < 0) check.nonnegative = false;
      if (value == 0) on_hyperplane.push_back(g);
    }
    check.hyperplane_rank = rank_exact(on_hyperplane);
    check.facet_rank = check.hyperplane_rank == n - 1;

    // Dropping a only admits points with <a, x> < 0. Coordinates no longer
    // fenced may go negative; the search window for them is d * n.
    const ConeDescription reduced = cone.without(idx);
    for (int d = 1; d <= kIrredundancyEscalation; ++d) {
      if (relaxed_section_size(reduced, d * n, d * n) > base_sizes[static_cast<std::size_t>(d - 1)]) {
        check.witness_degree = d;
        break;
      }
    }
    report.normals.push_back(std::move(check));
  }
  return report;
}

}  // namespace polymat
