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

#include "polymat/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "polymat/error.hpp"

namespace polymat {
namespace {

void check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw InvalidParameter("ground set size " + std::to_string(n) + " outside [1, " +
                           std::to_string(kMaxGroundSize) + "]");
  }
}

void check_window(int n, int t, int i) {
  if (n < 2) throw InvalidParameter("n must be at least 2, got " + std::to_string(n));
  check_ground_size(n);
  if (i < 1 || i > n - 1) {
    throw InvalidParameter("window length i=" + std::to_string(i) + " outside [1, n-1]");
  }
  if (t < 0 || t > n - 1) {
    throw InvalidParameter("offset t=" + std::to_string(t) + " outside [0, n-1]");
  }
}

std::uint64_t full_mask(int n) { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }

}  // namespace

void FamilyParams::validate() const { check_window(n, t, i); }

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  check_ground_size(n);
  if ((mask & ~full_mask(n)) != 0) throw InvalidInput("index set has members outside [n]");
}

IndexSet::IndexSet(int n, std::initializer_list<int> members)
    : IndexSet(from_members(n, std::span<const int>(members.begin(), members.size()))) {}

IndexSet IndexSet::from_members(int n, std::span<const int> members) {
  check_ground_size(n);
  std::uint64_t mask = 0;
  for (int j : members) {
    if (j < 1 || j > n) {
      throw InvalidInput("element " + std::to_string(j) + " outside [1, " + std::to_string(n) +
                         "]");
    }
    mask |= 1ULL << (j - 1);
  }
  return IndexSet(n, mask);
}

IndexSet IndexSet::full(int n) { return IndexSet(n, full_mask(n)); }

IndexSet IndexSet::range(int n, int lo, int hi) {
  std::uint64_t mask = 0;
  for (int j = std::max(lo, 1); j <= std::min(hi, n); ++j) mask |= 1ULL << (j - 1);
  return IndexSet(n, mask);
}

int IndexSet::size() const { return std::popcount(mask_); }

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int j = 1; j <= n_; ++j) {
    if (contains(j)) out.push_back(j);
  }
  return out;
}

IndexSet IndexSet::complement() const { return IndexSet(n_, ~mask_ & full_mask(n_)); }

IndexSet IndexSet::operator|(const IndexSet& other) const {
  return IndexSet(n_, mask_ | other.mask_);
}

IndexSet IndexSet::operator&(const IndexSet& other) const {
  return IndexSet(n_, mask_ & other.mask_);
}

IndexSet IndexSet::operator-(const IndexSet& other) const {
  return IndexSet(n_, mask_ & ~other.mask_);
}

std::string IndexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int j : members()) {
    if (!first) out << ',';
    out << j;
    first = false;
  }
  out << '}';
  return out.str();
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// ------------------------------------------------------------ Presentation

Presentation::Presentation(int n, std::vector<IndexSet> sets) : n_(n), sets_(std::move(sets)) {
  check_ground_size(n);
  if (static_cast<int>(sets_.size()) != n) {
    throw InvalidInput("presentation on [" + std::to_string(n) + "] needs exactly " +
                       std::to_string(n) + " sets, got " + std::to_string(sets_.size()));
  }
  for (std::size_t k = 0; k < sets_.size(); ++k) {
    if (sets_[k].ground_size() != n) {
      throw InvalidInput("set " + std::to_string(k + 1) + " lives on a different ground set");
    }
    if (sets_[k].is_empty()) {
      throw InvalidInput("set " + std::to_string(k + 1) + " of the presentation is empty");
    }
  }
}

Presentation Presentation::from_lists(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<IndexSet> converted;
  converted.reserve(sets.size());
  for (const auto& s : sets) converted.push_back(IndexSet::from_members(n, s));
  return Presentation(n, std::move(converted));
}

Presentation Presentation::canonical() const {
  auto sorted = sets_;
  std::sort(sorted.begin(), sorted.end());
  return Presentation(n_, std::move(sorted));
}

// ----------------------------------------------------------- LatticeVector

LatticeVector::LatticeVector(std::vector<int> coords) : coords_(std::move(coords)) {
  for (int c : coords_) {
    if (c < 0) throw InvalidInput("lattice vectors must be nonnegative");
  }
}

LatticeVector::LatticeVector(std::initializer_list<int> coords)
    : LatticeVector(std::vector<int>(coords)) {}

LatticeVector LatticeVector::unit(int n, int j) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c.at(static_cast<std::size_t>(j - 1)) = 1;
  return LatticeVector(std::move(c));
}

int LatticeVector::modulus() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

int LatticeVector::sum_over(const IndexSet& s) const {
  int total = 0;
  for (int j = 1; j <= dimension(); ++j) {
    if (s.contains(j)) total += coords_[static_cast<std::size_t>(j - 1)];
  }
  return total;
}

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  if (other.dimension() != dimension()) throw InvalidInput("dimension mismatch in vector sum");
  std::vector<int> c(coords_);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += other.coords_[k];
  return LatticeVector(std::move(c));
}

std::string LatticeVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) out << ',';
    out << coords_[k];
  }
  out << ')';
  return out.str();
}

// ----------------------------------------------------------- windows / nu

IndexSet CyclicWindow::members() const { return sigma_window(n, t, i); }

int CyclicWindow::sum(const LatticeVector& v) const { return v.sum_over(members()); }

FacetNormal FacetNormal::from_vector(std::vector<int> nu) {
  int g = 0;
  for (int c : nu) g = std::gcd(g, c);
  if (g == 0) throw InvalidInput("a facet normal cannot be the zero vector");
  FacetNormal out;
  out.primitive.reserve(nu.size());
  for (int c : nu) out.primitive.push_back(c / g);
  out.divisor = g;
  out.nu = std::move(nu);
  return out;
}

IndexSet sigma_window(int n, int t, int i) {
  check_window(n, t, i);
  std::uint64_t mask = 0;
  for (int k = 1; k <= i; ++k) mask |= 1ULL << (sigma_power(n, t, k) - 1);
  return IndexSet(n, mask);
}

Presentation family_presentation(const FamilyParams& p) {
  p.validate();
  if (p.n < 3) throw InvalidParameter("family presentations need n >= 3");
  const IndexSet full = IndexSet::full(p.n);
  const IndexSet rest = full - sigma_window(p.n, p.t, p.i);
  std::vector<IndexSet> sets(static_cast<std::size_t>(p.n), rest);
  for (int k = 1; k <= p.n; ++k) {
    if (k <= p.i || k == p.n) sets[static_cast<std::size_t>(sigma_power(p.n, p.t, k) - 1)] = full;
  }
  return Presentation(p.n, std::move(sets));
}

FacetNormal nu_vector(int n, int t, int i) {
  const IndexSet window = sigma_window(n, t, i);
  std::vector<int> nu(static_cast<std::size_t>(n), i + 1);
  for (int j : window.members()) nu[static_cast<std::size_t>(j - 1)] = -(n - i - 1);
  return FacetNormal::from_vector(std::move(nu));
}

CyclicWindow membership_window(const FamilyParams& p) {
  p.validate();
  return CyclicWindow{p.n, p.t, p.i, p.i + 1};
}

Presentation rotate_presentation(const Presentation& p, int shift) {
  const int n = p.n();
  if (shift < 0 || shift > n - 1) {
    throw InvalidParameter("rotation shift " + std::to_string(shift) + " outside [0, n-1]");
  }
  std::vector<IndexSet> sets(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    std::uint64_t mask = 0;
    for (int j : p[static_cast<std::size_t>(k - 1)].members()) {
      mask |= 1ULL << (sigma_power(n, shift, j) - 1);
    }
    sets[static_cast<std::size_t>(sigma_power(n, shift, k) - 1)] = IndexSet(n, mask);
  }
  return Presentation(n, std::move(sets));
}

LatticeVector rotate_vector(const LatticeVector& v, int shift) {
  const int n = v.dimension();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j) c[static_cast<std::size_t>(sigma_power(n, shift, j) - 1)] = v.at(j);
  return LatticeVector(std::move(c));
}

std::vector<LatticeVector> weak_compositions(int n, int total) {
  std::vector<LatticeVector> out;
  if (n <= 0) return out;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  // Lexicographically ascending: the first coordinate grows slowest.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      c[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(c);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      c[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace polymat
