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

#include "polymat/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "polymat/error.hpp"

namespace polymat {
namespace {

// Dense sections beyond this many compositions are refused.
constexpr std::uint64_t kMaxDenseSection = 1ULL << 32;

// Flat row-major storage of a sorted point list of dimension n.
struct FlatPoints {
  int n = 0;
  std::vector<int> data;
  std::size_t size() const { return n == 0 ? 0 : data.size() / static_cast<std::size_t>(n); }
  std::span<const int> row(std::size_t k) const {
    return {data.data() + k * static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
  }
};

// Visits every weak composition of total into n parts in lexicographic order.
template <typename Visit>
void for_each_composition(int n, int total, Visit&& visit) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      c[static_cast<std::size_t>(pos)] = remaining;
      visit(std::span<const int>(c));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      c[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (n > 0) rec(rec, 0, total);
}

// Next level of a homogeneous semigroup: previous + gens, deduplicated through
// a bitmap over all compositions of the new modulus.
FlatPoints next_level_dense(const FlatPoints& previous, const FlatPoints& gens, int total) {
  const int n = gens.n;
  const CompositionIndex index(n, total);
  if (index.size() > kMaxDenseSection) {
    throw CapacityError("semigroup section at modulus " + std::to_string(total) + " is too large");
  }
  std::vector<bool> hit(index.size(), false);
  std::vector<int> sum(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < previous.size(); ++a) {
    const auto p = previous.row(a);
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const auto g = gens.row(b);
      for (int k = 0; k < n; ++k) sum[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] + g[static_cast<std::size_t>(k)];
      hit[index.rank(sum)] = true;
    }
  }
  FlatPoints out;
  out.n = n;
  std::uint64_t rank = 0;
  for_each_composition(n, total, [&](std::span<const int> c) {
    if (hit[rank++]) out.data.insert(out.data.end(), c.begin(), c.end());
  });
  return out;
}

FlatPoints next_level_sparse(const FlatPoints& previous, const FlatPoints& gens) {
  const int n = gens.n;
  std::set<std::vector<int>> seen;
  std::vector<int> sum(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < previous.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      for (int k = 0; k < n; ++k) {
        sum[static_cast<std::size_t>(k)] = previous.row(a)[static_cast<std::size_t>(k)] + gens.row(b)[static_cast<std::size_t>(k)];
      }
      seen.insert(sum);
    }
  }
  FlatPoints out;
  out.n = n;
  for (const auto& v : seen) out.data.insert(out.data.end(), v.begin(), v.end());
  return out;
}

FlatPoints flatten(const BaseSet& b) {
  FlatPoints out;
  out.n = b.n();
  for (const auto& p : b.points()) out.data.insert(out.data.end(), p.coords().begin(), p.coords().end());
  return out;
}

// Calls visit(level, points) for d = 0..max_degree.
template <typename Visit>
void for_each_level(const BaseSet& gens, int max_degree, Visit&& visit) {
  if (max_degree < 0) throw InvalidParameter("degree must be nonnegative");
  const int n = gens.n();
  const FlatPoints g = flatten(gens);
  const auto modulus = gens.uniform_modulus();
  FlatPoints level;
  level.n = n;
  level.data.assign(static_cast<std::size_t>(n), 0);
  visit(0, level);
  for (int d = 1; d <= max_degree; ++d) {
    if (gens.empty()) {
      level.data.clear();
    } else if (modulus) {
      level = next_level_dense(level, g, d * *modulus);
    } else {
      level = next_level_sparse(level, g);
    }
    visit(d, level);
  }
}

std::vector<LatticeVector> to_vectors(const FlatPoints& f) {
  std::vector<LatticeVector> out;
  out.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    out.emplace_back(std::vector<int>(f.row(k).begin(), f.row(k).end()));
  }
  return out;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int j = 1; j <= k; ++j) {
    r = r * static_cast<unsigned>(n - k + j) / static_cast<unsigned>(j);
    if (r > std::numeric_limits<std::uint64_t>::max()) throw CapacityError("binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

CompositionIndex::CompositionIndex(int n, int total) : n_(n), total_(total) {
  if (n < 1 || total < 0) throw InvalidParameter("composition index needs n >= 1, total >= 0");
  size_ = binomial(total + n - 1, n - 1);
  less_.assign(static_cast<std::size_t>(n + 1) * (total + 1) * (total + 2), 0);
  for (int p = 2; p <= n; ++p) {
    for (int r = 0; r <= total; ++r) {
      std::uint64_t acc = 0;
      for (int c = 0; c <= r + 1; ++c) {
        less(p, r, c) = acc;
        if (c <= r) acc += binomial(r - c + p - 2, p - 2);
      }
    }
  }
}

std::uint64_t& CompositionIndex::less(int p, int r, int c) {
  return less_[(static_cast<std::size_t>(p) * (total_ + 1) + r) * (total_ + 2) + c];
}

std::uint64_t CompositionIndex::less(int p, int r, int c) const {
  return less_[(static_cast<std::size_t>(p) * (total_ + 1) + r) * (total_ + 2) + c];
}

std::uint64_t CompositionIndex::rank(std::span<const int> c) const {
  std::uint64_t r = 0;
  int remaining = total_;
  for (int k = 0; k + 1 < n_; ++k) {
    const int v = c[static_cast<std::size_t>(k)];
    r += less(n_ - k, remaining, v);
    remaining -= v;
  }
  return r;
}

std::vector<LatticeVector> semigroup_section(const BaseSet& gens, int d) {
  std::vector<LatticeVector> out;
  for_each_level(gens, d, [&](int level, const FlatPoints& pts) {
    if (level == d) out = to_vectors(pts);
  });
  return out;
}

std::vector<long long> hilbert_values(const BaseSet& gens, int max_degree) {
  std::vector<long long> values;
  for_each_level(gens, max_degree, [&](int, const FlatPoints& pts) {
    values.push_back(static_cast<long long>(pts.size()));
  });
  return values;
}

long long hilbert_function(const BaseSet& gens, int d) { return hilbert_values(gens, d).back(); }

HVector h_vector(std::span<const long long> values, int n) {
  if (n < 1) throw InvalidInput("h_vector: n must be positive");
  if (static_cast<int>(values.size()) < n + 1) {
    throw InvalidInput("h_vector: need H(0..n), got " + std::to_string(values.size()) + " values");
  }
  if (values[0] != 1) throw InvalidInput("h_vector: H(0) must be 1");
  HVector out;
  out.n = n;
  for (int k = 0; k <= n; ++k) {
    long long hk = 0;
    for (int j = 0; j <= k; ++j) {
      const long long term = static_cast<long long>(binomial(n, k - j)) * values[static_cast<std::size_t>(j)];
      hk += ((k - j) % 2 == 0) ? term : -term;
    }
    if (k < n) {
      out.h.push_back(hk);
    } else {
      out.residual = hk;
    }
  }
  return out;
}

int a_invariant(const HVector& h) {
  if (!h.consistent()) throw ContractError("a_invariant: h-vector numerator exceeds degree n-1");
  int last = -1;
  for (int k = 0; k < static_cast<int>(h.h.size()); ++k) {
    if (h.h[static_cast<std::size_t>(k)] != 0) last = k;
  }
  if (last < 0) throw ContractError("a_invariant: zero h-vector");
  return last - h.n;
}

long long predicted_hilbert(const HVector& h, int d) {
  long long total = 0;
  for (int k = 0; k < static_cast<int>(h.h.size()); ++k) {
    if (d - k < 0) break;
    total += h.h[static_cast<std::size_t>(k)] * static_cast<long long>(binomial(h.n - 1 + d - k, h.n - 1));
  }
  return total;
}

DegreeCheck check_normality(const BaseSet& gens, const ConeDescription& cone, int max_degree) {
  if (max_degree < 1) throw InvalidParameter("normality degree bound must be >= 1");
  DegreeCheck result;
  for_each_level(gens, max_degree, [&](int d, const FlatPoints& pts) {
    if (d == 0 || !result.pass) return;
    if (to_vectors(pts) != cone_section(cone, d).points) {
      result.pass = false;
      result.failing_degree = d;
    }
  });
  return result;
}

DegreeCheck check_canonical_shift(const ConeDescription& cone, int max_degree) {
  if (max_degree < 1) throw InvalidParameter("canonical shift degree bound must be >= 1");
  const int n = cone.n();
  DegreeCheck result;
  DegreeSection previous = cone_section(cone, 0);
  for (int d = 1; d <= max_degree; ++d) {
    DegreeSection current = cone_section(cone, d);
    std::vector<LatticeVector> interior;
    for (const auto& p : current.points) {
      const bool inside = std::all_of(cone.normals().begin(), cone.normals().end(),
                                      [&](const FacetNormal& a) { return evaluate(a, p) >= 1; });
      if (inside) interior.push_back(p);
    }
    std::vector<LatticeVector> shifted;
    shifted.reserve(previous.points.size());
    const LatticeVector ones = LatticeVector::all_ones(n);
    for (const auto& p : previous.points) shifted.push_back(p + ones);
    if (interior != shifted) {
      result.pass = false;
      result.failing_degree = d;
      return result;
    }
    previous = std::move(current);
  }
  return result;
}

bool check_gorenstein_symmetry(const HVector& h) {
  int last = -1;
  for (int k = 0; k < static_cast<int>(h.h.size()); ++k) {
    if (h.h[static_cast<std::size_t>(k)] != 0) last = k;
  }
  for (int k = 0; k <= last; ++k) {
    if (h.h[static_cast<std::size_t>(k)] != h.h[static_cast<std::size_t>(last - k)]) return false;
  }
  return true;
}

HilbertData compute_hilbert(const BaseSet& gens, int max_degree) {
  HilbertData data;
  data.n = gens.n();
  data.values = hilbert_values(gens, std::max(max_degree, data.n));
  data.h = h_vector(data.values, data.n);
  if (data.h.consistent()) data.a_invariant = a_invariant(data.h);
  data.gorenstein_symmetric = check_gorenstein_symmetry(data.h);
  return data;
}

}  // namespace polymat
