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

#include "polymat/polymatroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "polymat/error.hpp"

namespace polymat {
namespace {

void sort_unique(std::vector<LatticeVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

int require_uniform_modulus(const BaseSet& b, const char* what) {
  if (b.empty()) throw InvalidInput(std::string(what) + ": base set is empty");
  auto m = b.uniform_modulus();
  if (!m) throw InvalidInput(std::string(what) + ": points have mixed moduli");
  return *m;
}

// Points of `b` minus points of `other`, both sorted.
std::vector<LatticeVector> difference(const std::vector<LatticeVector>& a,
                                      const std::vector<LatticeVector>& other) {
  std::vector<LatticeVector> out;
  std::set_difference(a.begin(), a.end(), other.begin(), other.end(), std::back_inserter(out));
  return out;
}

// Compares enumerate_bases(candidate) against b; fills a mismatch certificate.
RecognitionResult confirm_candidate(const BaseSet& b, const Presentation& candidate) {
  RecognitionResult result;
  const BaseSet produced = enumerate_bases(candidate);
  if (produced == b) {
    result.transversal = true;
    result.witness = candidate.canonical();
    return result;
  }
  RecognitionCertificate cert;
  cert.kind = RecognitionCertificate::Kind::kEnumerationMismatch;
  cert.missing = difference(b.points(), produced.points());
  cert.extra = difference(produced.points(), b.points());
  result.certificate = std::move(cert);
  return result;
}

}  // namespace

BaseSet::BaseSet(int n, std::vector<LatticeVector> points) : n_(n), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.dimension() != n) {
      throw InvalidInput("point " + p.to_string() + " does not have dimension " +
                         std::to_string(n));
    }
  }
  sort_unique(points_);
}

bool BaseSet::contains(const LatticeVector& v) const {
  return std::binary_search(points_.begin(), points_.end(), v);
}

std::optional<int> BaseSet::uniform_modulus() const {
  if (points_.empty()) return std::nullopt;
  const int m = points_.front().modulus();
  for (const auto& p : points_) {
    if (p.modulus() != m) return std::nullopt;
  }
  return m;
}

BaseSet BaseSet::intersect(const BaseSet& other) const {
  if (other.n_ != n_) throw InvalidInput("cannot intersect base sets of different dimension");
  std::vector<LatticeVector> out;
  std::set_intersection(points_.begin(), points_.end(), other.points_.begin(),
                        other.points_.end(), std::back_inserter(out));
  return BaseSet(n_, std::move(out));
}

BaseSet enumerate_bases(const Presentation& p) {
  const int n = p.n();
  // Layered product: after k layers the frontier holds every distinct partial
  // sum of choices from the first k sets.
  std::vector<LatticeVector> frontier{LatticeVector::zero(n)};
  std::vector<int> scratch(static_cast<std::size_t>(n));
  for (const IndexSet& set : p.sets()) {
    const auto members = set.members();
    std::vector<LatticeVector> next;
    next.reserve(frontier.size() * members.size());
    for (const auto& v : frontier) {
      for (int j : members) {
        std::copy(v.coords().begin(), v.coords().end(), scratch.begin());
        ++scratch[static_cast<std::size_t>(j - 1)];
        next.emplace_back(scratch);
      }
    }
    sort_unique(next);
    frontier = std::move(next);
  }
  return BaseSet(n, std::move(frontier));
}

ExchangeResult check_base_exchange(const BaseSet& b) {
  require_uniform_modulus(b, "check_base_exchange");
  const int n = b.n();
  const auto& pts = b.points();
  std::vector<int> moved(static_cast<std::size_t>(n));
  for (auto u = pts.rbegin(); u != pts.rend(); ++u) {
    for (auto v = pts.rbegin(); v != pts.rend(); ++v) {
      for (int a = 0; a < n; ++a) {
        if ((*u)[a] <= (*v)[a]) continue;
        bool repaired = false;
        for (int c = 0; c < n && !repaired; ++c) {
          if ((*u)[c] >= (*v)[c]) continue;
          std::copy(u->coords().begin(), u->coords().end(), moved.begin());
          --moved[static_cast<std::size_t>(a)];
          ++moved[static_cast<std::size_t>(c)];
          repaired = b.contains(LatticeVector(moved));
        }
        if (!repaired) return ExchangeResult{false, ExchangeViolation{*u, *v, a + 1}};
      }
    }
  }
  return ExchangeResult{};
}

int rank_of(const BaseSet& b, const IndexSet& s) {
  int best = 0;
  for (const auto& p : b.points()) best = std::max(best, p.sum_over(s));
  return best;
}

std::string RecognitionCertificate::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kNegativeMultiplicity:
      out << "negative multiplicity m(" << (subset ? subset->to_string() : "?") << ") = " << value;
      break;
    case Kind::kEmptySetMultiplicity:
      out << "nonzero multiplicity of the empty set: " << value;
      break;
    case Kind::kTotalMismatch:
      out << "multiplicities sum to " << value << " instead of n";
      break;
    case Kind::kEnumerationMismatch:
      out << "candidate presentation enumerates a different set (" << missing.size()
          << " missing, " << extra.size() << " extra";
      if (!missing.empty()) out << ", e.g. missing " << missing.front().to_string();
      if (!extra.empty()) out << ", e.g. extra " << extra.front().to_string();
      out << ")";
      break;
    case Kind::kNoCandidate:
      out << "no multiset of n nonempty subsets presents this set";
      break;
  }
  return out.str();
}

RecognitionResult recognize_transversal(const BaseSet& b) {
  const int n = b.n();
  if (n > kMaxRecognitionSize) {
    throw CapacityError("recognize_transversal: n=" + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxRecognitionSize));
  }
  const int modulus = require_uniform_modulus(b, "recognize_transversal");
  if (modulus != n) {
    throw InvalidInput("recognize_transversal: points have modulus " + std::to_string(modulus) +
                       ", expected n=" + std::to_string(n));
  }

  const std::uint32_t subsets = 1U << n;
  const std::uint32_t full = subsets - 1;

  // rank[S] = max over points of the coordinate sum over S.
  std::vector<int> rank(subsets, 0);
  std::vector<int> sums(subsets, 0);
  for (const auto& p : b.points()) {
    for (std::uint32_t s = 1; s < subsets; ++s) {
      const int low = std::countr_zero(s);
      sums[s] = sums[s & (s - 1)] + p[static_cast<std::size_t>(low)];
      rank[s] = std::max(rank[s], sums[s]);
    }
  }

  // f(T) = #{k : C_k subset of T}; Moebius inversion over the subset lattice
  // turns it into the multiplicity of T itself.
  std::vector<long long> mult(subsets);
  for (std::uint32_t t = 0; t < subsets; ++t) mult[t] = n - rank[full & ~t];
  for (int bit = 0; bit < n; ++bit) {
    for (std::uint32_t t = 0; t < subsets; ++t) {
      if (t & (1U << bit)) mult[t] -= mult[t ^ (1U << bit)];
    }
  }

  RecognitionResult result;
  if (mult[0] != 0) {
    RecognitionCertificate cert;
    cert.kind = RecognitionCertificate::Kind::kEmptySetMultiplicity;
    cert.subset = IndexSet::empty(n);
    cert.value = static_cast<int>(mult[0]);
    result.certificate = std::move(cert);
    return result;
  }
  long long total = 0;
  for (std::uint32_t t = 1; t < subsets; ++t) {
    if (mult[t] < 0) {
      RecognitionCertificate cert;
      cert.kind = RecognitionCertificate::Kind::kNegativeMultiplicity;
      cert.subset = IndexSet(n, t);
      cert.value = static_cast<int>(mult[t]);
      result.certificate = std::move(cert);
      return result;
    }
    total += mult[t];
  }
  if (total != n) {
    RecognitionCertificate cert;
    cert.kind = RecognitionCertificate::Kind::kTotalMismatch;
    cert.value = static_cast<int>(total);
    result.certificate = std::move(cert);
    return result;
  }

  std::vector<IndexSet> sets;
  for (std::uint32_t t = 1; t < subsets; ++t) {
    for (long long c = 0; c < mult[t]; ++c) sets.emplace_back(n, t);
  }
  return confirm_candidate(b, Presentation(n, std::move(sets)).canonical());
}

RecognitionResult exhaustive_recognize(const BaseSet& b) {
  const int n = b.n();
  if (n > kMaxExhaustiveSize) {
    throw CapacityError("exhaustive_recognize: n=" + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxExhaustiveSize));
  }
  const int modulus = require_uniform_modulus(b, "exhaustive_recognize");
  if (modulus != n) {
    throw InvalidInput("exhaustive_recognize: points have modulus " + std::to_string(modulus) +
                       ", expected n=" + std::to_string(n));
  }

  // Element j lies in exactly rank_of(B, {j}) of the sets.
  std::vector<int> target(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) target[static_cast<std::size_t>(j - 1)] = rank_of(b, IndexSet(n, {j}));

  const std::uint32_t subsets = 1U << n;
  std::vector<std::uint32_t> chosen;
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  std::optional<Presentation> found;

  auto search = [&](auto&& self, std::uint32_t min_mask) -> void {
    if (found) return;
    if (static_cast<int>(chosen.size()) == n) {
      if (count != target) return;
      std::vector<IndexSet> sets;
      for (auto m : chosen) sets.emplace_back(n, m);
      Presentation candidate(n, std::move(sets));
      if (enumerate_bases(candidate) == b) found = candidate.canonical();
      return;
    }
    // Every element still short of its target needs one slot per missing
    // occurrence; each remaining set supplies at most one occurrence.
    const int slots = n - static_cast<int>(chosen.size());
    for (int j = 0; j < n; ++j) {
      if (target[static_cast<std::size_t>(j)] - count[static_cast<std::size_t>(j)] > slots) return;
    }
    for (std::uint32_t m = min_mask; m < subsets && !found; ++m) {
      bool fits = true;
      for (int j = 0; j < n && fits; ++j) {
        if ((m >> j) & 1U) fits = count[static_cast<std::size_t>(j)] < target[static_cast<std::size_t>(j)];
      }
      if (!fits) continue;
      for (int j = 0; j < n; ++j) count[static_cast<std::size_t>(j)] += static_cast<int>((m >> j) & 1U);
      chosen.push_back(m);
      self(self, m);
      chosen.pop_back();
      for (int j = 0; j < n; ++j) count[static_cast<std::size_t>(j)] -= static_cast<int>((m >> j) & 1U);
    }
  };
  search(search, 1U);

  RecognitionResult result;
  if (found) {
    result.transversal = true;
    result.witness = std::move(found);
  } else {
    RecognitionCertificate cert;
    cert.kind = RecognitionCertificate::Kind::kNoCandidate;
    result.certificate = std::move(cert);
  }
  return result;
}

}  // namespace polymat
