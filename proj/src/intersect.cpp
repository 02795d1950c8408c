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

#include "polymat/intersect.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "polymat/error.hpp"

namespace polymat {
namespace {

// {lo, ..., hi}, empty when lo > hi.
bool in_range(int x, int lo, int hi) { return lo <= x && x <= hi; }

// Fills positions lo..hi (1-indexed, inclusive) of a presentation under
// construction.
class Builder {
 public:
  explicit Builder(int n) : n_(n), sets_(static_cast<std::size_t>(n)) {}
  Builder& put(int lo, int hi, const IndexSet& s) {
    for (int k = lo; k <= hi; ++k) sets_.at(static_cast<std::size_t>(k - 1)) = s;
    return *this;
  }
  Builder& put(int k, const IndexSet& s) { return put(k, k, s); }
  Presentation build() const { return Presentation(n_, sets_); }

 private:
  int n_;
  std::vector<IndexSet> sets_;
};

struct Pieces {
  IndexSet full, prefix, window;
  explicit Pieces(const PairParams& p)
      : full(IndexSet::full(p.n)),
        prefix(IndexSet::range(p.n, 1, p.i1)),
        window(sigma_window(p.n, p.t2, p.i2)) {}
};

Presentation build_b2(const PairParams& p, const Pieces& s) {
  const IndexSet first_i2 = IndexSet::range(p.n, 1, p.i2);
  return Builder(p.n)
      .put(1, p.i1, s.full)
      .put(p.n, s.full)
      .put(p.i1 + 1, p.i2, s.full - s.prefix)
      .put(p.i2 + 1, p.n - 1, s.full - first_i2)
      .build();
}

Presentation build_d2(const PairParams& p, const Pieces& s) {
  return Builder(p.n)
      .put(1, p.n - p.i2 - 1, s.full - s.window)
      .put(p.n - p.i2, p.i1, s.full)
      .put(p.n, s.full)
      .put(p.i1 + 1, p.n - 1, s.full - s.prefix)
      .build();
}

Presentation build_e1(const PairParams& p, const Pieces& s) {
  return Builder(p.n)
      .put(1, p.i1, s.full - s.window)
      .put(p.n, s.full - s.window)
      .put(p.i1 + 1, p.i1 + p.i2 + 1, s.full - s.prefix)
      .put(p.i1 + p.i2 + 2, p.n - 1, s.full - (s.prefix | s.window))
      .build();
}

Presentation build_e2(const PairParams& p, const Pieces& s) {
  return Builder(p.n)
      .put(1, p.i1, s.full - s.window)
      .put(p.i1 + 1, p.n - 1, s.full - s.prefix)
      .put(p.n, s.full)
      .build();
}

// Union over the two level parameters of block products; terms whose
// exponents come out negative contribute nothing.
struct FamilyTerm {
  IndexSet a, b, c;
  int ea, eb, ec;
};

BaseSet union_of_terms(int n, const std::vector<FamilyTerm>& terms) {
  std::vector<LatticeVector> points;
  for (const auto& t : terms) {
    if (t.ea < 0 || t.eb < 0 || t.ec < 0) continue;
    const BaseSet part = expand_monomial_family(n, {{t.a, t.ea}, {t.b, t.eb}, {t.c, t.ec}});
    points.insert(points.end(), part.points().begin(), part.points().end());
  }
  return BaseSet(n, std::move(points));
}

}  // namespace

void PairParams::validate() const {
  if (n < 3) throw InvalidParameter("pair parameters need n >= 3");
  if (n > kMaxGroundSize) throw InvalidParameter("n too large");
  if (!in_range(i1, 1, n - 2) || !in_range(i2, 1, n - 2)) {
    throw InvalidParameter("window lengths i1=" + std::to_string(i1) + ", i2=" +
                           std::to_string(i2) + " must lie in [1, n-2]");
  }
  if (!in_range(t2, 0, n - 1)) {
    throw InvalidParameter("offset t2=" + std::to_string(t2) + " outside [0, n-1]");
  }
}

PairParams normalize_pair(const FamilyParams& first, const FamilyParams& second) {
  first.validate();
  second.validate();
  if (first.n != second.n) throw InvalidParameter("families live on different ground sets");
  const int n = first.n;
  PairParams p{n, first.i, second.i, ((second.t - first.t) % n + n) % n};
  p.validate();
  return p;
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::kA: return "a";
    case Condition::kB: return "b";
    case Condition::kC: return "c";
    case Condition::kD: return "d";
    case Condition::kE: return "e";
    case Condition::kNone: return "none";
  }
  return "none";
}

BaseSet intersection_base_set(const PairParams& p) {
  p.validate();
  const CyclicWindow first = membership_window(p.first());
  const CyclicWindow second = membership_window(p.second());
  std::vector<LatticeVector> points;
  for (auto& v : weak_compositions(p.n, p.n)) {
    if (first.admits(v) && second.admits(v)) points.push_back(std::move(v));
  }
  return BaseSet(p.n, std::move(points));
}

Condition matching_condition(const PairParams& p) {
  p.validate();
  const int n = p.n, i1 = p.i1, i2 = p.i2, t2 = p.t2;
  if (i1 == 1) return Condition::kA;
  if (t2 == 0) return Condition::kB;
  if (t2 == i1) return Condition::kC;
  if (in_range(t2, 1, i1 - 1) && (in_range(i2, 1, i1 - t2) || in_range(i2, n - t2, n - 2))) {
    return Condition::kD;
  }
  if (in_range(t2, i1 + 1, n - 1) &&
      (in_range(i2, 1, n - t2) || in_range(i2, n - t2 + i1, n - 2))) {
    return Condition::kE;
  }
  return Condition::kNone;
}

std::string witness_case(const PairParams& p) {
  const int n = p.n, i1 = p.i1, i2 = p.i2, t2 = p.t2;
  switch (matching_condition(p)) {
    case Condition::kA:
      if (t2 == 0) return i2 == i1 ? "identical" : "a.1";
      if (i2 + t2 > n) return "a.5";
      if (i2 == n - 2) return "a.3";
      if (i2 == n - 3) return "a.4";
      return "a.2";
    case Condition::kB:
      if (i2 == i1) return "identical";
      return i2 < i1 ? "b.1" : "b.2";
    case Condition::kC:
      if (i2 + t2 < n - 1) return "c.1";
      if (i2 + t2 == n - 1) return "c.2";
      return "c.3";
    case Condition::kD:
      return i2 + t2 <= i1 ? "d.1" : "d.2";
    case Condition::kE:
      if (i2 + t2 > n) return "e.3";
      return i1 + 1 + i2 == n ? "e.2" : "e.1";
    case Condition::kNone:
      break;
  }
  throw ContractError("no witness: (n=" + std::to_string(n) + ", i1=" + std::to_string(i1) +
                      ", i2=" + std::to_string(i2) + ", t2=" + std::to_string(t2) +
                      ") is not a base ring of a transversal polymatroid");
}

Presentation witness(const PairParams& p) {
  const std::string label = witness_case(p);
  const Pieces s(p);
  const int n = p.n, i1 = p.i1, i2 = p.i2;
  const IndexSet one = IndexSet(n, {1});

  if (label == "identical") return family_presentation(p.first());
  if (label == "a.1" || label == "b.2") return build_b2(p, s);
  if (label == "a.2") {
    return Builder(n)
        .put(1, s.full - s.window)
        .put(n, s.full - s.window)
        .put(2, i2 + 2, s.full - one)
        .put(i2 + 3, n - 1, s.full - (one | s.window))
        .build();
  }
  if (label == "a.3") {
    return Builder(n).put(1, s.full - s.window).put(n, s.full).put(2, n - 1, s.full - one).build();
  }
  if (label == "a.4") {
    return Builder(n)
        .put(1, s.full - s.window)
        .put(n, s.full - s.window)
        .put(2, n - 1, s.full - one)
        .build();
  }
  if (label == "a.5") {
    return Builder(n)
        .put(1, s.full)
        .put(n, s.full)
        .put(2, n - i2, s.full - s.window)
        .put(n - i2 + 1, n - 1, s.full - one)
        .build();
  }
  if (label == "b.1") {
    const IndexSet first_i2 = IndexSet::range(n, 1, i2);
    return Builder(n)
        .put(1, i2, s.full)
        .put(n, s.full)
        .put(i2 + 1, i1, s.full - first_i2)
        .put(i1 + 1, n - 1, s.full - s.prefix)
        .build();
  }
  if (label == "c.1" || label == "e.1") return build_e1(p, s);
  if (label == "c.2" || label == "e.2") return build_e2(p, s);
  if (label == "c.3" || label == "d.2") return build_d2(p, s);
  if (label == "d.1") {
    return Builder(n)
        .put(1, i2, s.full)
        .put(n, s.full)
        .put(i2 + 1, i1, s.full - s.window)
        .put(i1 + 1, n - 1, s.full - s.prefix)
        .build();
  }
  if (label == "e.3") {
    return Builder(n)
        .put(1, i1, s.full)
        .put(n, s.full)
        .put(i1 + 1, i1 + n - i2 - 1, s.full - s.window)
        .put(i1 + n - i2, n - 1, s.full - s.prefix)
        .build();
  }
  throw ContractError("unhandled witness case " + label);
}

DecisionOutcome decide(const PairParams& p) {
  DecisionOutcome out;
  out.condition = matching_condition(p);
  out.is_base_ring = out.condition != Condition::kNone;
  if (out.is_base_ring) {
    out.lemma_case = witness_case(p);
    out.witness = witness(p);
  }
  return out;
}

bool verify_witness(const PairParams& p) {
  return enumerate_bases(witness(p)) == intersection_base_set(p);
}

BaseSet expand_monomial_family(int n, const std::vector<std::pair<IndexSet, int>>& blocks) {
  std::vector<LatticeVector> frontier{LatticeVector::zero(n)};
  for (const auto& [support, exponent] : blocks) {
    if (exponent < 0) throw InvalidInput("monomial family exponents must be nonnegative");
    if (support.ground_size() != n) throw InvalidInput("block lives on a different ground set");
    if (exponent == 0) continue;
    const auto members = support.members();
    if (members.empty()) return BaseSet(n, {});
    // All ways of spreading `exponent` over the block's variables.
    const auto spreads = weak_compositions(static_cast<int>(members.size()), exponent);
    std::vector<LatticeVector> next;
    next.reserve(frontier.size() * spreads.size());
    std::vector<int> c(static_cast<std::size_t>(n));
    for (const auto& v : frontier) {
      for (const auto& w : spreads) {
        std::copy(v.coords().begin(), v.coords().end(), c.begin());
        for (std::size_t k = 0; k < members.size(); ++k) {
          c[static_cast<std::size_t>(members[k] - 1)] += w[k];
        }
        next.emplace_back(c);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return BaseSet(n, std::move(frontier));
}

std::optional<BaseSet> witness_monomial_family(const PairParams& p) {
  const std::string label = witness_case(p);
  if (label == "identical") return std::nullopt;
  const Pieces s(p);
  const int n = p.n, i1 = p.i1, i2 = p.i2;
  const IndexSet& P = s.prefix;
  const IndexSet& W = s.window;
  const IndexSet& F = s.full;
  std::vector<FamilyTerm> terms;

  if (label == "d.1" || label == "b.1") {
    // W^(i2+1-k) (P\W)^(i1-i2+k-s) (F\P)^(n-1-i1+s)
    for (int k = 0; k <= i2 + 1; ++k) {
      for (int j = 0; j <= i1 - i2 + k; ++j) {
        terms.push_back({W, P - W, F - P, i2 + 1 - k, i1 - i2 + k - j, n - 1 - i1 + j});
      }
    }
  } else if (label == "d.2" || label == "c.3") {
    // (F\W)^(i1+1-k) (P n W)^(k-s) (F\P)^(n-1-i1+s)
    for (int k = 0; k <= i1 + i2 - n + 2; ++k) {
      for (int j = 0; j <= k; ++j) {
        terms.push_back({F - W, P & W, F - P, i1 + 1 - k, k - j, n - 1 - i1 + j});
      }
    }
  } else if (label == "e.1" || label == "c.1" || label == "a.2" || label == "a.4") {
    // P^(i1+1-k) W^(i2+1-s) (F\(P u W))^(n-i1-i2-2+k+s)
    for (int k = 0; k <= i1 + 1; ++k) {
      for (int j = 0; j <= i2 + 1; ++j) {
        terms.push_back({P, W, F - (P | W), i1 + 1 - k, i2 + 1 - j, n - i1 - i2 - 2 + k + j});
      }
    }
  } else if (label == "e.2" || label == "c.2" || label == "a.3") {
    // P^(i1+1-k) (F\(P u W))^(n-i1-1+k-s) W^s
    for (int k = 0; k <= i1 + 1; ++k) {
      for (int j = 0; j <= i2 + 1; ++j) {
        terms.push_back({P, F - (P | W), W, i1 + 1 - k, n - i1 - 1 + k - j, j});
      }
    }
  } else if (label == "e.3" || label == "a.5") {
    // P^(i1+1-k) (W\P)^(i2-i1+k-s) (F\W)^(n-i2-1+s)
    for (int k = 0; k <= i1 + 1; ++k) {
      for (int j = 0; j <= i2 - i1 + k; ++j) {
        terms.push_back({P, W - P, F - W, i1 + 1 - k, i2 - i1 + k - j, n - i2 - 1 + j});
      }
    }
  } else if (label == "b.2" || label == "a.1") {
    // P^(i1+1-k) ([i2]\P)^(i2-i1+k-s) (F\[i2])^(n-i2+s-1)
    const IndexSet first_i2 = IndexSet::range(n, 1, i2);
    for (int k = 0; k <= i1 + 1; ++k) {
      for (int j = 0; j <= i2 - i1 + k; ++j) {
        terms.push_back({P, first_i2 - P, F - first_i2, i1 + 1 - k, i2 - i1 + k - j, n - i2 + j - 1});
      }
    }
  } else {
    throw ContractError("no generator family for case " + label);
  }
  return union_of_terms(n, terms);
}

int SweepReport::disagreements() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const SweepEntry& e) { return !e.agrees(); }));
}

int SweepReport::witness_failures() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const SweepEntry& e) { return !e.witness_ok; }));
}

int SweepReport::yes_instances() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const SweepEntry& e) { return e.decided; }));
}

SweepReport sweep_theorem(int n, int jobs, int max_n) {
  if (n < 3) throw InvalidParameter("sweep needs n >= 3");
  if (n > max_n) {
    throw CapacityError("sweep: n=" + std::to_string(n) + " exceeds the limit " +
                        std::to_string(max_n));
  }
  SweepReport report;
  report.n = n;
  for (int i1 = 1; i1 <= n - 2; ++i1) {
    for (int i2 = 1; i2 <= n - 2; ++i2) {
      for (int t2 = 0; t2 <= n - 1; ++t2) {
        SweepEntry e;
        e.params = PairParams{n, i1, i2, t2};
        report.entries.push_back(e);
      }
    }
  }

  auto run = [](SweepEntry& e) {
    const DecisionOutcome outcome = decide(e.params);
    e.decided = outcome.is_base_ring;
    e.condition = to_string(outcome.condition);
    e.lemma_case = outcome.lemma_case;
    const BaseSet target = intersection_base_set(e.params);
    e.recognized = recognize_transversal(target).transversal;
    if (outcome.is_base_ring) e.witness_ok = enumerate_bases(*outcome.witness) == target;
  };

  const std::size_t workers =
      static_cast<std::size_t>(std::clamp(jobs, 1, static_cast<int>(report.entries.size())));
  if (workers == 1) {
    for (auto& e : report.entries) run(e);
    return report;
  }
  // Static striping: worker w handles entries w, w + workers, ...
  std::vector<std::future<void>> pending;
  for (std::size_t w = 0; w < workers; ++w) {
    pending.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < report.entries.size(); k += workers) run(report.entries[k]);
    }));
  }
  for (auto& f : pending) f.get();
  return report;
}

}  // namespace polymat
