#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gradedspec/bits.hpp"

namespace gradedspec {

// A closed set together with the canonical carrier subset that defines it
// (an ideal of the ring, or a submodule of the module).
struct ClosedSet {
  PointSet points;
  ElementSet defining;
};

// A basic open set indexed by the homogeneous ring element that defines it.
struct BasicOpen {
  std::size_t element = 0;
  PointSet points;
};

/// Finite topological space given by its family of closed sets.
///
/// Shared by the prime spectrum of a ring and the second spectrum of a module.
/// Closed sets are deduplicated by point set and sorted canonically.
class SpectrumTopology {
 public:
  SpectrumTopology() = default;

  SpectrumTopology(std::size_t point_count, std::vector<ClosedSet> candidates, std::vector<BasicOpen> basis)
      : point_count_(point_count), basis_(std::move(basis)) {
    std::unordered_map<PointSet, std::size_t, BitSetHash> index;
    for (auto& c : candidates) {
      auto it = index.find(c.points);
      if (it == index.end()) {
        index.emplace(c.points, closed_.size());
        closed_.push_back(std::move(c));
      } else if (closed_[it->second].defining.count() < c.defining.count()) {
        closed_[it->second].defining = c.defining;
      }
    }
    std::sort(closed_.begin(), closed_.end(),
              [](const ClosedSet& a, const ClosedSet& b) { return canonical_less(a.points, b.points); });
  }

  std::size_t point_count() const { return point_count_; }
  const std::vector<ClosedSet>& closed_sets() const { return closed_; }
  const std::vector<BasicOpen>& basis() const { return basis_; }
  PointSet empty_set() const { return PointSet(point_count_); }
  PointSet full_set() const { return PointSet::full(point_count_); }

  bool is_closed(const PointSet& y) const {
    return std::any_of(closed_.begin(), closed_.end(), [&](const ClosedSet& c) { return c.points == y; });
  }

  const ClosedSet* find_closed(const PointSet& y) const {
    for (const auto& c : closed_)
      if (c.points == y) return &c;
    return nullptr;
  }

  // Smallest closed superset: the intersection of every closed superset.
  PointSet closure(const PointSet& y) const {
    PointSet out = full_set();
    for (const auto& c : closed_)
      if (y.is_subset_of(c.points)) out &= c.points;
    return out;
  }

  // Contains the empty set and the whole space; closed under pairwise union
  // and intersection.
  bool axioms_hold() const {
    if (!is_closed(empty_set()) || !is_closed(full_set())) return false;
    std::unordered_map<PointSet, bool, BitSetHash> members;
    for (const auto& c : closed_) members.emplace(c.points, true);
    for (const auto& a : closed_)
      for (const auto& b : closed_) {
        if (!members.count(a.points | b.points)) return false;
        if (!members.count(a.points & b.points)) return false;
      }
    return true;
  }

  // Y is irreducible when it is nonempty and no two relatively closed proper
  // subsets of Y cover it.
  bool is_irreducible(const PointSet& y) const {
    if (y.empty()) return false;
    const auto rel = relative_closed(y);
    for (std::size_t i = 0; i < rel.size(); ++i) {
      if (rel[i] == y) continue;
      for (std::size_t j = i; j < rel.size(); ++j) {
        if (rel[j] == y) continue;
        if ((rel[i] | rel[j]) == y) return false;
      }
    }
    return true;
  }

  // Maximal irreducible subsets of Y. Components are relatively closed, so the
  // search runs over the relatively closed subsets of Y. Ordered by descending
  // cardinality, ties broken canonically.
  std::vector<PointSet> irreducible_components(const PointSet& y) const {
    std::vector<PointSet> irreducible;
    for (const auto& c : relative_closed(y))
      if (is_irreducible(c)) irreducible.push_back(c);
    std::vector<PointSet> out;
    for (const auto& a : irreducible) {
      bool maximal = true;
      for (const auto& b : irreducible)
        if (a != b && a.is_subset_of(b)) maximal = false;
      if (maximal) out.push_back(a);
    }
    std::sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
      if (a.count() != b.count()) return a.count() > b.count();
      return canonical_less(a, b);
    });
    return out;
  }

  // Every open set is a union of basic open sets contained in it.
  bool is_base() const {
    for (const auto& c : closed_) {
      const PointSet open = full_set() - c.points;
      PointSet covered = empty_set();
      for (const auto& b : basis_)
        if (b.points.is_subset_of(open)) covered |= b.points;
      if (covered != open) return false;
    }
    return true;
  }

  // Lemma-style compactness check: every open set admits a finite subcover
  // from its cover by basic opens, found greedily and capped at basis size.
  bool every_open_compact() const {
    for (const auto& c : closed_) {
      const PointSet open = full_set() - c.points;
      std::vector<const BasicOpen*> cover;
      for (const auto& b : basis_)
        if (b.points.is_subset_of(open)) cover.push_back(&b);
      PointSet covered = empty_set();
      std::size_t used = 0;
      while (covered != open && used < basis_.size()) {
        const BasicOpen* best = nullptr;
        std::size_t gain = 0;
        for (const auto* b : cover) {
          const auto g = (b->points - covered).count();
          if (g > gain) {
            gain = g;
            best = b;
          }
        }
        if (best == nullptr) break;
        covered |= best->points;
        ++used;
      }
      if (covered != open) return false;
    }
    return true;
  }

  // Descending chain condition on closed sets: the strict-inclusion relation
  // on the closed-set lattice admits no infinite descending chain, i.e. has
  // no cycle. Returns the length of the longest strict chain when it holds.
  std::optional<std::size_t> descending_chain_length() const {
    std::vector<PointSet> sets;
    for (const auto& c : closed_) sets.push_back(c.points);
    return longest_strict_chain(sets);
  }

  bool has_dcc() const { return descending_chain_length().has_value(); }

  // Longest strictly increasing chain in a family of sets, or nullopt if the
  // strict-inclusion graph has a cycle (no chain condition).
  template <class Set>
  static std::optional<std::size_t> longest_strict_chain(const std::vector<Set>& family) {
    const std::size_t k = family.size();
    std::vector<std::vector<std::size_t>> above(k);
    std::vector<std::size_t> indegree(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && family[i] != family[j] && family[i].is_subset_of(family[j])) {
          above[i].push_back(j);
          ++indegree[j];
        }
    std::vector<std::size_t> order;
    std::vector<std::size_t> depth(k, 1);
    for (std::size_t i = 0; i < k; ++i)
      if (indegree[i] == 0) order.push_back(i);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const auto i = order[head];
      for (auto j : above[i]) {
        depth[j] = std::max(depth[j], depth[i] + 1);
        if (--indegree[j] == 0) order.push_back(j);
      }
    }
    if (order.size() != k) return std::nullopt;
    std::size_t best = 0;
    for (auto d : depth) best = std::max(best, d);
    return best;
  }

 private:
  std::vector<PointSet> relative_closed(const PointSet& y) const {
    std::vector<PointSet> out;
    for (const auto& c : closed_) {
      auto r = c.points & y;
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
    return out;
  }

  std::size_t point_count_ = 0;
  std::vector<ClosedSet> closed_;
  std::vector<BasicOpen> basis_;
};

/// Noetherian: descending chain condition on closed sets, plus every open
/// subset compact.
inline bool is_noetherian_space(const SpectrumTopology& t) { return t.has_dcc() && t.every_open_compact(); }

}  // namespace gradedspec
