#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gradedspec/ideal.hpp"
#include "gradedspec/topology.hpp"

namespace gradedspec {

/// Graded ideal lattice of a ring, canonically ordered, with lookup by
/// element set.
class IdealLattice {
 public:
  IdealLattice() = default;
  explicit IdealLattice(std::shared_ptr<const GradedRing> ring, const Limits& limits = {})
      : ring_(std::move(ring)), ideals_(enumerate_graded_ideals(*ring_, limits.max_lattice)) {
    for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i].elements, i);
  }

  const GradedRing& ring() const { return *ring_; }
  const std::shared_ptr<const GradedRing>& ring_ptr() const { return ring_; }
  const std::vector<GradedIdeal>& ideals() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }
  const GradedIdeal& operator[](std::size_t i) const { return ideals_[i]; }

  std::optional<std::size_t> find(const ElementSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::shared_ptr<const GradedRing> ring_;
  std::vector<GradedIdeal> ideals_;
  std::unordered_map<ElementSet, std::size_t, BitSetHash> index_;
};

inline std::vector<GradedIdeal> graded_prime_spectrum(const GradedRing& r) {
  std::vector<GradedIdeal> out;
  for (auto& i : enumerate_graded_ideals(r))
    if (is_graded_prime(r, i)) out.push_back(std::move(i));
  return out;
}

/// Spec_G(R) with its Zariski topology.
///
/// Points are the graded primes in canonical order; point sets index into
/// `points()`. Closed sets are V(I) over all graded ideals I, each tagged with
/// the largest ideal defining it, the intersection of its points.
class PrimeSpectrum {
 public:
  PrimeSpectrum() = default;
  explicit PrimeSpectrum(std::shared_ptr<const GradedRing> ring, const Limits& limits = {})
      : lattice_(std::move(ring), limits) {
    const GradedRing& r = lattice_.ring();
    for (const auto& i : lattice_.ideals())
      if (is_graded_prime(r, i)) points_.push_back(i);

    std::vector<ClosedSet> closed;
    for (const auto& i : lattice_.ideals()) {
      auto v = variety(i.elements);
      closed.push_back({v, xi(v).elements});
    }
    std::vector<BasicOpen> basis;
    for (auto h : r.homogeneous_list())
      basis.push_back({h, PointSet::full(points_.size()) - variety(principal_ideal(r, h))});
    topology_ = SpectrumTopology(points_.size(), std::move(closed), std::move(basis));
  }

  const GradedRing& ring() const { return lattice_.ring(); }
  const std::shared_ptr<const GradedRing>& ring_ptr() const { return lattice_.ring_ptr(); }
  const IdealLattice& lattice() const { return lattice_; }
  const std::vector<GradedIdeal>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const SpectrumTopology& topology() const { return topology_; }
  const std::vector<BasicOpen>& basic_open_sets() const { return topology_.basis(); }

  std::optional<std::size_t> point_index(const ElementSet& s) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i].elements == s) return i;
    return std::nullopt;
  }

  PointSet empty_set() const { return PointSet(points_.size()); }

  // V(I) = primes containing I.
  PointSet variety(const ElementSet& ideal) const {
    PointSet out(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (ideal.is_subset_of(points_[i].elements)) out.insert(i);
    return out;
  }
  PointSet variety(const GradedIdeal& ideal) const { return variety(ideal.elements); }

  // Intersection of the points in Y; R when Y is empty.
  GradedIdeal xi(const PointSet& y) const {
    ElementSet out = ring().all();
    y.for_each([&](std::size_t i) { out &= points_[i].elements; });
    return make_ideal(ring(), out);
  }

  PointSet closure(const PointSet& y) const { return variety(xi(y)); }

  bool is_irreducible(const PointSet& y) const { return topology_.is_irreducible(y); }

  // Minimal elements of V(I) under inclusion.
  std::vector<GradedIdeal> minimal_prime_divisors(const GradedIdeal& ideal) const {
    const auto v = variety(ideal).to_vector();
    std::vector<GradedIdeal> out;
    for (auto i : v) {
      bool minimal = true;
      for (auto j : v)
        if (i != j && points_[j].is_subset_of(points_[i])) minimal = false;
      if (minimal) out.push_back(points_[i]);
    }
    return out;
  }

  // {V(p) : p a minimal prime divisor of I}.
  std::vector<PointSet> irreducible_components_of_variety(const GradedIdeal& ideal) const {
    std::vector<PointSet> out;
    for (const auto& p : minimal_prime_divisors(ideal)) out.push_back(variety(p));
    return out;
  }

  // Minimal prime divisors p_1..p_n of I; their intersection is Gr(I). Empty
  // for I = R.
  std::vector<GradedIdeal> radical_decomposition(const GradedIdeal& ideal) const {
    if (!ideal.is_proper()) return {};
    return minimal_prime_divisors(ideal);
  }

 private:
  IdealLattice lattice_;
  std::vector<GradedIdeal> points_;
  SpectrumTopology topology_;
};

namespace detail {

// Visits k-subsets of {0..n-1} in lexicographic order until `f` returns true.
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Minimal-cardinality J <= h(I) with Gr(I) = Gr(ideal generated by J).
///
/// Elements with equal Gr(Rh) are interchangeable, so only the first of each
/// class (canonical order) is tried. On a finite ring a witness always exists.
inline std::optional<std::vector<Element>> is_rfg_ideal(const GradedRing& r, const GradedIdeal& ideal) {
  const ElementSet target = graded_radical(r, ideal).elements;
  std::vector<Element> cands;
  std::vector<ElementSet> seen;
  for (auto h : r.homogeneous_list()) {
    if (!ideal.contains(h) || h == r.zero()) continue;
    auto key = graded_radical(r, GradedIdeal{&r, principal_ideal(r, h), {h}}).elements;
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    cands.push_back(h);
  }
  std::optional<std::vector<Element>> found;
  for (std::size_t k = 0; k <= cands.size() && !found; ++k) {
    detail::for_each_combination(cands.size(), k, [&](const std::vector<std::size_t>& idx) {
      ElementSet gens;
      std::vector<Element> chosen;
      for (auto i : idx) {
        gens.insert(cands[i]);
        chosen.push_back(cands[i]);
      }
      const GradedIdeal j{&r, ideal_closure(r, gens), chosen};
      if (graded_radical(r, j).elements == target) {
        found = chosen;
        return true;
      }
      return false;
    });
  }
  return found;
}

}  // namespace gradedspec
