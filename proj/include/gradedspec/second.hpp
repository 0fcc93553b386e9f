#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gradedspec/module.hpp"
#include "gradedspec/spectra.hpp"

namespace gradedspec {

// Ann_R(N) = {r : rN = 0}.
inline ElementSet ann_in_ring(const GradedModule& m, const ElementSet& n) {
  ElementSet out;
  const auto members = n.to_vector();
  for (Element r = 0; r < m.ring().size(); ++r) {
    bool kills = true;
    for (auto x : members)
      if (m.act(r, x) != m.zero()) {
        kills = false;
        break;
      }
    if (kills) out.insert(r);
  }
  return out;
}

inline GradedIdeal ann_in_ring(const GradedSubmodule& n) {
  return make_ideal(n.module->ring(), ann_in_ring(*n.module, n.elements));
}

// Ann_M(I) = {x : Ix = 0}.
inline ElementSet ann_in_module(const GradedModule& m, const ElementSet& ideal) {
  ElementSet out;
  const auto members = ideal.to_vector();
  for (Element x = 0; x < m.size(); ++x) {
    bool killed = true;
    for (auto r : members)
      if (m.act(r, x) != m.zero()) {
        killed = false;
        break;
      }
    if (killed) out.insert(x);
  }
  return out;
}

inline GradedSubmodule ann_in_module(const GradedModule& m, const GradedIdeal& ideal) {
  return make_submodule(m, ann_in_module(m, ideal.elements));
}

// Ann_{h(R)}(M).
inline ElementSet ann_hom(const GradedModule& m) { return ann_in_ring(m, m.all()) & m.ring().homogeneous(); }

// rS.
inline ElementSet scaled(const GradedModule& m, Element r, const ElementSet& s) {
  ElementSet out;
  s.for_each([&](std::size_t x) { out.insert(m.act(r, x)); });
  return out;
}

// Nonzero, and rS is S or 0 for every homogeneous r.
inline bool is_second(const GradedModule& m, const ElementSet& s) {
  if (s.count() <= 1) return false;
  for (auto r : m.ring().homogeneous_list()) {
    const auto img = scaled(m, r, s);
    if (img != s && img.count() != 1) return false;
  }
  return true;
}

inline bool is_second(const GradedSubmodule& s) { return is_second(*s.module, s.elements); }

/// Spec^s_G(M) with its Zariski topology and all per-submodule data the
/// theorem suites need.
///
/// Submodules are indexed by their canonical position in `submodules()`;
/// points index into `points()`.
class SecondSpectrum {
 public:
  SecondSpectrum() = default;
  explicit SecondSpectrum(std::shared_ptr<const GradedModule> module, const Limits& limits = {})
      : module_(std::move(module)) {
    const GradedModule& m = *module_;
    submodules_ = enumerate_graded_submodules(m, limits.max_lattice);
    for (std::size_t i = 0; i < submodules_.size(); ++i) {
      index_.emplace(submodules_[i].elements, i);
      anns_.push_back(ann_in_ring(m, submodules_[i].elements));
      if (is_second(m, submodules_[i].elements)) {
        point_submodule_.push_back(i);
        points_.push_back(submodules_[i]);
      }
    }

    std::vector<ClosedSet> closed;
    for (const auto& n : submodules_) {
      auto v = v_s(n.elements);
      star_.push_back(v_s_star(n.elements));
      closed.push_back({std::move(v), n.elements});
    }
    std::vector<BasicOpen> basis;
    for (auto r : m.ring().homogeneous_list())
      basis.push_back({r, PointSet::full(points_.size()) - v_s(ann_in_module(m, principal_ideal(m.ring(), r)))});
    topology_ = SpectrumTopology(points_.size(), std::move(closed), std::move(basis));
  }

  const GradedModule& module() const { return *module_; }
  const std::shared_ptr<const GradedModule>& module_ptr() const { return module_; }
  const GradedRing& ring() const { return module_->ring(); }

  const std::vector<GradedSubmodule>& submodules() const { return submodules_; }
  std::optional<std::size_t> find(const ElementSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  // Ann_R of the i-th submodule.
  const ElementSet& ann(std::size_t i) const { return anns_[i]; }
  ElementSet ann(const ElementSet& n) const {
    if (auto i = find(n)) return anns_[*i];
    return ann_in_ring(*module_, n);
  }

  const std::vector<GradedSubmodule>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool is_secondless() const { return points_.empty(); }
  const ElementSet& point_ann(std::size_t p) const { return anns_[point_submodule_[p]]; }
  std::optional<std::size_t> point_index(const ElementSet& s) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i].elements == s) return i;
    return std::nullopt;
  }

  const SpectrumTopology& topology() const { return topology_; }
  const std::vector<BasicOpen>& basic_open_sets() const { return topology_.basis(); }
  // V^{s*}(N) for every submodule, aligned with `submodules()`.
  const std::vector<PointSet>& star_family() const { return star_; }
  PointSet empty_set() const { return PointSet(points_.size()); }

  // Points S with Ann_R(N) <= Ann_R(S).
  PointSet v_s(const ElementSet& n) const {
    const ElementSet a = ann(n);
    PointSet out(points_.size());
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (a.is_subset_of(point_ann(p))) out.insert(p);
    return out;
  }

  // Points S with S <= N.
  PointSet v_s_star(const ElementSet& n) const {
    PointSet out(points_.size());
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (points_[p].elements.is_subset_of(n)) out.insert(p);
    return out;
  }

  // T(Y): sum of the members of Y, 0 when Y is empty.
  ElementSet members_sum(const PointSet& y) const {
    ElementSet out;
    out.insert(module_->zero());
    y.for_each([&](std::size_t p) { out = submodule_sum(*module_, out, points_[p].elements); });
    return out;
  }

  ElementSet second_socle(const ElementSet& n) const { return members_sum(v_s_star(n)); }
  ElementSet zariski_socle(const ElementSet& n) const { return members_sum(v_s(n)); }

  // The same two socles straight from their definitions: a scan of the whole
  // submodule lattice, testing the second condition afresh.
  ElementSet second_socle_raw(const ElementSet& n) const {
    ElementSet out;
    out.insert(module_->zero());
    for (const auto& s : submodules_)
      if (s.elements.is_subset_of(n) && is_second(*module_, s.elements))
        out = submodule_sum(*module_, out, s.elements);
    return out;
  }
  ElementSet zariski_socle_raw(const ElementSet& n) const {
    const ElementSet a = ann_in_ring(*module_, n);
    ElementSet out;
    out.insert(module_->zero());
    for (const auto& s : submodules_)
      if (is_second(*module_, s.elements) && a.is_subset_of(ann_in_ring(*module_, s.elements)))
        out = submodule_sum(*module_, out, s.elements);
    return out;
  }

  PointSet closure(const PointSet& y) const { return topology_.closure(y); }

  // {V^{s*}(N)} closed under pairwise union.
  bool is_cotop() const {
    std::unordered_map<PointSet, bool, BitSetHash> members;
    for (const auto& s : star_) members.emplace(s, true);
    for (const auto& a : star_)
      for (const auto& b : star_)
        if (!members.count(a | b)) return false;
    return true;
  }

 private:
  std::shared_ptr<const GradedModule> module_;
  std::vector<GradedSubmodule> submodules_;
  std::unordered_map<ElementSet, std::size_t, BitSetHash> index_;
  std::vector<ElementSet> anns_;
  std::vector<GradedSubmodule> points_;
  std::vector<std::size_t> point_submodule_;
  std::vector<PointSet> star_;
  SpectrumTopology topology_;
};

/// phi: Spec^s_G(M) -> Spec_G(R/Ann_R(M)), S -> Ann_R(S)/Ann_R(M).
///
/// `quotient_primes` holds the graded primes of R containing Ann_R(M),
/// aligned with the points of `codomain`.
struct NaturalMap {
  ElementSet annihilator;
  QuotientRing quotient;
  PrimeSpectrum codomain;
  std::vector<GradedIdeal> quotient_primes;
  std::vector<std::size_t> image;  // second point -> codomain point

  PointSet image_of(const PointSet& y) const {
    PointSet out(codomain.size());
    y.for_each([&](std::size_t p) { out.insert(image[p]); });
    return out;
  }
  PointSet preimage_of(const PointSet& z) const {
    PointSet out(image.size());
    for (std::size_t p = 0; p < image.size(); ++p)
      if (z.contains(image[p])) out.insert(p);
    return out;
  }
  bool is_surjective() const { return image_of(PointSet::full(image.size())).count() == codomain.size(); }
};

inline NaturalMap natural_map(const SecondSpectrum& ss, const Limits& limits = {}) {
  const GradedModule& m = ss.module();
  const GradedRing& r = m.ring();
  const ElementSet a = ann_in_ring(m, m.all());
  if (a.count() == r.size()) throw Error(ErrorKind::ZeroModule, "natural map needs a nonzero module");
  NaturalMap out{a, quotient_ring(r, make_ideal(r, a), limits), {}, {}, {}};
  out.codomain = PrimeSpectrum(out.quotient.ring, limits);
  for (const auto& p : out.codomain.points()) out.quotient_primes.push_back(make_ideal(r, out.quotient.preimage(p.elements)));
  for (std::size_t p = 0; p < ss.size(); ++p) {
    auto q = out.codomain.point_index(out.quotient.image(ss.point_ann(p)));
    if (!q) throw Error(ErrorKind::PreconditionFailed, "annihilator of a second submodule is not graded prime");
    out.image.push_back(*q);
  }
  return out;
}

// The zero module has no codomain for phi and is reported as not secondful.
inline bool is_secondful(const SecondSpectrum& ss, const Limits& limits = {}) {
  if (ss.module().size() == 1) return false;
  return natural_map(ss, limits).is_surjective();
}

struct ModulePredicates {
  bool is_faithful = false;
  bool is_comultiplication = false;
  bool is_weak_comultiplication = false;
  bool is_secondless = false;
};

// Submodules of the form Ann_M(I), I graded.
inline std::vector<ElementSet> annihilator_submodules(const GradedModule& m, const IdealLattice& lattice) {
  std::vector<ElementSet> out;
  for (const auto& i : lattice.ideals()) {
    auto s = ann_in_module(m, i.elements);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

inline ModulePredicates module_predicates(const SecondSpectrum& ss, const IdealLattice& lattice) {
  const GradedModule& m = ss.module();
  const auto anns = annihilator_submodules(m, lattice);
  auto realized = [&](const ElementSet& n) { return std::find(anns.begin(), anns.end(), n) != anns.end(); };
  ModulePredicates out;
  const ElementSet killers = ann_hom(m);
  out.is_faithful = killers.count() == 1;
  out.is_comultiplication = std::all_of(ss.submodules().begin(), ss.submodules().end(),
                                        [&](const GradedSubmodule& n) { return realized(n.elements); });
  out.is_secondless = ss.is_secondless();
  out.is_weak_comultiplication = out.is_secondless || std::all_of(ss.points().begin(), ss.points().end(),
                                                                  [&](const GradedSubmodule& s) {
                                                                    return realized(s.elements);
                                                                  });
  return out;
}

// N = Ann_M(Ann_R(N)) for every N (resp. every second point).
inline bool comultiplication_by_double_annihilator(const SecondSpectrum& ss) {
  for (std::size_t i = 0; i < ss.submodules().size(); ++i)
    if (ann_in_module(ss.module(), ss.ann(i)) != ss.submodules()[i].elements) return false;
  return true;
}

inline bool weak_comultiplication_by_double_annihilator(const SecondSpectrum& ss) {
  for (std::size_t p = 0; p < ss.size(); ++p)
    if (ann_in_module(ss.module(), ss.point_ann(p)) != ss.points()[p].elements) return false;
  return true;
}

/// Minimal-cardinality homogeneous J with Z.soc(N) = Z.soc(Ann_M(RJ)).
///
/// Ann_M(RJ) is the intersection of the Ann_M(Rr), r in J, so elements with
/// equal Ann_M(Rr) are interchangeable and those killing nothing are useless.
inline std::optional<std::vector<Element>> is_rfg_star_submodule(const SecondSpectrum& ss, const ElementSet& n) {
  const GradedModule& m = ss.module();
  const GradedRing& r = m.ring();
  const ElementSet target = ss.zariski_socle(n);
  std::vector<Element> cands;
  std::vector<ElementSet> cand_ann;
  for (auto h : r.homogeneous_list()) {
    if (h == r.zero()) continue;
    auto a = ann_in_module(m, principal_ideal(r, h));
    if (a == m.all() || std::find(cand_ann.begin(), cand_ann.end(), a) != cand_ann.end()) continue;
    cands.push_back(h);
    cand_ann.push_back(std::move(a));
  }
  std::optional<std::vector<Element>> found;
  for (std::size_t k = 0; k <= cands.size() && !found; ++k) {
    detail::for_each_combination(cands.size(), k, [&](const std::vector<std::size_t>& idx) {
      ElementSet a = m.all();
      for (auto i : idx) a &= cand_ann[i];
      if (ss.zariski_socle(a) != target) return false;
      std::vector<Element> chosen;
      for (auto i : idx) chosen.push_back(cands[i]);
      found = std::move(chosen);
      return true;
    });
  }
  return found;
}

/// S_i = Ann_M(p_i) over the minimal graded prime divisors p_i of
/// Gr(Ann_R(N)). Empty for N = 0.
inline std::vector<GradedSubmodule> zariski_socle_decomposition(const SecondSpectrum& ss, const PrimeSpectrum& rs,
                                                                const ElementSet& n, bool secondful,
                                                                bool weak_comultiplication) {
  if (!secondful) throw Error(ErrorKind::PreconditionFailed, "module is not secondful");
  if (!weak_comultiplication) throw Error(ErrorKind::PreconditionFailed, "module is not weak comultiplication");
  if (ss.zariski_socle(n) != n) throw Error(ErrorKind::PreconditionFailed, "N is not a Zariski socle submodule");
  const GradedModule& m = ss.module();
  const GradedRing& r = rs.ring();
  std::vector<GradedSubmodule> out;
  if (n.count() == 1) return out;
  const GradedIdeal radical = graded_radical(r, make_ideal(r, ss.ann(n)));
  for (const auto& p : rs.minimal_prime_divisors(radical)) out.push_back(ann_in_module(m, p));
  return out;
}

inline std::vector<GradedSubmodule> zariski_socle_decomposition(const SecondSpectrum& ss, const PrimeSpectrum& rs,
                                                                const ElementSet& n) {
  const bool secondful = is_secondful(ss);
  const auto preds = module_predicates(ss, rs.lattice());
  return zariski_socle_decomposition(ss, rs, n, secondful, preds.is_weak_comultiplication);
}

}  // namespace gradedspec
