#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gradedspec/ring.hpp"

namespace gradedspec {

/// Graded ideal of a GradedRing, with a homogeneous generator witness.
///
/// The owning ring is referenced, not owned; it must outlive the ideal.
struct GradedIdeal {
  const GradedRing* ring = nullptr;
  ElementSet elements;
  std::vector<Element> generators;

  bool contains(Element x) const { return elements.contains(x); }
  std::size_t size() const { return elements.count(); }
  bool is_subset_of(const GradedIdeal& o) const { return elements.is_subset_of(o.elements); }
  bool is_proper() const { return elements.count() != ring->size(); }

  friend bool operator==(const GradedIdeal& a, const GradedIdeal& b) {
    return a.ring == b.ring && a.elements == b.elements;
  }
};

// R * a.
inline ElementSet principal_ideal(const GradedRing& r, Element a) {
  ElementSet out;
  for (Element x = 0; x < r.size(); ++x) out.insert(r.mul(x, a));
  return out;
}

// A + B for additive subgroups: union of the cosets A + b.
template <class AddFn>
ElementSet subgroup_sum(const ElementSet& a, const ElementSet& b, AddFn add) {
  ElementSet out = a;
  const auto members = a.to_vector();
  b.for_each([&](std::size_t y) {
    if (out.contains(y)) return;
    for (auto x : members) out.insert(add(x, y));
  });
  return out;
}

inline ElementSet ideal_sum(const GradedRing& r, const ElementSet& a, const ElementSet& b) {
  return subgroup_sum(a, b, [&](Element x, Element y) { return r.add(x, y); });
}

// Ideal generated by an arbitrary element set (no homogeneity requirement).
inline ElementSet ideal_closure(const GradedRing& r, const ElementSet& gens) {
  ElementSet out;
  out.insert(r.zero());
  gens.for_each([&](std::size_t g) {
    if (!out.contains(g)) out = ideal_sum(r, out, principal_ideal(r, g));
  });
  return out;
}

/// Wraps a graded ideal's element set, deriving a generator witness greedily
/// from its homogeneous elements in canonical order.
inline GradedIdeal make_ideal(const GradedRing& r, const ElementSet& elements) {
  GradedIdeal out{&r, elements, {}};
  ElementSet span;
  span.insert(r.zero());
  for (auto h : r.homogeneous_list()) {
    if (!elements.contains(h) || span.contains(h)) continue;
    out.generators.push_back(h);
    span = ideal_sum(r, span, principal_ideal(r, h));
  }
  return out;
}

inline GradedIdeal zero_ideal(const GradedRing& r) {
  ElementSet z;
  z.insert(r.zero());
  return {&r, z, {}};
}

inline GradedIdeal unit_ideal(const GradedRing& r) { return {&r, r.all(), {r.one()}}; }

inline GradedIdeal ideal_generated(const GradedRing& r, std::span<const Element> gens) {
  ElementSet g;
  for (auto x : gens) {
    if (x >= r.size() || !r.is_homogeneous(x))
      throw Error(ErrorKind::NonHomogeneousGenerator, "generator " + std::to_string(x) + " is not homogeneous");
    g.insert(x);
  }
  return {&r, ideal_closure(r, g), std::vector<Element>(gens.begin(), gens.end())};
}

inline GradedIdeal ideal_generated(const GradedRing& r, std::initializer_list<Element> gens) {
  return ideal_generated(r, std::span<const Element>(gens.begin(), gens.size()));
}

inline bool is_ideal(const GradedRing& r, const ElementSet& s) {
  if (!s.contains(r.zero())) return false;
  bool ok = true;
  s.for_each([&](std::size_t a) {
    if (!ok) return;
    s.for_each([&](std::size_t b) {
      if (!s.contains(r.add(a, b))) ok = false;
    });
    for (Element x = 0; x < r.size() && ok; ++x)
      if (!s.contains(r.mul(x, a))) ok = false;
  });
  return ok;
}

inline bool is_graded_ideal(const GradedRing& r, const ElementSet& s) {
  if (!is_ideal(r, s)) return false;
  bool ok = true;
  s.for_each([&](std::size_t x) {
    for (GroupElement g = 0; g < r.group().order(); ++g)
      if (!s.contains(r.component_of(x, g))) ok = false;
  });
  return ok;
}

/// Every graded ideal of R, obtained as the closure of the homogeneous
/// principal ideals under ideal sum. Sorted canonically.
inline std::vector<GradedIdeal> enumerate_graded_ideals(const GradedRing& r, std::size_t max_lattice = 4096) {
  std::vector<ElementSet> principals;
  for (auto h : r.homogeneous_list()) {
    auto p = principal_ideal(r, h);
    if (std::find(principals.begin(), principals.end(), p) == principals.end()) principals.push_back(p);
  }
  ElementSet zero;
  zero.insert(r.zero());
  std::vector<ElementSet> found{zero};
  std::unordered_map<ElementSet, std::size_t, BitSetHash> seen{{zero, 0}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& p : principals) {
      if (p.is_subset_of(found[i])) continue;
      auto s = ideal_sum(r, found[i], p);
      if (seen.emplace(s, found.size()).second) {
        found.push_back(s);
        if (found.size() > max_lattice)
          throw Error(ErrorKind::SizeExceeded, "graded ideal lattice exceeds " + std::to_string(max_lattice));
      }
    }
  }
  std::sort(found.begin(), found.end(), CanonicalLess{});
  std::vector<GradedIdeal> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(make_ideal(r, s));
  return out;
}

enum class CombineMode { Sum, Product, Intersection };

inline GradedIdeal ideal_combine(CombineMode mode, const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ring != b.ring) throw Error(ErrorKind::RingMismatch, "ideals belong to different rings");
  const GradedRing& r = *a.ring;
  switch (mode) {
    case CombineMode::Sum:
      return make_ideal(r, ideal_sum(r, a.elements, b.elements));
    case CombineMode::Intersection:
      return make_ideal(r, a.elements & b.elements);
    case CombineMode::Product: {
      // A graded ideal is generated by its homogeneous members, so products of
      // homogeneous members generate AB.
      ElementSet products;
      const auto ha = (a.elements & r.homogeneous()).to_vector();
      const auto hb = (b.elements & r.homogeneous()).to_vector();
      for (auto x : ha)
        for (auto y : hb) products.insert(r.mul(x, y));
      return make_ideal(r, ideal_closure(r, products));
    }
  }
  return a;
}

// Homogeneous elements some positive power of which lies in `s`. Exponents
// 1..|R| suffice: the power sequence of a repeats within |R| steps.
inline ElementSet homogeneous_radical_members(const GradedRing& r, const ElementSet& s) {
  ElementSet out;
  for (auto h : r.homogeneous_list()) {
    Element x = h;
    for (std::size_t k = 1; k <= r.size(); ++k) {
      if (s.contains(x)) {
        out.insert(h);
        break;
      }
      x = r.mul(x, h);
    }
  }
  return out;
}

/// Gr(I): elements all of whose homogeneous components have a power in I.
inline GradedIdeal graded_radical(const GradedRing& r, const GradedIdeal& ideal) {
  const ElementSet rooted = homogeneous_radical_members(r, ideal.elements);
  ElementSet out;
  for (Element x = 0; x < r.size(); ++x) {
    bool all = true;
    for (GroupElement g = 0; g < r.group().order() && all; ++g) all = rooted.contains(r.component_of(x, g));
    if (all) out.insert(x);
  }
  return make_ideal(r, out);
}

// r in sqrt(I) for a homogeneous r; the only radical membership exposed.
inline bool homogeneous_in_radical(const GradedRing& r, const GradedIdeal& ideal, Element h) {
  if (!r.is_homogeneous(h)) throw Error(ErrorKind::NonHomogeneousGenerator, "element is not homogeneous");
  return homogeneous_radical_members(r, ideal.elements).contains(h);
}

/// Element-level criterion: I proper and ab in I => a in I or b in I for
/// homogeneous a, b.
inline bool is_graded_prime(const GradedRing& r, const GradedIdeal& ideal) {
  if (!ideal.is_proper()) return false;
  const auto& hom = r.homogeneous_list();
  for (std::size_t i = 0; i < hom.size(); ++i) {
    if (ideal.contains(hom[i])) continue;
    for (std::size_t j = i; j < hom.size(); ++j) {
      if (ideal.contains(hom[j])) continue;
      if (ideal.contains(r.mul(hom[i], hom[j]))) return false;
    }
  }
  return true;
}

/// Ideal-level criterion over a graded-ideal lattice: AB <= I implies
/// A <= I or B <= I.
inline bool is_graded_prime_by_ideals(const GradedIdeal& ideal, std::span<const GradedIdeal> lattice) {
  if (!ideal.is_proper()) return false;
  std::vector<const GradedIdeal*> outside;
  for (const auto& a : lattice)
    if (!a.is_subset_of(ideal)) outside.push_back(&a);
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i; j < outside.size(); ++j)
      if (ideal_combine(CombineMode::Product, *outside[i], *outside[j]).is_subset_of(ideal)) return false;
  return true;
}

inline std::vector<GradedIdeal> maximal_proper(std::span<const GradedIdeal> lattice) {
  std::vector<GradedIdeal> out;
  for (const auto& a : lattice) {
    if (!a.is_proper()) continue;
    bool maximal = true;
    for (const auto& b : lattice)
      if (b.is_proper() && a.elements != b.elements && a.is_subset_of(b)) maximal = false;
    if (maximal) out.push_back(a);
  }
  return out;
}

inline std::vector<GradedIdeal> max_spectrum(const GradedRing& r) {
  const auto lattice = enumerate_graded_ideals(r);
  return maximal_proper(lattice);
}

inline GradedIdeal intersect_all(const GradedRing& r, std::span<const GradedIdeal> ideals) {
  ElementSet out = r.all();
  for (const auto& i : ideals) out &= i.elements;
  return make_ideal(r, out);
}

/// J_G(R), the intersection of the graded maximal ideals.
inline GradedIdeal graded_jacobson_radical(const GradedRing& r) {
  const auto maxes = max_spectrum(r);
  return intersect_all(r, maxes);
}

/// J(R_e): intersection of the maximal ideals of the (ungraded) subring R_e.
inline ElementSet jacobson_radical_e(const GradedRing& r) {
  const ElementSet re = r.component(r.group().identity());
  const auto members = re.to_vector();
  auto principal_e = [&](Element a) {
    ElementSet out;
    for (auto x : members) out.insert(r.mul(x, a));
    return out;
  };
  std::vector<ElementSet> principals;
  for (auto a : members) principals.push_back(principal_e(a));
  ElementSet zero;
  zero.insert(r.zero());
  std::vector<ElementSet> ideals{zero};
  std::unordered_map<ElementSet, bool, BitSetHash> seen{{zero, true}};
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (const auto& p : principals) {
      auto s = ideal_sum(r, ideals[i], p);
      if (seen.emplace(s, true).second) ideals.push_back(s);
    }
  ElementSet out = re;
  for (const auto& a : ideals) {
    if (a == re) continue;
    bool maximal = true;
    for (const auto& b : ideals)
      if (b != re && b != a && a.is_subset_of(b)) maximal = false;
    if (maximal) out &= a;
  }
  return out;
}

inline bool is_graded_field(const GradedRing& r) { return enumerate_graded_ideals(r).size() == 2; }

/// R/I with its induced grading. Elements of the quotient are cosets, indexed
/// by the order of their smallest representative.
struct QuotientRing {
  std::shared_ptr<const GradedRing> ring;
  std::vector<Element> projection;  // element of R -> element of R/I
  std::vector<Element> lift;        // element of R/I -> smallest representative

  ElementSet image(const ElementSet& s) const {
    ElementSet out;
    s.for_each([&](std::size_t x) { out.insert(projection[x]); });
    return out;
  }
  ElementSet preimage(const ElementSet& s) const {
    ElementSet out;
    for (std::size_t x = 0; x < projection.size(); ++x)
      if (s.contains(projection[x])) out.insert(x);
    return out;
  }
};

inline QuotientRing quotient_ring(const GradedRing& r, const GradedIdeal& ideal, const Limits& limits = {}) {
  if (!ideal.is_proper()) throw Error(ErrorKind::ImproperIdeal, "cannot form R/I with I = R");
  const std::size_t n = r.size();
  std::vector<Element> proj(n, n);
  std::vector<Element> lift;
  for (Element x = 0; x < n; ++x) {
    if (proj[x] != n) continue;
    const Element id = lift.size();
    lift.push_back(x);
    ideal.elements.for_each([&](std::size_t i) { proj[r.add(x, i)] = id; });
  }
  const std::size_t m = lift.size();
  GradedRing::Tables t;
  t.size = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      t.add[a * m + b] = static_cast<std::uint8_t>(proj[r.add(lift[a], lift[b])]);
      t.mul[a * m + b] = static_cast<std::uint8_t>(proj[r.mul(lift[a], lift[b])]);
    }
  t.zero = proj[r.zero()];
  t.one = proj[r.one()];
  for (GroupElement g = 0; g < r.group().order(); ++g) {
    std::vector<Element> comp;
    ElementSet seen;
    r.component(g).for_each([&](std::size_t x) {
      if (!seen.contains(proj[x])) {
        seen.insert(proj[x]);
        comp.push_back(proj[x]);
      }
    });
    std::sort(comp.begin(), comp.end());
    t.components.push_back(std::move(comp));
  }
  for (auto x : lift) t.labels.push_back("[" + r.label(x) + "]");
  Limits inner = limits;
  inner.max_ring_order = std::max(inner.max_ring_order, m);
  auto q = std::make_shared<const GradedRing>(GradedRing::from_tables(r.group(), std::move(t), inner));
  return {std::move(q), std::move(proj), std::move(lift)};
}

}  // namespace gradedspec
