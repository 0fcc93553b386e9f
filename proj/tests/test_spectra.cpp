#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;
using gs::ElementSet;
using gs::PointSet;

namespace {

std::vector<ElementSet> point_sets(const gs::PrimeSpectrum& s) {
  std::vector<ElementSet> out;
  for (const auto& p : s.points()) out.push_back(p.elements);
  return out;
}

PointSet points(const gs::PrimeSpectrum& s, std::initializer_list<std::size_t> xs) {
  PointSet out(s.size());
  for (auto x : xs) out.insert(x);
  return out;
}

// Every subset of the point set, as closed-set oracle input.
std::vector<PointSet> all_point_subsets(std::size_t n) {
  std::vector<PointSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    PointSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.insert(i);
    out.push_back(s);
  }
  return out;
}

// Irreducibility from the definition: no two closed sets C1, C2 with
// Y <= C1 u C2 and Y not inside either.
bool oracle_irreducible(const gs::SpectrumTopology& t, const PointSet& y) {
  if (y.empty()) return false;
  for (const auto& a : t.closed_sets())
    for (const auto& b : t.closed_sets())
      if (y.is_subset_of(a.points | b.points) && !y.is_subset_of(a.points) && !y.is_subset_of(b.points)) return false;
  return true;
}

std::vector<std::shared_ptr<const gs::GradedRing>> sample_rings() {
  return {
      ring_a(),
      ring_b(),
      ring_c(),
      ring_d(),
      make_ring({gs::ring_desc::ZMod{30}}, {}),
      make_ring({gs::ring_desc::ZMod{12}}, {2}),
      make_ring({gs::ring_desc::GroupAlgebra{2}}, {2, 2}),
      make_ring({gs::ring_desc::GroupAlgebra{3}}, {2}),
      make_ring({gs::ring_desc::TruncatedPoly{2, 3, {1}}}, {3}),
      make_ring({gs::ring_desc::Product{{{gs::ring_desc::TruncatedPoly{2, 2, {1}}}, {gs::ring_desc::ZMod{3}}}}}, {2}),
      make_ring({gs::ring_desc::Product{{{gs::ring_desc::ZMod{2}}, {gs::ring_desc::ZMod{2}}, {gs::ring_desc::ZMod{2}}}}},
                {}),
  };
}

}  // namespace

TEST(PrimeSpectrum, PointsMatchExamples) {
  EXPECT_EQ(point_sets(gs::PrimeSpectrum(ring_a())), (std::vector<ElementSet>{set_of({0, 2})}));
  EXPECT_EQ(point_sets(gs::PrimeSpectrum(ring_c())), (std::vector<ElementSet>{set_of({0})}));
  EXPECT_EQ(point_sets(gs::PrimeSpectrum(ring_d())), (std::vector<ElementSet>{set_of({0, 3}), set_of({0, 2, 4})}));
  for (const auto& r : sample_rings()) {
    const gs::PrimeSpectrum s(r);
    EXPECT_FALSE(s.points().empty());
    if (r->size() > 16) continue;
    std::vector<ElementSet> want;
    for (const auto& i : oracle_graded_ideals(*r))
      if (oracle_is_graded_prime(*r, i)) want.push_back(i);
    std::sort(want.begin(), want.end(), gs::CanonicalLess{});
    EXPECT_EQ(point_sets(s), want);
  }
}

TEST(PrimeSpectrum, VarietyAndXi) {
  auto d = ring_d();
  const gs::PrimeSpectrum s(d);
  // Points: (3) = {0,3} first, then (2) = {0,2,4}.
  EXPECT_EQ(s.variety(gs::ideal_generated(*d, {2})), points(s, {1}));
  EXPECT_EQ(s.variety(gs::zero_ideal(*d)), points(s, {0, 1}));
  EXPECT_TRUE(s.variety(gs::unit_ideal(*d)).empty());
  EXPECT_EQ(s.xi(points(s, {1})).elements, set_of({0, 2, 4}));
  EXPECT_EQ(s.closure(points(s, {1})), points(s, {1}));
  EXPECT_EQ(s.xi(s.empty_set()).elements, d->all());
  EXPECT_TRUE(s.closure(s.empty_set()).empty());
  EXPECT_EQ(s.xi(points(s, {0, 1})).elements, set_of({0}));
  EXPECT_EQ(s.closure(points(s, {0, 1})), points(s, {0, 1}));
}

TEST(PrimeSpectrum, ClosureIsSmallestClosedSuperset) {
  for (const auto& r : sample_rings()) {
    const gs::PrimeSpectrum s(r);
    const auto& t = s.topology();
    EXPECT_TRUE(t.axioms_hold());
    for (const auto& y : all_point_subsets(s.size())) {
      const auto cl = s.closure(y);
      EXPECT_EQ(cl, t.closure(y));
      EXPECT_TRUE(t.is_closed(cl));
      EXPECT_TRUE(y.is_subset_of(cl));
      for (const auto& c : t.closed_sets()) {
        if (y.is_subset_of(c.points)) {
          EXPECT_TRUE(cl.is_subset_of(c.points));
        }
      }
    }
    // Every closed set is V of its tagged defining ideal.
    for (const auto& c : t.closed_sets()) EXPECT_EQ(s.variety(c.defining), c.points);
  }
}

TEST(PrimeSpectrum, Irreducibility) {
  auto d = ring_d();
  const gs::PrimeSpectrum s(d);
  EXPECT_TRUE(s.is_irreducible(points(s, {0})));
  EXPECT_FALSE(s.is_irreducible(points(s, {0, 1})));
  EXPECT_FALSE(s.is_irreducible(s.empty_set()));
  for (const auto& r : sample_rings()) {
    const gs::PrimeSpectrum sp(r);
    for (const auto& y : all_point_subsets(sp.size())) EXPECT_EQ(sp.is_irreducible(y), oracle_irreducible(sp.topology(), y));
    // Closed irreducible sets are exactly the V(p).
    for (const auto& c : sp.topology().closed_sets()) {
      bool is_vp = false;
      for (const auto& p : sp.points()) is_vp = is_vp || sp.variety(p) == c.points;
      EXPECT_EQ(sp.is_irreducible(c.points), is_vp);
      EXPECT_EQ(sp.is_irreducible(c.points), !c.points.empty() && gs::is_graded_prime(*r, sp.xi(c.points)));
    }
  }
}

TEST(PrimeSpectrum, MinimalDivisorsAndComponents) {
  auto d = ring_d();
  const gs::PrimeSpectrum s(d);
  const auto divisors = s.minimal_prime_divisors(gs::zero_ideal(*d));
  ASSERT_EQ(divisors.size(), 2U);
  EXPECT_EQ(divisors[0].elements, set_of({0, 3}));
  EXPECT_EQ(divisors[1].elements, set_of({0, 2, 4}));
  EXPECT_EQ(s.irreducible_components_of_variety(gs::zero_ideal(*d)),
            (std::vector<PointSet>{points(s, {0}), points(s, {1})}));

  auto a = ring_a();
  const gs::PrimeSpectrum sa(a);
  ASSERT_EQ(sa.minimal_prime_divisors(gs::zero_ideal(*a)).size(), 1U);
  EXPECT_EQ(sa.minimal_prime_divisors(gs::zero_ideal(*a))[0].elements, set_of({0, 2}));

  for (const auto& r : sample_rings()) {
    const gs::PrimeSpectrum sp(r);
    for (const auto& p : sp.points()) {
      ASSERT_EQ(sp.minimal_prime_divisors(p).size(), 1U);
      EXPECT_EQ(sp.minimal_prime_divisors(p)[0], p);
    }
    for (const auto& i : sp.lattice().ideals()) {
      auto comps = sp.irreducible_components_of_variety(i);
      auto direct = sp.topology().irreducible_components(sp.variety(i));
      std::sort(comps.begin(), comps.end(), gs::CanonicalLess{});
      std::sort(direct.begin(), direct.end(), gs::CanonicalLess{});
      EXPECT_EQ(comps, direct);
      if (i.is_proper()) {
        EXPECT_FALSE(sp.minimal_prime_divisors(i).empty());
      }
    }
  }
}

TEST(PrimeSpectrum, RadicalDecomposition) {
  auto d = ring_d();
  const gs::PrimeSpectrum s(d);
  EXPECT_EQ(s.radical_decomposition(gs::zero_ideal(*d)).size(), 2U);
  EXPECT_TRUE(s.radical_decomposition(gs::unit_ideal(*d)).empty());
  auto b = ring_b();
  const gs::PrimeSpectrum sb(b);
  ASSERT_EQ(sb.radical_decomposition(gs::zero_ideal(*b)).size(), 1U);
  EXPECT_EQ(sb.radical_decomposition(gs::zero_ideal(*b))[0].elements, set_of({0, 2}));
  for (const auto& r : sample_rings()) {
    const gs::PrimeSpectrum sp(r);
    for (const auto& i : sp.lattice().ideals()) {
      if (!i.is_proper()) continue;
      const auto parts = sp.radical_decomposition(i);
      EXPECT_EQ(gs::intersect_all(*r, parts).elements, oracle_radical(*r, i.elements));
    }
  }
}

TEST(RfgIdeal, MinimalWitnesses) {
  // Gr(0) = (u) already, so the empty set is the smallest witness; {u} also works.
  auto b = ring_b();
  EXPECT_EQ(gs::is_rfg_ideal(*b, gs::ideal_generated(*b, {2})), (std::vector<gs::Element>{}));
  EXPECT_EQ(gs::graded_radical(*b, gs::ideal_generated(*b, {2})).elements, set_of({0, 2}));
  EXPECT_EQ(gs::is_rfg_ideal(*b, gs::zero_ideal(*b)), (std::vector<gs::Element>{}));
  auto d = ring_d();
  EXPECT_EQ(gs::is_rfg_ideal(*d, gs::ideal_generated(*d, {2})), (std::vector<gs::Element>{2}));
  for (const auto& r : sample_rings()) {
    for (const auto& i : gs::enumerate_graded_ideals(*r)) {
      auto w = gs::is_rfg_ideal(*r, i);
      ASSERT_TRUE(w.has_value());
      ElementSet gens;
      for (auto x : *w) {
        EXPECT_TRUE(i.contains(x));
        EXPECT_TRUE(r->is_homogeneous(x));
        gens.insert(x);
      }
      EXPECT_EQ(oracle_radical(*r, gs::ideal_closure(*r, gens)), oracle_radical(*r, i.elements));
    }
  }
}

TEST(RfgIdeal, WitnessIsMinimalByExhaustiveSearch) {
  for (const auto& r : {ring_b(), ring_d(), make_ring({gs::ring_desc::ZMod{12}}, {}),
                        make_ring({gs::ring_desc::Product{{{gs::ring_desc::ZMod{2}}, {gs::ring_desc::ZMod{2}},
                                                           {gs::ring_desc::ZMod{2}}}}},
                                  {})}) {
    for (const auto& i : gs::enumerate_graded_ideals(*r)) {
      const auto w = gs::is_rfg_ideal(*r, i);
      ASSERT_TRUE(w.has_value());
      const auto target = oracle_radical(*r, i.elements);
      const auto members = (i.elements & r->homogeneous()).to_vector();
      std::size_t best = members.size() + 1;
      for (std::size_t mask = 0; mask < (std::size_t{1} << members.size()); ++mask) {
        ElementSet gens;
        for (std::size_t k = 0; k < members.size(); ++k)
          if (mask >> k & 1U) gens.insert(members[k]);
        if (oracle_radical(*r, gs::ideal_closure(*r, gens)) == target) best = std::min(best, gens.count());
      }
      EXPECT_EQ(w->size(), best);
    }
  }
}

TEST(Topology, ClosedSetsBasisAndNoetherian) {
  auto d = ring_d();
  const gs::PrimeSpectrum s(d);
  std::vector<PointSet> closed;
  for (const auto& c : s.topology().closed_sets()) closed.push_back(c.points);
  EXPECT_EQ(closed, (std::vector<PointSet>{s.empty_set(), points(s, {0}), points(s, {1}), points(s, {0, 1})}));
  EXPECT_TRUE(gs::is_noetherian_space(s.topology()));

  auto c = ring_c();
  const gs::PrimeSpectrum sc(c);
  EXPECT_EQ(sc.topology().closed_sets().size(), 2U);
  for (const auto& b : sc.basic_open_sets())
    EXPECT_EQ(b.points.count(), b.element == 0 ? 0U : 1U);

  for (const auto& r : sample_rings()) {
    const gs::PrimeSpectrum sp(r);
    EXPECT_TRUE(sp.topology().is_base());
    EXPECT_TRUE(sp.topology().every_open_compact());
    EXPECT_TRUE(sp.topology().has_dcc());
    EXPECT_TRUE(gs::is_noetherian_space(sp.topology()));
  }
}

TEST(Topology, LongestStrictChainDetectsCycles) {
  std::vector<PointSet> chain;
  for (std::size_t k = 0; k <= 3; ++k) {
    PointSet s(3);
    for (std::size_t i = 0; i < k; ++i) s.insert(i);
    chain.push_back(s);
  }
  EXPECT_EQ(gs::SpectrumTopology::longest_strict_chain(chain), 4U);

  // A relation with a cycle has no chain bound.
  struct Cyclic {
    int v;
    bool operator!=(const Cyclic& o) const { return v != o.v; }
    bool is_subset_of(const Cyclic& o) const { return (v + 1) % 3 == o.v; }
  };
  EXPECT_FALSE(gs::SpectrumTopology::longest_strict_chain(std::vector<Cyclic>{{0}, {1}, {2}}).has_value());
}
