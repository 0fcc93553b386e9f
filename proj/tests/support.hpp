#pragma once

#include <memory>
#include <vector>

#include "gradedspec.hpp"

namespace gs = gradedspec;

namespace testing_support {

inline std::shared_ptr<const gs::GradedRing> make_ring(gs::RingDesc desc, std::vector<std::size_t> factors) {
  return std::make_shared<const gs::GradedRing>(gs::build_ring(desc, gs::FiniteAbelianGroup(std::move(factors))));
}

inline std::shared_ptr<const gs::GradedRing> ring_a() { return make_ring({gs::ring_desc::ZMod{4}}, {2}); }
inline std::shared_ptr<const gs::GradedRing> ring_b() {
  return make_ring({gs::ring_desc::TruncatedPoly{2, 2, {1}}}, {2});
}
inline std::shared_ptr<const gs::GradedRing> ring_c() { return make_ring({gs::ring_desc::GroupAlgebra{2}}, {2}); }
inline std::shared_ptr<const gs::GradedRing> ring_d() { return make_ring({gs::ring_desc::ZMod{6}}, {}); }

inline std::shared_ptr<const gs::GradedModule> make_module(const std::shared_ptr<const gs::GradedRing>& r,
                                                          gs::ModuleDesc desc) {
  return std::make_shared<const gs::GradedModule>(gs::build_module(desc, r));
}

// Z_2 x Z_2 over Z_4 graded by Z_2, M_0 = {0} x Z_2, M_1 = Z_2 x {0}.
inline std::shared_ptr<const gs::GradedModule> module_a() {
  return make_module(ring_a(), {gs::module_desc::ScalarMod{{2, 2}, {{1}, {0}}}});
}

// F x F over F = Z_2 graded by Z_2, M_0 = F x {0}, M_1 = {0} x F.
inline std::shared_ptr<const gs::GradedModule> module_b() {
  return make_module(make_ring({gs::ring_desc::ZMod{2}}, {2}), {gs::module_desc::ScalarMod{{2, 2}, {{0}, {1}}}});
}

inline gs::ElementSet set_of(std::initializer_list<std::size_t> xs) {
  gs::ElementSet s;
  for (auto x : xs) s.insert(x);
  return s;
}

// Oracles below work straight from the tables and never call the library's
// own lattice or radical code.

inline std::vector<gs::ElementSet> all_subsets(std::size_t n) {
  std::vector<gs::ElementSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    gs::ElementSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.insert(i);
    out.push_back(s);
  }
  return out;
}

inline bool oracle_is_graded_ideal(const gs::GradedRing& r, const gs::ElementSet& s) {
  if (!s.contains(r.zero())) return false;
  for (std::size_t a = 0; a < r.size(); ++a) {
    if (!s.contains(a)) continue;
    for (std::size_t b = 0; b < r.size(); ++b) {
      if (s.contains(b) && !s.contains(r.add(a, b))) return false;
      if (!s.contains(r.mul(a, b))) return false;
    }
    for (gs::GroupElement g = 0; g < r.group().order(); ++g)
      if (!s.contains(r.component_of(a, g))) return false;
  }
  return true;
}

// Graded ideals by scanning every subset (carriers up to 16 elements).
inline std::vector<gs::ElementSet> oracle_graded_ideals(const gs::GradedRing& r) {
  std::vector<gs::ElementSet> out;
  for (const auto& s : all_subsets(r.size()))
    if (oracle_is_graded_ideal(r, s)) out.push_back(s);
  return out;
}

inline bool oracle_power_in(const gs::GradedRing& r, std::size_t x, const gs::ElementSet& i) {
  std::size_t p = x;
  for (std::size_t k = 1; k <= r.size() + 1; ++k) {
    if (i.contains(p)) return true;
    p = r.mul(p, x);
  }
  return false;
}

inline gs::ElementSet oracle_radical(const gs::GradedRing& r, const gs::ElementSet& i) {
  gs::ElementSet out;
  for (std::size_t x = 0; x < r.size(); ++x) {
    bool all = true;
    for (gs::GroupElement g = 0; g < r.group().order(); ++g)
      if (!oracle_power_in(r, r.component_of(x, g), i)) all = false;
    if (all) out.insert(x);
  }
  return out;
}

inline bool oracle_is_graded_prime(const gs::GradedRing& r, const gs::ElementSet& p) {
  if (p.count() == r.size()) return false;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b)
      if (r.is_homogeneous(a) && r.is_homogeneous(b) && p.contains(r.mul(a, b)) && !p.contains(a) && !p.contains(b))
        return false;
  return true;
}

inline bool oracle_is_graded_submodule(const gs::GradedModule& m, const gs::ElementSet& s) {
  if (!s.contains(m.zero())) return false;
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (!s.contains(a)) continue;
    for (std::size_t b = 0; b < m.size(); ++b)
      if (s.contains(b) && !s.contains(m.add(a, b))) return false;
    for (std::size_t r = 0; r < m.ring().size(); ++r)
      if (!s.contains(m.act(r, a))) return false;
    for (gs::GroupElement g = 0; g < m.ring().group().order(); ++g)
      if (!s.contains(m.component_of(a, g))) return false;
  }
  return true;
}

inline std::vector<gs::ElementSet> oracle_graded_submodules(const gs::GradedModule& m) {
  std::vector<gs::ElementSet> out;
  for (const auto& s : all_subsets(m.size()))
    if (oracle_is_graded_submodule(m, s)) out.push_back(s);
  return out;
}

inline bool oracle_is_second(const gs::GradedModule& m, const gs::ElementSet& s) {
  if (s.count() < 2) return false;
  for (std::size_t r = 0; r < m.ring().size(); ++r) {
    if (!m.ring().is_homogeneous(r)) continue;
    gs::ElementSet img;
    for (std::size_t x = 0; x < m.size(); ++x)
      if (s.contains(x)) img.insert(m.act(r, x));
    if (img != s && img.count() != 1) return false;
  }
  return true;
}

inline gs::ElementSet oracle_sum(const gs::GradedModule& m, const gs::ElementSet& a, const gs::ElementSet& b) {
  gs::ElementSet out;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y)
      if (a.contains(x) && b.contains(y)) out.insert(m.add(x, y));
  return out;
}

}  // namespace testing_support
