#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gradedspec/io.hpp"

namespace gradedspec {

struct CorpusBounds {
  std::size_t max_ring_order = 8;
  std::size_t max_module_order = 16;
  std::size_t max_group_order = 4;
  std::size_t count = 50;
  // Instances whose ideal or submodule lattice is larger are discarded.
  std::size_t max_lattice = 256;
};

struct Corpus {
  std::vector<LoadedInstance> instances;
  std::size_t curated = 0;
  std::size_t systematic = 0;
  std::size_t random = 0;
  std::size_t discarded_invalid = 0;
  std::size_t discarded_lattice = 0;
  std::vector<std::string> notes;
};

/// Deterministic generator: mt19937_64 with hand-rolled bounded draws so the
/// stream does not depend on the standard library's distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return static_cast<std::size_t>(x % n);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::string group_name(const std::vector<std::size_t>& g) {
  if (g.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "x" : "") + std::string("Z") + std::to_string(g[i]);
  return s;
}

inline std::string tuple_name(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

inline std::string ring_name(const RingDesc& d) {
  using namespace ring_desc;
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ZMod>) {
          return "Z" + std::to_string(n.n);
        } else if constexpr (std::is_same_v<T, GroupAlgebra>) {
          return "Z" + std::to_string(n.p) + "[G]";
        } else if constexpr (std::is_same_v<T, TruncatedPoly>) {
          return "Z" + std::to_string(n.p) + "[u]/u^" + std::to_string(n.d) + tuple_name(n.degree);
        } else if constexpr (std::is_same_v<T, Product>) {
          std::string s;
          for (std::size_t i = 0; i < n.factors.size(); ++i) s += (i ? "x" : "") + ring_name(n.factors[i]);
          return "(" + s + ")";
        } else if constexpr (std::is_same_v<T, Tables>) {
          return "T" + std::to_string(n.size);
        } else {
          return ring_name(*n.ring) + "/" + tuple_name(n.generators);
        }
      },
      d.node);
}

inline std::string module_name(const ModuleDesc& d) {
  using namespace module_desc;
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Self>) {
          return "R" + (n.shift.empty() ? std::string() : tuple_name(n.shift));
        } else if constexpr (std::is_same_v<T, ScalarMod>) {
          std::string s;
          for (std::size_t i = 0; i < n.factors.size(); ++i)
            s += (i ? "x" : "") + std::string("Z") + std::to_string(n.factors[i]) + tuple_name(n.degrees[i]);
          return s;
        } else if constexpr (std::is_same_v<T, module_desc::Tables>) {
          return "T" + std::to_string(n.factors.empty() ? n.size : n.action.empty() ? 0 : n.action[0].size());
        } else if constexpr (std::is_same_v<T, module_desc::Quotient>) {
          return module_name(*n.module) + "/" + tuple_name(n.generators);
        } else {
          std::string s;
          for (std::size_t i = 0; i < n.summands.size(); ++i) s += (i ? "+" : "") + module_name(n.summands[i]);
          return "(" + s + ")";
        }
      },
      d.node);
}

inline std::vector<std::vector<std::size_t>> group_elements(const std::vector<std::size_t>& factors) {
  FiniteAbelianGroup g(factors);
  std::vector<std::vector<std::size_t>> out;
  for (GroupElement x = 0; x < g.order(); ++x) out.push_back(g.tuple(x));
  return out;
}

inline std::size_t group_order(const std::vector<std::size_t>& factors) {
  std::size_t n = 1;
  for (auto f : factors) n *= f;
  return n;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::size_t power_or_cap(std::size_t p, std::size_t e, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= p;
    if (r > cap) return cap + 1;
  }
  return r;
}

struct RingCandidate {
  std::vector<std::size_t> group;
  RingDesc ring;
};

// Grading groups used by the systematic pool.
inline std::vector<std::vector<std::size_t>> pool_groups(std::size_t max_group) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::vector<std::size_t> g : std::vector<std::vector<std::size_t>>{{2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}})
    if (group_order(g) <= max_group) out.push_back(g);
  return out;
}

inline std::vector<RingCandidate> systematic_rings(const CorpusBounds& b) {
  using namespace ring_desc;
  std::vector<RingCandidate> out;
  const auto groups = pool_groups(b.max_group_order);
  const bool has_z2 = b.max_group_order >= 2;
  for (std::size_t n = 2; n <= b.max_ring_order; ++n) {
    out.push_back({{}, {ZMod{n}}});
    if (has_z2) out.push_back({{2}, {ZMod{n}}});
  }
  for (std::size_t p = 2; p <= b.max_ring_order; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t d = 2; power_or_cap(p, d, b.max_ring_order) <= b.max_ring_order; ++d)
      for (const auto& g : groups) {
        if (g.size() != 1) continue;
        for (std::size_t deg = 1; deg < g[0]; ++deg) out.push_back({g, {TruncatedPoly{p, d, {deg}}}});
      }
    for (const auto& g : groups) {
      if (g.empty()) continue;
      if (power_or_cap(p, group_order(g), b.max_ring_order) <= b.max_ring_order) out.push_back({g, {GroupAlgebra{p}}});
    }
  }
  // Products of small factors over the same Z_2-grading.
  if (has_z2) {
    std::vector<std::pair<RingDesc, std::size_t>> base{
        {{ZMod{2}}, 2}, {{ZMod{3}}, 3}, {{ZMod{4}}, 4}, {{TruncatedPoly{2, 2, {1}}}, 4}, {{GroupAlgebra{2}}, 4},
        {{GroupAlgebra{3}}, 9}, {{TruncatedPoly{3, 2, {1}}}, 9}, {{TruncatedPoly{2, 3, {1}}}, 8}, {{ZMod{5}}, 5},
    };
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i; j < base.size(); ++j)
        if (base[i].second * base[j].second <= b.max_ring_order)
          out.push_back({{2}, {Product{{base[i].first, base[j].first}}}});
  }
  // Quotients Z_p[u]/(u^d) / (u^k) and Z_n / (k).
  for (std::size_t p = 2; p <= b.max_ring_order; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t d = 3; power_or_cap(p, d, b.max_ring_order) <= b.max_ring_order; ++d)
      for (std::size_t k = 2; k < d; ++k)
        if (has_z2) out.push_back({{2}, {Quotient{RingDesc{TruncatedPoly{p, d, {1}}}, {power_or_cap(p, k, 1U << 20)}}}});
  }
  return out;
}

inline std::vector<std::size_t> divisors_above_one(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline std::vector<ModuleDesc> systematic_modules(const RingCandidate& rc, const GradedRing& r, const CorpusBounds& b) {
  using namespace module_desc;
  std::vector<ModuleDesc> out;
  const auto shifts = group_elements(rc.group);
  if (r.size() <= b.max_module_order)
    for (const auto& s : shifts) out.push_back({Self{s}});
  if (r.size() * r.size() <= b.max_module_order && !shifts.empty()) {
    out.push_back({DirectSum{{{Self{shifts.front()}}, {Self{shifts.back()}}}}});
  }
  if (r.size() <= b.max_module_order) {
    std::vector<ElementSet> seen;
    for (auto h : r.homogeneous_list()) {
      if (h == r.zero()) continue;
      const auto sub = principal_ideal(r, h);
      if (sub.count() == r.size() || std::find(seen.begin(), seen.end(), sub) != seen.end()) continue;
      seen.push_back(sub);
      out.push_back({module_desc::Quotient{ModuleDesc{Self{shifts.front()}}, {h}}});
    }
  }
  if (const auto* z = std::get_if<ring_desc::ZMod>(&rc.ring.node)) {
    const auto divs = divisors_above_one(z->n);
    for (std::size_t i = 0; i < divs.size(); ++i)
      for (std::size_t j = i; j < divs.size(); ++j) {
        if (divs[i] * divs[j] > b.max_module_order) continue;
        for (std::size_t gi = 0; gi < shifts.size(); ++gi)
          for (std::size_t gj = 0; gj < shifts.size(); ++gj) {
            if (i == j && gj < gi) continue;
            out.push_back({ScalarMod{{divs[i], divs[j]}, {shifts[gi], shifts[gj]}}});
          }
      }
    for (std::size_t i = 0; i < divs.size(); ++i)
      if (divs[i] * divs[i] * divs[i] <= b.max_module_order)
        for (std::size_t g = 0; g < shifts.size(); ++g)
          out.push_back({ScalarMod{{divs[i], divs[i], divs[i]}, {shifts[0], shifts[g], shifts[shifts.size() - 1 - g]}}});
  }
  return out;
}

inline ring_desc::Tables relabel_ring(const GradedRing& r, const std::vector<Element>& pi) {
  const std::size_t n = r.size();
  ring_desc::Tables t;
  t.size = n;
  t.add.assign(n, std::vector<Element>(n));
  t.mul.assign(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      t.add[pi[a]][pi[b]] = pi[r.add(a, b)];
      t.mul[pi[a]][pi[b]] = pi[r.mul(a, b)];
    }
  t.zero = pi[r.zero()];
  t.one = pi[r.one()];
  for (const auto& c : r.components()) {
    std::vector<Element> comp;
    c.for_each([&](std::size_t x) { comp.push_back(pi[x]); });
    std::sort(comp.begin(), comp.end());
    t.components.push_back(std::move(comp));
  }
  return t;
}

inline module_desc::Tables relabel_module(const GradedModule& m, const std::vector<Element>& pi,
                                          const std::vector<Element>& sigma) {
  const std::size_t n = m.ring().size();
  const std::size_t k = m.size();
  module_desc::Tables t;
  t.size = k;
  t.add.assign(k, std::vector<Element>(k));
  t.action.assign(n, std::vector<Element>(k));
  for (Element a = 0; a < k; ++a) {
    for (Element b = 0; b < k; ++b) t.add[sigma[a]][sigma[b]] = sigma[m.add(a, b)];
    for (Element r = 0; r < n; ++r) t.action[pi[r]][sigma[a]] = sigma[m.act(r, a)];
  }
  t.zero = sigma[m.zero()];
  for (const auto& c : m.components()) {
    std::vector<Element> comp;
    c.for_each([&](std::size_t x) { comp.push_back(sigma[x]); });
    std::sort(comp.begin(), comp.end());
    t.components.push_back(std::move(comp));
  }
  return t;
}

inline std::vector<Element> random_permutation(SeededRng& rng, std::size_t n) {
  std::vector<Element> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  rng.shuffle(p);
  return p;
}

}  // namespace detail

/// The six curated instances; the same content ships as fixture files.
inline std::vector<Instance> curated_instances() {
  using namespace ring_desc;
  using namespace module_desc;
  std::vector<Instance> out;
  out.push_back({"r_a", {2}, {ZMod{4}}, std::nullopt, "Z_4 with the trivial Z_2-grading: R_0 = Z_4, R_1 = 0."});
  out.push_back({"r_b", {2}, {TruncatedPoly{2, 2, {1}}}, std::nullopt,
                 "Z_2[u]/(u^2) with u of degree 1. Elements 0, 1, u, 1+u."});
  out.push_back({"r_c", {2}, {GroupAlgebra{2}}, std::nullopt,
                 "Group algebra Z_2[Z_2], u^2 = 1. (1+u)^2 = 0 but 1+u is not in Gr(0)."});
  out.push_back({"r_d", {}, {ZMod{6}}, std::nullopt, "Z_6, trivially graded. Two graded primes, (2) and (3)."});
  out.push_back({"m_a", {2}, {ZMod{4}}, ModuleDesc{ScalarMod{{2, 2}, {{1}, {0}}}},
                 "Z_2 x Z_2 over Z_4 with M_0 = 0 x Z_2 and M_1 = Z_2 x 0. Finite stand-in for the same module over "
                 "the integers, with Z replaced by Z_4."});
  out.push_back({"m_b", {2}, {ZMod{2}}, ModuleDesc{ScalarMod{{2, 2}, {{0}, {1}}}},
                 "F x F over the trivially graded field F = Z_2 with M_0 = F x 0 and M_1 = 0 x F. Finite stand-in for "
                 "the real plane over the reals."});
  return out;
}

/// Curated prefix, then a seeded sample of the systematic pool mixed with
/// randomly relabelled (and sometimes corrupted) table instances. Invalid or
/// oversized candidates are discarded and counted.
inline Corpus generate_corpus(const CorpusBounds& bounds, std::uint64_t seed) {
  Corpus out;
  Limits limits;
  limits.max_ring_order = bounds.max_ring_order;
  limits.max_module_order = bounds.max_module_order;
  limits.max_group_order = std::max<std::size_t>(bounds.max_group_order, 1);
  limits.max_lattice = bounds.max_lattice;

  std::set<std::string> names;
  auto accept = [&](const Instance& inst, std::size_t& counter) -> bool {
    if (out.instances.size() >= bounds.count) return false;
    LoadedInstance li;
    try {
      li = load_instance(inst, limits);
      enumerate_graded_ideals(*li.ring, bounds.max_lattice);
      if (li.module) enumerate_graded_submodules(*li.module, bounds.max_lattice);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SizeExceeded) {
        ++out.discarded_lattice;
      } else {
        ++out.discarded_invalid;
      }
      return false;
    }
    if (!names.insert(inst.name).second) return false;
    out.instances.push_back(std::move(li));
    ++counter;
    return true;
  };

  for (const auto& inst : curated_instances()) {
    const std::size_t before = out.instances.size();
    accept(inst, out.curated);
    if (out.instances.size() == before) out.notes.push_back("curated instance " + inst.name + " is outside the bounds");
  }

  // Systematic pool, in generation order.
  std::vector<Instance> pool;
  std::vector<LoadedInstance> pool_loaded;
  for (const auto& rc : detail::systematic_rings(bounds)) {
    std::shared_ptr<const GradedRing> ring;
    try {
      ring = std::make_shared<const GradedRing>(build_ring(rc.ring, FiniteAbelianGroup(rc.group), limits));
    } catch (const Error&) {
      continue;
    }
    const std::string base = detail::ring_name(rc.ring) + " @" + detail::group_name(rc.group);
    pool.push_back({base, rc.group, rc.ring, std::nullopt, ""});
    for (const auto& md : detail::systematic_modules(rc, *ring, bounds))
      pool.push_back({base + " :: " + detail::module_name(md), rc.group, rc.ring, md, ""});
  }

  SeededRng rng(seed);
  rng.shuffle(pool);
  const std::size_t remaining = bounds.count > out.instances.size() ? bounds.count - out.instances.size() : 0;
  const std::size_t random_target = std::min(remaining / 5, pool.size());
  std::size_t next = 0;
  while (out.instances.size() + random_target < bounds.count && next < pool.size()) accept(pool[next++], out.systematic);

  // Random relabelled copies of pool instances, one attempt per pool entry.
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  std::size_t made = 0;
  for (std::size_t k = 0; k < order.size() && out.instances.size() < bounds.count; ++k) {
    const Instance& src = pool[order[k]];
    LoadedInstance li;
    try {
      li = load_instance(src, limits);
    } catch (const Error&) {
      continue;
    }
    const auto pi = detail::random_permutation(rng, li.ring->size());
    Instance inst;
    inst.name = "random-" + std::to_string(seed) + "-" + std::to_string(made++) + " ~ " + src.name;
    inst.group = src.group;
    auto rt = detail::relabel_ring(*li.ring, pi);
    std::optional<module_desc::Tables> mt;
    if (li.module) mt = detail::relabel_module(*li.module, pi, detail::random_permutation(rng, li.module->size()));
    // One candidate in four gets a single corrupted table entry.
    if (rng.below(4) == 0) {
      if (mt && rng.below(2) == 0) {
        auto& row = mt->action[rng.below(mt->action.size())];
        row[rng.below(row.size())] = rng.below(row.size());
      } else {
        auto& row = rt.mul[rng.below(rt.size)];
        row[rng.below(rt.size)] = rng.below(rt.size);
      }
    }
    inst.ring = {std::move(rt)};
    if (mt) inst.module = ModuleDesc{std::move(*mt)};
    inst.notes = "random relabelling of " + src.name;
    accept(inst, out.random);
  }

  // Top up from the rest of the pool if random candidates fell short.
  while (out.instances.size() < bounds.count && next < pool.size()) accept(pool[next++], out.systematic);

  if (out.instances.size() < bounds.count)
    out.notes.push_back("shortfall: requested " + std::to_string(bounds.count) + " instances, only " +
                        std::to_string(out.instances.size()) + " candidates exist within the bounds");
  return out;
}

}  // namespace gradedspec
