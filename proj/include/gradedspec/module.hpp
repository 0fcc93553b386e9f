#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gradedspec/ring_desc.hpp"

namespace gradedspec {

/// Finite graded module over a GradedRing.
///
/// Produced only by `from_tables`, which checks the abelian-group and module
/// axioms, M = (+)_g M_g and R_g M_h <= M_{g+h}. The zero module is allowed.
class GradedModule {
 public:
  struct Tables {
    std::size_t size = 0;
    Table add;     // size x size
    Table action;  // ring.size() x size
    Element zero = 0;
    std::vector<std::vector<Element>> components;
    std::vector<std::string> labels;
  };

  static GradedModule from_tables(std::shared_ptr<const GradedRing> ring, Tables tables, const Limits& limits = {});

  const GradedRing& ring() const { return *ring_; }
  const std::shared_ptr<const GradedRing>& ring_ptr() const { return ring_; }
  std::size_t size() const { return size_; }

  Element add(Element a, Element b) const { return add_[a * size_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element act(Element r, Element x) const { return action_[r * size_ + x]; }
  Element zero() const { return zero_; }

  const ElementSet& all() const { return all_; }
  const ElementSet& component(GroupElement g) const { return components_[g]; }
  const std::vector<ElementSet>& components() const { return components_; }
  Element component_of(Element x, GroupElement g) const { return decomposition_[x * ring_->group().order() + g]; }
  const ElementSet& homogeneous() const { return homogeneous_; }
  const std::vector<Element>& homogeneous_list() const { return homogeneous_list_; }
  bool is_homogeneous(Element x) const { return homogeneous_.contains(x); }
  const std::string& label(Element x) const { return labels_[x]; }
  const Tables& tables() const { return tables_; }

 private:
  GradedModule() = default;

  std::shared_ptr<const GradedRing> ring_;
  std::size_t size_ = 0;
  Table add_;
  Table action_;
  std::vector<Element> neg_;
  Element zero_ = 0;
  ElementSet all_;
  std::vector<ElementSet> components_;
  std::vector<std::uint8_t> decomposition_;
  ElementSet homogeneous_;
  std::vector<Element> homogeneous_list_;
  std::vector<std::string> labels_;
  Tables tables_;
};

inline GradedModule GradedModule::from_tables(std::shared_ptr<const GradedRing> ring, Tables tables,
                                              const Limits& limits) {
  const GradedRing& r = *ring;
  const std::size_t n = r.size();
  const std::size_t m = tables.size;
  if (m > limits.max_module_order || m > kMaxCarrier)
    throw Error(ErrorKind::SizeExceeded,
                "module order " + std::to_string(m) + " exceeds bound " + std::to_string(limits.max_module_order));
  if (m == 0) throw Error(ErrorKind::NotAModule, "empty carrier");
  detail::check_table_shape(tables.add, m, m, m, ErrorKind::NotAModule, "addition");
  detail::check_table_shape(tables.action, n, m, m, ErrorKind::NotAModule, "action");
  if (tables.zero >= m) throw Error(ErrorKind::NotAModule, "zero index out of range");

  auto add = [&](std::size_t a, std::size_t b) -> Element { return tables.add[a * m + b]; };
  auto act = [&](std::size_t x, std::size_t a) -> Element { return tables.action[x * m + a]; };
  const Element zero = tables.zero;

  std::vector<Element> neg(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    if (add(a, zero) != a) throw Error(ErrorKind::NotAModule, "zero is not an additive identity");
    for (std::size_t b = 0; b < m; ++b) {
      if (add(a, b) != add(b, a)) throw Error(ErrorKind::NotAModule, "addition is not commutative");
      if (add(a, b) == zero) neg[a] = b;
      for (std::size_t c = 0; c < m; ++c)
        if (add(add(a, b), c) != add(a, add(b, c))) throw Error(ErrorKind::NotAModule, "addition is not associative");
    }
    if (neg[a] == m) throw Error(ErrorKind::NotAModule, "element without additive inverse");
    if (act(r.one(), a) != a) throw Error(ErrorKind::NotAModule, "1 * m != m");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b)
        if (act(x, add(a, b)) != add(act(x, a), act(x, b)))
          throw Error(ErrorKind::NotAModule, "r(m + m') != rm + rm' for r = " + std::to_string(x));
      for (std::size_t y = 0; y < n; ++y) {
        if (act(r.add(x, y), a) != add(act(x, a), act(y, a)))
          throw Error(ErrorKind::NotAModule, "(r + s)m != rm + sm");
        if (act(r.mul(x, y), a) != act(x, act(y, a))) throw Error(ErrorKind::NotAModule, "(rs)m != r(sm)");
      }
    }

  const auto& group = r.group();
  if (tables.components.size() != group.order())
    throw Error(ErrorKind::InvalidGrading, "expected one module component per group element (" +
                                               std::to_string(group.order()) + "), got " +
                                               std::to_string(tables.components.size()));
  std::vector<ElementSet> comps;
  for (std::size_t g = 0; g < tables.components.size(); ++g) {
    ElementSet c;
    for (auto e : tables.components[g]) {
      if (e >= m)
        throw Error(ErrorKind::InvalidGrading, "module component " + std::to_string(g) + " names unknown element");
      c.insert(e);
    }
    comps.push_back(c);
  }
  auto decomposition = detail::decompose_direct_sum(m, zero, comps, add, ErrorKind::InvalidGrading);
  for (GroupElement g = 0; g < group.order(); ++g)
    for (GroupElement h = 0; h < group.order(); ++h) {
      const auto& target = comps[group.add(g, h)];
      bool ok = true;
      r.component(g).for_each([&](std::size_t x) {
        comps[h].for_each([&](std::size_t a) {
          if (!target.contains(act(x, a))) ok = false;
        });
      });
      if (!ok)
        throw Error(ErrorKind::InvalidGrading, "R_" + group.label(g) + " * M_" + group.label(h) +
                                                   " is not contained in M_" + group.label(group.add(g, h)));
    }

  GradedModule out;
  out.ring_ = std::move(ring);
  out.size_ = m;
  out.add_ = tables.add;
  out.action_ = tables.action;
  out.neg_ = std::move(neg);
  out.zero_ = zero;
  out.all_ = ElementSet::full(m);
  out.components_ = std::move(comps);
  out.decomposition_ = std::move(decomposition);
  for (const auto& c : out.components_) out.homogeneous_ |= c;
  out.homogeneous_list_ = out.homogeneous_.to_vector();
  if (tables.labels.size() == m) {
    out.labels_ = tables.labels;
  } else {
    for (std::size_t i = 0; i < m; ++i) out.labels_.push_back(std::to_string(i));
  }
  out.tables_ = std::move(tables);
  return out;
}

/// Graded submodule with a homogeneous generator witness. The owning module
/// must outlive it.
struct GradedSubmodule {
  const GradedModule* module = nullptr;
  ElementSet elements;
  std::vector<Element> generators;

  bool contains(Element x) const { return elements.contains(x); }
  std::size_t size() const { return elements.count(); }
  bool is_zero() const { return elements.count() == 1; }
  bool is_subset_of(const GradedSubmodule& o) const { return elements.is_subset_of(o.elements); }

  friend bool operator==(const GradedSubmodule& a, const GradedSubmodule& b) {
    return a.module == b.module && a.elements == b.elements;
  }
};

// R * x.
inline ElementSet cyclic_submodule(const GradedModule& m, Element x) {
  ElementSet out;
  for (Element r = 0; r < m.ring().size(); ++r) out.insert(m.act(r, x));
  return out;
}

inline ElementSet submodule_sum(const GradedModule& m, const ElementSet& a, const ElementSet& b) {
  return subgroup_sum(a, b, [&](Element x, Element y) { return m.add(x, y); });
}

inline ElementSet submodule_closure(const GradedModule& m, const ElementSet& gens) {
  ElementSet out;
  out.insert(m.zero());
  gens.for_each([&](std::size_t g) {
    if (!out.contains(g)) out = submodule_sum(m, out, cyclic_submodule(m, g));
  });
  return out;
}

inline GradedSubmodule make_submodule(const GradedModule& m, const ElementSet& elements) {
  GradedSubmodule out{&m, elements, {}};
  ElementSet span;
  span.insert(m.zero());
  for (auto h : m.homogeneous_list()) {
    if (!elements.contains(h) || span.contains(h)) continue;
    out.generators.push_back(h);
    span = submodule_sum(m, span, cyclic_submodule(m, h));
  }
  return out;
}

inline GradedSubmodule zero_submodule(const GradedModule& m) {
  ElementSet z;
  z.insert(m.zero());
  return {&m, z, {}};
}

inline bool is_submodule(const GradedModule& m, const ElementSet& s) {
  if (!s.contains(m.zero())) return false;
  bool ok = true;
  s.for_each([&](std::size_t a) {
    if (!ok) return;
    s.for_each([&](std::size_t b) {
      if (!s.contains(m.add(a, b))) ok = false;
    });
    for (Element r = 0; r < m.ring().size() && ok; ++r)
      if (!s.contains(m.act(r, a))) ok = false;
  });
  return ok;
}

inline bool is_graded_submodule(const GradedModule& m, const ElementSet& s) {
  if (!is_submodule(m, s)) return false;
  bool ok = true;
  s.for_each([&](std::size_t x) {
    for (GroupElement g = 0; g < m.ring().group().order(); ++g)
      if (!s.contains(m.component_of(x, g))) ok = false;
  });
  return ok;
}

/// Every graded submodule, as the closure of the homogeneous cyclic
/// submodules under sum. Sorted canonically.
inline std::vector<GradedSubmodule> enumerate_graded_submodules(const GradedModule& m, std::size_t max_lattice = 4096) {
  std::vector<ElementSet> cyclic;
  for (auto h : m.homogeneous_list()) {
    auto c = cyclic_submodule(m, h);
    if (std::find(cyclic.begin(), cyclic.end(), c) == cyclic.end()) cyclic.push_back(c);
  }
  ElementSet zero;
  zero.insert(m.zero());
  std::vector<ElementSet> found{zero};
  std::unordered_map<ElementSet, std::size_t, BitSetHash> seen{{zero, 0}};
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& c : cyclic) {
      if (c.is_subset_of(found[i])) continue;
      auto s = submodule_sum(m, found[i], c);
      if (seen.emplace(s, found.size()).second) {
        found.push_back(s);
        if (found.size() > max_lattice)
          throw Error(ErrorKind::SizeExceeded, "graded submodule lattice exceeds " + std::to_string(max_lattice));
      }
    }
  std::sort(found.begin(), found.end(), CanonicalLess{});
  std::vector<GradedSubmodule> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(make_submodule(m, s));
  return out;
}

struct ModuleDesc;

namespace module_desc {

// R over itself, regraded by M_g = R_{g + shift}.
struct Self {
  std::vector<std::size_t> shift;
  friend bool operator==(const Self&, const Self&) = default;
};

// Z_{k1} x ... x Z_{kt}; a ring element acts through its integer index (so
// intended for Z_n rings). Factor i is homogeneous of degree degrees[i].
struct ScalarMod {
  std::vector<std::size_t> factors;
  std::vector<std::vector<std::size_t>> degrees;
  friend bool operator==(const ScalarMod&, const ScalarMod&) = default;
};

// Explicit carrier. Addition comes from `add`, or from cyclic `factors`;
// grading from `components`, or from per-factor `degrees`.
struct Tables {
  std::size_t size = 0;
  std::vector<std::vector<Element>> add;
  std::vector<std::size_t> factors;
  std::vector<std::vector<Element>> action;
  Element zero = 0;
  std::vector<std::vector<Element>> components;
  std::vector<std::vector<std::size_t>> degrees;
  std::vector<std::string> labels;
  friend bool operator==(const Tables&, const Tables&) = default;
};

struct Quotient {
  Box<ModuleDesc> module;
  std::vector<Element> generators;
  friend bool operator==(const Quotient&, const Quotient&) = default;
};

struct DirectSum {
  std::vector<ModuleDesc> summands;
  friend bool operator==(const DirectSum&, const DirectSum&) = default;
};

}  // namespace module_desc

struct ModuleDesc {
  std::variant<module_desc::Self, module_desc::ScalarMod, module_desc::Tables, module_desc::Quotient,
               module_desc::DirectSum>
      node;
  friend bool operator==(const ModuleDesc&, const ModuleDesc&) = default;
};

namespace detail {

inline void require_module_order(std::size_t order, const Limits& limits) {
  if (order > limits.max_module_order || order > kMaxCarrier)
    throw Error(ErrorKind::SizeExceeded,
                "module order " + std::to_string(order) + " exceeds bound " + std::to_string(limits.max_module_order));
}

struct CyclicCarrier {
  std::vector<std::size_t> factors;
  std::size_t size = 1;
  std::vector<std::vector<std::size_t>> coords;

  explicit CyclicCarrier(std::vector<std::size_t> f, const Limits& limits) : factors(std::move(f)) {
    for (auto k : factors) {
      if (k == 0) throw Error(ErrorKind::NotAModule, "cyclic factor must be >= 1");
      size *= k;
      require_module_order(size, limits);
    }
    coords.resize(size);
    for (std::size_t x = 0; x < size; ++x) {
      std::size_t y = x;
      for (auto k : factors) {
        coords[x].push_back(y % k);
        y /= k;
      }
    }
  }

  std::size_t join(const std::vector<std::size_t>& c) const {
    std::size_t x = 0;
    for (std::size_t i = factors.size(); i-- > 0;) x = x * factors[i] + c[i] % factors[i];
    return x;
  }

  Table add_table() const {
    Table t(size * size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) {
        std::vector<std::size_t> c(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) c[i] = coords[a][i] + coords[b][i];
        t[a * size + b] = static_cast<std::uint8_t>(join(c));
      }
    return t;
  }

  std::vector<std::vector<Element>> components(const FiniteAbelianGroup& g,
                                               const std::vector<std::vector<std::size_t>>& degrees) const {
    if (degrees.size() != factors.size())
      throw Error(ErrorKind::InvalidGrading, "need one degree per cyclic factor");
    std::vector<GroupElement> deg;
    for (const auto& d : degrees) deg.push_back(g.from_tuple(d));
    std::vector<std::vector<Element>> out(g.order());
    for (std::size_t x = 0; x < size; ++x)
      for (GroupElement h = 0; h < g.order(); ++h) {
        bool inside = true;
        for (std::size_t i = 0; i < factors.size(); ++i)
          if (coords[x][i] != 0 && deg[i] != h) inside = false;
        if (inside) out[h].push_back(x);
      }
    return out;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& c : coords) {
      std::string s = "(";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0) s += ",";
        s += std::to_string(c[i]);
      }
      out.push_back(s + ")");
    }
    return out;
  }
};

}  // namespace detail

inline GradedModule build_module(const ModuleDesc& desc, const std::shared_ptr<const GradedRing>& ring,
                                 const Limits& limits = {}) {
  using namespace module_desc;
  const GradedRing& r = *ring;
  const auto& group = r.group();
  return std::visit(
      [&](const auto& node) -> GradedModule {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Self>) {
          detail::require_module_order(r.size(), limits);
          const GroupElement shift = node.shift.empty() ? group.identity() : group.from_tuple(node.shift);
          GradedModule::Tables t;
          t.size = r.size();
          t.add = r.tables().add;
          t.action = r.tables().mul;
          t.zero = r.zero();
          for (GroupElement g = 0; g < group.order(); ++g) {
            t.components.push_back(r.component(group.add(g, shift)).to_vector());
          }
          for (Element x = 0; x < r.size(); ++x) t.labels.push_back(r.label(x));
          return GradedModule::from_tables(ring, std::move(t), limits);
        } else if constexpr (std::is_same_v<T, ScalarMod>) {
          detail::CyclicCarrier carrier(node.factors, limits);
          GradedModule::Tables t;
          t.size = carrier.size;
          t.add = carrier.add_table();
          t.action.resize(r.size() * carrier.size);
          for (Element x = 0; x < r.size(); ++x)
            for (std::size_t a = 0; a < carrier.size; ++a) {
              std::vector<std::size_t> c(carrier.factors.size());
              for (std::size_t i = 0; i < c.size(); ++i) c[i] = (x * carrier.coords[a][i]) % carrier.factors[i];
              t.action[x * carrier.size + a] = static_cast<std::uint8_t>(carrier.join(c));
            }
          t.zero = 0;
          t.components = carrier.components(group, node.degrees);
          t.labels = carrier.labels();
          return GradedModule::from_tables(ring, std::move(t), limits);
        } else if constexpr (std::is_same_v<T, Tables>) {
          GradedModule::Tables t;
          std::optional<detail::CyclicCarrier> carrier;
          if (!node.factors.empty()) {
            carrier.emplace(node.factors, limits);
            t.size = carrier->size;
            t.add = carrier->add_table();
            t.labels = carrier->labels();
          } else {
            detail::require_module_order(node.size, limits);
            t.size = node.size;
            if (node.add.size() != node.size) throw Error(ErrorKind::NotAModule, "addition table has wrong shape");
            for (const auto& row : node.add) {
              if (row.size() != node.size) throw Error(ErrorKind::NotAModule, "addition table row has wrong length");
              for (auto v : row) {
                if (v >= node.size) throw Error(ErrorKind::NotAModule, "addition table entry out of range");
                t.add.push_back(static_cast<std::uint8_t>(v));
              }
            }
          }
          if (node.action.size() != r.size())
            throw Error(ErrorKind::NotAModule, "action table needs one row per ring element");
          for (const auto& row : node.action) {
            if (row.size() != t.size) throw Error(ErrorKind::NotAModule, "action table row has wrong length");
            for (auto v : row) {
              if (v >= t.size) throw Error(ErrorKind::NotAModule, "action table entry out of range");
              t.action.push_back(static_cast<std::uint8_t>(v));
            }
          }
          t.zero = node.zero;
          if (!node.degrees.empty()) {
            if (!carrier) throw Error(ErrorKind::InvalidGrading, "per-factor degrees need cyclic factors");
            t.components = carrier->components(group, node.degrees);
          } else {
            t.components = node.components;
          }
          if (!node.labels.empty()) t.labels = node.labels;
          return GradedModule::from_tables(ring, std::move(t), limits);
        } else if constexpr (std::is_same_v<T, Quotient>) {
          Limits inner_limits = limits;
          inner_limits.max_module_order = kMaxCarrier;
          const GradedModule inner = build_module(*node.module, ring, inner_limits);
          ElementSet gens;
          for (auto g : node.generators) {
            if (g >= inner.size() || !inner.is_homogeneous(g))
              throw Error(ErrorKind::NonHomogeneousGenerator,
                          "submodule generator " + std::to_string(g) + " is not homogeneous");
            gens.insert(g);
          }
          const ElementSet sub = submodule_closure(inner, gens);
          const std::size_t n = inner.size();
          std::vector<Element> proj(n, n);
          std::vector<Element> lift;
          for (Element x = 0; x < n; ++x) {
            if (proj[x] != n) continue;
            const Element id = lift.size();
            lift.push_back(x);
            sub.for_each([&](std::size_t s) { proj[inner.add(x, s)] = id; });
          }
          const std::size_t q = lift.size();
          detail::require_module_order(q, limits);
          GradedModule::Tables t;
          t.size = q;
          t.add.resize(q * q);
          t.action.resize(r.size() * q);
          for (std::size_t a = 0; a < q; ++a) {
            for (std::size_t b = 0; b < q; ++b)
              t.add[a * q + b] = static_cast<std::uint8_t>(proj[inner.add(lift[a], lift[b])]);
            for (Element x = 0; x < r.size(); ++x)
              t.action[x * q + a] = static_cast<std::uint8_t>(proj[inner.act(x, lift[a])]);
          }
          t.zero = proj[inner.zero()];
          for (GroupElement g = 0; g < group.order(); ++g) {
            ElementSet img;
            inner.component(g).for_each([&](std::size_t x) { img.insert(proj[x]); });
            t.components.push_back(img.to_vector());
          }
          for (auto x : lift) t.labels.push_back("[" + inner.label(x) + "]");
          return GradedModule::from_tables(ring, std::move(t), limits);
        } else {
          if (node.summands.empty()) throw Error(ErrorKind::NotAModule, "empty direct sum");
          std::vector<GradedModule> parts;
          std::size_t order = 1;
          for (const auto& s : node.summands) {
            parts.push_back(build_module(s, ring, limits));
            order *= parts.back().size();
            detail::require_module_order(order, limits);
          }
          std::vector<std::vector<std::size_t>> split(order);
          for (std::size_t x = 0; x < order; ++x) {
            std::size_t y = x;
            for (const auto& p : parts) {
              split[x].push_back(y % p.size());
              y /= p.size();
            }
          }
          auto join = [&](const std::vector<std::size_t>& c) {
            std::size_t x = 0;
            for (std::size_t i = parts.size(); i-- > 0;) x = x * parts[i].size() + c[i];
            return x;
          };
          GradedModule::Tables t;
          t.size = order;
          t.add.resize(order * order);
          t.action.resize(r.size() * order);
          std::vector<std::size_t> c(parts.size());
          for (std::size_t a = 0; a < order; ++a) {
            for (std::size_t b = 0; b < order; ++b) {
              for (std::size_t i = 0; i < parts.size(); ++i) c[i] = parts[i].add(split[a][i], split[b][i]);
              t.add[a * order + b] = static_cast<std::uint8_t>(join(c));
            }
            for (Element x = 0; x < r.size(); ++x) {
              for (std::size_t i = 0; i < parts.size(); ++i) c[i] = parts[i].act(x, split[a][i]);
              t.action[x * order + a] = static_cast<std::uint8_t>(join(c));
            }
          }
          std::vector<std::size_t> zeros;
          for (const auto& p : parts) zeros.push_back(p.zero());
          t.zero = join(zeros);
          t.components.assign(group.order(), {});
          for (std::size_t x = 0; x < order; ++x) {
            for (GroupElement g = 0; g < group.order(); ++g) {
              bool inside = true;
              for (std::size_t i = 0; i < parts.size(); ++i)
                if (!parts[i].component(g).contains(split[x][i])) inside = false;
              if (inside) t.components[g].push_back(x);
            }
            std::string label = "(";
            for (std::size_t i = 0; i < parts.size(); ++i) {
              if (i != 0) label += ",";
              label += parts[i].label(split[x][i]);
            }
            t.labels.push_back(label + ")");
          }
          return GradedModule::from_tables(ring, std::move(t), limits);
        }
      },
      desc.node);
}

}  // namespace gradedspec
