#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedspec/bits.hpp"
#include "gradedspec/error.hpp"
#include "gradedspec/group.hpp"

namespace gradedspec {

using Element = std::size_t;

// Raw operation tables shared by rings and modules. Entries are row-major.
using Table = std::vector<std::uint8_t>;

/// Finite commutative ring with unity and a validated grading by a finite
/// abelian group.
///
/// Instances are only produced by `from_tables`, which checks the ring axioms,
/// the direct-sum decomposition R = (+)_g R_g, R_g R_h <= R_{g+h} and 1 in R_e.
/// A GradedRing is immutable afterwards.
class GradedRing {
 public:
  struct Tables {
    std::size_t size = 0;
    Table add;
    Table mul;
    Element zero = 0;
    Element one = 1;
    std::vector<std::vector<Element>> components;  // indexed by group element
    std::vector<std::string> labels;               // optional
  };

  static GradedRing from_tables(FiniteAbelianGroup group, Tables tables, const Limits& limits = {});

  std::size_t size() const { return size_; }
  const FiniteAbelianGroup& group() const { return group_; }

  Element add(Element a, Element b) const { return add_[a * size_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * size_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element zero() const { return zero_; }
  Element one() const { return one_; }

  Element power(Element a, std::size_t k) const {
    Element out = one_;
    for (std::size_t i = 0; i < k; ++i) out = mul(out, a);
    return out;
  }

  const ElementSet& all() const { return all_; }
  const ElementSet& component(GroupElement g) const { return components_[g]; }
  const std::vector<ElementSet>& components() const { return components_; }

  // The g-component x_g of x.
  Element component_of(Element x, GroupElement g) const { return decomposition_[x * group_.order() + g]; }

  const ElementSet& homogeneous() const { return homogeneous_; }
  const std::vector<Element>& homogeneous_list() const { return homogeneous_list_; }
  bool is_homogeneous(Element x) const { return homogeneous_.contains(x); }

  // Degree of a nonzero homogeneous element; zero has no single degree.
  std::optional<GroupElement> degree(Element x) const {
    if (x == zero_ || !is_homogeneous(x)) return std::nullopt;
    for (GroupElement g = 0; g < group_.order(); ++g)
      if (components_[g].contains(x)) return g;
    return std::nullopt;
  }

  const std::string& label(Element x) const { return labels_[x]; }
  const Tables& tables() const { return tables_; }

 private:
  GradedRing() = default;

  FiniteAbelianGroup group_;
  std::size_t size_ = 0;
  Table add_;
  Table mul_;
  std::vector<Element> neg_;
  Element zero_ = 0;
  Element one_ = 0;
  ElementSet all_;
  std::vector<ElementSet> components_;
  std::vector<std::uint8_t> decomposition_;
  ElementSet homogeneous_;
  std::vector<Element> homogeneous_list_;
  std::vector<std::string> labels_;
  Tables tables_;
};

/// Unique decomposition of x, indexed by group element.
inline std::vector<Element> homogeneous_components(const GradedRing& r, Element x) {
  std::vector<Element> out(r.group().order());
  for (GroupElement g = 0; g < r.group().order(); ++g) out[g] = r.component_of(x, g);
  return out;
}

namespace detail {

inline void check_table_shape(const Table& t, std::size_t rows, std::size_t cols, std::size_t range, ErrorKind kind,
                              const char* what) {
  if (t.size() != rows * cols) throw Error(kind, std::string(what) + " table has wrong shape");
  for (auto v : t)
    if (v >= range) throw Error(kind, std::string(what) + " table entry out of range");
}

// Checks that the listed component subgroups form a direct-sum decomposition
// of an abelian group with the given addition, and returns the decomposition
// table (element x -> component index per group element).
template <class AddFn>
std::vector<std::uint8_t> decompose_direct_sum(std::size_t size, Element zero, const std::vector<ElementSet>& comps,
                                               AddFn add, ErrorKind kind) {
  const std::size_t k = comps.size();
  for (std::size_t g = 0; g < k; ++g) {
    const auto& c = comps[g];
    if (!c.contains(zero)) throw Error(kind, "component " + std::to_string(g) + " does not contain zero");
    bool closed = true;
    c.for_each([&](std::size_t a) {
      c.for_each([&](std::size_t b) {
        if (!c.contains(add(a, b))) closed = false;
      });
    });
    if (!closed) throw Error(kind, "component " + std::to_string(g) + " is not an additive subgroup");
  }

  std::size_t product = 1;
  for (const auto& c : comps) {
    product *= c.count();
    if (product > size) break;
  }
  if (product != size)
    throw Error(kind, "components do not form a direct sum (product of component orders != carrier order)");

  std::vector<std::vector<Element>> members(k);
  for (std::size_t g = 0; g < k; ++g)
    for (auto e : comps[g].to_vector()) members[g].push_back(e);

  std::vector<std::uint8_t> table(size * k, 0);
  std::vector<bool> seen(size, false);
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t t = 0; t < size; ++t) {
    Element sum = zero;
    for (std::size_t g = 0; g < k; ++g) sum = add(sum, members[g][digit[g]]);
    if (seen[sum]) throw Error(kind, "components do not form a direct sum (decomposition is not unique)");
    seen[sum] = true;
    for (std::size_t g = 0; g < k; ++g) table[sum * k + g] = static_cast<std::uint8_t>(members[g][digit[g]]);
    for (std::size_t g = 0; g < k; ++g) {
      if (++digit[g] < members[g].size()) break;
      digit[g] = 0;
    }
  }
  return table;
}

}  // namespace detail

inline GradedRing GradedRing::from_tables(FiniteAbelianGroup group, Tables tables, const Limits& limits) {
  const std::size_t n = tables.size;
  if (group.order() > limits.max_group_order)
    throw Error(ErrorKind::SizeExceeded, "grading group order " + std::to_string(group.order()) + " exceeds bound " +
                                             std::to_string(limits.max_group_order));
  if (n > limits.max_ring_order || n > kMaxCarrier)
    throw Error(ErrorKind::SizeExceeded,
                "ring order " + std::to_string(n) + " exceeds bound " + std::to_string(limits.max_ring_order));
  if (n == 0) throw Error(ErrorKind::NotARing, "empty carrier");
  detail::check_table_shape(tables.add, n, n, n, ErrorKind::NotARing, "addition");
  detail::check_table_shape(tables.mul, n, n, n, ErrorKind::NotARing, "multiplication");
  if (tables.zero >= n || tables.one >= n) throw Error(ErrorKind::NotARing, "zero/one index out of range");
  if (tables.zero == tables.one) throw Error(ErrorKind::ZeroRing, "1 = 0 (zero ring is excluded)");

  auto add = [&](std::size_t a, std::size_t b) -> Element { return tables.add[a * n + b]; };
  auto mul = [&](std::size_t a, std::size_t b) -> Element { return tables.mul[a * n + b]; };
  const Element zero = tables.zero;
  const Element one = tables.one;

  std::vector<Element> neg(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (add(a, zero) != a) throw Error(ErrorKind::NotARing, "zero is not an additive identity");
    if (mul(a, one) != a) throw Error(ErrorKind::NotARing, "one is not a multiplicative identity");
    for (std::size_t b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) throw Error(ErrorKind::NotARing, "addition is not commutative");
      if (mul(a, b) != mul(b, a)) throw Error(ErrorKind::NotARing, "multiplication is not commutative");
      if (add(a, b) == zero) neg[a] = b;
    }
    if (neg[a] == n) throw Error(ErrorKind::NotARing, "element without additive inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = add(a, b);
      const Element mab = mul(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (add(ab, c) != add(a, add(b, c))) throw Error(ErrorKind::NotARing, "addition is not associative");
        if (mul(mab, c) != mul(a, mul(b, c))) throw Error(ErrorKind::NotARing, "multiplication is not associative");
        if (mul(a, add(b, c)) != add(mab, mul(a, c))) throw Error(ErrorKind::NotARing, "distributivity fails");
      }
    }

  if (tables.components.size() != group.order())
    throw Error(ErrorKind::InvalidGrading, "expected one component per group element (" +
                                               std::to_string(group.order()) + "), got " +
                                               std::to_string(tables.components.size()));
  std::vector<ElementSet> comps;
  for (std::size_t g = 0; g < tables.components.size(); ++g) {
    ElementSet c;
    for (auto e : tables.components[g]) {
      if (e >= n) throw Error(ErrorKind::InvalidGrading, "component " + std::to_string(g) + " names unknown element");
      c.insert(e);
    }
    comps.push_back(c);
  }
  auto decomposition = detail::decompose_direct_sum(n, zero, comps, add, ErrorKind::InvalidGrading);

  for (GroupElement g = 0; g < group.order(); ++g)
    for (GroupElement h = 0; h < group.order(); ++h) {
      const auto& target = comps[group.add(g, h)];
      bool ok = true;
      comps[g].for_each([&](std::size_t a) {
        comps[h].for_each([&](std::size_t b) {
          if (!target.contains(mul(a, b))) ok = false;
        });
      });
      if (!ok)
        throw Error(ErrorKind::InvalidGrading, "R_" + group.label(g) + " * R_" + group.label(h) + " is not contained in R_" +
                                                   group.label(group.add(g, h)));
    }
  if (!comps[group.identity()].contains(one))
    throw Error(ErrorKind::InvalidGrading, "1 is not in the identity component");

  GradedRing r;
  r.group_ = std::move(group);
  r.size_ = n;
  r.add_ = tables.add;
  r.mul_ = tables.mul;
  r.neg_ = std::move(neg);
  r.zero_ = zero;
  r.one_ = one;
  r.all_ = ElementSet::full(n);
  r.components_ = std::move(comps);
  r.decomposition_ = std::move(decomposition);
  for (const auto& c : r.components_) r.homogeneous_ |= c;
  r.homogeneous_list_ = r.homogeneous_.to_vector();
  if (tables.labels.size() == n) {
    r.labels_ = tables.labels;
  } else {
    for (std::size_t i = 0; i < n; ++i) r.labels_.push_back(std::to_string(i));
  }
  r.tables_ = std::move(tables);
  return r;
}

}  // namespace gradedspec
