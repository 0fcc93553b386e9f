#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gradedspec/ideal.hpp"

namespace gradedspec {

// Heap-allocated value with deep copy, for recursive descriptor trees.
template <class T>
class Box {
 public:
  Box() : ptr_(std::make_unique<T>()) {}
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(google-explicit-constructor)
  Box(const Box& o) : ptr_(std::make_unique<T>(*o.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& o) {
    ptr_ = std::make_unique<T>(*o.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  const T& operator*() const { return *ptr_; }
  T& operator*() { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  T* operator->() { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

struct RingDesc;

namespace ring_desc {

// Z_n, concentrated in the identity degree.
struct ZMod {
  std::size_t n = 2;
  friend bool operator==(const ZMod&, const ZMod&) = default;
};

// Z_p[G] with (Z_p[G])_g = Z_p * g.
struct GroupAlgebra {
  std::size_t p = 2;
  friend bool operator==(const GroupAlgebra&, const GroupAlgebra&) = default;
};

// Z_p[u]/(u^d) with u homogeneous of the given degree (a group tuple).
struct TruncatedPoly {
  std::size_t p = 2;
  std::size_t d = 2;
  std::vector<std::size_t> degree;
  friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;
};

// Direct product with componentwise grading.
struct Product {
  std::vector<RingDesc> factors;
  friend bool operator==(const Product&, const Product&) = default;
};

struct Tables {
  std::size_t size = 0;
  std::vector<std::vector<Element>> add;
  std::vector<std::vector<Element>> mul;
  Element zero = 0;
  Element one = 1;
  std::vector<std::vector<Element>> components;
  std::vector<std::string> labels;
  friend bool operator==(const Tables&, const Tables&) = default;
};

// Quotient of an inner ring by the ideal its homogeneous generators span.
struct Quotient {
  Box<RingDesc> ring;
  std::vector<Element> generators;
  friend bool operator==(const Quotient&, const Quotient&) = default;
};

}  // namespace ring_desc

struct RingDesc {
  std::variant<ring_desc::ZMod, ring_desc::GroupAlgebra, ring_desc::TruncatedPoly, ring_desc::Product,
               ring_desc::Tables, ring_desc::Quotient>
      node;
  friend bool operator==(const RingDesc&, const RingDesc&) = default;
};

namespace detail {

inline std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    out *= base;
    if (out > cap) return cap + 1;
  }
  return out;
}

inline void require_order(std::size_t order, const Limits& limits) {
  if (order > limits.max_ring_order || order > kMaxCarrier)
    throw Error(ErrorKind::SizeExceeded,
                "ring order " + std::to_string(order) + " exceeds bound " + std::to_string(limits.max_ring_order));
}

inline std::string poly_label(const std::vector<std::size_t>& coeffs, const std::vector<std::string>& monomials) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (monomials[i] == "1") {
      s += std::to_string(coeffs[i]);
    } else {
      if (coeffs[i] != 1) s += std::to_string(coeffs[i]);
      s += monomials[i];
    }
  }
  return s.empty() ? "0" : s;
}

inline std::vector<std::size_t> digits(std::size_t x, std::size_t base, std::size_t count) {
  std::vector<std::size_t> d(count);
  for (std::size_t i = 0; i < count; ++i) {
    d[i] = x % base;
    x /= base;
  }
  return d;
}

inline std::size_t undigits(const std::vector<std::size_t>& d, std::size_t base) {
  std::size_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * base + d[i];
  return x;
}

inline GradedRing::Tables zmod_tables(const FiniteAbelianGroup& g, std::size_t n) {
  GradedRing::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<std::uint8_t>((a + b) % n);
      t.mul[a * n + b] = static_cast<std::uint8_t>((a * b) % n);
    }
  t.zero = 0;
  t.one = 1 % n;
  t.components.assign(g.order(), std::vector<Element>{0});
  t.components[g.identity()].clear();
  for (std::size_t a = 0; a < n; ++a) {
    t.components[g.identity()].push_back(a);
    t.labels.push_back(std::to_string(a));
  }
  return t;
}

// Coefficient-vector ring of dimension `dim` over Z_p with a bilinear product
// on basis vectors (basis i * basis j = basis k, or zero when k == dim).
template <class BasisProduct>
GradedRing::Tables coefficient_ring(std::size_t p, std::size_t dim, BasisProduct basis_product,
                                    const std::vector<GroupElement>& basis_degree, const FiniteAbelianGroup& g,
                                    const std::vector<std::string>& monomials) {
  const std::size_t n = checked_pow(p, dim, kMaxCarrier);
  GradedRing::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<std::vector<std::size_t>> coeffs(n);
  for (std::size_t x = 0; x < n; ++x) coeffs[x] = digits(x, p, dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> sum(dim);
      std::vector<std::size_t> prod(dim, 0);
      for (std::size_t i = 0; i < dim; ++i) sum[i] = (coeffs[a][i] + coeffs[b][i]) % p;
      for (std::size_t i = 0; i < dim; ++i) {
        if (coeffs[a][i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
          if (coeffs[b][j] == 0) continue;
          const std::size_t k = basis_product(i, j);
          if (k < dim) prod[k] = (prod[k] + coeffs[a][i] * coeffs[b][j]) % p;
        }
      }
      t.add[a * n + b] = static_cast<std::uint8_t>(undigits(sum, p));
      t.mul[a * n + b] = static_cast<std::uint8_t>(undigits(prod, p));
    }
  t.zero = 0;
  t.one = 1;
  t.components.assign(g.order(), {});
  for (std::size_t x = 0; x < n; ++x) {
    for (GroupElement deg = 0; deg < g.order(); ++deg) {
      bool inside = true;
      for (std::size_t i = 0; i < dim; ++i)
        if (coeffs[x][i] != 0 && basis_degree[i] != deg) inside = false;
      if (inside) t.components[deg].push_back(x);
    }
    t.labels.push_back(poly_label(coeffs[x], monomials));
  }
  return t;
}

}  // namespace detail

/// Builds and validates the ring a descriptor denotes.
inline GradedRing build_ring(const RingDesc& desc, const FiniteAbelianGroup& group, const Limits& limits = {}) {
  using namespace ring_desc;
  if (group.order() > limits.max_group_order)
    throw Error(ErrorKind::SizeExceeded, "grading group order " + std::to_string(group.order()) + " exceeds bound " +
                                             std::to_string(limits.max_group_order));
  return std::visit(
      [&](const auto& node) -> GradedRing {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ZMod>) {
          if (node.n < 2) throw Error(ErrorKind::ZeroRing, "Z_" + std::to_string(node.n) + " is the zero ring");
          detail::require_order(node.n, limits);
          return GradedRing::from_tables(group, detail::zmod_tables(group, node.n), limits);
        } else if constexpr (std::is_same_v<T, GroupAlgebra>) {
          if (node.p < 2) throw Error(ErrorKind::ZeroRing, "coefficient ring Z_" + std::to_string(node.p) + " is zero");
          const std::size_t dim = group.order();
          detail::require_order(detail::checked_pow(node.p, dim, kMaxCarrier), limits);
          std::vector<GroupElement> degree(dim);
          std::vector<std::string> names(dim);
          for (std::size_t i = 0; i < dim; ++i) {
            degree[i] = i;
            if (i == 0) {
              names[i] = "1";
            } else if (group.cyclic_factors().size() == 1) {
              names[i] = i == 1 ? "u" : "u^" + std::to_string(i);
            } else {
              names[i] = "u" + group.label(i);
            }
          }
          return GradedRing::from_tables(
              group, detail::coefficient_ring(node.p, dim, [&](std::size_t i, std::size_t j) { return group.add(i, j); },
                                              degree, group, names),
              limits);
        } else if constexpr (std::is_same_v<T, TruncatedPoly>) {
          if (node.p < 2) throw Error(ErrorKind::ZeroRing, "coefficient ring Z_" + std::to_string(node.p) + " is zero");
          if (node.d < 1) throw Error(ErrorKind::ZeroRing, "Z_p[u]/(u^0) is the zero ring");
          detail::require_order(detail::checked_pow(node.p, node.d, kMaxCarrier), limits);
          const GroupElement u_degree = group.from_tuple(node.degree);
          std::vector<GroupElement> degree(node.d);
          std::vector<std::string> names(node.d);
          for (std::size_t i = 0; i < node.d; ++i) {
            degree[i] = group.multiple(u_degree, i);
            names[i] = i == 0 ? "1" : (i == 1 ? "u" : "u^" + std::to_string(i));
          }
          const std::size_t d = node.d;
          return GradedRing::from_tables(
              group, detail::coefficient_ring(node.p, d, [d](std::size_t i, std::size_t j) { return std::min(i + j, d); },
                                              degree, group, names),
              limits);
        } else if constexpr (std::is_same_v<T, Product>) {
          if (node.factors.empty()) throw Error(ErrorKind::ZeroRing, "empty product is the zero ring");
          std::vector<GradedRing> parts;
          std::size_t order = 1;
          for (const auto& f : node.factors) {
            parts.push_back(build_ring(f, group, limits));
            order *= parts.back().size();
            detail::require_order(order, limits);
          }
          GradedRing::Tables t;
          t.size = order;
          t.add.resize(order * order);
          t.mul.resize(order * order);
          auto split = [&](std::size_t x) {
            std::vector<std::size_t> d(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i) {
              d[i] = x % parts[i].size();
              x /= parts[i].size();
            }
            return d;
          };
          auto join = [&](const std::vector<std::size_t>& d) {
            std::size_t x = 0;
            for (std::size_t i = parts.size(); i-- > 0;) x = x * parts[i].size() + d[i];
            return x;
          };
          std::vector<std::vector<std::size_t>> split_cache(order);
          for (std::size_t x = 0; x < order; ++x) split_cache[x] = split(x);
          for (std::size_t a = 0; a < order; ++a)
            for (std::size_t b = 0; b < order; ++b) {
              std::vector<std::size_t> s(parts.size());
              std::vector<std::size_t> m(parts.size());
              for (std::size_t i = 0; i < parts.size(); ++i) {
                s[i] = parts[i].add(split_cache[a][i], split_cache[b][i]);
                m[i] = parts[i].mul(split_cache[a][i], split_cache[b][i]);
              }
              t.add[a * order + b] = static_cast<std::uint8_t>(join(s));
              t.mul[a * order + b] = static_cast<std::uint8_t>(join(m));
            }
          std::vector<std::size_t> zs(parts.size());
          std::vector<std::size_t> os(parts.size());
          for (std::size_t i = 0; i < parts.size(); ++i) {
            zs[i] = parts[i].zero();
            os[i] = parts[i].one();
          }
          t.zero = join(zs);
          t.one = join(os);
          t.components.assign(group.order(), {});
          for (std::size_t x = 0; x < order; ++x) {
            for (GroupElement g = 0; g < group.order(); ++g) {
              bool inside = true;
              for (std::size_t i = 0; i < parts.size(); ++i)
                if (!parts[i].component(g).contains(split_cache[x][i])) inside = false;
              if (inside) t.components[g].push_back(x);
            }
            std::string label = "(";
            for (std::size_t i = 0; i < parts.size(); ++i) {
              if (i != 0) label += ",";
              label += parts[i].label(split_cache[x][i]);
            }
            t.labels.push_back(label + ")");
          }
          return GradedRing::from_tables(group, std::move(t), limits);
        } else if constexpr (std::is_same_v<T, Tables>) {
          const std::size_t n = node.size;
          detail::require_order(n, limits);
          GradedRing::Tables t;
          t.size = n;
          auto flatten = [&](const std::vector<std::vector<Element>>& rows, const char* what) {
            if (rows.size() != n) throw Error(ErrorKind::NotARing, std::string(what) + " table needs " + std::to_string(n) + " rows");
            Table out;
            for (const auto& row : rows) {
              if (row.size() != n) throw Error(ErrorKind::NotARing, std::string(what) + " table row has wrong length");
              for (auto v : row) {
                if (v >= n) throw Error(ErrorKind::NotARing, std::string(what) + " table entry out of range");
                out.push_back(static_cast<std::uint8_t>(v));
              }
            }
            return out;
          };
          t.add = flatten(node.add, "addition");
          t.mul = flatten(node.mul, "multiplication");
          t.zero = node.zero;
          t.one = node.one;
          t.components = node.components;
          t.labels = node.labels;
          return GradedRing::from_tables(group, std::move(t), limits);
        } else {
          const GradedRing inner = build_ring(*node.ring, group, limits);
          const GradedIdeal ideal = ideal_generated(inner, node.generators);
          if (!ideal.is_proper()) throw Error(ErrorKind::ZeroRing, "quotient by the unit ideal is the zero ring");
          auto q = quotient_ring(inner, ideal, limits);
          return *q.ring;
        }
      },
      desc.node);
}

}  // namespace gradedspec
