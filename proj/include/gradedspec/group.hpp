#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gradedspec/error.hpp"

namespace gradedspec {

using GroupElement = std::size_t;

/// Finite abelian group Z_{n1} x ... x Z_{nk}, written additively.
///
/// Elements are indexed in mixed radix with the first factor least
/// significant, so index 0 is always the identity. An empty factor list is
/// the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  explicit FiniteAbelianGroup(std::vector<std::size_t> cyclic_factors)
      : factors_(std::move(cyclic_factors)) {
    order_ = 1;
    for (auto f : factors_) {
      if (f == 0) throw Error(ErrorKind::InvalidGrading, "cyclic factor must be >= 1");
      order_ *= f;
    }
  }

  const std::vector<std::size_t>& cyclic_factors() const { return factors_; }
  std::size_t order() const { return order_; }
  GroupElement identity() const { return 0; }

  std::vector<std::size_t> tuple(GroupElement g) const {
    std::vector<std::size_t> t(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      t[i] = g % factors_[i];
      g /= factors_[i];
    }
    return t;
  }

  GroupElement from_tuple(const std::vector<std::size_t>& t) const {
    if (t.size() != factors_.size())
      throw Error(ErrorKind::InvalidGrading, "group element has wrong arity");
    GroupElement g = 0;
    for (std::size_t i = factors_.size(); i-- > 0;) g = g * factors_[i] + (t[i] % factors_[i]);
    return g;
  }

  GroupElement add(GroupElement a, GroupElement b) const {
    GroupElement out = 0;
    std::size_t scale = 1;
    for (auto f : factors_) {
      out += ((a % f + b % f) % f) * scale;
      a /= f;
      b /= f;
      scale *= f;
    }
    return out;
  }

  GroupElement negate(GroupElement a) const {
    GroupElement out = 0;
    std::size_t scale = 1;
    for (auto f : factors_) {
      out += ((f - a % f) % f) * scale;
      a /= f;
      scale *= f;
    }
    return out;
  }

  GroupElement multiple(GroupElement a, std::size_t k) const {
    GroupElement out = identity();
    for (std::size_t i = 0; i < k; ++i) out = add(out, a);
    return out;
  }

  std::string label(GroupElement g) const {
    const auto t = tuple(g);
    if (t.size() == 1) return std::to_string(t[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i != 0) s += ",";
      s += std::to_string(t[i]);
    }
    return s + ")";
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::size_t> factors_;
  std::size_t order_ = 1;
};

}  // namespace gradedspec
