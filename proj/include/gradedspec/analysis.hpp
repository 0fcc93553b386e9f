#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gradedspec/io.hpp"
#include "gradedspec/second.hpp"
#include "gradedspec/spectra.hpp"

namespace gradedspec {

/// Lazily computed, memoized derived data for one instance. Not thread-safe;
/// each instance is analysed on a single thread.
class InstanceAnalysis {
 public:
  InstanceAnalysis(LoadedInstance inst, Limits limits) : inst_(std::move(inst)), limits_(limits) {}

  const LoadedInstance& instance() const { return inst_; }
  const std::string& name() const { return inst_.desc.name; }
  const Limits& limits() const { return limits_; }
  const GradedRing& ring() const { return *inst_.ring; }

  const PrimeSpectrum& primes() {
    if (!primes_) primes_.emplace(inst_.ring, limits_);
    return *primes_;
  }
  const IdealLattice& ideals() { return primes().lattice(); }
  const GradedIdeal& ideal(std::size_t i) { return ideals()[i]; }
  std::size_t ideal_index(const ElementSet& s) {
    auto i = ideals().find(s);
    if (!i) throw Error(ErrorKind::InvalidGrading, "set is not a graded ideal of the lattice");
    return *i;
  }

  // Gr(I) for the i-th lattice ideal.
  const ElementSet& radical(std::size_t i) {
    if (radicals_.empty()) radicals_.resize(ideals().size());
    if (!radicals_[i]) radicals_[i] = graded_radical(ring(), ideal(i)).elements;
    return *radicals_[i];
  }
  const ElementSet& radical_of(const ElementSet& s) { return radical(ideal_index(s)); }
  bool is_radical(std::size_t i) { return radical(i) == ideal(i).elements; }

  const PointSet& variety(std::size_t i) {
    if (varieties_.empty()) varieties_.resize(ideals().size());
    if (!varieties_[i]) varieties_[i] = primes().variety(ideal(i));
    return *varieties_[i];
  }

  // Minimal-cardinality RFG witness for the i-th lattice ideal.
  const std::optional<std::vector<Element>>& rfg(std::size_t i) {
    if (rfg_.empty()) rfg_.resize(ideals().size());
    if (!rfg_[i]) rfg_[i] = is_rfg_ideal(ring(), ideal(i));
    return *rfg_[i];
  }

  bool is_noetherian() {
    if (!noetherian_) noetherian_ = is_noetherian_space(primes().topology());
    return *noetherian_;
  }

  // Module side.
  bool has_module() const { return inst_.module != nullptr; }
  const GradedModule& module() const { return *inst_.module; }
  bool module_nonzero() const { return has_module() && module().size() > 1; }

  const SecondSpectrum& second() {
    if (!second_) second_.emplace(inst_.module, limits_);
    return *second_;
  }
  const std::vector<GradedSubmodule>& submodules() { return second().submodules(); }
  std::size_t submodule_index(const ElementSet& s) {
    auto i = second().find(s);
    if (!i) throw Error(ErrorKind::InvalidGrading, "set is not a graded submodule of the lattice");
    return *i;
  }

  // Ann_M(I) for the i-th lattice ideal.
  const ElementSet& ann_m(std::size_t i) {
    if (ann_m_.empty()) ann_m_.resize(ideals().size());
    if (!ann_m_[i]) ann_m_[i] = ann_in_module(module(), ideal(i).elements);
    return *ann_m_[i];
  }
  // Ann_M(Ann_R(N)) for the j-th submodule.
  const ElementSet& double_ann(std::size_t j) { return ann_m(ideal_index(second().ann(j))); }

  const ElementSet& zsoc(std::size_t j) {
    if (zsoc_.empty()) zsoc_.resize(submodules().size());
    if (!zsoc_[j]) zsoc_[j] = second().zariski_socle(submodules()[j].elements);
    return *zsoc_[j];
  }
  const ElementSet& soc(std::size_t j) {
    if (soc_.empty()) soc_.resize(submodules().size());
    if (!soc_[j]) soc_[j] = second().second_socle(submodules()[j].elements);
    return *soc_[j];
  }
  const PointSet& vs(std::size_t j) {
    if (vs_.empty()) vs_.resize(submodules().size());
    if (!vs_[j]) vs_[j] = second().v_s(submodules()[j].elements);
    return *vs_[j];
  }

  // Sum of two lattice submodules, memoized by index pair.
  const ElementSet& join(std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    const auto key = a * submodules().size() + b;
    auto it = joins_.find(key);
    if (it == joins_.end())
      it = joins_.emplace(key, submodule_sum(module(), submodules()[a].elements, submodules()[b].elements)).first;
    return it->second;
  }

  const std::optional<std::vector<Element>>& rfg_star(std::size_t j) {
    if (rfg_star_.empty()) rfg_star_.resize(submodules().size());
    if (!rfg_star_[j]) rfg_star_[j] = is_rfg_star_submodule(second(), submodules()[j].elements);
    return *rfg_star_[j];
  }

  bool secondful() {
    if (!secondful_) secondful_ = module_nonzero() && phi().is_surjective();
    return *secondful_;
  }
  // Requires a nonzero module.
  const NaturalMap& phi() {
    if (!phi_) phi_.emplace(natural_map(second(), limits_));
    return *phi_;
  }
  const ElementSet& ann_module() {
    if (!ann_module_) ann_module_ = ann_in_ring(module(), module().all());
    return *ann_module_;
  }
  const ModulePredicates& predicates() {
    if (!predicates_) predicates_ = module_predicates(second(), ideals());
    return *predicates_;
  }
  bool second_noetherian() {
    if (!second_noetherian_) second_noetherian_ = is_noetherian_space(second().topology());
    return *second_noetherian_;
  }

 private:
  LoadedInstance inst_;
  Limits limits_;
  std::optional<PrimeSpectrum> primes_;
  std::vector<std::optional<ElementSet>> radicals_;
  std::vector<std::optional<PointSet>> varieties_;
  std::vector<std::optional<std::optional<std::vector<Element>>>> rfg_;
  std::optional<bool> noetherian_;
  std::optional<SecondSpectrum> second_;
  std::vector<std::optional<ElementSet>> ann_m_;
  std::vector<std::optional<ElementSet>> zsoc_;
  std::vector<std::optional<ElementSet>> soc_;
  std::vector<std::optional<PointSet>> vs_;
  std::unordered_map<std::size_t, ElementSet> joins_;
  std::vector<std::optional<std::optional<std::vector<Element>>>> rfg_star_;
  std::optional<bool> secondful_;
  std::optional<NaturalMap> phi_;
  std::optional<ElementSet> ann_module_;
  std::optional<ModulePredicates> predicates_;
  std::optional<bool> second_noetherian_;
};

}  // namespace gradedspec
