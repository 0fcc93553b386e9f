#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradedspec/analysis.hpp"
#include "gradedspec/corpus.hpp"

namespace gradedspec {

enum class SearchProperty { NonSecondful, Secondless, NonCotop };

inline std::optional<SearchProperty> parse_search_property(const std::string& s) {
  if (s == "non-secondful") return SearchProperty::NonSecondful;
  if (s == "secondless") return SearchProperty::Secondless;
  if (s == "non-cotop") return SearchProperty::NonCotop;
  return std::nullopt;
}

inline std::string_view to_string(SearchProperty p) {
  switch (p) {
    case SearchProperty::NonSecondful: return "non-secondful";
    case SearchProperty::Secondless: return "secondless";
    case SearchProperty::NonCotop: return "non-cotop";
  }
  return "?";
}

struct SearchResult {
  SearchProperty property = SearchProperty::NonSecondful;
  std::optional<Instance> found;
  std::size_t checked = 0;       // instances with a nonzero module examined
  std::size_t without_module = 0;
  std::vector<std::string> checked_names;
  std::string summary;
};

inline bool has_property(InstanceAnalysis& a, SearchProperty p) {
  if (!a.module_nonzero()) return false;
  switch (p) {
    case SearchProperty::NonSecondful: return !a.secondful();
    case SearchProperty::Secondless: return a.second().is_secondless();
    case SearchProperty::NonCotop: return !a.second().is_cotop();
  }
  return false;
}

/// Scans instances in the given order and stops at the first one with the
/// property. Only finite instances are examined.
inline SearchResult search_instances(const std::vector<LoadedInstance>& instances, SearchProperty p,
                                     const Limits& limits, const std::string& range) {
  SearchResult out;
  out.property = p;
  for (const auto& inst : instances) {
    if (!inst.module || inst.module->size() <= 1) {
      ++out.without_module;
      continue;
    }
    InstanceAnalysis a(inst, limits);
    ++out.checked;
    out.checked_names.push_back(inst.desc.name);
    if (has_property(a, p)) {
      out.found = inst.desc;
      break;
    }
  }
  std::ostringstream s;
  s << "search " << to_string(p) << " over " << range << ": examined " << out.checked
    << " instances with a nonzero module";
  if (out.found) {
    s << "; first hit: " << out.found->name;
  } else {
    s << "; none found";
  }
  s << ". Only finite instances are searched; infinite modules such as the integers over themselves are outside "
       "this search and no claim about them is made.";
  out.summary = s.str();
  return out;
}

/// Default search space: the curated instances followed by every candidate the
/// corpus generator produces within the bounds.
inline SearchResult search_counterexample(SearchProperty p, CorpusBounds bounds, std::uint64_t seed) {
  const Corpus corpus = generate_corpus(bounds, seed);
  Limits limits;
  limits.max_ring_order = bounds.max_ring_order;
  limits.max_module_order = bounds.max_module_order;
  limits.max_lattice = bounds.max_lattice;
  std::ostringstream range;
  range << "ring order <= " << bounds.max_ring_order << ", module order <= " << bounds.max_module_order
        << ", group order <= " << bounds.max_group_order << ", " << corpus.instances.size() << " instances, seed "
        << seed;
  return search_instances(corpus.instances, p, limits, range.str());
}

}  // namespace gradedspec
