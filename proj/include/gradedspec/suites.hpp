#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "gradedspec/analysis.hpp"

namespace gradedspec {

enum class Status { Pass, Fail, Vacuous, Skipped };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Vacuous: return "vacuous";
    case Status::Skipped: return "precondition-skipped";
  }
  return "?";
}

struct Outcome {
  Status status = Status::Pass;
  Json counterexample;  // null unless status is Fail
  std::string note;
};

struct SuiteResult {
  std::string suite;
  std::string instance;
  Status status = Status::Pass;
  Json counterexample;
  std::string note;
  std::int64_t millis = 0;
};

using SuiteFn = std::function<Outcome(InstanceAnalysis&)>;

struct Suite {
  std::string id;
  std::string title;
  bool module_side = false;
  SuiteFn run;
};

namespace suites {

using A = InstanceAnalysis;

template <class Set>
Json elems(const Set& s) {
  Json out = Json::array();
  for (auto x : s.to_vector()) out.push_back(x);
  return out;
}
inline Json elems(const std::vector<Element>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

// Point sets are reported as the list of their members' element lists.
inline Json prime_points(const PrimeSpectrum& rs, const PointSet& y) {
  Json out = Json::array();
  y.for_each([&](std::size_t p) { out.push_back(elems(rs.points()[p].elements)); });
  return out;
}
inline Json second_points(const SecondSpectrum& ss, const PointSet& y) {
  Json out = Json::array();
  y.for_each([&](std::size_t p) { out.push_back(elems(ss.points()[p].elements)); });
  return out;
}

inline Outcome pass(std::string note = {}) { return {Status::Pass, nullptr, std::move(note)}; }
inline Outcome vacuous(std::string note) { return {Status::Vacuous, nullptr, std::move(note)}; }
inline Outcome skipped(std::string note) { return {Status::Skipped, nullptr, std::move(note)}; }
inline Outcome fail(const std::string& check, Json detail) {
  Json cx = Json::object();
  cx["check"] = check;
  for (auto it = detail.begin(); it != detail.end(); ++it) cx[it.key()] = it.value();
  return {Status::Fail, std::move(cx), {}};
}

// Both sides of a biconditional evaluated independently. On a finite
// instance both must hold.
inline Outcome both_sides(const std::string& left_name, bool left, const std::string& right_name, bool right) {
  if (left && right) return pass();
  return fail(left_name + " <=> " + right_name, Json{{"left", left}, {"right", right}});
}

// Subsets of the point set used for closure checks: all of them for small
// spectra, otherwise those of size at most two plus every closed set.
template <class F>
bool for_each_sample(std::size_t n, const SpectrumTopology& t, F&& f) {
  if (n <= 10) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      PointSet y(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) y.insert(i);
      if (f(y)) return true;
    }
    return false;
  }
  if (f(PointSet(n))) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      PointSet y(n);
      y.insert(i);
      y.insert(j);
      if (f(y)) return true;
    }
  for (const auto& c : t.closed_sets())
    if (f(c.points)) return true;
  return false;
}

inline bool rfg_witness_ok(A& a, std::size_t i, const std::optional<std::vector<Element>>& w) {
  if (!w) return false;
  ElementSet gens;
  for (auto x : *w) {
    if (!a.ideal(i).contains(x) || !a.ring().is_homogeneous(x)) return false;
    gens.insert(x);
  }
  return a.radical_of(ideal_closure(a.ring(), gens)) == a.radical(i);
}

inline ElementSet generated(A& a, const std::vector<Element>& w) {
  ElementSet gens;
  for (auto x : w) gens.insert(x);
  return ideal_closure(a.ring(), gens);
}

inline bool rfg_star_witness_ok(A& a, std::size_t j, const std::optional<std::vector<Element>>& w) {
  if (!w) return false;
  for (auto x : *w)
    if (!a.ring().is_homogeneous(x)) return false;
  const ElementSet target = ann_in_module(a.module(), generated(a, *w));
  return a.second().zariski_socle(target) == a.zsoc(j);
}

inline std::vector<PointSet> sorted_sets(std::vector<PointSet> v) {
  std::sort(v.begin(), v.end(), CanonicalLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline Json point_family(const PrimeSpectrum& rs, const std::vector<PointSet>& v) {
  Json out = Json::array();
  for (const auto& y : v) out.push_back(prime_points(rs, y));
  return out;
}

inline std::optional<std::size_t> longest_chain_of_ideals(A& a) {
  std::vector<ElementSet> all;
  for (const auto& i : a.ideals().ideals()) all.push_back(i.elements);
  return SpectrumTopology::longest_strict_chain(all);
}

// ---------------------------------------------------------------- ring side

inline Outcome closure_is_variety_of_xi(A& a) {
  const auto& rs = a.primes();
  Outcome out = pass();
  for_each_sample(rs.size(), rs.topology(), [&](const PointSet& y) {
    const auto left = rs.closure(y);
    const auto right = rs.topology().closure(y);
    if (left == right) return false;
    out = fail("Cl(Y) = V(xi(Y))", Json{{"Y", prime_points(rs, y)},
                                        {"V_xi", prime_points(rs, left)},
                                        {"smallest_closed", prime_points(rs, right)}});
    return true;
  });
  return out;
}

inline Outcome radical_is_xi_of_variety(A& a) {
  const auto& rs = a.primes();
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    const auto xi = rs.xi(a.variety(i)).elements;
    if (xi != a.radical(i))
      return fail("Gr(I) = xi(V(I))",
                  Json{{"ideal", elems(a.ideal(i).elements)}, {"Gr", elems(a.radical(i))}, {"xi_V", elems(xi)}});
  }
  return pass();
}

inline Outcome radical_equal_iff_variety_equal(A& a) {
  const std::size_t n = a.ideals().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool gr = a.radical(i) == a.radical(j);
      const bool v = a.variety(i) == a.variety(j);
      if (gr != v)
        return fail("Gr(I1) = Gr(I2) <=> V(I1) = V(I2)", Json{{"I1", elems(a.ideal(i).elements)},
                                                              {"I2", elems(a.ideal(j).elements)},
                                                              {"radicals_equal", gr},
                                                              {"varieties_equal", v}});
    }
  return pass();
}

inline Outcome quotient_correspondence(A& a) {
  const auto& rs = a.primes();
  const bool noetherian = a.is_noetherian();
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    const auto& ideal = a.ideal(i);
    if (!ideal.is_proper()) continue;
    const auto q = quotient_ring(a.ring(), ideal, a.limits());
    const PrimeSpectrum qs(q.ring, a.limits());
    std::vector<std::size_t> to_r;
    for (const auto& p : qs.points()) {
      auto idx = rs.point_index(q.preimage(p.elements));
      if (!idx) return fail("primes of R/I lift to primes of R", Json{{"ideal", elems(ideal.elements)}});
      to_r.push_back(*idx);
    }
    std::vector<PointSet> lifted;
    for (const auto& c : qs.topology().closed_sets()) {
      PointSet y(rs.size());
      c.points.for_each([&](std::size_t p) { y.insert(to_r[p]); });
      lifted.push_back(y);
    }
    std::vector<PointSet> expected;
    for (std::size_t j = 0; j < a.ideals().size(); ++j)
      if (ideal.is_subset_of(a.ideal(j))) expected.push_back(a.variety(j));
    lifted = sorted_sets(std::move(lifted));
    expected = sorted_sets(std::move(expected));
    if (lifted != expected)
      return fail("closed sets of Spec(R/I) = {V(J) : J contains I}", Json{{"ideal", elems(ideal.elements)},
                                                                           {"quotient_closed", point_family(rs, lifted)},
                                                                           {"expected", point_family(rs, expected)}});
    if (noetherian && !is_noetherian_space(qs.topology()))
      return fail("Noetherian spectrum passes to R/I", Json{{"ideal", elems(ideal.elements)}});
  }
  return pass();
}

inline Outcome acc_radicals_iff_noetherian(A& a) {
  std::vector<ElementSet> radicals;
  for (std::size_t i = 0; i < a.ideals().size(); ++i)
    if (a.is_radical(i)) radicals.push_back(a.ideal(i).elements);
  const bool acc = SpectrumTopology::longest_strict_chain(radicals).has_value();
  return both_sides("Noetherian spectrum", a.is_noetherian(), "ACC on graded radical ideals", acc);
}

inline Outcome graded_noetherian_ring_gives_noetherian_spectrum(A& a) {
  if (!longest_chain_of_ideals(a)) return skipped("ring is not graded Noetherian");
  if (!a.is_noetherian()) return fail("graded Noetherian ring => Noetherian spectrum", Json{{"noetherian", false}});
  return pass();
}

inline Outcome irreducible_closed_iff_variety_of_prime(A& a) {
  const auto& rs = a.primes();
  for (const auto& c : rs.topology().closed_sets()) {
    const bool irreducible = rs.is_irreducible(c.points);
    bool of_prime = false;
    for (const auto& p : rs.points())
      if (rs.variety(p) == c.points) of_prime = true;
    const bool xi_prime = is_graded_prime(a.ring(), rs.xi(c.points));
    if (irreducible != of_prime || irreducible != xi_prime)
      return fail("closed Y irreducible <=> Y = V(p), p graded prime", Json{{"Y", prime_points(rs, c.points)},
                                                                          {"irreducible", irreducible},
                                                                          {"variety_of_prime", of_prime},
                                                                          {"xi_prime", xi_prime}});
  }
  return pass();
}

inline Outcome components_are_varieties_of_minimal_divisors(A& a) {
  const auto& rs = a.primes();
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    const auto direct = sorted_sets(rs.topology().irreducible_components(a.variety(i)));
    const auto via_divisors = sorted_sets(rs.irreducible_components_of_variety(a.ideal(i)));
    if (direct != via_divisors)
      return fail("components of V(I) = {V(p) : p minimal over I}", Json{{"ideal", elems(a.ideal(i).elements)},
                                                                         {"components", point_family(rs, direct)},
                                                                         {"from_divisors", point_family(rs, via_divisors)}});
  }
  return pass();
}

inline Outcome noetherian_variety_has_finitely_many_divisors(A& a) {
  const auto& rs = a.primes();
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    const auto& v = a.variety(i);
    std::vector<PointSet> relative;
    for (const auto& c : rs.topology().closed_sets()) relative.push_back(c.points & v);
    if (!SpectrumTopology::longest_strict_chain(sorted_sets(relative))) continue;
    const auto divisors = rs.minimal_prime_divisors(a.ideal(i));
    const auto comps = rs.topology().irreducible_components(v);
    if (divisors.size() > rs.size() || divisors.size() != comps.size())
      return fail("Noetherian V(I) has finitely many minimal divisors",
                  Json{{"ideal", elems(a.ideal(i).elements)}, {"divisors", divisors.size()}, {"components", comps.size()}});
  }
  return pass();
}

inline Outcome components_of_spectrum(A& a) {
  const auto& rs = a.primes();
  std::vector<PointSet> minimal;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < rs.size(); ++j)
      if (i != j && rs.points()[j].is_subset_of(rs.points()[i])) is_min = false;
    if (is_min) minimal.push_back(rs.variety(rs.points()[i]));
  }
  const auto full = PointSet::full(rs.size());
  const auto comps = sorted_sets(rs.topology().irreducible_components(full));
  minimal = sorted_sets(std::move(minimal));
  if (comps != minimal)
    return fail("components of Spec = {V(p) : p minimal graded prime}",
                Json{{"components", point_family(rs, comps)}, {"minimal_primes", point_family(rs, minimal)}});
  if (a.is_noetherian() && minimal.size() > rs.size())
    return fail("finitely many minimal graded primes", Json{{"count", minimal.size()}});
  return pass();
}

inline Outcome radical_ideal_is_intersection_of_minimal_divisors(A& a) {
  if (!a.is_noetherian()) return skipped("spectrum is not Noetherian");
  const auto& rs = a.primes();
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    if (!a.is_radical(i)) continue;
    const auto& ideal = a.ideal(i);
    const auto dec = rs.radical_decomposition(ideal);
    if (!ideal.is_proper()) {
      if (!dec.empty()) return fail("R is the empty intersection", Json{{"decomposition_size", dec.size()}});
      continue;
    }
    std::vector<ElementSet> expected;
    for (const auto& p : rs.points()) {
      if (!ideal.is_subset_of(p)) continue;
      bool minimal = true;
      for (const auto& q : rs.points())
        if (q.elements != p.elements && ideal.is_subset_of(q) && q.is_subset_of(p)) minimal = false;
      if (minimal) expected.push_back(p.elements);
    }
    std::vector<ElementSet> got;
    ElementSet meet = a.ring().all();
    for (const auto& p : dec) {
      got.push_back(p.elements);
      meet &= p.elements;
    }
    std::sort(expected.begin(), expected.end(), CanonicalLess{});
    std::sort(got.begin(), got.end(), CanonicalLess{});
    Json got_json = Json::array();
    for (const auto& g : got) got_json.push_back(elems(g));
    if (got.empty() || got != expected || meet != ideal.elements)
      return fail("graded radical I = intersection of its minimal prime divisors",
                  Json{{"ideal", elems(ideal.elements)}, {"divisors", got_json}, {"intersection", elems(meet)}});
  }
  return pass();
}

inline Outcome rfg_closed_under_product_and_intersection(A& a) {
  const std::size_t n = a.ideals().size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!rfg_witness_ok(a, i, a.rfg(i))) return fail("I is RFG", Json{{"ideal", elems(a.ideal(i).elements)}});
    for (std::size_t j = i; j < n; ++j) {
      if (!rfg_witness_ok(a, j, a.rfg(j))) continue;
      const auto prod = ideal_combine(CombineMode::Product, a.ideal(i), a.ideal(j));
      const auto meet = ideal_combine(CombineMode::Intersection, a.ideal(i), a.ideal(j));
      const auto pi = a.ideal_index(prod.elements);
      const auto mi = a.ideal_index(meet.elements);
      const auto wi = make_ideal(a.ring(), generated(a, *a.rfg(i)));
      const auto wj = make_ideal(a.ring(), generated(a, *a.rfg(j)));
      const auto wprod = ideal_combine(CombineMode::Product, wi, wj);
      const bool constructive = a.radical_of(wprod.elements) == a.radical(pi) && a.radical(pi) == a.radical(mi);
      if (!constructive || !rfg_witness_ok(a, pi, a.rfg(pi)) || !rfg_witness_ok(a, mi, a.rfg(mi)))
        return fail("I, J RFG => IJ and I cap J RFG",
                    Json{{"I", elems(a.ideal(i).elements)}, {"J", elems(a.ideal(j).elements)}});
    }
  }
  return pass();
}

inline Outcome rfg_witness_inside_ideal(A& a) {
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    const auto& w = a.rfg(i);
    if (!rfg_witness_ok(a, i, w))
      return fail("Gr(I) = Gr(Rx_1 + ... + Rx_n) with x_i in h(I)",
                  Json{{"ideal", elems(a.ideal(i).elements)}, {"witness", w ? elems(*w) : Json()}});
  }
  return pass();
}

inline Outcome noetherian_iff_open_compact(A& a) {
  const auto& t = a.primes().topology();
  return both_sides("DCC on closed sets", t.has_dcc(), "every open set compact", t.every_open_compact());
}

inline bool all_ideals_rfg(A& a) {
  for (std::size_t i = 0; i < a.ideals().size(); ++i)
    if (!rfg_witness_ok(a, i, a.rfg(i))) return false;
  return true;
}

inline Outcome noetherian_iff_property_rfg(A& a) {
  return both_sides("Noetherian spectrum", a.is_noetherian(), "property RFG", all_ideals_rfg(a));
}

inline Outcome maximal_non_rfg_are_prime(A& a) {
  std::vector<std::size_t> upsilon;
  for (std::size_t i = 0; i < a.ideals().size(); ++i)
    if (!rfg_witness_ok(a, i, a.rfg(i))) upsilon.push_back(i);
  if (upsilon.empty()) return vacuous("every graded ideal is RFG; the family of non-RFG ideals is empty");
  for (auto i : upsilon) {
    bool maximal = true;
    for (auto j : upsilon)
      if (i != j && a.ideal(i).is_subset_of(a.ideal(j))) maximal = false;
    if (maximal && !is_graded_prime(a.ring(), a.ideal(i)))
      return fail("maximal non-RFG ideal is prime", Json{{"ideal", elems(a.ideal(i).elements)}});
  }
  return pass();
}

inline Outcome noetherian_iff_primes_rfg(A& a) {
  bool primes_rfg = true;
  for (const auto& p : a.primes().points())
    if (!rfg_witness_ok(a, a.ideal_index(p.elements), a.rfg(a.ideal_index(p.elements)))) primes_rfg = false;
  return both_sides("Noetherian spectrum", a.is_noetherian(), "every graded prime RFG", primes_rfg);
}

inline Outcome prime_topology_and_base(A& a) {
  const auto& t = a.primes().topology();
  if (!t.axioms_hold()) return fail("closed sets form a topology", Json::object());
  if (!t.is_base()) return fail("D_r form a base", Json::object());
  return pass();
}

// -------------------------------------------------------------- module side

inline std::optional<Outcome> need_secondful(A& a) {
  if (!a.module_nonzero()) return skipped("zero module");
  if (!a.secondful()) return skipped("module is not secondful");
  return std::nullopt;
}

inline std::optional<Outcome> need_secondful_faithful(A& a) {
  if (auto s = need_secondful(a)) return s;
  if (!a.predicates().is_faithful) return skipped("module is not faithful");
  return std::nullopt;
}

inline Outcome second_points_sound(A& a) {
  const auto& ss = a.second();
  for (std::size_t p = 0; p < ss.size(); ++p) {
    const auto& s = ss.points()[p];
    if (!is_second(a.module(), s.elements) || !is_graded_prime(a.ring(), make_ideal(a.ring(), ss.point_ann(p))))
      return fail("second point with graded prime annihilator", Json{{"S", elems(s.elements)}});
  }
  return pass();
}

inline Outcome second_topology_and_base(A& a) {
  const auto& t = a.second().topology();
  if (!t.axioms_hold()) return fail("V_s family forms a topology", Json::object());
  if (!t.is_base()) return fail("X_r form a base", Json::object());
  return pass();
}

inline Outcome ann_ann_iff_contains(A& a) {
  if (auto s = need_secondful(a)) return *s;
  const ElementSet& am = a.ann_module();
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    if (!a.is_radical(i)) continue;
    const auto& ideal = a.ideal(i).elements;
    const bool left = ann_in_ring(a.module(), a.ann_m(i)) == ideal;
    const bool right = am.is_subset_of(ideal);
    if (left != right)
      return fail("Ann_R(Ann_M(I)) = I <=> Ann_R(M) in I",
                  Json{{"ideal", elems(ideal)}, {"double_annihilator_equal", left}, {"contains_ann_M", right}});
  }
  return pass();
}

inline Outcome unit_witness_for_maximal(A& a) {
  if (auto s = need_secondful(a)) return *s;
  const auto& r = a.ring();
  const ElementSet re = r.component(r.group().identity());
  const ElementSet& am = a.ann_module();
  std::size_t checked = 0;
  for (const auto& p : maximal_proper(a.ideals().ideals())) {
    if (a.ann_m(a.ideal_index(p.elements)).count() != 1) continue;
    ++checked;
    bool found = false;
    for (auto x : (p.elements & re).to_vector())
      if (am.contains(r.add(r.one(), x))) {
        found = true;
        break;
      }
    if (!found) return fail("exists x in p cap R_e with (1+x)M = 0", Json{{"p", elems(p.elements)}});
  }
  if (checked == 0) return vacuous("no graded maximal ideal p has Ann_M(p) = 0");
  return pass();
}

inline Outcome small_radical_does_not_kill(A& a, const ElementSet& bound, const char* what) {
  std::size_t checked = 0;
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    if (!a.is_radical(i) || !a.ideal(i).elements.is_subset_of(bound)) continue;
    ++checked;
    if (a.ann_m(i).count() == 1)
      return fail(std::string("graded radical I in ") + what + " with Ann_M(I) = 0 forces M = 0",
                  Json{{"ideal", elems(a.ideal(i).elements)}, {"module_size", a.module().size()}});
  }
  if (checked == 0) return vacuous(std::string("no graded radical ideal lies in ") + what);
  return pass();
}

inline Outcome jacobson_graded(A& a) {
  if (auto s = need_secondful(a)) return *s;
  const auto jg = intersect_all(a.ring(), maximal_proper(a.ideals().ideals())).elements;
  return small_radical_does_not_kill(a, jg, "J_G(R)");
}

inline Outcome jacobson_identity(A& a) {
  if (auto s = need_secondful(a)) return *s;
  const auto& r = a.ring();
  const auto je = jacobson_radical_e(r);
  const auto jg = intersect_all(r, maximal_proper(a.ideals().ideals())).elements;
  if (je != (jg & r.component(r.group().identity())))
    return fail("J(R_e) = J_G(R) cap R_e", Json{{"J_e", elems(je)}, {"J_G", elems(jg)}});
  return small_radical_does_not_kill(a, je, "J(R_e)");
}

inline Outcome second_socle_formula(A& a) {
  const auto& ss = a.second();
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    const auto& n = a.submodules()[j].elements;
    if (a.soc(j) != ss.second_socle_raw(n))
      return fail("soc(N) = T(V_s*(N))", Json{{"N", elems(n)}, {"T", elems(a.soc(j))}, {"raw", elems(ss.second_socle_raw(n))}});
  }
  return pass();
}

inline Outcome zariski_socle_formula(A& a) {
  const auto& ss = a.second();
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    const auto& n = a.submodules()[j].elements;
    if (a.zsoc(j) != ss.zariski_socle_raw(n))
      return fail("Z.soc(N) = T(V_s(N))",
                  Json{{"N", elems(n)}, {"T", elems(a.zsoc(j))}, {"raw", elems(ss.zariski_socle_raw(n))}});
  }
  return pass();
}

inline Outcome second_closure_formula(A& a) {
  const auto& ss = a.second();
  Outcome out = pass();
  for_each_sample(ss.size(), ss.topology(), [&](const PointSet& y) {
    const auto left = ss.closure(y);
    const auto right = ss.v_s(ss.members_sum(y));
    if (left == right) return false;
    out = fail("Cl(Y) = V_s(T(Y))", Json{{"Y", second_points(ss, y)},
                                        {"closure", second_points(ss, left)},
                                        {"V_s_T", second_points(ss, right)}});
    return true;
  });
  if (out.status == Status::Fail) return out;
  for (std::size_t j = 0; j < a.submodules().size(); ++j)
    if (ss.v_s(a.zsoc(j)) != a.vs(j))
      return fail("V_s(Z.soc(N)) = V_s(N)", Json{{"N", elems(a.submodules()[j].elements)}});
  return pass();
}

inline Outcome varieties_of_annihilator_submodules(A& a) {
  const auto& ss = a.second();
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    const auto& x = a.ann_m(i);
    const auto& y = a.ann_m(a.ideal_index(a.radical(i)));
    const auto v = ss.v_s(x);
    if (ss.v_s(y) != v || ss.v_s_star(x) != v || ss.v_s_star(y) != v)
      return fail("V_s(Ann_M(I)) = V_s(Ann_M(Gr I)) = V_s*(Ann_M(I)) = V_s*(Ann_M(Gr I))",
                  Json{{"ideal", elems(a.ideal(i).elements)}, {"Ann_M_I", elems(x)}, {"Ann_M_GrI", elems(y)}});
  }
  return pass();
}

inline Outcome varieties_via_double_annihilator(A& a) {
  const auto& ss = a.second();
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    const auto& x = a.double_ann(j);
    const auto& y = a.ann_m(a.ideal_index(a.radical_of(ss.ann(j))));
    const auto& v = a.vs(j);
    if (ss.v_s(x) != v || ss.v_s(y) != v || ss.v_s_star(x) != v || ss.v_s_star(y) != v)
      return fail("V_s(N) = V_s(Ann_M Ann_R N) = V_s(Ann_M Gr Ann_R N) = V_s*(...)",
                  Json{{"N", elems(a.submodules()[j].elements)}, {"Ann_M_Ann_R_N", elems(x)}, {"Ann_M_Gr", elems(y)}});
  }
  return pass();
}

inline Outcome socles_of_annihilator_submodules(A& a) {
  const auto& ss = a.second();
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    const auto& x = a.ann_m(i);
    const auto& y = a.ann_m(a.ideal_index(a.radical(i)));
    const auto z = ss.zariski_socle(x);
    if (ss.zariski_socle(y) != z || ss.second_socle(x) != z || ss.second_socle(y) != z)
      return fail("Z.soc(Ann_M I) = Z.soc(Ann_M Gr I) = soc(Ann_M I) = soc(Ann_M Gr I)",
                  Json{{"ideal", elems(a.ideal(i).elements)}, {"Ann_M_I", elems(x)}, {"Ann_M_GrI", elems(y)}});
  }
  return pass();
}

inline Outcome socles_via_double_annihilator(A& a) {
  const auto& ss = a.second();
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    const auto& x = a.double_ann(j);
    const auto& y = a.ann_m(a.ideal_index(a.radical_of(ss.ann(j))));
    const auto& z = a.zsoc(j);
    if (ss.zariski_socle(x) != z || ss.zariski_socle(y) != z || ss.second_socle(x) != z || ss.second_socle(y) != z)
      return fail("Z.soc(N) = Z.soc(Ann_M Ann_R N) = ... = soc(Ann_M Gr Ann_R N)",
                  Json{{"N", elems(a.submodules()[j].elements)}, {"Z_soc", elems(z)}});
  }
  return pass();
}

inline Outcome socle_inside_zariski_socle(A& a) {
  const bool comult = a.predicates().is_comultiplication;
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    if (!a.soc(j).is_subset_of(a.zsoc(j)))
      return fail("soc(N) in Z.soc(N)", Json{{"N", elems(a.submodules()[j].elements)}});
    if (comult && a.soc(j) != a.zsoc(j))
      return fail("comultiplication => soc(N) = Z.soc(N)", Json{{"N", elems(a.submodules()[j].elements)}});
  }
  return pass();
}

inline Outcome variety_inclusion_gives_socle_inclusion(A& a) {
  const std::size_t n = a.submodules().size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (a.vs(j).is_subset_of(a.vs(k)) && !a.zsoc(j).is_subset_of(a.zsoc(k)))
        return fail("V_s(N) in V_s(N') => Z.soc(N) in Z.soc(N')",
                    Json{{"N", elems(a.submodules()[j].elements)}, {"N_prime", elems(a.submodules()[k].elements)}});
  return pass();
}

inline Outcome variety_equal_iff_socle_equal(A& a) {
  const std::size_t n = a.submodules().size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if ((a.vs(j) == a.vs(k)) != (a.zsoc(j) == a.zsoc(k)))
        return fail("V_s(N) = V_s(N') <=> Z.soc(N) = Z.soc(N')",
                    Json{{"N", elems(a.submodules()[j].elements)}, {"N_prime", elems(a.submodules()[k].elements)}});
  return pass();
}

inline std::size_t zero_index(A& a) {
  ElementSet z;
  z.insert(a.module().zero());
  return a.submodule_index(z);
}

inline Outcome zsoc_of_zero(A& a) {
  const auto& z = a.zsoc(zero_index(a));
  if (z.count() != 1) return fail("Z.soc(0) = 0", Json{{"Z_soc_0", elems(z)}});
  return pass();
}

inline Outcome zsoc_monotone(A& a) {
  const std::size_t n = a.submodules().size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (a.submodules()[j].is_subset_of(a.submodules()[k]) && !a.zsoc(j).is_subset_of(a.zsoc(k)))
        return fail("N in N' => Z.soc(N) in Z.soc(N')",
                    Json{{"N", elems(a.submodules()[j].elements)}, {"N_prime", elems(a.submodules()[k].elements)}});
  return pass();
}

inline Outcome zsoc_idempotent(A& a) {
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    const auto k = a.submodule_index(a.zsoc(j));
    if (a.zsoc(k) != a.zsoc(j))
      return fail("Z.soc(Z.soc(N)) = Z.soc(N)", Json{{"N", elems(a.submodules()[j].elements)}});
  }
  return pass();
}

inline Outcome zsoc_additive(A& a) {
  const std::size_t n = a.submodules().size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) {
      const auto sum = a.submodule_index(a.join(j, k));
      const auto& rhs = a.join(a.submodule_index(a.zsoc(j)), a.submodule_index(a.zsoc(k)));
      if (a.zsoc(sum) != rhs)
        return fail("Z.soc(N + N') = Z.soc(N) + Z.soc(N')",
                    Json{{"N", elems(a.submodules()[j].elements)}, {"N_prime", elems(a.submodules()[k].elements)}});
    }
  return pass();
}

inline Outcome nonzero_iff_variety_iff_socle(A& a) {
  if (auto s = need_secondful(a)) return *s;
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    const bool nz = !a.submodules()[j].is_zero();
    const bool v = !a.vs(j).empty();
    const bool z = a.zsoc(j).count() > 1;
    if (nz != v || v != z)
      return fail("N != 0 <=> V_s(N) nonempty <=> Z.soc(N) != 0",
                  Json{{"N", elems(a.submodules()[j].elements)}, {"variety_nonempty", v}, {"socle_nonzero", z}});
  }
  return pass();
}

inline Outcome radical_of_annihilator_vs_socle(A& a) {
  const bool secondful = a.module_nonzero() && a.secondful();
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    const auto& gr = a.radical_of(a.second().ann(j));
    const auto ann_z = a.second().ann(a.zsoc(j));
    if (!gr.is_subset_of(ann_z))
      return fail("Gr(Ann_R N) in Ann_R(Z.soc N)", Json{{"N", elems(a.submodules()[j].elements)}});
    if (secondful && gr != ann_z)
      return fail("secondful => Gr(Ann_R N) = Ann_R(Z.soc N)",
                  Json{{"N", elems(a.submodules()[j].elements)}, {"Gr_Ann", elems(gr)}, {"Ann_Z_soc", elems(ann_z)}});
  }
  return pass();
}

inline Outcome noetherian_iff_dcc_zariski_socles(A& a) {
  std::vector<ElementSet> socles;
  for (std::size_t j = 0; j < a.submodules().size(); ++j) socles.push_back(a.zsoc(j));
  std::sort(socles.begin(), socles.end(), CanonicalLess{});
  socles.erase(std::unique(socles.begin(), socles.end()), socles.end());
  const bool dcc = SpectrumTopology::longest_strict_chain(socles).has_value();
  return both_sides("Noetherian second spectrum", a.second_noetherian(), "DCC on Zariski socle submodules", dcc);
}

inline Outcome artinian_gives_noetherian(A& a) {
  std::vector<ElementSet> all;
  for (const auto& n : a.submodules()) all.push_back(n.elements);
  if (!SpectrumTopology::longest_strict_chain(all)) return skipped("module is not graded Artinian");
  if (!a.second_noetherian()) return fail("graded Artinian => Noetherian second spectrum", Json::object());
  return pass();
}

inline Outcome phi_preimage_of_varieties(A& a) {
  if (!a.module_nonzero()) return skipped("zero module");
  const auto& phi = a.phi();
  const auto& am = a.ann_module();
  const auto& ss = a.second();
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    if (!am.is_subset_of(a.ideal(i).elements)) continue;
    const auto bar = phi.codomain.variety(phi.quotient.image(a.ideal(i).elements));
    const auto pre = phi.preimage_of(bar);
    const auto expected = ss.v_s(a.ann_m(i));
    if (pre != expected)
      return fail("phi^-1(V(I/Ann M)) = V_s(Ann_M(I))", Json{{"ideal", elems(a.ideal(i).elements)},
                                                            {"preimage", second_points(ss, pre)},
                                                            {"V_s", second_points(ss, expected)}});
  }
  for (const auto& c : phi.codomain.topology().closed_sets())
    if (!ss.topology().is_closed(phi.preimage_of(c.points)))
      return fail("phi is continuous", Json{{"closed_in_codomain", elems(c.defining)}});
  return pass();
}

inline Outcome phi_image_of_varieties(A& a) {
  if (auto s = need_secondful(a)) return *s;
  const auto& phi = a.phi();
  const auto& ss = a.second();
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    const auto img = phi.image_of(a.vs(j));
    const auto expected = phi.codomain.variety(phi.quotient.image(ss.ann(j)));
    if (img != expected || !phi.codomain.topology().is_closed(img))
      return fail("phi(V_s(N)) = V(Ann_R(N)/Ann_R(M))", Json{{"N", elems(a.submodules()[j].elements)}});
  }
  return pass();
}

inline Outcome bar_varieties_agree(A& a) {
  if (auto s = need_secondful(a)) return *s;
  const auto& phi = a.phi();
  const auto& am = a.ann_module();
  for (std::size_t i = 0; i < a.ideals().size(); ++i) {
    if (!am.is_subset_of(a.ideal(i).elements)) continue;
    const auto left = phi.codomain.variety(phi.quotient.image(ann_in_ring(a.module(), a.ann_m(i))));
    const auto right = phi.codomain.variety(phi.quotient.image(a.ideal(i).elements));
    if (left != right)
      return fail("V(Ann_R(Ann_M I)/Ann M) = V(I/Ann M)", Json{{"ideal", elems(a.ideal(i).elements)}});
  }
  return pass();
}

inline Outcome second_noetherian_iff_quotient_noetherian(A& a) {
  if (auto s = need_secondful(a)) return *s;
  return both_sides("Noetherian second spectrum", a.second_noetherian(), "Noetherian Spec(R/Ann M)",
                    is_noetherian_space(a.phi().codomain.topology()));
}

inline Outcome noetherian_ring_gives_noetherian_second(A& a) {
  if (auto s = need_secondful(a)) return *s;
  if (!a.is_noetherian() && !longest_chain_of_ideals(a)) return skipped("no Noetherian hypothesis on R holds");
  if (!a.second_noetherian()) return fail("Noetherian R => Noetherian second spectrum", Json::object());
  return pass();
}

inline Outcome socle_of_product_annihilator(A& a) {
  const std::size_t n = a.ideals().size();
  auto soc_of = [&](std::size_t i) { return a.submodule_index(a.soc(a.submodule_index(a.ann_m(i)))); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto k = a.ideal_index(ideal_combine(CombineMode::Product, a.ideal(i), a.ideal(j)).elements);
      const auto& left = a.soc(a.submodule_index(a.ann_m(k)));
      const auto& right = a.join(soc_of(i), soc_of(j));
      if (left != right)
        return fail("soc(Ann_M(I1 I2)) = soc(Ann_M I1) + soc(Ann_M I2)",
                    Json{{"I1", elems(a.ideal(i).elements)}, {"I2", elems(a.ideal(j).elements)}});
    }
  return pass();
}

inline std::optional<Outcome> need_decomposition_hypotheses(A& a) {
  if (!a.is_noetherian()) return skipped("spectrum of R is not Noetherian");
  if (auto s = need_secondful(a)) return s;
  if (!a.predicates().is_weak_comultiplication) return skipped("module is not weak comultiplication");
  return std::nullopt;
}

inline Outcome zariski_socle_is_finite_sum_of_seconds(A& a) {
  if (auto s = need_decomposition_hypotheses(a)) return *s;
  const auto& ss = a.second();
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    const auto& n = a.submodules()[j].elements;
    if (a.zsoc(j) != n) continue;
    const auto parts = zariski_socle_decomposition(ss, a.primes(), n, true, true);
    ElementSet sum;
    sum.insert(a.module().zero());
    Json parts_json = Json::array();
    bool all_second = true;
    for (const auto& s : parts) {
      if (!ss.point_index(s.elements)) all_second = false;
      sum = submodule_sum(a.module(), sum, s.elements);
      parts_json.push_back(elems(s.elements));
    }
    if (!all_second || sum != n)
      return fail("Zariski socle N = sum of Ann_M(p_i), p_i minimal over Gr(Ann_R N)",
                  Json{{"N", elems(n)}, {"parts", parts_json}, {"sum", elems(sum)}});
  }
  return pass();
}

inline Outcome zariski_socle_iff_sum_of_prime_annihilators(A& a) {
  if (auto s = need_decomposition_hypotheses(a)) return *s;
  const auto& rs = a.primes();
  const auto& ss = a.second();
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    const auto& n = a.submodules()[j].elements;
    const bool is_socle = a.zsoc(j) == n;
    bool representable = n.count() == 1;
    if (!representable) {
      // N is such a sum iff it equals the sum of every Ann_M(p), p in V(Ann N),
      // that already lies inside N.
      ElementSet sum;
      sum.insert(a.module().zero());
      bool any = false;
      const auto v = rs.variety(ss.ann(j));
      v.for_each([&](std::size_t p) {
        const auto& part = a.ann_m(a.ideal_index(rs.points()[p].elements));
        if (!part.is_subset_of(n)) return;
        any = true;
        sum = submodule_sum(a.module(), sum, part);
      });
      representable = any && sum == n;
    }
    if (is_socle != representable)
      return fail("N = Z.soc(N) <=> N = 0 or N = sum of Ann_M(p_i), p_i in V(Ann_R N)",
                  Json{{"N", elems(n)}, {"zariski_socle", is_socle}, {"representable", representable}});
  }
  return pass();
}

inline Outcome noetherian_iff_property_rfg_star(A& a) {
  if (auto s = need_secondful(a)) return *s;
  bool all = true;
  for (std::size_t j = 0; j < a.submodules().size() && all; ++j) all = rfg_star_witness_ok(a, j, a.rfg_star(j));
  return both_sides("Noetherian second spectrum", a.second_noetherian(), "property RFG*", all);
}

inline Outcome rfg_star_iff_annihilator_rfg(A& a) {
  if (auto s = need_secondful_faithful(a)) return *s;
  for (std::size_t j = 0; j < a.submodules().size(); ++j) {
    const auto& n = a.submodules()[j].elements;
    const auto ai = a.ideal_index(a.second().ann(j));
    const bool star = rfg_star_witness_ok(a, j, a.rfg_star(j));
    const bool ideal = rfg_witness_ok(a, ai, a.rfg(ai));
    // Each witness also works for the other side.
    bool transfer = star && ideal;
    if (transfer) {
      const auto from_star = generated(a, *a.rfg_star(j));
      transfer = a.radical_of(from_star) == a.radical(ai);
      const auto from_ideal = ann_in_module(a.module(), generated(a, *a.rfg(ai)));
      transfer = transfer && a.second().zariski_socle(from_ideal) == a.zsoc(j);
    }
    if (!transfer)
      return fail("N RFG* <=> Ann_R(N) RFG", Json{{"N", elems(n)}, {"rfg_star", star}, {"ann_rfg", ideal}});
  }
  return pass();
}

inline Outcome noetherian_iff_seconds_rfg_star(A& a) {
  if (auto s = need_secondful_faithful(a)) return *s;
  bool all = true;
  for (const auto& p : a.second().points()) {
    const auto j = a.submodule_index(p.elements);
    if (!rfg_star_witness_ok(a, j, a.rfg_star(j))) all = false;
  }
  return both_sides("Noetherian second spectrum", a.second_noetherian(), "every second submodule RFG*", all);
}

inline Outcome rfg_star_closed_under_sum(A& a) {
  if (auto s = need_secondful_faithful(a)) return *s;
  const std::size_t n = a.submodules().size();
  for (std::size_t j = 0; j < n; ++j) {
    if (!rfg_star_witness_ok(a, j, a.rfg_star(j))) continue;
    for (std::size_t k = j; k < n; ++k) {
      if (!rfg_star_witness_ok(a, k, a.rfg_star(k))) continue;
      const auto sum = a.submodule_index(a.join(j, k));
      const auto ij = make_ideal(a.ring(), generated(a, *a.rfg_star(j)));
      const auto ik = make_ideal(a.ring(), generated(a, *a.rfg_star(k)));
      const auto prod = ideal_combine(CombineMode::Product, ij, ik);
      const bool constructive = a.second().zariski_socle(ann_in_module(a.module(), prod.elements)) == a.zsoc(sum);
      if (!constructive || !rfg_star_witness_ok(a, sum, a.rfg_star(sum)))
        return fail("N1, N2 RFG* => N1 + N2 RFG*",
                    Json{{"N1", elems(a.submodules()[j].elements)}, {"N2", elems(a.submodules()[k].elements)}});
    }
  }
  return pass();
}

}  // namespace suites

/// The full suite catalog in canonical order.
inline const std::vector<Suite>& suite_catalog() {
  using namespace suites;
  static const std::vector<Suite> catalog{
      {"Spec-G-base", "closed sets form a topology with base D_r", false, prime_topology_and_base},
      {"Lemma-2.1.1", "closure is V(xi(Y))", false, closure_is_variety_of_xi},
      {"Lemma-2.1.2", "graded radical is xi(V(I))", false, radical_is_xi_of_variety},
      {"Lemma-2.1.3", "equal radicals iff equal varieties", false, radical_equal_iff_variety_equal},
      {"Lemma-2.1.4", "quotient spectrum correspondence", false, quotient_correspondence},
      {"Prop-2.2a", "Noetherian spectrum iff ACC on radical ideals", false, acc_radicals_iff_noetherian},
      {"Prop-2.2b", "graded Noetherian ring has Noetherian spectrum", false,
       graded_noetherian_ring_gives_noetherian_spectrum},
      {"Thm-2.3", "irreducible closed sets are V(p)", false, irreducible_closed_iff_variety_of_prime},
      {"Thm-2.5.1", "components of V(I) from minimal divisors", false, components_are_varieties_of_minimal_divisors},
      {"Thm-2.5.2", "finitely many minimal divisors", false, noetherian_variety_has_finitely_many_divisors},
      {"Cor-2.6", "components of the spectrum from minimal primes", false, components_of_spectrum},
      {"Thm-2.7", "radical ideals decompose into minimal divisors", false,
       radical_ideal_is_intersection_of_minimal_divisors},
      {"Prop-2.9.1", "RFG closed under product and intersection", false, rfg_closed_under_product_and_intersection},
      {"Prop-2.9.2", "RFG witness from homogeneous elements of I", false, rfg_witness_inside_ideal},
      {"Lemma-2.10", "Noetherian iff every open compact", false, noetherian_iff_open_compact},
      {"Thm-2.11", "Noetherian spectrum iff property RFG", false, noetherian_iff_property_rfg},
      {"Prop-2.12", "maximal non-RFG ideals are prime", false, maximal_non_rfg_are_prime},
      {"Cor-2.13", "Noetherian spectrum iff primes RFG", false, noetherian_iff_primes_rfg},
      {"Spec-s-points", "second points have graded prime annihilators", true, second_points_sound},
      {"Spec-s-base", "V_s family forms a topology with base X_r", true, second_topology_and_base},
      {"Prop-3.3.1", "Ann_R(Ann_M(I)) = I iff Ann_R(M) in I", true, ann_ann_iff_contains},
      {"Prop-3.3.2", "unit witness for maximal p with Ann_M(p) = 0", true, unit_witness_for_maximal},
      {"Prop-3.3.3", "radical in J_G(R) cannot annihilate M", true, jacobson_graded},
      {"Prop-3.3.4", "radical in J(R_e) cannot annihilate M", true, jacobson_identity},
      {"Prop-3.4.1", "second socle is T(V_s*(N))", true, second_socle_formula},
      {"Prop-3.4.2", "Zariski socle is T(V_s(N))", true, zariski_socle_formula},
      {"Prop-3.4.3", "closure is V_s(T(Y))", true, second_closure_formula},
      {"Lemma-3.5.1", "varieties of Ann_M(I) and Ann_M(Gr I) agree", true, varieties_of_annihilator_submodules},
      {"Lemma-3.5.2", "varieties via double annihilator", true, varieties_via_double_annihilator},
      {"Prop-3.6.1", "socles of Ann_M(I) and Ann_M(Gr I) agree", true, socles_of_annihilator_submodules},
      {"Prop-3.6.2", "Zariski socle via double annihilator", true, socles_via_double_annihilator},
      {"Prop-3.6.3", "second socle inside Zariski socle", true, socle_inside_zariski_socle},
      {"Prop-3.6.4", "variety inclusion gives socle inclusion", true, variety_inclusion_gives_socle_inclusion},
      {"Prop-3.6.5", "equal varieties iff equal Zariski socles", true, variety_equal_iff_socle_equal},
      {"Prop-3.8a", "Zariski socle of zero", true, zsoc_of_zero},
      {"Prop-3.8b", "Zariski socle is monotone", true, zsoc_monotone},
      {"Prop-3.8c", "Zariski socle is idempotent", true, zsoc_idempotent},
      {"Prop-3.8d", "Zariski socle is additive", true, zsoc_additive},
      {"Prop-3.8e", "nonzero iff nonempty variety iff nonzero socle", true, nonzero_iff_variety_iff_socle},
      {"Prop-3.8f", "graded radical of annihilator vs socle annihilator", true, radical_of_annihilator_vs_socle},
      {"Thm-4.1", "Noetherian second spectrum iff DCC on Zariski socles", true, noetherian_iff_dcc_zariski_socles},
      {"Cor-4.2", "Artinian module has Noetherian second spectrum", true, artinian_gives_noetherian},
      {"Lemma-4.3.1", "preimages of varieties under phi", true, phi_preimage_of_varieties},
      {"Lemma-4.3.2", "images of varieties under phi", true, phi_image_of_varieties},
      {"Lemma-4.4", "varieties of I and Ann_R(Ann_M I) agree mod Ann M", true, bar_varieties_agree},
      {"Thm-4.5", "Noetherian second spectrum iff Noetherian Spec(R/Ann M)", true,
       second_noetherian_iff_quotient_noetherian},
      {"Cor-4.6", "Noetherian ring gives Noetherian second spectrum", true, noetherian_ring_gives_noetherian_second},
      {"Lemma-4.7", "second socle of Ann_M of a product", true, socle_of_product_annihilator},
      {"Thm-4.8.1", "Zariski socles are finite sums of second submodules", true,
       zariski_socle_is_finite_sum_of_seconds},
      {"Thm-4.8.2", "Zariski socles are sums of Ann_M(p)", true, zariski_socle_iff_sum_of_prime_annihilators},
      {"Thm-4.10", "Noetherian second spectrum iff property RFG*", true, noetherian_iff_property_rfg_star},
      {"Lemma-4.11", "RFG* iff annihilator RFG", true, rfg_star_iff_annihilator_rfg},
      {"Cor-4.12.1", "Noetherian iff every second submodule RFG*", true, noetherian_iff_seconds_rfg_star},
      {"Cor-4.12.2", "RFG* closed under sums", true, rfg_star_closed_under_sum},
  };
  return catalog;
}

/// Suites matching a filter: an exact id, or a prefix that stops before a
/// part separator ("Thm-4.8" selects Thm-4.8.1 and Thm-4.8.2, "Prop-3.8"
/// selects Prop-3.8a to Prop-3.8f). Throws on an unknown filter.
inline std::vector<const Suite*> select_suites(const std::vector<std::string>& filters) {
  std::vector<const Suite*> out;
  const auto& cat = suite_catalog();
  if (filters.empty()) {
    for (const auto& s : cat) out.push_back(&s);
    return out;
  }
  auto matches = [](const std::string& id, const std::string& f) {
    if (id == f) return true;
    if (id.size() <= f.size() || id.compare(0, f.size(), f) != 0) return false;
    const char next = id[f.size()];
    return next == '.' || (next >= 'a' && next <= 'z');
  };
  for (const auto& f : filters) {
    bool any = false;
    for (const auto& s : cat)
      if (matches(s.id, f)) any = true;
    if (!any) throw Error(ErrorKind::ParseError, "unknown suite: " + f);
  }
  for (const auto& s : cat)
    for (const auto& f : filters)
      if (matches(s.id, f)) {
        out.push_back(&s);
        break;
      }
  return out;
}

inline SuiteResult run_suite(const Suite& suite, InstanceAnalysis& a, bool timing) {
  SuiteResult row{suite.id, a.name(), Status::Pass, nullptr, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  if (suite.module_side && !a.has_module()) {
    out = suites::skipped("instance has no module");
  } else {
    try {
      out = suite.run(a);
    } catch (const std::exception& e) {
      out = suites::fail("evaluation raised an error", Json{{"error", e.what()}});
    }
  }
  row.status = out.status;
  row.counterexample = std::move(out.counterexample);
  row.note = std::move(out.note);
  if (timing)
    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return row;
}

/// Runs the selected suites on every instance. Instances are spread over at
/// most `threads` workers; rows come back sorted by suite, then instance.
inline std::vector<SuiteResult> run_suites(const std::vector<LoadedInstance>& instances,
                                           const std::vector<const Suite*>& selected, const Limits& limits,
                                           bool timing = false, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1U, std::min(4U, std::thread::hardware_concurrency()));
  std::vector<std::vector<SuiteResult>> per_instance(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      InstanceAnalysis a(instances[i], limits);
      for (const auto* s : selected) per_instance[i].push_back(run_suite(*s, a, timing));
    }
  };
  if (threads == 1 || instances.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, instances.size()); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<SuiteResult> out;
  for (std::size_t k = 0; k < selected.size(); ++k)
    for (std::size_t i = 0; i < instances.size(); ++i) out.push_back(std::move(per_instance[i][k]));
  return out;
}

}  // namespace gradedspec
