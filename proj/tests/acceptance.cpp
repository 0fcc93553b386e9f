// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Oracles here rebuild lattices by closure straight from
// the tables so that they do not share code with the library.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gradedspec.hpp"

namespace gs = gradedspec;

namespace {

const std::string kCli = GRADEDSPEC_CLI;
const std::string kFixtures = GRADEDSPEC_FIXTURES;
constexpr std::uint64_t kSeed = 7;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = "\"" + kCli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string fixture(const std::string& name) { return "\"" + kFixtures + "/" + name + "\""; }

// ---------------------------------------------------------------- oracles

using Set = gs::ElementSet;

template <class Add, class Scale, class Comp>
Set close_up(Set s, std::size_t scalars, std::size_t degrees, Add add, Scale scale, Comp comp) {
  bool changed = true;
  while (changed) {
    changed = false;
    const auto xs = s.to_vector();
    for (auto x : xs) {
      for (auto y : xs) changed |= !s.contains(add(x, y)) && (s.insert(add(x, y)), true);
      for (std::size_t r = 0; r < scalars; ++r) changed |= !s.contains(scale(r, x)) && (s.insert(scale(r, x)), true);
      for (std::size_t g = 0; g < degrees; ++g) changed |= !s.contains(comp(x, g)) && (s.insert(comp(x, g)), true);
    }
  }
  return s;
}

Set ideal_closure_oracle(const gs::GradedRing& r, Set s) {
  s.insert(r.zero());
  return close_up(
      s, r.size(), r.group().order(), [&](std::size_t a, std::size_t b) { return r.add(a, b); },
      [&](std::size_t c, std::size_t a) { return r.mul(c, a); },
      [&](std::size_t a, std::size_t g) { return r.component_of(a, static_cast<gs::GroupElement>(g)); });
}

Set submodule_closure_oracle(const gs::GradedModule& m, Set s) {
  s.insert(m.zero());
  return close_up(
      s, m.ring().size(), m.ring().group().order(), [&](std::size_t a, std::size_t b) { return m.add(a, b); },
      [&](std::size_t c, std::size_t a) { return m.act(c, a); },
      [&](std::size_t a, std::size_t g) { return m.component_of(a, static_cast<gs::GroupElement>(g)); });
}

// Every graded object is generated by homogeneous elements, so the lattice is
// reached from zero by adjoining one homogeneous generator at a time.
std::vector<Set> lattice_oracle(const std::vector<gs::Element>& homogeneous, const std::function<Set(Set)>& close,
                                Set zero) {
  std::vector<Set> out{close(zero)};
  std::set<std::vector<gs::Element>> seen{out[0].to_vector()};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto h : homogeneous) {
      if (out[k].contains(h)) continue;
      Set s = out[k];
      s.insert(h);
      Set c = close(s);
      if (seen.insert(c.to_vector()).second) out.push_back(c);
    }
  return out;
}

std::vector<Set> ideals_oracle(const gs::GradedRing& r) {
  return lattice_oracle(r.homogeneous_list(), [&](Set s) { return ideal_closure_oracle(r, s); }, Set{});
}

std::vector<Set> submodules_oracle(const gs::GradedModule& m) {
  return lattice_oracle(m.homogeneous_list(), [&](Set s) { return submodule_closure_oracle(m, s); }, Set{});
}

bool prime_oracle(const gs::GradedRing& r, const Set& p) {
  if (p.count() == r.size()) return false;
  for (auto a : r.homogeneous_list())
    for (auto b : r.homogeneous_list())
      if (p.contains(r.mul(a, b)) && !p.contains(a) && !p.contains(b)) return false;
  return true;
}

bool nilpotent_into(const gs::GradedRing& r, gs::Element x, const Set& i) {
  gs::Element p = x;
  for (std::size_t k = 0; k <= r.size(); ++k) {
    if (i.contains(p)) return true;
    p = r.mul(p, x);
  }
  return false;
}

Set radical_by_definition(const gs::GradedRing& r, const Set& i) {
  Set out;
  for (gs::Element x = 0; x < r.size(); ++x) {
    bool ok = true;
    for (gs::GroupElement g = 0; g < r.group().order(); ++g) ok = ok && nilpotent_into(r, r.component_of(x, g), i);
    if (ok) out.insert(x);
  }
  return out;
}

bool second_oracle(const gs::GradedModule& m, const Set& s) {
  if (s.count() < 2) return false;
  for (auto r : m.ring().homogeneous_list()) {
    Set img;
    for (auto x : s.to_vector()) img.insert(m.act(r, x));
    if (img != s && img.count() != 1) return false;
  }
  return true;
}

std::set<std::vector<gs::Element>> as_key_set(const std::vector<Set>& v) {
  std::set<std::vector<gs::Element>> out;
  for (const auto& s : v) out.insert(s.to_vector());
  return out;
}

// ---------------------------------------------------------------- corpus

struct Shared {
  gs::Corpus corpus;
  gs::Limits limits;
  double generation_seconds = 0;
};

Shared& shared() {
  static Shared s = [] {
    Shared out;
    gs::CorpusBounds b;
    b.max_ring_order = 32;
    b.max_module_order = 64;
    b.count = 400;
    const auto t0 = Clock::now();
    out.corpus = gs::generate_corpus(b, kSeed);
    out.generation_seconds = seconds_since(t0);
    out.limits.max_ring_order = b.max_ring_order;
    out.limits.max_module_order = b.max_module_order;
    out.limits.max_lattice = b.max_lattice;
    return out;
  }();
  return s;
}

std::vector<gs::SuiteResult> run_on_corpus(const std::vector<std::string>& ids) {
  return gs::run_suites(shared().corpus.instances, gs::select_suites(ids), shared().limits);
}

std::string tally(const std::vector<gs::SuiteResult>& rows) {
  const auto t = gs::totals(rows);
  std::ostringstream s;
  s << "pass " << t.pass << ", fail " << t.fail << ", vacuous " << t.vacuous << ", skipped " << t.skipped;
  for (const auto& r : rows)
    if (r.status == gs::Status::Fail) {
      s << "; first failure " << r.suite << " on " << r.instance << ": " << r.counterexample.dump();
      break;
    }
  return s.str();
}

struct Verdict {
  bool ok = false;
  std::string detail;
};

// ---------------------------------------------------------------- criteria

Verdict second_spectrum_of_m_a() {
  const auto t0 = Clock::now();
  const auto r = run_cli("--json sspec " + fixture("m_a.json"));
  const double secs = seconds_since(t0);
  if (r.status != 0) return {false, "sspec exited with " + std::to_string(r.status)};
  const auto j = gs::Json::parse(r.out);
  std::set<std::vector<gs::Element>> seconds;
  for (const auto& s : j["second_submodules"]) seconds.insert(s["elements"].get<std::vector<gs::Element>>());
  // Elements of Z2 x Z2 are numbered 0=(0,0), 1=(1,0), 2=(0,1), 3=(1,1); the
  // two components are the two coordinate lines.
  const std::set<std::vector<gs::Element>> expected{{0, 1}, {0, 2}, {0, 1, 2, 3}};
  const bool ok = seconds == expected && j["ann_module"] == gs::Json{0, 2} && j["quotient_spectrum"].size() == 1 &&
                  j["secondful"] == true && secs < 1.0;
  std::ostringstream d;
  d << seconds.size() << " second submodules, Ann = " << j["ann_module"].dump() << ", "
    << j["quotient_spectrum"].size() << " quotient prime(s), secondful " << j["secondful"].dump() << ", " << secs
    << " s";
  return {ok, d.str()};
}

Verdict socles_of_m_b() {
  const auto t0 = Clock::now();
  const auto r = run_cli("--json socle " + fixture("m_b.json") + " --submodule 1");
  const double secs = seconds_since(t0);
  if (r.status != 0) return {false, "socle exited with " + std::to_string(r.status)};
  const auto j = gs::Json::parse(r.out);
  const gs::Json m0{0, 1};
  const gs::Json m{0, 1, 2, 3};
  const bool ok = j["submodule"] == m0 && j["second_socle"] == m0 && j["zariski_socle"] == m &&
                  j["second_socle"].size() < j["zariski_socle"].size() && secs < 1.0;
  return {ok, "soc = " + j["second_socle"].dump() + ", Z.soc = " + j["zariski_socle"].dump() + ", " +
                  std::to_string(secs) + " s"};
}

Verdict radical_oracle_equivalence() {
  const auto t0 = Clock::now();
  auto& sh = shared();
  std::size_t rows = 0, ideals = 0, mismatches = 0;
  std::set<std::string> distinct;  // relabelled copies are not counted as new rings
  std::string first;
  for (const auto& inst : sh.corpus.instances) {
    const auto& r = *inst.ring;
    if (r.size() > 32) continue;
    ++rows;
    if (inst.desc.name.rfind("random-", 0) != 0)
      distinct.insert(gs::serialize_instance(gs::Instance{"", inst.desc.group, inst.desc.ring, std::nullopt, ""}));
    const auto lattice = ideals_oracle(r);
    std::vector<Set> primes;
    for (const auto& s : lattice)
      if (prime_oracle(r, s)) primes.push_back(s);
    if (as_key_set(lattice) != as_key_set([&] {
          std::vector<Set> v;
          for (const auto& i : gs::enumerate_graded_ideals(r, sh.limits.max_lattice)) v.push_back(i.elements);
          return v;
        }())) {
      ++mismatches;
      if (first.empty()) first = inst.desc.name + ": ideal lattice differs";
      continue;
    }
    for (const auto& i : lattice) {
      ++ideals;
      Set meet = r.all();
      for (const auto& p : primes)
        if (i.is_subset_of(p)) meet &= p;
      const auto lib = gs::graded_radical(r, gs::make_ideal(r, i)).elements;
      if (lib != meet || lib != radical_by_definition(r, i)) {
        ++mismatches;
        if (first.empty()) first = inst.desc.name + ": radical of " + gs::suites::elems(i).dump();
      }
    }
  }
  const double secs = seconds_since(t0) + sh.generation_seconds;
  std::ostringstream d;
  d << rows << " instances over " << distinct.size() << " distinct rings, " << ideals << " graded ideals, " << mismatches << " mismatches, " << secs << " s";
  if (!first.empty()) d << "; " << first;
  return {distinct.size() >= 100 && mismatches == 0 && secs < 60.0, d.str()};
}

Verdict gr_differs_from_sqrt() {
  const auto t0 = Clock::now();
  const auto li = gs::load_instance_file(kFixtures + "/r_c.json");
  const auto& r = *li.ring;
  std::optional<gs::Element> u, one_u;
  for (gs::Element x = 0; x < r.size(); ++x) {
    if (r.label(x) == "u") u = x;
    if (r.label(x) == "1+u") one_u = x;
  }
  if (!u || !one_u) return {false, "fixture lacks elements u and 1+u"};
  Set zero;
  zero.insert(r.zero());
  const auto gr0 = gs::graded_radical(r, gs::make_ideal(r, zero)).elements;
  const bool square_zero = r.mul(*one_u, *one_u) == r.zero();
  const bool excluded = !gr0.contains(*one_u);
  bool homogeneous_agree = true;
  for (auto h : r.homogeneous_list()) homogeneous_agree &= gr0.contains(h) == nilpotent_into(r, h, zero);
  const bool u_ok = r.is_homogeneous(*u) && gr0.contains(*u) == nilpotent_into(r, *u, zero);
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "(1+u)^2 = 0: " << square_zero << ", 1+u in Gr(0): " << !excluded << ", u homogeneous with Gr and sqrt agreeing: "
    << u_ok << ", homogeneous agreement: " << homogeneous_agree << ", " << secs << " s";
  return {square_zero && excluded && u_ok && homogeneous_agree && secs < 1.0, d.str()};
}

Verdict radical_decomposition_check() {
  auto& sh = shared();
  std::size_t checked = 0, failures = 0;
  std::string first;
  for (const auto& inst : sh.corpus.instances) {
    const auto& r = *inst.ring;
    const gs::PrimeSpectrum spec(inst.ring, sh.limits);
    const auto lattice = ideals_oracle(r);
    std::vector<Set> primes;
    for (const auto& s : lattice)
      if (prime_oracle(r, s)) primes.push_back(s);
    for (const auto& i : lattice) {
      if (i.count() == r.size() || radical_by_definition(r, i) != i) continue;
      ++checked;
      std::vector<Set> minimal;
      for (const auto& p : primes) {
        if (!i.is_subset_of(p)) continue;
        bool is_min = true;
        for (const auto& q : primes)
          if (q != p && i.is_subset_of(q) && q.is_subset_of(p)) is_min = false;
        if (is_min) minimal.push_back(p);
      }
      std::vector<Set> got;
      Set meet = r.all();
      for (const auto& p : spec.radical_decomposition(gs::make_ideal(r, i))) {
        got.push_back(p.elements);
        meet &= p.elements;
      }
      if (as_key_set(got) != as_key_set(minimal) || got.size() != minimal.size() || meet != i) {
        ++failures;
        if (first.empty()) first = inst.desc.name + ": " + gs::suites::elems(i).dump();
      }
    }
  }
  std::ostringstream d;
  d << checked << " proper graded radical ideals, " << failures << " failures";
  if (!first.empty()) d << "; " << first;
  return {checked > 0 && failures == 0, d.str()};
}

Verdict module_identity_suites() {
  const auto t0 = Clock::now();
  auto& sh = shared();
  std::size_t with_module = 0, lattice_mismatch = 0;
  for (const auto& inst : sh.corpus.instances) {
    if (!inst.module || inst.module->size() > 64) continue;
    ++with_module;
    const auto& m = *inst.module;
    const auto subs = submodules_oracle(m);
    std::vector<Set> seconds;
    for (const auto& s : subs)
      if (second_oracle(m, s)) seconds.push_back(s);
    const gs::SecondSpectrum ss(inst.module, sh.limits);
    std::vector<Set> lib_subs, lib_seconds;
    for (const auto& n : ss.submodules()) lib_subs.push_back(n.elements);
    for (const auto& p : ss.points()) lib_seconds.push_back(p.elements);
    if (as_key_set(subs) != as_key_set(lib_subs) || as_key_set(seconds) != as_key_set(lib_seconds)) ++lattice_mismatch;
  }
  const auto rows = run_on_corpus({"Lemma-3.5", "Prop-3.4", "Prop-3.6", "Prop-3.8", "Lemma-4.3", "Lemma-4.4",
                                   "Lemma-4.7", "Cor-4.12.2"});
  const double secs = seconds_since(t0) + sh.generation_seconds;
  std::ostringstream d;
  d << with_module << " module instances, " << lattice_mismatch << " second-spectrum oracle mismatches, " << tally(rows)
    << ", " << secs << " s";
  return {with_module >= 100 && lattice_mismatch == 0 && gs::totals(rows).fail == 0 && secs < 600.0, d.str()};
}

Verdict biconditional_audits() {
  const auto rows = run_on_corpus({"Prop-2.2a", "Thm-2.11", "Cor-2.13", "Thm-4.1", "Thm-4.5"});
  const auto t = gs::totals(rows);
  return {t.fail == 0 && t.pass > 0, tally(rows)};
}

Verdict decomposition_suites() {
  const auto rows = run_on_corpus({"Thm-4.8"});
  const auto t = gs::totals(rows);
  return {t.fail == 0 && t.pass > 0, tally(rows)};
}

Verdict determinism() {
  const auto a = run_cli("--json verify --seed 7");
  const auto b = run_cli("--json verify --seed 7");
  const bool ok = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
  return {ok, std::to_string(a.out.size()) + " bytes, exit " + std::to_string(a.status) + "/" +
                  std::to_string(b.status) + ", identical: " + (a.out == b.out ? "yes" : "no")};
}

Verdict negative_space() {
  std::ostringstream d;
  bool ok = true;
  for (const std::string prop : {"non-secondful", "secondless"}) {
    const auto t0 = Clock::now();
    const auto r = run_cli("--json search " + prop + " --corpus ring=16,module=32");
    const double secs = seconds_since(t0);
    bool this_ok = r.status == 0 && secs < 300.0;
    std::string summary;
    if (this_ok) {
      const auto j = gs::Json::parse(r.out);
      summary = j.value("summary", "");
      this_ok = !summary.empty() && summary.find("no claim") != std::string::npos &&
                summary.find("reproduced") == std::string::npos;
      d << prop << ": " << (j["found"].is_null() ? "none found" : "hit") << " in " << j["checked"] << " instances, "
        << secs << " s; ";
    } else {
      d << prop << ": exit " << r.status << "; ";
    }
    ok = ok && this_ok;
  }
  return {ok, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"second spectrum of M_A", second_spectrum_of_m_a},
      {"socles of M_B", socles_of_m_b},
      {"graded radical against prime intersection", radical_oracle_equivalence},
      {"graded radical differs from radical on R_C", gr_differs_from_sqrt},
      {"radical decomposition into minimal primes", radical_decomposition_check},
      {"module identity suites", module_identity_suites},
      {"biconditional audits", biconditional_audits},
      {"Zariski socle decomposition", decomposition_suites},
      {"deterministic verify report", determinism},
      {"finite search summaries", negative_space},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.ok) ++failed;
    std::cout << (v.ok ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << ": " << v.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
