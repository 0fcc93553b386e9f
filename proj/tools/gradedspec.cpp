#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "gradedspec.hpp"

namespace gs = gradedspec;

namespace {

struct Options {
  bool json = false;
  std::size_t max_ring_order = 256;
  std::size_t max_module_order = 256;
};

gs::Limits limits_of(const Options& o) {
  gs::Limits l;
  l.max_ring_order = o.max_ring_order;
  l.max_module_order = o.max_module_order;
  return l;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  std::size_t out = 0;
  const auto* end = value.data() + value.size();
  auto [p, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || p != end) throw gs::Error(gs::ErrorKind::ParseError, "bad corpus bound " + key + "=" + value);
  return out;
}

// "ring=8,module=16,group=4,count=50,lattice=256"; omitted keys keep defaults.
gs::CorpusBounds parse_bounds(const std::string& text, gs::CorpusBounds b) {
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const auto item = text.substr(start, comma - start);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw gs::Error(gs::ErrorKind::ParseError, "bad corpus bound: " + item);
    const auto key = item.substr(0, eq);
    const auto value = parse_count(key, item.substr(eq + 1));
    if (key == "ring") {
      b.max_ring_order = value;
    } else if (key == "module") {
      b.max_module_order = value;
    } else if (key == "group") {
      b.max_group_order = value;
    } else if (key == "count") {
      b.count = value;
    } else if (key == "lattice") {
      b.max_lattice = value;
    } else {
      throw gs::Error(gs::ErrorKind::ParseError, "unknown corpus bound: " + key);
    }
    start = comma + 1;
  }
  return b;
}

template <class Set>
gs::Json elems(const Set& s) {
  return gs::suites::elems(s);
}

template <class Set>
std::string set_text(const Set& s, const std::function<std::string(gs::Element)>& label) {
  std::string out = "{";
  bool first = true;
  for (auto x : s.to_vector()) {
    out += (first ? "" : ", ") + label(x);
    first = false;
  }
  return out + "}";
}

void print(const Options& o, const gs::Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_validate(const Options& o, const std::string& file) {
  const auto li = gs::load_instance_file(file, limits_of(o));
  gs::Json j{{"name", li.desc.name}, {"valid", true}, {"ring_order", li.ring->size()}};
  std::ostringstream t;
  t << "ok: " << li.desc.name << " (ring order " << li.ring->size();
  if (li.module) {
    j["module_order"] = li.module->size();
    t << ", module order " << li.module->size();
  }
  t << ")\n";
  print(o, j, t.str());
  return 0;
}

int cmd_spec(const Options& o, const std::string& file) {
  const auto li = gs::load_instance_file(file, limits_of(o));
  const gs::PrimeSpectrum rs(li.ring, limits_of(o));
  const auto& r = *li.ring;
  auto label = [&](gs::Element x) { return r.label(x); };
  gs::Json j{{"name", li.desc.name}, {"ring_order", r.size()}};
  std::ostringstream t;
  t << "instance " << li.desc.name << ", ring order " << r.size() << ", " << rs.lattice().size() << " graded ideals\n";
  gs::Json points = gs::Json::array();
  t << "graded primes (" << rs.size() << "):\n";
  for (std::size_t p = 0; p < rs.size(); ++p) {
    points.push_back(elems(rs.points()[p].elements));
    t << "  [" << p << "] " << set_text(rs.points()[p].elements, label) << "\n";
  }
  j["points"] = points;
  gs::Json closed = gs::Json::array();
  t << "closed sets (" << rs.topology().closed_sets().size() << "):\n";
  for (const auto& c : rs.topology().closed_sets()) {
    closed.push_back(gs::Json{{"points", elems(c.points)}, {"ideal", elems(c.defining)}});
    t << "  " << set_text(c.points, [](gs::Element x) { return std::to_string(x); }) << " = V("
      << set_text(c.defining, label) << ")\n";
  }
  j["closed_sets"] = closed;
  gs::Json basis = gs::Json::array();
  t << "basic open sets D_r:\n";
  for (const auto& b : rs.basic_open_sets()) {
    basis.push_back(gs::Json{{"element", b.element}, {"points", elems(b.points)}});
    t << "  D_" << r.label(b.element) << " = " << set_text(b.points, [](gs::Element x) { return std::to_string(x); })
      << "\n";
  }
  j["basis"] = basis;
  const bool noetherian = gs::is_noetherian_space(rs.topology());
  j["noetherian"] = noetherian;
  t << "noetherian: " << (noetherian ? "true" : "false") << "\n";
  print(o, j, t.str());
  return 0;
}

std::shared_ptr<const gs::GradedModule> require_module(const gs::LoadedInstance& li) {
  if (!li.module) throw gs::Error(gs::ErrorKind::ValidationError, li.desc.name + ": instance has no module");
  return li.module;
}

int cmd_sspec(const Options& o, const std::string& file) {
  const auto li = gs::load_instance_file(file, limits_of(o));
  const auto m = require_module(li);
  gs::InstanceAnalysis a(li, limits_of(o));
  const auto& ss = a.second();
  auto mlabel = [&](gs::Element x) { return m->label(x); };
  auto rlabel = [&](gs::Element x) { return li.ring->label(x); };
  gs::Json j{{"name", li.desc.name}, {"module_order", m->size()}};
  std::ostringstream t;
  t << "instance " << li.desc.name << ", module order " << m->size() << ", " << ss.submodules().size()
    << " graded submodules\n";
  gs::Json subs = gs::Json::array();
  for (const auto& n : ss.submodules()) subs.push_back(elems(n.elements));
  j["submodules"] = subs;
  gs::Json seconds = gs::Json::array();
  t << "graded second submodules (" << ss.size() << "):\n";
  for (std::size_t p = 0; p < ss.size(); ++p) {
    seconds.push_back(gs::Json{{"elements", elems(ss.points()[p].elements)}, {"ann", elems(ss.point_ann(p))}});
    t << "  [" << p << "] " << set_text(ss.points()[p].elements, mlabel) << "  Ann = " << set_text(ss.point_ann(p), rlabel)
      << "\n";
  }
  j["second_submodules"] = seconds;
  const auto& am = a.ann_module();
  j["ann_module"] = elems(am);
  t << "Ann_R(M) = " << set_text(am, rlabel) << "\n";
  if (a.module_nonzero()) {
    const auto& phi = a.phi();
    gs::Json qprimes = gs::Json::array();
    for (const auto& p : phi.quotient_primes) qprimes.push_back(elems(p.elements));
    j["quotient_spectrum"] = qprimes;
    t << "Spec(R/Ann_R(M)) (" << phi.quotient_primes.size() << " points, as primes of R):\n";
    for (const auto& p : phi.quotient_primes) t << "  " << set_text(p.elements, rlabel) << "\n";
    gs::Json image = gs::Json::array();
    for (auto q : phi.image) image.push_back(q);
    j["natural_map"] = image;
  } else {
    j["quotient_spectrum"] = nullptr;
  }
  gs::Json closed = gs::Json::array();
  for (const auto& c : ss.topology().closed_sets()) closed.push_back(elems(c.points));
  j["closed_sets"] = closed;
  const auto& pred = a.predicates();
  const bool secondful = a.secondful();
  j["secondful"] = secondful;
  j["secondless"] = pred.is_secondless;
  j["cotop"] = ss.is_cotop();
  j["faithful"] = pred.is_faithful;
  j["comultiplication"] = pred.is_comultiplication;
  j["weak_comultiplication"] = pred.is_weak_comultiplication;
  j["noetherian"] = a.second_noetherian();
  t << "closed sets: " << ss.topology().closed_sets().size() << "\n";
  t << "secondful: " << secondful << "\nsecondless: " << pred.is_secondless << "\ncotop: " << ss.is_cotop()
    << "\nfaithful: " << pred.is_faithful << "\ncomultiplication: " << pred.is_comultiplication
    << "\nweak comultiplication: " << pred.is_weak_comultiplication << "\nnoetherian: " << a.second_noetherian()
    << "\n";
  print(o, j, t.str());
  return 0;
}

int cmd_socle(const Options& o, const std::string& file, const std::vector<std::size_t>& members) {
  const auto li = gs::load_instance_file(file, limits_of(o));
  const auto m = require_module(li);
  gs::ElementSet given;
  for (auto x : members) {
    if (x >= m->size()) throw gs::Error(gs::ErrorKind::ValidationError, "element index out of range: " + std::to_string(x));
    given.insert(x);
  }
  if (members.empty()) given.insert(m->zero());
  const auto closure = gs::submodule_closure(*m, given);
  if (!gs::is_graded_submodule(*m, closure))
    throw gs::Error(gs::ErrorKind::NonHomogeneousGenerator, "the given elements do not generate a graded submodule");
  gs::InstanceAnalysis a(li, limits_of(o));
  const auto& ss = a.second();
  const auto j_index = a.submodule_index(closure);
  auto mlabel = [&](gs::Element x) { return m->label(x); };
  auto plist = [&](const gs::PointSet& y) {
    gs::Json out = gs::Json::array();
    y.for_each([&](std::size_t p) { out.push_back(elems(ss.points()[p].elements)); });
    return out;
  };
  gs::Json j{{"name", li.desc.name}, {"submodule", elems(closure)}};
  j["second_socle"] = elems(a.soc(j_index));
  j["zariski_socle"] = elems(a.zsoc(j_index));
  j["v_s"] = plist(a.vs(j_index));
  j["v_s_star"] = plist(ss.v_s_star(closure));
  const bool is_zsoc = a.zsoc(j_index) == closure;
  j["is_zariski_socle"] = is_zsoc;
  const auto& w = a.rfg_star(j_index);
  j["rfg_star_witness"] = w ? gs::suites::elems(*w) : gs::Json();
  std::ostringstream t;
  t << "N = " << set_text(closure, mlabel) << "\nsoc(N) = " << set_text(a.soc(j_index), mlabel)
    << "\nZ.soc(N) = " << set_text(a.zsoc(j_index), mlabel) << "\nZariski socle submodule: " << is_zsoc << "\n";
  try {
    const auto parts = gs::zariski_socle_decomposition(ss, a.primes(), closure);
    gs::Json dj = gs::Json::array();
    t << "decomposition:";
    for (const auto& s : parts) {
      dj.push_back(elems(s.elements));
      t << " " << set_text(s.elements, mlabel);
    }
    t << (parts.empty() ? " (empty sum)\n" : "\n");
    j["decomposition"] = dj;
  } catch (const gs::Error& e) {
    j["decomposition"] = nullptr;
    j["decomposition_error"] = e.what();
    t << "decomposition unavailable: " << e.what() << "\n";
  }
  print(o, j, t.str());
  return 0;
}

std::vector<gs::LoadedInstance> instances_for(const Options& o, const std::vector<std::string>& files,
                                              const std::optional<gs::Corpus>& corpus) {
  std::vector<gs::LoadedInstance> out;
  for (const auto& f : files) out.push_back(gs::load_instance_file(f, limits_of(o)));
  if (corpus)
    for (const auto& li : corpus->instances) out.push_back(li);
  return out;
}

int cmd_verify(const Options& o, const std::vector<std::string>& suites, const std::string& corpus_text,
               std::uint64_t seed, bool seed_given, bool timing, unsigned threads,
               const std::vector<std::string>& files) {
  const auto selected = gs::select_suites(suites);
  std::optional<gs::Corpus> corpus;
  if (!corpus_text.empty() || files.empty()) corpus = gs::generate_corpus(parse_bounds(corpus_text, {}), seed);
  const auto instances = instances_for(o, files, corpus);
  gs::Limits l = limits_of(o);
  if (corpus) l.max_lattice = std::max<std::size_t>(l.max_lattice, 256);
  const auto rows = gs::run_suites(instances, selected, l, timing, threads);
  std::vector<std::string> notes;
  if (corpus) notes = corpus->notes;
  const std::optional<std::uint64_t> reported = (corpus || seed_given) ? std::optional<std::uint64_t>(seed) : std::nullopt;
  if (o.json) {
    std::cout << gs::report_json(rows, reported, notes).dump(2) << "\n";
  } else {
    std::cout << gs::report_text(rows, notes);
  }
  return gs::exit_code(rows);
}

int cmd_search(const Options& o, const std::string& property, const std::string& corpus_text, std::uint64_t seed,
               const std::vector<std::string>& files) {
  const auto p = gs::parse_search_property(property);
  if (!p) throw gs::Error(gs::ErrorKind::ParseError, "unknown property: " + property);
  gs::CorpusBounds b;
  b.max_ring_order = 16;
  b.max_module_order = 32;
  b.count = 100000;
  gs::SearchResult result;
  if (!files.empty()) {
    result = gs::search_instances(instances_for(o, files, std::nullopt), *p, limits_of(o),
                                  std::to_string(files.size()) + " instance files");
  } else {
    result = gs::search_counterexample(*p, parse_bounds(corpus_text, b), seed);
  }
  gs::Json j{{"property", std::string(gs::to_string(*p))},
             {"found", result.found ? gs::to_json(*result.found) : gs::Json()},
             {"checked", result.checked},
             {"skipped_without_module", result.without_module},
             {"summary", result.summary}};
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << result.summary << "\n";
    if (result.found) std::cout << gs::serialize_instance(*result.found);
  }
  return 0;
}

int cmd_gen(const Options& o, const std::string& corpus_text, std::uint64_t seed, const std::string& out_dir) {
  const auto corpus = gs::generate_corpus(parse_bounds(corpus_text, {}), seed);
  if (out_dir.empty()) {
    gs::Json all = gs::Json::array();
    for (const auto& li : corpus.instances) all.push_back(gs::to_json(li.desc));
    std::cout << all.dump(2) << "\n";
  } else {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "instance_%04zu.json", i);
      std::ofstream f(std::filesystem::path(out_dir) / name);
      if (!f) throw gs::Error(gs::ErrorKind::IOError, "cannot write into " + out_dir);
      f << gs::serialize_instance(corpus.instances[i].desc);
    }
    if (!o.json) std::cout << "wrote " << corpus.instances.size() << " instances to " << out_dir << "\n";
  }
  std::cerr << "curated " << corpus.curated << ", systematic " << corpus.systematic << ", random " << corpus.random
            << ", discarded invalid " << corpus.discarded_invalid << ", discarded oversized "
            << corpus.discarded_lattice << "\n";
  for (const auto& n : corpus.notes) std::cerr << "note: " << n << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded prime and second spectra of finite graded rings and modules"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit JSON instead of text");
  app.add_option("--max-ring-order", opt.max_ring_order, "Largest accepted ring order")->capture_default_str();
  app.add_option("--max-module-order", opt.max_module_order, "Largest accepted module order")->capture_default_str();

  std::string file;
  auto* validate = app.add_subcommand("validate", "Parse and validate an instance file");
  validate->add_option("file", file, "Instance file")->required();

  auto* spec = app.add_subcommand("spec", "Dump the graded prime spectrum and its topology");
  spec->add_option("file", file, "Instance file")->required();

  auto* sspec = app.add_subcommand("sspec", "Dump the graded second spectrum and module predicates");
  sspec->add_option("file", file, "Instance file")->required();

  std::vector<std::size_t> members;
  auto* socle = app.add_subcommand("socle", "Socles and decomposition of a graded submodule");
  socle->add_option("file", file, "Instance file")->required();
  socle->add_option("--submodule", members, "Element indices generating the submodule")->required()->delimiter(',');

  std::vector<std::string> suite_filter;
  std::string corpus_text;
  std::uint64_t seed = 1;
  bool timing = false;
  unsigned threads = 0;
  std::vector<std::string> files;
  auto* verify = app.add_subcommand("verify", "Run the theorem suites");
  verify->add_option("--suite", suite_filter, "Suite id or id prefix (repeatable)");
  verify->add_option("--corpus", corpus_text, "Corpus bounds, e.g. ring=8,module=16,group=4,count=50");
  auto* seed_opt = verify->add_option("--seed", seed, "Corpus seed")->capture_default_str();
  verify->add_flag("--timing", timing, "Record per-row wall time");
  verify->add_option("--threads", threads, "Worker threads (0 = automatic)");
  verify->add_option("files", files, "Instance files");
  bool list = false;
  verify->add_flag("--list", list, "List suite ids and titles, then exit");

  std::string property;
  auto* search = app.add_subcommand("search", "Bounded search for non-secondful, secondless or non-cotop modules");
  search->add_option("property", property, "non-secondful | secondless | non-cotop")->required();
  search->add_option("--corpus", corpus_text, "Search bounds (default ring=16,module=32)");
  search->add_option("--seed", seed, "Seed for the random part of the search space")->capture_default_str();
  search->add_option("files", files, "Search these instance files instead");

  std::string out_dir;
  auto* gen = app.add_subcommand("gen", "Generate a corpus of instance files");
  gen->add_option("--corpus", corpus_text, "Corpus bounds");
  gen->add_option("--seed", seed, "Corpus seed")->capture_default_str();
  gen->add_option("--out", out_dir, "Directory for the instance files (default: JSON array on stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(opt, file);
    if (*spec) return cmd_spec(opt, file);
    if (*sspec) return cmd_sspec(opt, file);
    if (*socle) return cmd_socle(opt, file, members);
    if (*verify && list) {
      for (const auto& s : gs::suite_catalog()) std::cout << s.id << "  " << s.title << "\n";
      return 0;
    }
    if (*verify) return cmd_verify(opt, suite_filter, corpus_text, seed, seed_opt->count() > 0, timing, threads, files);
    if (*search) return cmd_search(opt, property, corpus_text, seed, files);
    if (*gen) return cmd_gen(opt, corpus_text, seed, out_dir);
  } catch (const gs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
