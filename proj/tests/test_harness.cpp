#include <gtest/gtest.h>

#include <filesystem>

#include "support.hpp"

using namespace testing_support;

namespace {

const std::string kFixtures = GRADEDSPEC_FIXTURES;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

gs::ErrorKind load_error(const std::string& path) {
  try {
    gs::load_instance_file(path);
  } catch (const gs::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error for " << path;
  return gs::ErrorKind::IOError;
}

std::vector<gs::LoadedInstance> curated_loaded() {
  std::vector<gs::LoadedInstance> out;
  for (const auto& inst : gs::curated_instances()) out.push_back(gs::load_instance(inst));
  return out;
}

const gs::SuiteResult* find_row(const std::vector<gs::SuiteResult>& rows, const std::string& suite,
                                const std::string& instance) {
  for (const auto& r : rows)
    if (r.suite == suite && r.instance == instance) return &r;
  return nullptr;
}

}  // namespace

TEST(InstanceFiles, CuratedFixturesMatchBuiltInInstances) {
  for (const auto& inst : gs::curated_instances()) {
    const auto from_file = gs::read_instance_file(fixture(inst.name + ".json"));
    EXPECT_EQ(from_file, inst) << inst.name;
  }
}

TEST(InstanceFiles, RoundTripIsIdentity) {
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".json") continue;
    const auto inst = gs::read_instance_file(entry.path().string());
    const auto text = gs::serialize_instance(inst);
    EXPECT_EQ(gs::parse_instance_text(text), inst) << entry.path();
    EXPECT_EQ(gs::serialize_instance(gs::parse_instance_text(text)), text);
  }
}

TEST(InstanceFiles, ModuleFixtureLoadsOverItsRing) {
  const auto li = gs::load_instance_file(fixture("m_a.json"));
  ASSERT_NE(li.module, nullptr);
  EXPECT_EQ(li.ring->size(), 4U);
  EXPECT_EQ(li.module->size(), 4U);
  const auto rd = gs::load_instance_file(fixture("r_d.json"));
  EXPECT_EQ(rd.ring->size(), 6U);
  EXPECT_EQ(rd.module, nullptr);
}

TEST(InstanceFiles, InvalidFixturesAreRejected) {
  EXPECT_EQ(load_error(fixture("invalid/bad_grading.json")), gs::ErrorKind::ValidationError);
  EXPECT_EQ(load_error(fixture("invalid/bad_action.json")), gs::ErrorKind::ValidationError);
  EXPECT_EQ(load_error(fixture("invalid/bad_syntax.json")), gs::ErrorKind::ParseError);
  EXPECT_EQ(load_error(fixture("missing.json")), gs::ErrorKind::IOError);
}

TEST(InstanceFiles, ValidationErrorNamesTheComponent) {
  try {
    gs::load_instance_file(fixture("invalid/bad_grading.json"));
    FAIL();
  } catch (const gs::Error& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("/ring"), std::string::npos) << what;
    EXPECT_NE(what.find("component"), std::string::npos) << what;
  }
}

TEST(InstanceFiles, UnknownKeysAndBadTypesReportLocations) {
  try {
    gs::parse_instance_text(R"({"name":"x","group":{"cyclic_factors":[2]},"ring":{"type":"zmod","m":4}})");
    FAIL();
  } catch (const gs::Error& e) {
    EXPECT_EQ(e.kind(), gs::ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("/ring"), std::string::npos);
  }
}

TEST(Corpus, DeterministicForSeed) {
  gs::CorpusBounds b;
  const auto c1 = gs::generate_corpus(b, 1);
  const auto c2 = gs::generate_corpus(b, 1);
  ASSERT_EQ(c1.instances.size(), 50U);
  ASSERT_EQ(c2.instances.size(), 50U);
  for (std::size_t i = 0; i < c1.instances.size(); ++i)
    EXPECT_EQ(gs::serialize_instance(c1.instances[i].desc), gs::serialize_instance(c2.instances[i].desc));
}

TEST(Corpus, SeedsShareTheCuratedPrefix) {
  gs::CorpusBounds b;
  const auto c1 = gs::generate_corpus(b, 1);
  const auto c2 = gs::generate_corpus(b, 2);
  ASSERT_EQ(c1.curated, 6U);
  bool differ = false;
  for (std::size_t i = 0; i < c1.instances.size(); ++i) {
    if (i < 6) {
      EXPECT_EQ(c1.instances[i].desc, c2.instances[i].desc);
    } else if (!(c1.instances[i].desc == c2.instances[i].desc)) {
      differ = true;
    }
  }
  EXPECT_TRUE(differ);
}

TEST(Corpus, TightBoundsGiveShortfallNote) {
  gs::CorpusBounds b;
  b.max_ring_order = 2;
  b.max_module_order = 2;
  b.max_group_order = 1;
  b.count = 50;
  const auto c = gs::generate_corpus(b, 1);
  EXPECT_LT(c.instances.size(), 50U);
  EXPECT_GT(c.instances.size(), 0U);
  ASSERT_FALSE(c.notes.empty());
  EXPECT_NE(c.notes.back().find("shortfall"), std::string::npos);
}

TEST(Corpus, RandomCandidatesAreValidatedOrCounted) {
  gs::CorpusBounds b;
  b.count = 120;
  const auto c = gs::generate_corpus(b, 3);
  EXPECT_GT(c.random, 0U);
  EXPECT_GT(c.discarded_invalid, 0U);
  for (const auto& li : c.instances) {
    EXPECT_LE(li.ring->size(), b.max_ring_order);
    if (li.module) {
      EXPECT_LE(li.module->size(), b.max_module_order);
    }
  }
}

TEST(Suites, FilterSelectsParts) {
  const auto sel = gs::select_suites({"Thm-4.8"});
  ASSERT_EQ(sel.size(), 2U);
  EXPECT_EQ(sel[0]->id, "Thm-4.8.1");
  EXPECT_EQ(gs::select_suites({"Prop-3.8"}).size(), 6U);
  EXPECT_EQ(gs::select_suites({"Lemma-2.1.3"}).size(), 1U);
  EXPECT_THROW(gs::select_suites({"Thm-9.9"}), gs::Error);
}

TEST(Suites, CuratedFixturesHaveNoFailures) {
  const auto rows = gs::run_suites(curated_loaded(), gs::select_suites({}), gs::Limits{});
  EXPECT_EQ(rows.size(), 6 * gs::suite_catalog().size());
  for (const auto& r : rows) EXPECT_NE(r.status, gs::Status::Fail) << r.suite << " " << r.instance << " " << r.counterexample.dump();
}

TEST(Suites, ModuleSuitesSkipRingOnlyInstances) {
  const auto rows = gs::run_suites(curated_loaded(), gs::select_suites({"Prop-3.6.3"}), gs::Limits{});
  const auto* r = find_row(rows, "Prop-3.6.3", "r_d");
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->status, gs::Status::Skipped);
  EXPECT_EQ(find_row(rows, "Prop-3.6.3", "m_a")->status, gs::Status::Pass);
}

TEST(Suites, DecompositionSkipsWithoutWeakComultiplication) {
  const auto rows = gs::run_suites(curated_loaded(), gs::select_suites({"Thm-4.8.1"}), gs::Limits{});
  EXPECT_EQ(find_row(rows, "Thm-4.8.1", "m_a")->status, gs::Status::Skipped);
  EXPECT_EQ(find_row(rows, "Thm-4.8.1", "m_b")->status, gs::Status::Skipped);
}

TEST(Suites, NonRfgFamilyIsVacuous) {
  const auto rows = gs::run_suites(curated_loaded(), gs::select_suites({"Prop-2.12"}), gs::Limits{});
  for (const auto& r : rows) EXPECT_EQ(r.status, gs::Status::Vacuous);
}

TEST(Suites, DecompositionRunsWhenHypothesesHold) {
  auto z4 = ring_a();
  gs::Instance inst{"z4-self", {2}, {gs::ring_desc::ZMod{4}}, gs::ModuleDesc{gs::module_desc::Self{{0}}}, ""};
  const auto rows = gs::run_suites({gs::load_instance(inst)}, gs::select_suites({"Thm-4.8"}), gs::Limits{});
  for (const auto& r : rows) EXPECT_EQ(r.status, gs::Status::Pass) << r.suite << " " << r.note;
}

TEST(Suites, RowOrderIndependentOfThreads) {
  const auto inst = curated_loaded();
  const auto sel = gs::select_suites({"Prop-3.8", "Lemma-2.1"});
  const auto one = gs::report_json(gs::run_suites(inst, sel, gs::Limits{}, false, 1), 7).dump();
  const auto four = gs::report_json(gs::run_suites(inst, sel, gs::Limits{}, false, 4), 7).dump();
  EXPECT_EQ(one, four);
}

TEST(Report, FailRowCarriesPayloadAndExitCode) {
  std::vector<gs::SuiteResult> rows{{"Lemma-2.1.2", "x", gs::Status::Pass, nullptr, "", 0},
                                    {"Lemma-2.1.3", "x", gs::Status::Fail, gs::Json{{"check", "c"}}, "", 0}};
  EXPECT_EQ(gs::exit_code(rows), 1);
  const auto j = gs::report_json(rows, std::nullopt);
  EXPECT_FALSE(j.contains("seed"));
  EXPECT_FALSE(j["results"][0].contains("counterexample"));
  EXPECT_EQ(j["results"][1]["counterexample"]["check"], "c");
  EXPECT_EQ(j["totals"]["fail"], 1);
  EXPECT_EQ(gs::exit_code({}), 0);
  EXPECT_EQ(gs::report_json({}, 1)["results"].size(), 0U);
}

TEST(Report, TextTableIsAligned) {
  std::vector<gs::SuiteResult> rows{{"Thm-2.3", "short", gs::Status::Pass, nullptr, "", 0},
                                    {"Lemma-2.1.1", "a-longer-name", gs::Status::Vacuous, nullptr, "why", 0}};
  const auto text = gs::report_text(rows);
  std::istringstream in(text);
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  EXPECT_EQ(header.find("instance"), first.find("short"));
  EXPECT_EQ(first.find("pass"), second.find("vacuous"));
}

TEST(Search, CuratedFixturesAreSecondfulAndNotSecondless) {
  const auto inst = curated_loaded();
  const auto a = gs::search_instances(inst, gs::SearchProperty::NonSecondful, gs::Limits{}, "curated");
  EXPECT_FALSE(a.found);
  EXPECT_EQ(a.checked, 2U);
  EXPECT_EQ(a.checked_names, (std::vector<std::string>{"m_a", "m_b"}));
  const auto b = gs::search_instances(inst, gs::SearchProperty::Secondless, gs::Limits{}, "curated");
  EXPECT_FALSE(b.found);
  EXPECT_NE(b.summary.find("none found"), std::string::npos);
}
