#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "modlift/error.hpp"
#include "modlift/exact/json.hpp"
#include "modlift/io.hpp"
#include "modlift/report.hpp"
#include "modlift/suite/corpus.hpp"
#include "support.hpp"

using namespace modlift;
using io::Json;
namespace mt = modlift::testing;

namespace {

const std::filesystem::path kFixtures = std::filesystem::path(MODLIFT_SOURCE_DIR) / "fixtures";

std::vector<std::filesystem::path> fixture_files() {
  std::vector<std::filesystem::path> out;
  for (const char* sub : {"modules", "extra"})
    for (const auto& e : std::filesystem::directory_iterator(kFixtures / sub))
      if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn, std::string* message = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::CertificateFailed;
}

Json parse(const std::string& text) { return io::parse_json_text(text, "test"); }

const char* kValid = R"({
  "schema_version": 1,
  "field": 2,
  "algebra": {"kind": "truncated_polynomial", "degree": 3},
  "module": {"kind": "quotient", "of": {"kind": "regular"}, "by": [[0, 0, 1]]}
})";

}  // namespace

TEST(Definitions, EveryFixtureRoundTrips) {
  auto files = fixture_files();
  ASSERT_GE(files.size(), 40u);
  for (const auto& path : files) {
    SCOPED_TRACE(path.string());
    io::ModuleDefinition d = io::load_definition(path);
    Json once = io::to_json(d);
    io::ModuleDefinition again = io::parse_definition(parse(once.dump()));
    EXPECT_EQ(d, again);
    EXPECT_EQ(once.dump(), io::to_json(again).dump());
    EXPECT_NO_THROW(io::build(d));
  }
}

TEST(Definitions, CommittedFilesMatchTheCorpus) {
  for (const suite::Fixture& f : suite::corpus()) {
    SCOPED_TRACE(f.name);
    auto path = kFixtures / "modules" / (f.name + ".json");
    ASSERT_TRUE(std::filesystem::exists(path));
    EXPECT_EQ(io::load_definition(path), f.definition);
  }
}

TEST(Definitions, EntriesAreReducedModP) {
  std::string text = kValid;
  text.replace(text.find("[[0, 0, 1]]"), 11, "[[2, -2, 3]]");
  io::ModuleDefinition d = io::parse_definition(parse(text));
  EXPECT_EQ(d.module.vectors, (std::vector<Vec>{{0, 0, 1}}));
  EXPECT_EQ(io::build(d).module->dim(), 2u);
}

TEST(Definitions, SchemaErrorsNameTheField) {
  struct Case {
    std::string from, to, path;
  };
  std::vector<Case> cases{
      {"\"field\": 2", "\"field\": 4", "$.field"},
      {"\"schema_version\": 1", "\"schema_version\": 7", "$.schema_version"},
      {"\"degree\": 3", "\"degree\": \"three\"", "$.algebra.degree"},
      {"\"kind\": \"quotient\"", "\"kind\": \"pushout\"", "$.module.kind"},
      {"[[0, 0, 1]]", "[[0, 1]]", "$.module.by[0]"},
      {"\"field\": 2,", "\"field\": 2, \"colour\": 1,", "$.colour"},
      {"\"module\"", "\"modules\"", "$"},
  };
  for (const Case& c : cases) {
    std::string text = kValid;
    text.replace(text.find(c.from), c.from.size(), c.to);
    std::string msg;
    EXPECT_EQ(kind_of([&] { io::parse_definition(parse(text)); }, &msg), ErrorKind::SchemaError) << c.to;
    EXPECT_NE(msg.find(c.path), std::string::npos) << msg;
  }
}

TEST(Definitions, SyntaxErrorsReportTheLine) {
  std::string msg;
  EXPECT_EQ(kind_of([&] { parse("{\n  \"field\": 2,\n  \"algebra\": ,\n}"); }, &msg), ErrorKind::SchemaError);
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(Definitions, ConstructionErrorsPropagate) {
  const char* not_closed = R"({"schema_version": 1, "field": 2,
    "algebra": {"kind": "shape", "shape": [[1, 1], [1, 0]]},
    "module": {"kind": "regular"}})";
  EXPECT_NE(kind_of([&] { io::build(io::parse_definition(parse(not_closed))); }), ErrorKind::SchemaError);
  const char* bad_actions = R"({"schema_version": 1, "field": 2,
    "algebra": {"kind": "truncated_polynomial", "degree": 2},
    "module": {"kind": "action_matrices", "dim": 1, "actions": [[[1]], [[1]]]}})";
  EXPECT_NE(kind_of([&] { io::build(io::parse_definition(parse(bad_actions))); }), ErrorKind::SchemaError);
}

TEST(LatticeExport, NodeAndEdgeCounts) {
  struct Case {
    ModulePtr m;
    std::size_t nodes, edges;
  };
  std::vector<Case> cases{{mt::example_module(2), 6, 6},
                          {mt::example_module(3), 6, 6},
                          {mt::simple_full_module(2), 2, 1},
                          {mt::semisimple_module(2), 4, 4}};
  for (const Case& c : cases) {
    SubmoduleLattice lat = enumerate_submodules(*c.m);
    Json j = io::lattice_to_json(lat);
    EXPECT_EQ(j["nodes"].size(), c.nodes);
    EXPECT_EQ(j["edges"].size(), c.edges);
    std::string dot = io::lattice_to_dot(lat);
    std::size_t arrows = 0;
    for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++arrows;
    EXPECT_EQ(arrows, c.edges);
    EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  }
}

TEST(LatticeExport, SemisimpleIsADiamond) {
  Json j = io::lattice_to_json(enumerate_submodules(*mt::semisimple_module(2)));
  // 0 -> a, 0 -> b, a -> M, b -> M with a, b the two lines.
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : j["edges"]) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  std::sort(edges.begin(), edges.end());
  EXPECT_EQ(edges, (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

TEST(LatticeExport, Deterministic) {
  auto m = mt::example_module(3);
  EXPECT_EQ(io::lattice_to_dot(enumerate_submodules(*m)), io::lattice_to_dot(enumerate_submodules(*m)));
}

TEST(Report, ExampleModule) {
  Json r = property_report(mt::example_module(2), "example");
  EXPECT_EQ(r["schema_version"], io::kSchemaVersion);
  EXPECT_EQ(r["submodule_count"], 6);
  EXPECT_EQ(r["hasse_edge_count"], 6);
  EXPECT_EQ(r["verdicts"]["hollow"], true);
  EXPECT_EQ(r["verdicts"]["uniform"], true);
  EXPECT_EQ(r["verdicts"]["uniserial"], false);
  EXPECT_EQ(r["verdicts"]["lifting"], true);
  EXPECT_EQ(r["verdicts"]["end_local"], true);
  EXPECT_TRUE(r["too_large"].empty());
  EXPECT_FALSE(r["witnesses"]["uniserial"].is_null());
}

TEST(Report, ZeroModule) {
  ModulePtr z = io::build(io::load_definition(kFixtures / "extra" / "zero.json")).module;
  Json r = property_report(z, "zero");
  EXPECT_EQ(r["verdicts"]["lifting"], true);
  EXPECT_EQ(r["verdicts"]["extending"], true);
  EXPECT_EQ(r["verdicts"]["hollow"], false);
  EXPECT_EQ(r["verdicts"]["uniform"], false);
  EXPECT_TRUE(r["too_large"].empty());
}

TEST(Report, CapsAreListedNotOmitted) {
  ModulePtr m = io::build(io::load_definition(kFixtures / "extra" / "trunc10.json")).module;
  Json r = property_report(m, "trunc10");
  std::vector<std::string> listed;
  for (const Json& t : r["too_large"]) listed.push_back(t["property"]);
  for (const char* p : {"hollow", "uniform", "uniserial", "lifting", "extending", "fiep"}) {
    EXPECT_NE(std::find(listed.begin(), listed.end(), p), listed.end()) << p;
    EXPECT_TRUE(r["verdicts"][p].is_null()) << p;
  }
  EXPECT_EQ(r["verdicts"].size(), 10u);
}

TEST(Report, KroneckerSquareHasViolations) {
  Json r = property_report(mt::square(mt::kronecker_module(2)), "kronecker^2");
  EXPECT_EQ(r["verdicts"]["lifting"], false);
  EXPECT_EQ(r["verdicts"]["extending"], false);
  EXPECT_EQ(r["verdicts"]["end_local"], false);
  EXPECT_FALSE(r["witnesses"]["end_local"]["non_units_summing_to_unit"].is_null());
}

TEST(Report, SummandsAndHoms) {
  Json s = summands_report(mt::semisimple_module(3));
  EXPECT_EQ(s["count"], 4);
  Json h = homs_report(mt::example_module(2), mt::example_module(2));
  EXPECT_EQ(h["dim"], 1);
  EXPECT_EQ(h["size"], 2);
  EXPECT_EQ(h["epimorphisms"], 1);
  EXPECT_EQ(kind_of([] { homs_report(mt::example_module(2), mt::chain_module(2, 2)); }),
            ErrorKind::AlgebraMismatch);
}

TEST(ExactJson, RemarkSummary) {
  Json j = exact::to_json(exact::remark_z_checker(2, 3));
  EXPECT_EQ(j["summary"], "neither (i) nor (ii)");
  EXPECT_EQ(exact::to_json(exact::remark_z_checker(2, 4))["summary"], "(i) only");
  EXPECT_EQ(exact::to_json(exact::remark_z_checker(3, 3))["summary"], "both (i) and (ii)");
}

TEST(ExactJson, ReportsCarryCertificates) {
  Json j = exact::to_json(exact::verify_example_case_ii(exact::parse_rational("4/3"), 2, 3));
  EXPECT_EQ(j["check"], "case_ii");
  EXPECT_EQ(j["passed"], true);
  EXPECT_TRUE(j["unresolved"].empty());
  EXPECT_GE(j["certificates"].size(), 4u);
  Json f = exact::to_json(exact::fiep_verdict_exact(2, 3));
  EXPECT_EQ(f["label"], "CITED-IMPLICATION");
  EXPECT_EQ(f["premise_verified"], true);
}
