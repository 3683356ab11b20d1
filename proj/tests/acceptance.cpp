// Prints one line per acceptance criterion and exits nonzero if any fails.
// Usage: acceptance <path-to-modlift-cli> <scratch-dir>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "modlift/io.hpp"
#include "modlift/properties.hpp"
#include "modlift/suite/verify.hpp"

using namespace modlift;
using namespace modlift::suite;

namespace {

struct Line {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

struct Tally {
  std::size_t entries = 0, failures = 0;
  double ms = 0;
  std::string first_failure;
};

Tally tally(const Manifest& m, const std::function<bool(const ManifestEntry&)>& pick) {
  Tally t;
  for (const ManifestEntry& e : m.entries) {
    if (!pick(e)) continue;
    ++t.entries;
    t.ms += e.duration_ms;
    if (e.verdict != Verdict::Pass) {
      if (!t.failures) t.first_failure = e.id + ": " + e.witness;
      ++t.failures;
    }
  }
  return t;
}

Line from_tally(const Tally& t, double limit_s, const std::string& what) {
  Line l;
  l.pass = t.entries > 0 && t.failures == 0 && t.ms / 1000 < limit_s;
  l.detail = std::to_string(t.entries) + " " + what + ", " + std::to_string(t.failures) + " failing, " +
             fmt(t.ms / 1000);
  if (t.failures) l.detail += "; first: " + t.first_failure;
  return l;
}

auto anchor_is(const std::string& a) {
  return [a](const ManifestEntry& e) { return e.anchor == a; };
}

Line criterion1() {
  Line l;
  l.pass = true;
  for (std::int64_t p : {2, 3}) {
    auto start = std::chrono::steady_clock::now();
    auto alg = std::make_shared<const Algebra>(shaped_matrix_algebra(
        PrimeField(p), {{true, true, true, true}, {false, true, false, true}, {false, false, true, true}, {false, false, false, true}}));
    auto m = std::make_shared<const RepModule>(row_module(alg, 4));
    Analysis a(m);
    std::set<Matrix> got;
    for (const Submodule& s : a.lattice().members()) got.insert(s.basis());
    auto rows = [](std::vector<Vec> r) { return Matrix::from_rows(4, r); };
    std::set<Matrix> listed{Matrix(0, 4),
                            rows({{0, 0, 0, 1}}),
                            rows({{0, 1, 0, 0}, {0, 0, 0, 1}}),
                            rows({{0, 0, 1, 0}, {0, 0, 0, 1}}),
                            rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                            Matrix::identity(4)};
    bool ok = got == listed && is_hollow(a) && is_uniform(a) && !is_uniserial(a);
    double s = seconds_since(start);
    l.pass = l.pass && ok && s < 1.0 && alg->dim() == 9;
    l.detail += "F_" + std::to_string(p) + ": " + std::to_string(got.size()) + " submodules, " +
                (ok ? "listed subspaces, hollow, uniform, not uniserial" : "MISMATCH") + ", " + fmt(s) + "; ";
  }
  l.detail.resize(l.detail.size() - 2);
  return l;
}

std::vector<Matrix> brute_force_homs(const RepModule& a, const RepModule& b) {
  std::vector<Matrix> out;
  const std::size_t n = a.dim() * b.dim();
  for_each_vector(a.field(), n, [&](const Vec& v) {
    Matrix m(a.dim(), b.dim(), v);
    if (commutes(a, b, m)) out.push_back(m);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Line criterion9(const Manifest& m) {
  Tally small = tally(m, anchor_is("DEF-SMALL"));
  Tally ess = tally(m, anchor_is("DEF-ESSENTIAL"));
  std::size_t pairs = 0, disagreements = 0;
  auto fixtures = corpus();
  for (const Fixture& fa : fixtures)
    for (const Fixture& fb : fixtures) {
      if (fa.definition.field != 2 || !(fa.definition.algebra == fb.definition.algebra) || fb.definition.field != 2)
        continue;
      ModulePtr a = io::build(fa.definition).module, b = io::build(fb.definition).module;
      if (a->dim() > 4 || b->dim() > 4) continue;
      ++pairs;
      auto span = enumerate_span(a->field(), hom_basis(*a, *b), a->dim(), b->dim(), Limits{});
      std::sort(span.begin(), span.end());
      if (span != brute_force_homs(*a, *b)) ++disagreements;
    }
  Line l;
  l.pass = small.entries && ess.entries && !small.failures && !ess.failures && pairs > 0 && !disagreements;
  l.detail = "small/radical on " + std::to_string(small.entries) + " modules, essential/socle on " +
             std::to_string(ess.entries) + " modules, " + std::to_string(small.failures + ess.failures) +
             " failing; hom_space vs matrix scan on " + std::to_string(pairs) + " F_2 pairs, " +
             std::to_string(disagreements) + " disagreements";
  return l;
}

Line criterion10(const Manifest& in_process, const std::string& cli, const std::string& scratch) {
  const std::string out = scratch + "/acceptance-manifest.json";
  auto start = std::chrono::steady_clock::now();
  int status = std::system((cli + " verify-paper --out " + out + " > /dev/null").c_str());
  double s = seconds_since(start);
  Line l;
  std::ifstream in(out);
  if (status != 0 || !in) {
    l.detail = "verify-paper exit status " + std::to_string(status);
    return l;
  }
  std::stringstream text;
  text << in.rdbuf();
  io::Json j = io::parse_json_text(text.str(), out);
  j.erase("duration_ms");
  for (auto& e : j["entries"]) e.erase("duration_ms");
  bool same = j.dump() == in_process.to_json(false).dump();
  std::set<std::string> anchors;
  for (const auto& e : j["entries"]) anchors.insert(e["anchor"].get<std::string>());
  std::size_t covered = 0;
  for (const Anchor& a : anchor_table()) covered += anchors.count(a.id);
  l.pass = same && covered == anchor_table().size() && s < 600;
  l.detail = "exit 0, " + std::to_string(j["entries"].size()) + " entries, " + std::to_string(covered) + "/" +
             std::to_string(anchor_table().size()) + " anchors, manifest " +
             (same ? "identical to an independent run" : "DIFFERS between runs") + ", " + fmt(s);
  return l;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <modlift-cli> <scratch-dir>\n";
    return 2;
  }
  const Manifest m = verify_paper(VerifyConfig{});

  std::vector<std::pair<std::string, std::function<Line()>>> criteria{
      {"example reproduction", criterion1},
      {"summand lemma", [&] { return from_tally(tally(m, anchor_is("LEMMA-SUMMANDS")), 30, "sums"); }},
      {"graph laws", [&] { return from_tally(tally(m, anchor_is("DEF-GRAPH")), 600, "sums"); }},
      {"lifting theorem equivalence",
       [&] { return from_tally(tally(m, anchor_is("THM-LIFTING")), 300, "squares"); }},
      {"extending theorem equivalence",
       [&] { return from_tally(tally(m, anchor_is("THM-EXTENDING")), 300, "squares"); }},
      {"finite FIEP sanity", [&] { return from_tally(tally(m, anchor_is("DEF-FIEP")), 600, "modules"); }},
      {"remark reproduction", [&] { return from_tally(tally(m, anchor_is("REMARK")), 10, "checks"); }},
      {"exact counterexample",
       [&] {
         return from_tally(tally(m, [](const ManifestEntry& e) { return e.group == "exact"; }), 10, "checks");
       }},
      {"oracle agreements", [&] { return criterion9(m); }},
      {"verify-paper end to end", [&] { return criterion10(m, argv[1], argv[2]); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line l;
    try {
      l = criteria[i].second();
    } catch (const std::exception& e) {
      l.detail = std::string("exception: ") + e.what();
    }
    failed += !l.pass;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, l.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                l.detail.c_str());
  }
  std::fflush(stdout);
  return failed ? 1 : 0;
}
