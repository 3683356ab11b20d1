#include "modlift/suite/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "modlift/exact/json.hpp"
#include "modlift/exact/remark.hpp"
#include "modlift/graph.hpp"
#include "modlift/theorems.hpp"

namespace modlift::suite {

using io::Json;

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Error:
      return "error";
  }
  return "?";
}

const std::vector<std::string>& group_names() {
  static const std::vector<std::string> names{"example", "definitions", "lemma",  "graph",
                                              "theorems", "fiep",       "remark", "exact"};
  return names;
}

const std::vector<Anchor>& anchor_table() {
  static const std::vector<Anchor> table{
      {"SHAPED-EXAMPLE", "example", "six-submodule module over the shaped 4x4 algebra"},
      {"DEF-SMALL", "definitions", "small submodules"},
      {"DEF-ESSENTIAL", "definitions", "essential submodules"},
      {"DEF-COESSENTIAL", "definitions", "coessential pairs"},
      {"DEF-SMALL-COVER", "definitions", "epimorphisms with small kernel"},
      {"DEF-SHAPE", "definitions", "hollow, uniform and uniserial modules"},
      {"DEF-LIFT-EXT", "definitions", "lifting and extending modules"},
      {"LEMMA-SUMMANDS", "lemma", "summands of sums of hollow or uniform modules"},
      {"DEF-GRAPH", "graph", "graph of a homomorphism"},
      {"LEMMA-GRAPH", "graph", "graph of an epimorphism is a summand of the square"},
      {"THM-LIFTING", "theorems", "lifting square characterization"},
      {"THM-EXTENDING", "theorems", "extending square characterization"},
      {"DEF-FIEP", "fiep", "finite internal exchange property"},
      {"REMARK", "remark", "the map 2n to 3n on Z"},
      {"EXACT-EXAMPLE", "exact", "lifting module whose square lacks the exchange property"},
  };
  return table;
}

// ---------------------------------------------------------------- config

namespace {

template <typename T>
T read(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw Error(ErrorKind::SchemaError, std::string("$.") + key + ": wrong type");
  }
}

}  // namespace

VerifyConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::SchemaError, "$: config must be an object");
  static const std::set<std::string> known{"schema_version", "p",           "q",      "cap_dim",
                                           "cap_hom",        "n_max",       "seed",   "sample_size",
                                           "select",         "case_i_x",    "case_ii_x"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw Error(ErrorKind::SchemaError, "$." + it.key() + ": unknown field");
  if (read<int>(j, "schema_version", io::kSchemaVersion) != io::kSchemaVersion)
    throw Error(ErrorKind::SchemaError, "$.schema_version: unsupported version");
  VerifyConfig c;
  c.p = read<long>(j, "p", c.p);
  c.q = read<long>(j, "q", c.q);
  c.limits.max_dim = read<std::size_t>(j, "cap_dim", c.limits.max_dim);
  c.limits.max_hom = read<std::uint64_t>(j, "cap_hom", c.limits.max_hom);
  c.fiep.n_max = read<std::size_t>(j, "n_max", c.fiep.n_max);
  c.fiep.seed = c.samples.seed = read<std::uint64_t>(j, "seed", c.samples.seed);
  c.samples.size = read<std::size_t>(j, "sample_size", c.samples.size);
  c.select = read<std::vector<std::string>>(j, "select", c.select);
  c.case_i_x = read<std::vector<std::string>>(j, "case_i_x", c.case_i_x);
  c.case_ii_x = read<std::vector<std::string>>(j, "case_ii_x", c.case_ii_x);
  if (c.limits.max_dim == 0 || c.limits.max_hom == 0)
    throw Error(ErrorKind::SchemaError, "$.cap_dim/cap_hom: caps must be positive");
  for (const std::string& g : c.select)
    if (std::find(group_names().begin(), group_names().end(), g) == group_names().end())
      throw Error(ErrorKind::SchemaError, "$.select: unknown group \"" + g + "\"");
  return c;
}

Json to_json(const VerifyConfig& c) {
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["p"] = c.p;
  j["q"] = c.q;
  j["cap_dim"] = c.limits.max_dim;
  j["cap_hom"] = c.limits.max_hom;
  j["n_max"] = c.fiep.n_max;
  j["seed"] = c.samples.seed;
  j["sample_size"] = c.samples.size;
  j["select"] = c.select;
  j["case_i_x"] = c.case_i_x;
  j["case_ii_x"] = c.case_ii_x;
  return j;
}

// -------------------------------------------------------------- manifest

bool Manifest::passed() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const ManifestEntry& e) { return e.verdict == Verdict::Pass; });
}

bool Manifest::cap_exceeded() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ManifestEntry& e) { return e.error == ErrorKind::TooLarge; });
}

Json Manifest::to_json(bool with_durations) const {
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["config"] = suite::to_json(config);
  j["passed"] = passed();
  std::size_t counts[3] = {0, 0, 0};
  Json list = Json::array();
  double total = 0;
  for (const ManifestEntry& e : entries) {
    ++counts[static_cast<int>(e.verdict)];
    Json x;
    x["id"] = e.id;
    x["anchor"] = e.anchor;
    x["group"] = e.group;
    x["verdict"] = to_string(e.verdict);
    x["evidence"] = e.evidence;
    if (!e.witness.empty()) x["witness"] = e.witness;
    if (e.error) x["error"] = std::string(modlift::to_string(*e.error));
    x["witness_digest"] = e.digest;
    if (with_durations) x["duration_ms"] = e.duration_ms;
    total += e.duration_ms;
    list.push_back(std::move(x));
  }
  j["summary"] = {{"total", entries.size()}, {"pass", counts[0]}, {"fail", counts[1]}, {"error", counts[2]}};
  if (with_durations) j["duration_ms"] = total;
  j["entries"] = std::move(list);
  return j;
}

// ---------------------------------------------------------------- checks

namespace {

struct Outcome {
  bool passed = true;
  std::string evidence;
  std::string witness;
};

std::string text(const Submodule& s) { return io::to_json(s).dump(); }
std::string text(const Matrix& m) { return io::to_json(m).dump(); }

class Runner {
 public:
  Runner(const VerifyConfig& config, const std::vector<Fixture>& fixtures) : config_(config), fixtures_(fixtures) {}

  Manifest run() {
    manifest_.config = config_;
    for (const std::string& g : group_names()) {
      if (!config_.select.empty() && std::find(config_.select.begin(), config_.select.end(), g) == config_.select.end())
        continue;
      if (g == "example") example();
      if (g == "definitions") definitions();
      if (g == "lemma") lemma();
      if (g == "graph") graph();
      if (g == "theorems") theorems();
      if (g == "fiep") fiep();
      if (g == "remark") remark();
      if (g == "exact") exact_checks();
    }
    return std::move(manifest_);
  }

 private:
  const VerifyConfig& config_;
  const std::vector<Fixture>& fixtures_;
  Manifest manifest_;
  std::map<std::string, ModulePtr> modules_;
  std::map<std::string, std::shared_ptr<Analysis>> analyses_;
  std::string group_;

  void check(const std::string& anchor, const std::string& instance, const std::function<Outcome()>& body) {
    ManifestEntry e;
    e.anchor = anchor;
    e.id = anchor + "/" + instance;
    e.group = group_;
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      e.verdict = o.passed ? Verdict::Pass : Verdict::Fail;
      e.evidence = o.evidence;
      if (!o.passed) e.witness = o.witness.empty() ? o.evidence : o.witness;
    } catch (const Error& err) {
      e.verdict = Verdict::Error;
      e.error = err.kind();
      e.witness = err.what();
    } catch (const std::exception& err) {
      e.verdict = Verdict::Error;
      e.witness = err.what();
    }
    e.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    e.digest = fnv1a_hex(e.witness.empty() ? e.evidence : e.witness);
    manifest_.entries.push_back(std::move(e));
  }

  // Evaluates a selection predicate; an exception becomes an error entry.
  bool selected(const std::string& anchor, const std::string& instance, const std::function<bool()>& pred) {
    try {
      return pred();
    } catch (...) {
      std::exception_ptr ep = std::current_exception();
      check(anchor, instance, [ep]() -> Outcome { std::rethrow_exception(ep); });
      return false;
    }
  }

  const ModulePtr& module(const Fixture& f) {
    auto it = modules_.find(f.name);
    if (it == modules_.end()) it = modules_.emplace(f.name, io::build(f.definition).module).first;
    return it->second;
  }

  const Analysis& analysis(const Fixture& f) {
    auto it = analyses_.find(f.name);
    if (it == analyses_.end())
      it = analyses_.emplace(f.name, std::make_shared<Analysis>(module(f), config_.limits)).first;
    return *it->second;
  }

  std::vector<const Fixture*> base() const {
    std::vector<const Fixture*> out;
    for (const Fixture& f : fixtures_)
      if (!f.square) out.push_back(&f);
    return out;
  }

  bool hollow_uniform(const Fixture& f) {
    const Analysis& a = analysis(f);
    return a.dim() > 0 && is_hollow(a) && is_uniform(a);
  }

  static bool same_algebra(const Fixture& a, const Fixture& b) {
    return a.definition.field == b.definition.field && a.definition.algebra == b.definition.algebra;
  }

  // ---- example

  void example() {
    group_ = "example";
    for (const Fixture& f : fixtures_) {
      if (f.name.rfind("shaped-f", 0) != 0) continue;
      check("SHAPED-EXAMPLE", f.name, [&] {
        auto start = std::chrono::steady_clock::now();
        const ModulePtr& m = module(f);
        Analysis a(m, config_.limits);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        auto span = [&](std::vector<Vec> rows) {
          Matrix g(rows.size(), 4);
          for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < 4; ++j) g(i, j) = rows[i][j];
          return make_submodule(*m, g);
        };
        std::set<Submodule> listed{Submodule::zero(4),
                                   span({{0, 0, 0, 1}}),
                                   span({{0, 1, 0, 0}, {0, 0, 0, 1}}),
                                   span({{0, 0, 1, 0}, {0, 0, 0, 1}}),
                                   span({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                                   Submodule::whole(4)};
        std::set<Submodule> found(a.lattice().members().begin(), a.lattice().members().end());
        Outcome o;
        bool hollow = is_hollow(a), uniform = is_uniform(a), uniserial = is_uniserial(a);
        o.passed = found == listed && hollow && uniform && !uniserial && ms < 1000;
        o.evidence = std::to_string(found.size()) + " submodules matching the listed subspaces: " +
                     (found == listed ? "yes" : "no") + "; hollow " + (hollow ? "yes" : "no") + "; uniform " +
                     (uniform ? "yes" : "no") + "; uniserial " + (uniserial ? "yes" : "no");
        if (found != listed) {
          std::string w = "lattice:";
          for (const Submodule& s : found) w += " " + text(s);
          o.witness = w;
        }
        return o;
      });
    }
  }

  // ---- definitions

  void definitions() {
    group_ = "definitions";
    for (const Fixture& f : fixtures_) {
      check("DEF-SMALL", f.name, [&] {
        const Analysis& a = analysis(f);
        Outcome o;
        for (const Submodule& n : a.lattice().members())
          if (is_small(a, n) != is_small_via_radical(a, n)) {
            o.passed = false;
            o.witness = "scan and radical containment disagree on " + text(n);
            break;
          }
        o.evidence = std::to_string(a.lattice().size()) + " submodules compared";
        return o;
      });
      check("DEF-ESSENTIAL", f.name, [&] {
        const Analysis& a = analysis(f);
        Outcome o;
        for (const Submodule& n : a.lattice().members())
          if (is_essential(a, n) != is_essential_via_socle(a, n)) {
            o.passed = false;
            o.witness = "scan and socle containment disagree on " + text(n);
            break;
          }
        o.evidence = std::to_string(a.lattice().size()) + " submodules compared";
        return o;
      });
      if (!f.square) {
        check("DEF-COESSENTIAL", f.name, [&] { return coessential(f); });
        check("DEF-SMALL-COVER", f.name, [&] { return small_cover(f); });
      }
      check("DEF-SHAPE", f.name, [&] { return shape(f); });
      check("DEF-LIFT-EXT", f.name, [&] { return lift_ext(f); });
    }
  }

  Outcome coessential(const Fixture& f) {
    const Analysis& a = analysis(f);
    const SubmoduleLattice& lat = a.lattice();
    const PrimeField& F = a.field();
    const Submodule rad = lat[a.radical_index()];
    Outcome o;
    std::size_t pairs = 0;
    for (std::size_t k = 0; k < lat.size() && o.passed; ++k)
      for (std::size_t n = 0; n < lat.size(); ++n) {
        if (!lat.leq(k, n)) continue;
        ++pairs;
        bool expected = sum(F, lat[k], rad).contains(F, lat[n]);
        if (is_coessential(a, lat[k], lat[n]) != expected) {
          o.passed = false;
          o.witness = "K = " + text(lat[k]) + ", N = " + text(lat[n]);
          break;
        }
      }
    o.evidence = std::to_string(pairs) + " pairs K <= N compared with N <= K + Rad(M)";
    return o;
  }

  Outcome small_cover(const Fixture& f) {
    const Analysis& a = analysis(f);
    const SubmoduleLattice& lat = a.lattice();
    const ModulePtr& m = a.module_ptr();
    Outcome o;
    for (std::size_t x = 0; x < lat.size() && o.passed; ++x) {
      Quotient qm = quotient_module(m, lat[x]);
      if (!is_epi(qm.projection) || kernel(qm.projection) != lat[x]) {
        o.passed = false;
        o.witness = "projection onto M/X is not an epimorphism with kernel X for X = " + text(lat[x]);
        break;
      }
      // π is small iff π ∘ ι_Y epi forces Y = M.
      bool small_epi = true;
      for (std::size_t y = 0; y + 1 < lat.size(); ++y)
        if (is_epi(compose(qm.projection, inclusion(m, lat[y])))) small_epi = false;
      if (small_epi != is_small_via_radical(a, lat[x])) {
        o.passed = false;
        o.witness = "small epimorphism test disagrees with X <= Rad(M) for X = " + text(lat[x]);
      }
    }
    o.evidence = std::to_string(lat.size()) + " projections tested";
    return o;
  }

  static bool compare(const Fixture& f, const std::string& property, const Json& actual, Outcome& o) {
    const Expectation* e = f.expectation(property);
    if (!e) {
      o.passed = false;
      o.witness += property + ": no expectation; ";
      return false;
    }
    if (e->value != actual) {
      o.passed = false;
      o.witness += property + ": expected " + e->value.dump() + " (" + to_string(e->provenance) + "), computed " +
                   actual.dump() + "; ";
      return false;
    }
    return true;
  }

  Outcome shape(const Fixture& f) {
    const Analysis& a = analysis(f);
    Outcome o;
    bool hollow = a.dim() > 0 && is_hollow(a);
    bool uniform = a.dim() > 0 && is_uniform(a);
    bool uniserial = is_uniserial(a);
    compare(f, "submodule_count", a.lattice().size(), o);
    compare(f, "hasse_edge_count", a.lattice().hasse_edges().size(), o);
    compare(f, "hollow", hollow, o);
    compare(f, "uniform", uniform, o);
    compare(f, "uniserial", uniserial, o);
    compare(f, "indecomposable", is_indecomposable(a), o);
    compare(f, "summand_count", a.summands().size(), o);
    std::optional<bool> local;
    try {
      local = is_local(endomorphism_ring(a.module(), config_.limits)).local;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
    }
    if (local) {
      compare(f, "end_local", *local, o);
      if (a.dim() > 0 && *local != is_indecomposable(a)) {
        o.passed = false;
        o.witness += "End(M) locality disagrees with indecomposability; ";
      }
    } else if (f.expectation("end_local")) {
      o.passed = false;
      o.witness += "end_local: End(M) exceeds the hom cap; ";
    }
    if (uniserial && !(hollow && uniform)) {
      o.passed = false;
      o.witness += "uniserial but not hollow and uniform; ";
    }
    o.evidence = std::string("submodules ") + std::to_string(a.lattice().size()) + ", hollow " +
                 (hollow ? "yes" : "no") + ", uniform " + (uniform ? "yes" : "no") + ", uniserial " +
                 (uniserial ? "yes" : "no") + ", End(M) local " + (local ? (*local ? "yes" : "no") : "beyond cap");
    return o;
  }

  Outcome lift_ext(const Fixture& f) {
    const Analysis& a = analysis(f);
    Outcome o;
    SearchResult ld = is_lifting(a, Method::Definitional), ls = is_lifting(a, Method::Structural);
    SearchResult ed = is_extending(a, Method::Definitional), es = is_extending(a, Method::Structural);
    if (ld.holds != ls.holds) {
      o.passed = false;
      o.witness += "lifting methods disagree; ";
    }
    if (ed.holds != es.holds) {
      o.passed = false;
      o.witness += "extending methods disagree; ";
    }
    compare(f, "lifting", ld.holds, o);
    compare(f, "extending", ed.holds, o);
    if (a.dim() > 0 && is_hollow(a) && !ld.holds) {
      o.passed = false;
      o.witness += "hollow but not lifting; ";
    }
    if (a.dim() > 0 && is_uniform(a) && !ed.holds) {
      o.passed = false;
      o.witness += "uniform but not extending; ";
    }
    if (ld.violation) o.witness += "lifting fails at N = " + text(a.lattice()[*ld.violation]) + "; ";
    if (ed.violation) o.witness += "extending fails at N = " + text(a.lattice()[*ed.violation]) + "; ";
    if (o.passed) o.witness.clear();
    o.evidence = std::string("lifting ") + (ld.holds ? "yes" : "no") + ", extending " + (ed.holds ? "yes" : "no") +
                 " (definitional and structural agree)";
    return o;
  }

  // ---- lemma

  void lemma() {
    group_ = "lemma";
    auto b = base();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i; j < b.size(); ++j) {
        const Fixture& fa = *b[i];
        const Fixture& fb = *b[j];
        if (!same_algebra(fa, fb)) continue;
        const std::string instance = fa.name + "+" + fb.name;
        bool hollow = false, uniform = false;
        if (!selected("LEMMA-SUMMANDS", instance, [&] {
              const Analysis& aa = analysis(fa);
              const Analysis& ab = analysis(fb);
              if (aa.dim() == 0 || ab.dim() == 0) return false;
              hollow = is_hollow(aa) && is_hollow(ab);
              uniform = is_uniform(aa) && is_uniform(ab);
              return hollow || uniform;
            }))
          continue;
        check("LEMMA-SUMMANDS", instance, [&, hollow, uniform] {
          const Analysis& aa = analysis(fa);
          const Analysis& ab = analysis(fb);
          DirectSum ds = direct_sum(aa.module_ptr(), ab.module_ptr());
          Analysis s(ds.module, config_.limits);
          Outcome o;
          std::size_t checked = 0;
          for (std::size_t idx : s.summands()) {
            const Submodule& x = s.lattice()[idx];
            if (x.is_zero() || x.is_whole()) continue;
            ++checked;
            Analysis xa(std::make_shared<const RepModule>(as_module(*ds.module, x)), config_.limits);
            if ((hollow && !is_hollow(xa)) || (uniform && !is_uniform(xa))) {
              o.passed = false;
              o.witness = "summand " + text(x) + " is not " + (hollow && !is_hollow(xa) ? "hollow" : "uniform");
              break;
            }
          }
          o.evidence = std::to_string(checked) + " nonzero proper summands checked for" +
                       (hollow ? " hollow" : "") + (uniform ? " uniform" : "");
          return o;
        });
      }
  }

  // ---- graph

  void graph() {
    group_ = "graph";
    auto b = base();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (!same_algebra(*b[i], *b[j])) continue;
        const Fixture& fa = *b[i];
        const Fixture& fb = *b[j];
        check("DEF-GRAPH", fa.name + "+" + fb.name, [&] { return graph_laws(fa, fb); });
      }
    for (const Fixture* f : b) {
      if (!selected("LEMMA-GRAPH", f->name, [&] { return hollow_uniform(*f); })) continue;
      check("LEMMA-GRAPH", f->name, [&] { return graph_lemma(*f); });
    }
    for (const std::string& x : config_.case_ii_x) {
      check("LEMMA-GRAPH", "exact-x=" + x, [&] {
        exact::ExactReport r = exact::graph_lemma_exact(exact::parse_rational(x), config_.p, config_.q, config_.samples);
        return exact_outcome(r);
      });
    }
  }

  Outcome graph_laws(const Fixture& fa, const Fixture& fb) {
    const ModulePtr& a = module(fa);
    const ModulePtr& b = module(fb);
    if (a->dim() + b->dim() > config_.limits.max_dim)
      throw Error(ErrorKind::TooLarge, "dim A + dim B exceeds the dimension cap");
    const PrimeField& F = a->field();
    DirectSum ds = direct_sum(a, b);
    const Submodule first = ds.first(), second = ds.second();
    auto embed = [&](const Matrix& rows) {
      Matrix m = multiply(F, rows, ds.inj1.matrix());
      return Submodule(rref(F, m));
    };
    Outcome o;
    std::size_t maps = 0;
    for (const Matrix& h : enumerate_span(F, hom_basis(*a, *b), a->dim(), b->dim(), config_.limits)) {
      ++maps;
      ModuleHom hom(a, b, h);
      Submodule g = graph_of(ds, hom);
      Submodule ker = embed(kernel(hom).basis());
      if (intersection(F, first, g) != ker) {
        o.passed = false;
        o.witness = "A meets the graph outside Ker h for h = " + text(h);
        return o;
      }
      if (!is_internal_direct_sum(F, g, second)) {
        o.passed = false;
        o.witness = "graph and B are not complementary for h = " + text(h);
        return o;
      }
      if (is_epi(hom) && !sum(F, first, g).is_whole()) {
        o.passed = false;
        o.witness = "A + graph is proper for the epimorphism h = " + text(h);
        return o;
      }
    }
    std::size_t partial = 0;
    SubmoduleLattice lat = enumerate_submodules(*a, config_.limits);
    for (const Submodule& n : lat.members()) {
      if (n.is_zero() || n.is_whole()) continue;
      auto nm = std::make_shared<const RepModule>(as_module(*a, n));
      for (const Matrix& h : enumerate_span(F, hom_basis(*nm, *b), n.dim(), b->dim(), config_.limits)) {
        ++partial;
        Submodule g = graph_of(ds, n, h);
        ModuleHom hom(nm, b, h);
        Matrix kb = kernel(hom).basis();
        Submodule ker = embed(multiply(F, kb, n.basis()));
        if (intersection(F, first, g) != ker) {
          o.passed = false;
          o.witness = "A meets the graph outside Ker h for N = " + text(n) + ", h = " + text(h);
          return o;
        }
      }
    }
    o.evidence = std::to_string(maps) + " total and " + std::to_string(partial) + " partial maps";
    return o;
  }

  Outcome graph_lemma(const Fixture& f) {
    const Analysis& a = analysis(f);
    const ModulePtr& u = a.module_ptr();
    const PrimeField& F = a.field();
    Outcome o;
    std::size_t total = 0, vacuous = 0;
    for (const Matrix& h : enumerate_span(F, hom_basis(*u, *u), u->dim(), u->dim(), config_.limits)) {
      if (rank(F, h) < u->dim()) continue;
      ++total;
      GraphComplement gc = graph_complement(u, Submodule::whole(u->dim()), h, config_.limits);
      if (gc.graph != graph_of(gc.square, ModuleHom(u, u, h)) || !is_internal_direct_sum(F, gc.graph, gc.complement)) {
        o.passed = false;
        o.witness = "no complement for the graph of h = " + text(h);
        return o;
      }
    }
    for (const Submodule& n : a.lattice().members()) {
      if (n.is_zero() || n.is_whole()) continue;
      RepModule nm = as_module(*u, n);
      for (const Matrix& h : hom_basis(nm, *u)) {
        try {
          graph_complement(u, n, h, config_.limits);
          o.passed = false;
          o.witness = "proper N1 = " + text(n) + " accepted";
          return o;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::CardinalityVacuous) throw;
          ++vacuous;
        }
      }
    }
    o.evidence = std::to_string(total) + " automorphisms with complemented graphs; " + std::to_string(vacuous) +
                 " proper sources rejected as vacuous";
    return o;
  }

  // ---- theorems

  void theorems() {
    group_ = "theorems";
    for (const Fixture* f : base()) {
      for (bool lifting : {true, false}) {
        const char* anchor = lifting ? "THM-LIFTING" : "THM-EXTENDING";
        if (!selected(anchor, f->name, [&] { return hollow_uniform(*f); })) continue;
        check(anchor, f->name, [&, lifting] {
          const ModulePtr& u = module(*f);
          DirectSum ds = direct_sum(u, u);
          Analysis sq(ds.module, config_.limits);
          bool def = lifting ? is_lifting(sq).holds : is_extending(sq).holds;
          auto run = [&](Variant v) {
            return lifting ? thm_lifting_condition(u, v, config_.limits) : thm_extending_condition(u, v, config_.limits);
          };
          TheoremResult b = run(Variant::B), c = run(Variant::C);
          Outcome o;
          o.passed = def == b.holds && def == c.holds;
          auto yn = [](bool x) { return x ? "yes" : "no"; };
          o.evidence = std::string(lifting ? "lifting" : "extending") + " square " + yn(def) + ", condition b " +
                       yn(b.holds) + ", condition c " + yn(c.holds) + " over " + std::to_string(b.triples) + " triples";
          if (!o.passed) {
            const auto& v = b.violation ? b.violation : c.violation;
            o.witness = o.evidence;
            if (v) o.witness += "; violating triple object " + std::to_string(v->object) + ", f = " + text(v->f);
          }
          return o;
        });
      }
    }
  }

  // ---- fiep

  void fiep() {
    group_ = "fiep";
    for (const Fixture& f : fixtures_) {
      check("DEF-FIEP", f.name, [&] {
        const Analysis& a = analysis(f);
        const SubmoduleLattice& lat = a.lattice();
        const PrimeField& F = a.field();
        FiepResult r = has_fiep(a, config_.fiep);
        Outcome o;
        std::size_t rows = 0;
        for (const FiepWitnessTable& t : r.tables)
          for (std::size_t i = 0; i < t.size(); ++i) {
            FiepPairWitness w = t.row(i);
            Submodule rest = Submodule::zero(a.dim());
            bool inside = true;
            for (std::size_t k = 0; k < w.chosen.size(); ++k) {
              inside = inside && lat.leq(w.chosen[k], w.parts[k]);
              rest = sum(F, rest, lat[w.chosen[k]]);
            }
            ++rows;
            if (!inside || !is_internal_direct_sum(F, lat[w.summand], rest)) {
              o.passed = false;
              o.witness = "invalid exchange witness for X = " + text(lat[w.summand]);
              return o;
            }
          }
        if (!r.holds) {
          o.passed = false;
          o.witness = r.violation ? "no exchange for X = " + text(lat[r.violation->summand]) : "exchange fails";
        }
        compare(f, "fiep", r.holds, o);
        o.evidence = std::to_string(r.pairs_checked) + " pairs, " + std::to_string(rows) + " witnesses validated";
        return o;
      });
    }
  }

  // ---- remark

  void remark() {
    group_ = "remark";
    const long a = config_.remark_a, b = config_.remark_b;
    check("REMARK", std::to_string(a) + "," + std::to_string(b), [&] {
      exact::RemarkResult r = exact::remark_z_checker(a, b);
      Outcome o;
      o.passed = !r.i_holds && !r.ii_holds && !r.i_certificate.empty() && !r.ii_certificate.empty();
      std::size_t pairs = 0;
      for (long x = -config_.remark_bound; x <= config_.remark_bound; ++x)
        for (long y = -config_.remark_bound; y <= config_.remark_bound; ++y) {
          if (x == 0 || y == 0) continue;
          ++pairs;
          exact::RemarkResult c = exact::remark_z_checker(x, y), s = exact::remark_z_bruteforce(x, y);
          if (c.i_holds != s.i_holds || c.ii_holds != s.ii_holds) {
            o.passed = false;
            o.witness = "checker and brute force disagree at a = " + std::to_string(x) + ", b = " + std::to_string(y);
          }
        }
      o.evidence = exact::to_json(r)["summary"].get<std::string>() + "; " + r.i_certificate + "; " +
                   r.ii_certificate + "; brute force agrees on " + std::to_string(pairs) + " pairs";
      return o;
    });
  }

  // ---- exact

  static Outcome exact_outcome(const exact::ExactReport& r) {
    Outcome o;
    o.passed = r.passed && r.unresolved.empty();
    std::size_t ok = 0;
    for (const exact::Certificate& c : r.certificates) {
      if (c.holds)
        ++ok;
      else
        o.witness += c.name + ": " + c.detail + "; ";
    }
    for (const exact::Unresolved& u : r.unresolved) o.witness += "unresolved " + u.equation + "; ";
    o.evidence = std::to_string(ok) + "/" + std::to_string(r.certificates.size()) + " certificates on " +
                 std::to_string(r.samples) + " samples";
    return o;
  }

  void exact_checks() {
    group_ = "exact";
    for (const std::string& x : config_.case_i_x)
      check("EXACT-EXAMPLE", "case-i/x=" + x, [&] {
        return exact_outcome(exact::verify_example_case_i(exact::parse_rational(x), config_.p, config_.q, std::nullopt,
                                                          config_.samples));
      });
    for (const std::string& x : config_.case_ii_x)
      check("EXACT-EXAMPLE", "case-ii/x=" + x, [&] {
        return exact_outcome(exact::verify_example_case_ii(exact::parse_rational(x), config_.p, config_.q,
                                                           std::nullopt, config_.samples));
      });
    check("EXACT-EXAMPLE", "nonlocal", [&] {
      exact::NonlocalWitness w = exact::nonlocal_witness(config_.p, config_.q, config_.samples);
      Outcome o;
      o.passed = !w.x_report.unit && !w.y_report.unit && w.sum_is_identity;
      o.evidence = exact::to_string(w.x) + " + " + exact::to_string(w.y) + " = 1, both non-units, sum checked on " +
                   std::to_string(w.sum_checks) + " samples";
      return o;
    });
    check("EXACT-EXAMPLE", "fiep", [&] {
      exact::FiepVerdict v = exact::fiep_verdict_exact(config_.p, config_.q, config_.samples);
      Outcome o;
      o.passed = v.premise_verified && !v.label.empty() && !v.citation.empty();
      o.evidence = v.verdict + " [" + v.label + ": " + v.citation + "]";
      return o;
    });
  }
};

}  // namespace

Manifest verify_paper(const VerifyConfig& config, const std::vector<Fixture>& fixtures) {
  return Runner(config, fixtures).run();
}

Manifest verify_paper(const VerifyConfig& config) { return verify_paper(config, corpus()); }

}  // namespace modlift::suite
