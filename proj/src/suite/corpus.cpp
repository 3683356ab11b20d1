#include "modlift/suite/corpus.hpp"

#include "modlift/error.hpp"

namespace modlift::suite {

using io::Json;

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper:
      return "PAPER";
    case Provenance::Trivial:
      return "TRIVIAL";
    case Provenance::Derived:
      return "DERIVED";
  }
  return "?";
}

const Expectation* Fixture::expectation(const std::string& property) const {
  for (const Expectation& e : expected)
    if (e.property == property) return &e;
  return nullptr;
}

namespace {

io::AlgebraDef shape_algebra(std::vector<std::vector<bool>> shape) {
  io::AlgebraDef a;
  a.kind = "shape";
  a.shape = std::move(shape);
  return a;
}

io::AlgebraDef truncated(std::size_t k) {
  io::AlgebraDef a;
  a.kind = "truncated_polynomial";
  a.degree = k;
  return a;
}

// K<x,y>/(x^2, y^2, yx) on the basis 1, x, y, xy.
io::AlgebraDef kronecker_local() {
  io::AlgebraDef a;
  a.kind = "structure_constants";
  a.dim = 4;
  a.constants.assign(64, 0);
  auto set = [&](int i, int j, int k) { a.constants[(i * 4 + j) * 4 + k] = 1; };
  for (int i = 0; i < 4; ++i) {
    set(0, i, i);
    if (i) set(i, 0, i);
  }
  set(1, 2, 3);
  a.unity = {1, 0, 0, 0};
  return a;
}

io::ModuleDef kind(const std::string& k) {
  io::ModuleDef m;
  m.kind = k;
  return m;
}

io::ModuleDef row(std::size_t n) {
  io::ModuleDef m = kind("row");
  m.size = n;
  return m;
}

io::ModuleDef derived(const std::string& k, io::ModuleDef of, std::vector<Vec> vectors) {
  io::ModuleDef m = kind(k);
  m.parts.push_back(std::move(of));
  m.vectors = std::move(vectors);
  return m;
}

io::ModuleDefinition define(const std::string& name, std::int64_t p, io::AlgebraDef a, io::ModuleDef m) {
  io::ModuleDefinition d;
  d.name = name;
  d.field = p;
  d.algebra = std::move(a);
  d.module = std::move(m);
  return d;
}

std::vector<std::vector<bool>> example_shape() {
  return {{true, true, true, true}, {false, true, false, true}, {false, false, true, true}, {false, false, false, true}};
}

Expectation paper(const std::string& p, Json v) { return {p, std::move(v), Provenance::Paper, ""}; }
Expectation trivial(const std::string& p, Json v) { return {p, std::move(v), Provenance::Trivial, ""}; }
Expectation derived_by(const std::string& p, Json v, const std::string& oracle) {
  return {p, std::move(v), Provenance::Derived, oracle};
}

std::string oracle_for(const std::string& property) {
  if (property == "submodule_count" || property == "hasse_edge_count" || property == "uniserial")
    return "lattice enumeration";
  if (property == "hollow" || property == "uniform") return "definitional small/essential scan";
  if (property == "lifting" || property == "extending") return "definitional coessential/essential search";
  if (property == "indecomposable" || property == "summand_count") return "complement scan";
  if (property == "fiep") return "exchange search, exhaustive n <= 2 and sampled n = 3";
  if (property == "end_local") return "non-unit additive-closure scan (omitted when End(M) exceeds the hom cap)";
  return "definitional oracle";
}

const char* kGoldenProperties[] = {"submodule_count", "hasse_edge_count", "hollow",   "uniform",
                                   "uniserial",       "indecomposable",   "lifting",  "extending",
                                   "fiep",            "end_local",        "summand_count"};

}  // namespace

std::vector<Fixture> corpus_definitions() {
  std::vector<Fixture> out;
  auto add = [&](io::ModuleDefinition d, std::string family, std::vector<Expectation> e = {}) {
    Fixture f;
    f.name = d.name;
    f.definition = std::move(d);
    f.family = std::move(family);
    f.expected = std::move(e);
    out.push_back(std::move(f));
  };
  for (std::int64_t p : {2, 3}) {
    const std::string s = "-f" + std::to_string(p);
    add(define("shaped" + s, p, shape_algebra(example_shape()), row(4)), "shaped" + s,
        {paper("submodule_count", 6), paper("hollow", true), paper("uniform", true), paper("uniserial", false),
         trivial("lifting", true), trivial("extending", true)});
  }
  add(define("shaped-mod-socle-f2", 2, shape_algebra(example_shape()), derived("quotient", row(4), {{0, 0, 0, 1}})),
      "shaped-f2");
  add(define("shaped-radical-f2", 2, shape_algebra(example_shape()),
             derived("submodule", row(4), {{0, 1, 0, 0}, {0, 0, 1, 0}})),
      "shaped-f2");
  for (std::int64_t p : {2, 3}) {
    const std::string s = "-f" + std::to_string(p);
    for (std::size_t k = 1; k <= 4; ++k) {
      std::vector<Expectation> e{trivial("lifting", true), trivial("extending", true)};
      e.push_back(derived_by("uniserial", true, "ideal chain"));
      e.push_back(derived_by("submodule_count", static_cast<int>(k) + 1, "ideal chain"));
      add(define("chain" + std::to_string(k) + s, p, truncated(k), kind("regular")),
          k == 4 ? "trunc4" + s : "chain" + std::to_string(k) + s, e);
    }
    for (std::size_t j = 1; j <= 3; ++j) {
      Vec g(4, 0);
      g[j] = 1;
      add(define("trunc4-quot" + std::to_string(j) + s, p, truncated(4), derived("quotient", kind("regular"), {g})),
          "trunc4" + s, {derived_by("uniserial", true, "ideal chain")});
    }
    std::vector<std::vector<bool>> diag{{true, false}, {false, true}};
    add(define("semisimple" + s, p, shape_algebra(diag), kind("regular")), "semisimple" + s,
        {trivial("lifting", true), trivial("extending", true), derived_by("end_local", false, "orthogonal idempotents"),
         derived_by("submodule_count", 4, "subspace scan")});
    std::vector<std::vector<bool>> full{{true, true}, {true, true}};
    add(define("simple-full2" + s, p, shape_algebra(full), row(2)), "full2" + s,
        {trivial("hollow", true), trivial("uniform", true), trivial("uniserial", true), trivial("indecomposable", true),
         trivial("submodule_count", 2), trivial("end_local", true)});
    add(define("kronecker" + s, p, kronecker_local(), derived("quotient", kind("regular"), {{0, 0, 1, 0}})),
        "kronecker" + s);
  }
  return out;
}

std::vector<Fixture> corpus() { return corpus_from(io::parse_json_text(embedded_golden(), "golden")); }

std::vector<Fixture> corpus_from(const Json& golden) {
  std::vector<Fixture> base = corpus_definitions();
  const Json empty = Json::object();
  const Json& values = golden.contains("fixtures") ? golden["fixtures"] : empty;

  std::vector<Fixture> squares;
  for (const Fixture& f : base) {
    if (!values.contains(f.name)) continue;
    const Json& g = values[f.name];
    if (g.value("hollow", false) == true && g.value("uniform", false) == true) {
      Fixture sq;
      sq.name = "square-" + f.name;
      sq.square = true;
      sq.family = f.family;
      sq.definition = f.definition;
      sq.definition.name = sq.name;
      io::ModuleDef sum = kind("direct_sum");
      sum.parts = {f.definition.module, f.definition.module};
      sq.definition.module = sum;
      squares.push_back(std::move(sq));
    }
  }
  std::vector<Fixture> all = std::move(base);
  for (Fixture& s : squares) all.push_back(std::move(s));
  for (Fixture& f : all) {
    if (!values.contains(f.name)) continue;
    for (const char* p : kGoldenProperties) {
      if (!values[f.name].contains(p) || f.expectation(p)) continue;
      f.expected.push_back(derived_by(p, values[f.name][p], oracle_for(p)));
    }
  }
  return all;
}

Json compute_golden(const std::vector<Fixture>& fixtures, const Limits& limits, const FiepOptions& fiep) {
  Json out;
  out["schema_version"] = io::kSchemaVersion;
  Json oracles;
  for (const char* p : kGoldenProperties) oracles[p] = oracle_for(p);
  out["oracles"] = oracles;
  Json values;
  auto record = [&](const Fixture& f) {
    io::Built b = io::build(f.definition);
    Analysis a(b.module, limits);
    Json v;
    v["dim"] = b.module->dim();
    v["submodule_count"] = a.lattice().size();
    v["hasse_edge_count"] = a.lattice().hasse_edges().size();
    v["hollow"] = a.dim() > 0 && is_hollow(a);
    v["uniform"] = a.dim() > 0 && is_uniform(a);
    v["uniserial"] = is_uniserial(a);
    v["indecomposable"] = is_indecomposable(a);
    v["lifting"] = is_lifting(a, Method::Definitional).holds;
    v["extending"] = is_extending(a, Method::Definitional).holds;
    v["fiep"] = has_fiep(a, fiep).holds;
    try {
      v["end_local"] = is_local(endomorphism_ring(*b.module, limits)).local;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
    }
    v["summand_count"] = a.summands().size();
    values[f.name] = v;
    return v;
  };
  for (const Fixture& f : fixtures) {
    if (f.square) continue;
    Json v = record(f);
    if (v["hollow"] == true && v["uniform"] == true) {
      Fixture sq;
      sq.name = "square-" + f.name;
      sq.definition = f.definition;
      io::ModuleDef sum = kind("direct_sum");
      sum.parts = {f.definition.module, f.definition.module};
      sq.definition.module = sum;
      record(sq);
    }
  }
  out["fixtures"] = values;
  return out;
}

}  // namespace modlift::suite
