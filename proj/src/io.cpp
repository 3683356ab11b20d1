#include "modlift/io.hpp"

#include <fstream>
#include <sstream>

#include "modlift/error.hpp"

namespace modlift::io {
namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::SchemaError, where + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, "missing field '" + key + "'");
  return *it;
}

std::size_t count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) schema(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

Elem residue(const Json& j, const PrimeField& f, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return f.from_int(j.get<std::int64_t>());
}

Vec vector_of(const Json& j, std::size_t n, const PrimeField& f, const std::string& where) {
  if (!j.is_array() || j.size() != n) schema(where, "expected an array of " + std::to_string(n) + " integers");
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = residue(j[i], f, where + "[" + std::to_string(i) + "]");
  return v;
}

std::vector<Vec> vectors_of(const Json& j, std::size_t n, const PrimeField& f, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of vectors");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector_of(j[i], n, f, where + "[" + std::to_string(i) + "]"));
  return out;
}

AlgebraDef parse_algebra(const Json& j, const PrimeField& f, const std::string& where) {
  AlgebraDef a;
  a.kind = text(field(j, "kind", where), where + ".kind");
  if (a.kind == "shape") {
    const Json& s = field(j, "shape", where);
    if (!s.is_array() || s.empty()) schema(where + ".shape", "expected a nonempty square array");
    for (std::size_t r = 0; r < s.size(); ++r) {
      const std::string w = where + ".shape[" + std::to_string(r) + "]";
      if (!s[r].is_array() || s[r].size() != s.size()) schema(w, "expected a row of length " + std::to_string(s.size()));
      std::vector<bool> row;
      for (const Json& x : s[r]) {
        if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1)) schema(w, "entries must be 0 or 1");
        row.push_back(x.get<int>() == 1);
      }
      a.shape.push_back(row);
    }
  } else if (a.kind == "structure_constants") {
    a.dim = count(field(j, "dim", where), where + ".dim");
    const Json& c = field(j, "constants", where);
    const std::string w = where + ".constants";
    if (!c.is_array() || c.size() != a.dim) schema(w, "expected dim x dim x dim nested arrays");
    for (std::size_t i = 0; i < a.dim; ++i) {
      if (!c[i].is_array() || c[i].size() != a.dim) schema(w + "[" + std::to_string(i) + "]", "expected dim rows");
      for (std::size_t k = 0; k < a.dim; ++k) {
        Vec v = vector_of(c[i][k], a.dim, f, w + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
        a.constants.insert(a.constants.end(), v.begin(), v.end());
      }
    }
    a.unity = vector_of(field(j, "unity", where), a.dim, f, where + ".unity");
  } else if (a.kind == "truncated_polynomial") {
    a.degree = count(field(j, "degree", where), where + ".degree");
    if (a.degree == 0) schema(where + ".degree", "must be positive");
  } else {
    schema(where + ".kind", "unknown algebra kind '" + a.kind + "'");
  }
  return a;
}

std::size_t algebra_dim(const AlgebraDef& a) {
  if (a.kind == "shape") {
    std::size_t d = 0;
    for (const auto& row : a.shape)
      for (bool b : row) d += b;
    return d;
  }
  if (a.kind == "structure_constants") return a.dim;
  return a.degree;
}

// Dimension is needed to size generator vectors before the module is built.
std::size_t module_dim(const ModuleDef& m, const AlgebraDef& a) {
  if (m.kind == "row") return m.size;
  if (m.kind == "regular") return algebra_dim(a);
  if (m.kind == "zero") return 0;
  if (m.kind == "action_matrices") return m.dim;
  if (m.kind == "direct_sum") {
    std::size_t d = 0;
    for (const ModuleDef& p : m.parts) d += module_dim(p, a);
    return d;
  }
  return 0;  // quotient/submodule: computed at build time
}

ModuleDef parse_module(const Json& j, const AlgebraDef& a, const PrimeField& f, const std::string& where) {
  ModuleDef m;
  m.kind = text(field(j, "kind", where), where + ".kind");
  const std::size_t ad = algebra_dim(a);
  if (m.kind == "row") {
    m.size = count(field(j, "size", where), where + ".size");
  } else if (m.kind == "regular" || m.kind == "zero") {
  } else if (m.kind == "action_matrices") {
    m.dim = count(field(j, "dim", where), where + ".dim");
    const Json& acts = field(j, "actions", where);
    if (!acts.is_array() || acts.size() != ad)
      schema(where + ".actions", "expected one matrix per algebra basis element (" + std::to_string(ad) + ")");
    for (std::size_t i = 0; i < ad; ++i)
      m.actions.push_back(matrix_from_json(acts[i], m.dim, f, where + ".actions[" + std::to_string(i) + "]"));
    for (std::size_t i = 0; i < ad; ++i)
      if (m.actions[i].rows() != m.dim)
        schema(where + ".actions[" + std::to_string(i) + "]", "expected a dim x dim matrix");
  } else if (m.kind == "quotient" || m.kind == "submodule") {
    m.parts.push_back(parse_module(field(j, "of", where), a, f, where + ".of"));
    const std::string key = m.kind == "quotient" ? "by" : "generators";
    const std::size_t n = module_dim(m.parts[0], a);
    if (m.parts[0].kind == "quotient" || m.parts[0].kind == "submodule")
      schema(where + ".of", "nested quotient/submodule definitions are not supported");
    m.vectors = vectors_of(field(j, key, where), n, f, where + "." + key);
  } else if (m.kind == "direct_sum") {
    const Json& s = field(j, "summands", where);
    if (!s.is_array() || s.empty()) schema(where + ".summands", "expected a nonempty array");
    for (std::size_t i = 0; i < s.size(); ++i)
      m.parts.push_back(parse_module(s[i], a, f, where + ".summands[" + std::to_string(i) + "]"));
  } else {
    schema(where + ".kind", "unknown module kind '" + m.kind + "'");
  }
  return m;
}

Json algebra_json(const AlgebraDef& a) {
  Json j;
  j["kind"] = a.kind;
  if (a.kind == "shape") {
    Json rows = Json::array();
    for (const auto& row : a.shape) {
      Json r = Json::array();
      for (bool b : row) r.push_back(b ? 1 : 0);
      rows.push_back(r);
    }
    j["shape"] = rows;
  } else if (a.kind == "structure_constants") {
    j["dim"] = a.dim;
    Json c = Json::array();
    for (std::size_t i = 0; i < a.dim; ++i) {
      Json ci = Json::array();
      for (std::size_t k = 0; k < a.dim; ++k) {
        Json v = Json::array();
        for (std::size_t l = 0; l < a.dim; ++l) v.push_back(a.constants[(i * a.dim + k) * a.dim + l]);
        ci.push_back(v);
      }
      c.push_back(ci);
    }
    j["constants"] = c;
    j["unity"] = a.unity;
  } else {
    j["degree"] = a.degree;
  }
  return j;
}

Json module_json(const ModuleDef& m) {
  Json j;
  j["kind"] = m.kind;
  if (m.kind == "row") {
    j["size"] = m.size;
  } else if (m.kind == "action_matrices") {
    j["dim"] = m.dim;
    Json acts = Json::array();
    for (const Matrix& a : m.actions) acts.push_back(to_json(a));
    j["actions"] = acts;
  } else if (m.kind == "quotient" || m.kind == "submodule") {
    j["of"] = module_json(m.parts[0]);
    j[m.kind == "quotient" ? "by" : "generators"] = m.vectors;
  } else if (m.kind == "direct_sum") {
    Json s = Json::array();
    for (const ModuleDef& p : m.parts) s.push_back(module_json(p));
    j["summands"] = s;
  }
  return j;
}

ModulePtr build_module(const ModuleDef& m, const AlgebraPtr& alg) {
  if (m.kind == "row") return std::make_shared<const RepModule>(row_module(alg, m.size));
  if (m.kind == "regular") return std::make_shared<const RepModule>(regular_module(alg));
  if (m.kind == "zero") return std::make_shared<const RepModule>(zero_module(alg));
  if (m.kind == "action_matrices") return std::make_shared<const RepModule>(alg, m.dim, m.actions);
  if (m.kind == "direct_sum") {
    ModulePtr acc = build_module(m.parts[0], alg);
    for (std::size_t i = 1; i < m.parts.size(); ++i) acc = direct_sum(acc, build_module(m.parts[i], alg)).module;
    return acc;
  }
  ModulePtr base = build_module(m.parts[0], alg);
  Submodule s = submodule_generated(*base, m.vectors);
  if (m.kind == "quotient") return quotient_module(base, s).module;
  return std::make_shared<const RepModule>(as_module(*base, s));
}

}  // namespace

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_vec(r));
  return rows;
}

Json to_json(const Submodule& s) { return to_json(s.basis()); }

Matrix matrix_from_json(const Json& j, std::size_t cols, const PrimeField& f, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of rows");
  return Matrix::from_rows(cols, vectors_of(j, cols, f, where));
}

ModuleDefinition parse_definition(const Json& j) {
  ModuleDefinition d;
  if (!j.is_object()) schema("$", "expected an object");
  const Json& v = field(j, "schema_version", "$");
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
    schema("$.schema_version", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  if (j.contains("name")) d.name = text(j["name"], "$.name");
  const Json& p = field(j, "field", "$");
  if (!p.is_number_integer()) schema("$.field", "expected a prime");
  d.field = p.get<std::int64_t>();
  if (d.field < 2 || !is_prime(d.field) || d.field >= (std::int64_t{1} << 31))
    schema("$.field", std::to_string(d.field) + " is not a supported prime");
  PrimeField f(d.field);
  d.algebra = parse_algebra(field(j, "algebra", "$"), f, "$.algebra");
  d.module = parse_module(field(j, "module", "$"), d.algebra, f, "$.module");
  for (const auto& [key, _] : j.items())
    if (key != "schema_version" && key != "name" && key != "field" && key != "algebra" && key != "module")
      schema("$." + key, "unknown field");
  return d;
}

Json to_json(const ModuleDefinition& d) {
  Json j;
  j["schema_version"] = d.schema_version;
  if (!d.name.empty()) j["name"] = d.name;
  j["field"] = d.field;
  j["algebra"] = algebra_json(d.algebra);
  j["module"] = module_json(d.module);
  return j;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n'));
    throw Error(ErrorKind::SchemaError, origin + ":" + std::to_string(line) + ": invalid JSON (" + e.what() + ")");
  }
}

ModuleDefinition load_definition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, path.string() + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_definition(parse_json_text(ss.str(), path.string()));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::SchemaError, path.string() + ": cannot write");
  out << text;
}

Built build(const ModuleDefinition& d) {
  PrimeField f(d.field);
  Algebra alg = [&] {
    if (d.algebra.kind == "shape") return shaped_matrix_algebra(f, d.algebra.shape);
    if (d.algebra.kind == "structure_constants")
      return algebra_from_structure_constants(f, d.algebra.dim, d.algebra.constants, d.algebra.unity);
    return truncated_polynomial_algebra(f, d.algebra.degree);
  }();
  AlgebraPtr a = std::make_shared<const Algebra>(std::move(alg));
  return {a, build_module(d.module, a)};
}

Json lattice_to_json(const SubmoduleLattice& lattice) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["ambient_dim"] = lattice.ambient_dim();
  Json nodes = Json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    Json n;
    n["id"] = i;
    n["dim"] = lattice[i].dim();
    n["basis"] = to_json(lattice[i]);
    nodes.push_back(n);
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (auto [a, b] : lattice.hasse_edges()) edges.push_back(Json::array({a, b}));
  j["edges"] = edges;
  return j;
}

std::string lattice_to_dot(const SubmoduleLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << "  n" << i << " [label=\"dim " << lattice[i].dim() << "\\n";
    const Matrix& b = lattice[i].basis();
    if (b.rows() == 0) out << "0";
    for (std::size_t r = 0; r < b.rows(); ++r) {
      if (r) out << "\\n";
      out << "(";
      for (std::size_t c = 0; c < b.cols(); ++c) out << (c ? "," : "") << b(r, c);
      out << ")";
    }
    out << "\"];\n";
  }
  for (auto [a, b] : lattice.hasse_edges()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace modlift::io
