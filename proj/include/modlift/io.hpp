#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modlift/lattice.hpp"
#include "modlift/module.hpp"

namespace modlift::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct AlgebraDef {
  /// shape | structure_constants | truncated_polynomial
  std::string kind;
  std::vector<std::vector<bool>> shape;
  std::size_t dim = 0;
  std::vector<Elem> constants;  // flattened c[i][j][k]
  Vec unity;
  std::size_t degree = 0;

  friend bool operator==(const AlgebraDef&, const AlgebraDef&) = default;
};

struct ModuleDef {
  /// row | regular | zero | action_matrices | quotient | submodule | direct_sum
  std::string kind;
  std::size_t size = 0;
  std::size_t dim = 0;
  std::vector<Matrix> actions;
  /// Underlying module for quotient/submodule, summands for direct_sum.
  std::vector<ModuleDef> parts;
  /// Generators of the submodule taken or factored out.
  std::vector<Vec> vectors;

  friend bool operator==(const ModuleDef&, const ModuleDef&) = default;
};

struct ModuleDefinition {
  int schema_version = kSchemaVersion;
  std::string name;
  std::int64_t field = 2;
  AlgebraDef algebra;
  ModuleDef module;

  friend bool operator==(const ModuleDefinition&, const ModuleDefinition&) = default;
};

/// Throws SchemaError naming the offending field.
ModuleDefinition parse_definition(const Json& j);
Json to_json(const ModuleDefinition& d);
/// Reads and parses a file; JSON syntax errors report the line.
ModuleDefinition load_definition(const std::filesystem::path& path);
Json parse_json_text(const std::string& text, const std::string& origin = "input");
void write_text(const std::filesystem::path& path, const std::string& text);

struct Built {
  AlgebraPtr algebra;
  ModulePtr module;
};

/// Builds the algebra and module; construction errors propagate.
Built build(const ModuleDefinition& d);

Json to_json(const Matrix& m);
Json to_json(const Submodule& s);
Matrix matrix_from_json(const Json& j, std::size_t cols, const PrimeField& f, const std::string& where);

Json lattice_to_json(const SubmoduleLattice& lattice);
/// One node per submodule (dimension and canonical basis), one edge per cover.
std::string lattice_to_dot(const SubmoduleLattice& lattice);

}  // namespace modlift::io
