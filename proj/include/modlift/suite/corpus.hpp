#pragma once

#include <string>
#include <vector>

#include "modlift/io.hpp"
#include "modlift/properties.hpp"

namespace modlift::suite {

enum class Provenance { Paper, Trivial, Derived };
std::string to_string(Provenance p);

struct Expectation {
  std::string property;
  io::Json value;
  Provenance provenance = Provenance::Derived;
  /// Names the oracle for derived values.
  std::string oracle;
};

struct Fixture {
  std::string name;
  io::ModuleDefinition definition;
  std::vector<Expectation> expected;
  /// Fixtures sharing a family are modules over one algebra.
  std::string family;
  bool square = false;

  const Expectation* expectation(const std::string& property) const;
};

/// Base modules, then squares of the hollow and uniform ones. Derived
/// expectations come from the golden file compiled into the library.
std::vector<Fixture> corpus();
/// Same, with expectations read from `golden`.
std::vector<Fixture> corpus_from(const io::Json& golden);
/// Definitions only, without expectations.
std::vector<Fixture> corpus_definitions();

/// Golden file contents compiled into the library.
const char* embedded_golden();
/// Recomputes the golden values with the definitional oracles.
io::Json compute_golden(const std::vector<Fixture>& fixtures, const Limits& limits = {},
                        const FiepOptions& fiep = {});

}  // namespace modlift::suite
