#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modlift/error.hpp"
#include "modlift/exact/example.hpp"
#include "modlift/suite/corpus.hpp"

namespace modlift::suite {

struct VerifyConfig {
  long p = 2;
  long q = 3;
  Limits limits;
  FiepOptions fiep;
  exact::SampleOptions samples;
  /// Groups to run; empty runs all of them.
  std::vector<std::string> select;
  std::vector<std::string> case_i_x{"1", "3/5", "7/5"};
  std::vector<std::string> case_ii_x{"4/3", "10/9", "8/3"};
  long remark_a = 2;
  long remark_b = 3;
  long remark_bound = 20;
};

/// Keys: schema_version, p, q, cap_dim, cap_hom, n_max, seed, sample_size,
/// select, case_i_x, case_ii_x. Missing keys keep their defaults; unknown
/// keys raise SchemaError.
VerifyConfig config_from_json(const io::Json& j);
io::Json to_json(const VerifyConfig& c);

/// Run order of the check groups.
const std::vector<std::string>& group_names();

struct Anchor {
  std::string id;
  std::string group;
  std::string summary;
};

/// Static map from paper anchors to the group whose checks carry them.
const std::vector<Anchor>& anchor_table();

enum class Verdict { Pass, Fail, Error };
std::string to_string(Verdict v);

struct ManifestEntry {
  /// "<anchor>/<instance>"
  std::string id;
  std::string anchor;
  std::string group;
  Verdict verdict = Verdict::Pass;
  std::string evidence;
  /// Counterexample or error text; empty on a pass.
  std::string witness;
  std::optional<ErrorKind> error;
  std::string digest;
  double duration_ms = 0;
};

struct Manifest {
  VerifyConfig config;
  std::vector<ManifestEntry> entries;

  bool passed() const;
  /// Some entry failed with TooLarge.
  bool cap_exceeded() const;
  io::Json to_json(bool with_durations = true) const;
};

Manifest verify_paper(const VerifyConfig& config, const std::vector<Fixture>& fixtures);
Manifest verify_paper(const VerifyConfig& config);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

}  // namespace modlift::suite
