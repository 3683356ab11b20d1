#pragma once

#include <optional>
#include <string>

namespace modlift::exact {

/// f : aZ → Z with f(an) = bn against the inclusion g : aZ → Z.
struct RemarkResult {
  long a = 0;
  long b = 0;
  /// h : Z → Z with f = hg, forced to h(1) = b/a.
  bool i_holds = false;
  /// mono h : Z → Z/K with hf = πg; K = 0 is forced and h(1) = a/b.
  bool ii_holds = false;
  std::optional<long> i_witness;
  std::optional<long> ii_witness;
  std::string i_certificate;
  std::string ii_certificate;
};

/// Throws ZeroInput if a or b is zero.
RemarkResult remark_z_checker(long a, long b);

/// Same verdicts from a search over |h(1)| ≤ |ab|.
RemarkResult remark_z_bruteforce(long a, long b);

}  // namespace modlift::exact
